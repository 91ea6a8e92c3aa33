#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace thin3d {

/// Integer lattice point. Used both as an absolute voxel index and as a
/// relative offset; volumes only accept in-bounds points for writes.
struct Point3 {
  int x = 0;
  int y = 0;
  int z = 0;

  friend constexpr Point3 operator+(Point3 a, Point3 b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend constexpr Point3 operator-(Point3 a, Point3 b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
  }
  constexpr Point3 operator-() const { return {-x, -y, -z}; }
  friend constexpr bool operator==(Point3, Point3) = default;
  friend constexpr auto operator<=>(Point3 a, Point3 b) {
    if (auto c = a.z <=> b.z; c != 0) return c;
    if (auto c = a.y <=> b.y; c != 0) return c;
    return a.x <=> b.x;
  }
};

/// dis^2 = (px-qx)^2 + (py-qy)^2 + (pz-qz)^2. Kept in integers;
/// adjacency tests compare it against 1, 2 and 3.
constexpr int squared_distance(Point3 p, Point3 q) {
  const int dx = p.x - q.x, dy = p.y - q.y, dz = p.z - q.z;
  return dx * dx + dy * dy + dz * dz;
}

/// The 6 axis directions and the 12 edge-diagonal directions.
/// x grows east, y grows north, z grows up.
enum class Direction : std::uint8_t {
  E, W, N, S, U, D,                  // squared length 1
  NU, ND, NE, NW, SU, SD, SE, SW,    // squared length 2
  WU, WD, EU, ED,
};

constexpr int kNumDirections = 18;

Point3 direction_offset(Direction d);
Direction opposite(Direction d);
std::string_view direction_name(Direction d);
std::span<const Direction> all_directions();
std::span<const Direction> axis_directions();
std::span<const Direction> diagonal_directions();

/// Offsets of the k-neighborhood, k in {6, 18, 26}.
/// Throws std::invalid_argument for any other k.
std::span<const Point3> neighbor_offsets(int k);

/// The points k-adjacent to p. Purely geometric: results may lie outside
/// any particular volume.
std::vector<Point3> neighbors(Point3 p, int k);

/// Dense 3D binary image. Out-of-bounds reads are background, which gives
/// the same semantics as an unbounded grid with finite object support.
/// Storage is one byte per voxel, x fastest, then y, then z.
class BinaryVolume {
 public:
  BinaryVolume() = default;
  BinaryVolume(int dim_x, int dim_y, int dim_z);

  int dim_x() const { return dx_; }
  int dim_y() const { return dy_; }
  int dim_z() const { return dz_; }
  std::size_t size() const { return cells_.size(); }

  bool in_bounds(Point3 p) const {
    return p.x >= 0 && p.x < dx_ && p.y >= 0 && p.y < dy_ && p.z >= 0 &&
           p.z < dz_;
  }

  bool is_object(Point3 p) const {
    return in_bounds(p) && cells_[index(p)] != 0;
  }

  /// Throws std::out_of_range if p is outside the box.
  void set_object(Point3 p, bool object);

  std::size_t object_count() const;
  std::vector<Point3> object_points() const;

  /// Raw payload in x-fastest order, one byte per voxel (0 or 1).
  std::span<const std::uint8_t> raw() const { return cells_; }
  std::uint8_t* raw_data() { return cells_.data(); }

  friend bool operator==(const BinaryVolume&, const BinaryVolume&) = default;

 private:
  std::size_t index(Point3 p) const {
    return static_cast<std::size_t>((p.z * dy_ + p.y)) * dx_ + p.x;
  }

  int dx_ = 0, dy_ = 0, dz_ = 0;
  std::vector<std::uint8_t> cells_;
};

/// Number of object points among the k-neighbors of p, out-of-bounds
/// reading as background. Throws std::out_of_range if p is out of bounds
/// and std::invalid_argument for bad k.
int count_object_neighbors(const BinaryVolume& vol, Point3 p, int k);

}  // namespace thin3d
