#include "thin3d/voxel_grid.hpp"

#include <stdexcept>

namespace thin3d {

namespace {

// Indexed by Direction enum value.
constexpr std::array<Point3, kNumDirections> kOffsets = {{
    {1, 0, 0},    // E
    {-1, 0, 0},   // W
    {0, 1, 0},    // N
    {0, -1, 0},   // S
    {0, 0, 1},    // U
    {0, 0, -1},   // D
    {0, 1, 1},    // NU
    {0, 1, -1},   // ND
    {1, 1, 0},    // NE
    {-1, 1, 0},   // NW
    {0, -1, 1},   // SU
    {0, -1, -1},  // SD
    {1, -1, 0},   // SE
    {-1, -1, 0},  // SW
    {-1, 0, 1},   // WU
    {-1, 0, -1},  // WD
    {1, 0, 1},    // EU
    {1, 0, -1},   // ED
}};

constexpr std::array<std::string_view, kNumDirections> kNames = {
    "e",  "w",  "n",  "s",  "u",  "d",  "nu", "nd", "ne",
    "nw", "su", "sd", "se", "sw", "wu", "wd", "eu", "ed",
};

constexpr std::array<Direction, kNumDirections> kAll = {
    Direction::E,  Direction::W,  Direction::N,  Direction::S,  Direction::U,
    Direction::D,  Direction::NU, Direction::ND, Direction::NE, Direction::NW,
    Direction::SU, Direction::SD, Direction::SE, Direction::SW, Direction::WU,
    Direction::WD, Direction::EU, Direction::ED,
};

std::array<Point3, 26> make_offsets26() {
  std::array<Point3, 26> out{};
  std::size_t i = 0;
  for (int dz = -1; dz <= 1; ++dz)
    for (int dy = -1; dy <= 1; ++dy)
      for (int dx = -1; dx <= 1; ++dx) {
        if (dx == 0 && dy == 0 && dz == 0) continue;
        out[i++] = {dx, dy, dz};
      }
  return out;
}

std::array<Point3, 18> make_offsets18() {
  std::array<Point3, 18> out{};
  std::size_t i = 0;
  for (Point3 o : make_offsets26())
    if (squared_distance({0, 0, 0}, o) <= 2) out[i++] = o;
  return out;
}

std::array<Point3, 6> make_offsets6() {
  std::array<Point3, 6> out{};
  std::size_t i = 0;
  for (Point3 o : make_offsets26())
    if (squared_distance({0, 0, 0}, o) <= 1) out[i++] = o;
  return out;
}

const std::array<Point3, 26> kN26 = make_offsets26();
const std::array<Point3, 18> kN18 = make_offsets18();
const std::array<Point3, 6> kN6 = make_offsets6();

}  // namespace

Point3 direction_offset(Direction d) {
  return kOffsets[static_cast<std::size_t>(d)];
}

Direction opposite(Direction d) {
  const Point3 neg = -direction_offset(d);
  for (Direction c : kAll)
    if (direction_offset(c) == neg) return c;
  throw std::logic_error("direction table is not closed under negation");
}

std::string_view direction_name(Direction d) {
  return kNames[static_cast<std::size_t>(d)];
}

std::span<const Direction> all_directions() { return kAll; }

std::span<const Direction> axis_directions() {
  return std::span<const Direction>(kAll.data(), 6);
}

std::span<const Direction> diagonal_directions() {
  return std::span<const Direction>(kAll.data() + 6, 12);
}

std::span<const Point3> neighbor_offsets(int k) {
  switch (k) {
    case 6:
      return kN6;
    case 18:
      return kN18;
    case 26:
      return kN26;
    default:
      throw std::invalid_argument("adjacency must be 6, 18 or 26");
  }
}

std::vector<Point3> neighbors(Point3 p, int k) {
  const auto offs = neighbor_offsets(k);
  std::vector<Point3> out;
  out.reserve(offs.size());
  for (Point3 o : offs) out.push_back(p + o);
  return out;
}

BinaryVolume::BinaryVolume(int dim_x, int dim_y, int dim_z)
    : dx_(dim_x), dy_(dim_y), dz_(dim_z) {
  if (dim_x <= 0 || dim_y <= 0 || dim_z <= 0)
    throw std::invalid_argument("volume dimensions must be positive");
  cells_.assign(static_cast<std::size_t>(dx_) * dy_ * dz_, 0);
}

void BinaryVolume::set_object(Point3 p, bool object) {
  if (!in_bounds(p)) throw std::out_of_range("voxel write out of bounds");
  cells_[index(p)] = object ? 1 : 0;
}

std::size_t BinaryVolume::object_count() const {
  std::size_t n = 0;
  for (std::uint8_t c : cells_) n += c;
  return n;
}

std::vector<Point3> BinaryVolume::object_points() const {
  std::vector<Point3> out;
  for (int z = 0; z < dz_; ++z)
    for (int y = 0; y < dy_; ++y)
      for (int x = 0; x < dx_; ++x)
        if (cells_[index({x, y, z})]) out.push_back({x, y, z});
  return out;
}

int count_object_neighbors(const BinaryVolume& vol, Point3 p, int k) {
  if (!vol.in_bounds(p)) throw std::out_of_range("point out of bounds");
  int n = 0;
  for (Point3 o : neighbor_offsets(k))
    if (vol.is_object(p + o)) ++n;
  return n;
}

}  // namespace thin3d
