#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "thin3d/templates.hpp"
#include "thin3d/voxel_grid.hpp"

namespace thin3d {

/// Connected-component labeling of the object voxels under k-adjacency.
/// Labels are assigned in scan order (z, then y, then x), so equal inputs
/// produce identical labelings.
class ComponentLabeling {
 public:
  ComponentLabeling(int adjacency, int dim_x, int dim_y, int dim_z);

  int adjacency() const { return adjacency_; }
  std::size_t count() const { return count_; }

  /// Component id in [0, count) for object voxels, -1 for background.
  int label_of(Point3 p) const;

  /// Voxels per component, indexed by label.
  std::vector<std::size_t> component_sizes() const;

  void set_label(Point3 p, int label);
  void set_count(std::size_t count) { count_ = count; }

 private:
  int adjacency_;
  int dx_, dy_, dz_;
  std::size_t count_ = 0;
  std::vector<int> labels_;
};

ComponentLabeling label_components(const BinaryVolume& vol, int k);

/// Object 26-component count; shorthand used by the connectivity checks.
std::size_t component_count(const BinaryVolume& vol, int k = 26);

/// Topological characterization of a simple point: the object points of
/// N26(p) form exactly one 26-connected component, and the background
/// points of N18(p) that are 6-adjacent to p lie in exactly one
/// 6-connected component of background within N18(p).
/// Throws std::invalid_argument if p is not an object point.
bool is_simple(const BinaryVolume& vol, Point3 p);

/// Structural audit of the (p1, p2) rule: a Class D template violates it
/// when the assignment (p1, p2) = (object, object) is consistent with its
/// cells, i.e. neither cell is required background.
struct P1P2AuditReport {
  struct Entry {
    std::string id;
    CellRequirement p1;
    CellRequirement p2;
    bool violation;
  };
  TemplateVariant variant;
  std::vector<Entry> class_d;        // one entry per Class D template
  std::size_t violation_count = 0;
  std::size_t non_class_d = 0;       // templates without a (p1, p2) pair
};

P1P2AuditReport audit_p1p2(const TemplateSet& set);

/// A volume plus named landmark points (the a..g labels of the figure
/// fixtures). Generators leave the landmark list empty.
struct Fixture {
  BinaryVolume volume;
  std::vector<std::pair<std::string, Point3>> landmarks;

  Point3 landmark(std::string_view name) const;
};

enum class Axis { X, Y, Z };

/// The seven-point chain a-b-c-d-e-f-g: one 26-connected component whose
/// fully parallel thinning distinguishes the original template set from
/// the corrected one.
Fixture fig7_fixture();

/// Two voxel rings joined by the fig7-style chain.
Fixture fig12_fixture();

Fixture line_fixture(int n, Axis axis);
Fixture box_fixture(int a, int b, int c);
Fixture single_fixture();

/// Seeded reproducible random volume: each voxel is object with the given
/// probability, evaluated in x-fastest scan order.
Fixture random_fixture(std::uint64_t seed, int dim_x, int dim_y, int dim_z,
                       double density);

struct FuzzOptions {
  int trials = 100;
  int dim_x = 8, dim_y = 8, dim_z = 8;
  double density = 0.4;
  std::uint64_t seed = 0;
  /// Volumes run before the random trials (each counts as one trial).
  std::vector<BinaryVolume> injected;
};

struct FuzzViolation {
  int trial = 0;
  std::uint64_t volume_seed = 0;  // 0 for injected volumes
  int pass = 0;
  int round = 0;
  std::size_t components_before = 0;
  std::size_t components_after = 0;
};

struct FuzzReport {
  TemplateVariant variant;
  int trials = 0;
  std::uint64_t seed = 0;
  int dim_x = 0, dim_y = 0, dim_z = 0;
  double density = 0.0;
  std::vector<FuzzViolation> violations;
};

/// Runs `thin` on random volumes and checks after every deletion round
/// that the object 26-component count is unchanged. Violations carry
/// enough data to regenerate the offending volume and replay the run.
FuzzReport fuzz_connectivity(const TemplateSet& set, const FuzzOptions& opts);
FuzzReport fuzz_connectivity(const TemplateSet& set, int trials, int dim,
                             double density, std::uint64_t seed);

/// Deterministic per-trial volume seed derived from the fuzz seed.
std::uint64_t fuzz_trial_seed(std::uint64_t base_seed, int trial);

}  // namespace thin3d
