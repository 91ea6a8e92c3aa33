#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "thin3d/templates.hpp"
#include "thin3d/voxel_grid.hpp"

namespace thin3d {

/// Called after every deletion round with the post-round volume.
using RoundObserver =
    std::function<void(int pass, int round, std::span<const Point3> deleted,
                       const BinaryVolume& after)>;

struct ThinningOptions {
  /// Safety bound on outer passes; hitting it is reported, not silent.
  int max_passes = 10000;
  /// Record the deleted point list of every round in the report.
  bool record_deleted_points = false;
  /// Worker threads for the per-round deletion predicate. Results are
  /// bit-identical to the single-threaded run.
  int threads = 1;
  /// Step 2 deletes only points marked in step 1 (the border-point
  /// discipline). Disabling widens candidacy to all object points.
  bool restrict_to_marked = true;
  RoundObserver observer;
};

struct PassRecord {
  int pass_index = 0;
  std::size_t marked_count = 0;
  /// Deleted count per inner round; the final entry is the empty round
  /// that ended the pass.
  std::vector<std::size_t> rounds;
  /// Per-round deleted points, lexicographically sorted; filled only
  /// when requested.
  std::vector<std::vector<Point3>> deleted_points;
};

struct ThinningReport {
  TemplateVariant variant{};
  std::vector<PassRecord> passes;
  std::size_t total_deleted = 0;
  bool fixpoint_reached = false;
};

/// Step 1: every object point 26-adjacent to a background point
/// (out-of-bounds counts as background). Scan order, hence sorted.
std::vector<Point3> mark_border(const BinaryVolume& vol);

/// Step 2, one round: against the pre-round snapshot, delete every
/// candidate that is not a tail point and matches a deleting template.
/// All deletions are applied after every decision is made; the result is
/// independent of candidate order. Returns the deleted points, sorted.
/// Throws std::invalid_argument if a candidate is not an object point.
std::vector<Point3> deletion_round(BinaryVolume& vol,
                                   std::span<const Point3> candidates,
                                   const TemplateSet& set);

/// The two-level fully parallel loop: mark border points, repeat deletion
/// rounds over the still-marked points until a round deletes nothing,
/// release marks, and stop once a whole pass deletes nothing.
std::pair<BinaryVolume, ThinningReport> thin(BinaryVolume vol,
                                             const TemplateSet& set,
                                             const ThinningOptions& options = {});

}  // namespace thin3d
