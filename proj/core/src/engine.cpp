#include "thin3d/engine.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "thin3d/tail_rules.hpp"
#include "thin3d/verify.hpp"

namespace thin3d {

namespace {

const SimpleOracle& simple_oracle() {
  static const SimpleOracle oracle = [](const BinaryVolume& v, Point3 p) {
    return is_simple(v, p);
  };
  return oracle;
}

// Evaluates the deletion predicate for every candidate against the
// immutable snapshot. The threaded path partitions the candidate list and
// concatenates per-chunk results in order, so its output is identical to
// the sequential scan.
std::vector<Point3> decide_deletions(const BinaryVolume& snapshot,
                                     std::span<const Point3> candidates,
                                     const TemplateSet& set, int threads) {
  const auto decide = [&](Point3 p) {
    return !is_tail(snapshot, p) &&
           matches_any(set, snapshot, p, simple_oracle()).has_value();
  };

  std::vector<Point3> deleted;
  if (threads <= 1 || candidates.size() < 2 * static_cast<std::size_t>(threads)) {
    for (Point3 p : candidates)
      if (decide(p)) deleted.push_back(p);
    return deleted;
  }

  std::vector<std::vector<Point3>> local(threads);
  std::vector<std::thread> pool;
  pool.reserve(threads);
  const std::size_t chunk = (candidates.size() + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      const std::size_t lo = t * chunk;
      const std::size_t hi = std::min(candidates.size(), lo + chunk);
      for (std::size_t i = lo; i < hi; ++i)
        if (decide(candidates[i])) local[t].push_back(candidates[i]);
    });
  }
  for (auto& th : pool) th.join();
  for (auto& v : local) deleted.insert(deleted.end(), v.begin(), v.end());
  return deleted;
}

}  // namespace

std::vector<Point3> mark_border(const BinaryVolume& vol) {
  std::vector<Point3> out;
  for (int z = 0; z < vol.dim_z(); ++z)
    for (int y = 0; y < vol.dim_y(); ++y)
      for (int x = 0; x < vol.dim_x(); ++x) {
        const Point3 p{x, y, z};
        if (!vol.is_object(p)) continue;
        if (count_object_neighbors(vol, p, 26) < 26) out.push_back(p);
      }
  return out;
}

std::vector<Point3> deletion_round(BinaryVolume& vol,
                                   std::span<const Point3> candidates,
                                   const TemplateSet& set) {
  for (Point3 p : candidates)
    if (!vol.is_object(p))
      throw std::invalid_argument(
          "deletion_round: candidates must be object points");
  const BinaryVolume snapshot = vol;
  std::vector<Point3> deleted = decide_deletions(snapshot, candidates, set, 1);
  for (Point3 p : deleted) vol.set_object(p, false);
  return deleted;
}

std::pair<BinaryVolume, ThinningReport> thin(BinaryVolume vol,
                                             const TemplateSet& set,
                                             const ThinningOptions& options) {
  if (options.max_passes < 1)
    throw std::invalid_argument("thin: max_passes must be at least 1");

  ThinningReport report;
  report.variant = set.variant();

  bool fixpoint = false;
  for (int pass = 0; pass < options.max_passes && !fixpoint; ++pass) {
    PassRecord rec;
    rec.pass_index = pass;

    std::vector<Point3> candidates = mark_border(vol);
    rec.marked_count = candidates.size();
    if (!options.restrict_to_marked) candidates = vol.object_points();

    std::size_t pass_total = 0;
    for (int round = 0;; ++round) {
      const BinaryVolume snapshot = vol;
      std::vector<Point3> deleted =
          decide_deletions(snapshot, candidates, set, options.threads);
      for (Point3 p : deleted) vol.set_object(p, false);

      rec.rounds.push_back(deleted.size());
      if (options.record_deleted_points) rec.deleted_points.push_back(deleted);
      if (options.observer) options.observer(pass, round, deleted, vol);

      pass_total += deleted.size();
      if (deleted.empty()) break;

      if (options.restrict_to_marked)
        std::erase_if(candidates,
                      [&](Point3 p) { return !vol.is_object(p); });
      else
        candidates = vol.object_points();
    }

    report.passes.push_back(std::move(rec));
    report.total_deleted += pass_total;
    if (pass_total == 0) fixpoint = true;
  }

  report.fixpoint_reached = fixpoint;
  return {std::move(vol), std::move(report)};
}

}  // namespace thin3d
