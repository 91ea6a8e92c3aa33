#pragma once

#include <array>
#include <span>
#include <utility>

#include "thin3d/voxel_grid.hpp"

namespace thin3d {

enum class TailClassification { LineEnd, NearLineEnd, NonTail };

/// The six direction pairs whose exact object 26-neighborhood makes a
/// point a near-line-end point: {s,e}, {s,u}, {n,w}, {u,w}, {n,d}, {e,d}.
std::span<const std::pair<Direction, Direction>> near_line_end_pairs();

/// LineEnd iff p has exactly one object 26-neighbor; NearLineEnd iff it
/// has exactly two and they are one of the six listed 6-neighbor pairs;
/// NonTail otherwise. Throws std::invalid_argument if p is not object.
TailClassification classify_tail(const BinaryVolume& vol, Point3 p);

/// Tail points (line-end or near-line-end) are never deleted.
bool is_tail(const BinaryVolume& vol, Point3 p);

}  // namespace thin3d
