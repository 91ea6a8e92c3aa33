#include "thin3d/tail_rules.hpp"

#include <stdexcept>

namespace thin3d {

namespace {

constexpr std::array<std::pair<Direction, Direction>, 6> kPairs = {{
    {Direction::S, Direction::E},
    {Direction::S, Direction::U},
    {Direction::N, Direction::W},
    {Direction::U, Direction::W},
    {Direction::N, Direction::D},
    {Direction::E, Direction::D},
}};

}  // namespace

std::span<const std::pair<Direction, Direction>> near_line_end_pairs() {
  return kPairs;
}

TailClassification classify_tail(const BinaryVolume& vol, Point3 p) {
  if (!vol.is_object(p))
    throw std::invalid_argument("classify_tail: p must be an object point");

  Point3 first{}, second{};
  int n = 0;
  for (Point3 o : neighbor_offsets(26)) {
    if (!vol.is_object(p + o)) continue;
    if (n == 0)
      first = o;
    else if (n == 1)
      second = o;
    ++n;
    if (n > 2) return TailClassification::NonTail;
  }
  if (n == 1) return TailClassification::LineEnd;
  if (n != 2) return TailClassification::NonTail;

  for (auto [a, b] : kPairs) {
    const Point3 oa = direction_offset(a), ob = direction_offset(b);
    if ((first == oa && second == ob) || (first == ob && second == oa))
      return TailClassification::NearLineEnd;
  }
  return TailClassification::NonTail;
}

bool is_tail(const BinaryVolume& vol, Point3 p) {
  return classify_tail(vol, p) != TailClassification::NonTail;
}

}  // namespace thin3d
