#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "thin3d/voxel_grid.hpp"

namespace thin3d {

/// Requirement a template places on one neighborhood cell.
enum class CellRequirement : std::uint8_t { Object, Background, DontCare };

enum class TemplateClass : char { A = 'A', B = 'B', C = 'C', D = 'D' };

/// Predicate used by Class D templates; wired to verify::is_simple by the
/// engine. Kept as a parameter so template matching stays self-contained.
using SimpleOracle = std::function<bool(const BinaryVolume&, Point3)>;

/// One deleting template: a ternary mask over the neighborhood of a
/// candidate point p at the origin. Class D templates additionally carry
/// an at-least-one-object group (the '?' cells), the (p1, p2) pair of
/// distinguished 6-neighbor offsets, and the simple-center requirement.
class Template {
 public:
  Template(std::string id, TemplateClass cls);

  const std::string& id() const { return id_; }
  TemplateClass cls() const { return cls_; }

  std::span<const Point3> object_cells() const { return object_; }
  std::span<const Point3> background_cells() const { return background_; }
  std::span<const Point3> any_object_group() const { return group_; }
  bool requires_simple_center() const { return requires_simple_; }
  const std::optional<std::pair<Point3, Point3>>& p1p2_offsets() const {
    return p1p2_;
  }

  /// Requirement stored for a given offset. Offsets not listed (and the
  /// origin) are DontCare.
  CellRequirement requirement_at(Point3 offset) const;

  /// Tight bounding box over all constrained offsets plus the 3x3x3 core.
  Point3 box_lo() const { return lo_; }
  Point3 box_hi() const { return hi_; }

  void add_cell(Point3 offset, CellRequirement req);
  void add_group_cell(Point3 offset);
  void set_p1p2(Point3 p1, Point3 p2);
  void set_requires_simple(bool v) { requires_simple_ = v; }

 private:
  void grow_box(Point3 o);

  std::string id_;
  TemplateClass cls_;
  std::vector<Point3> object_;
  std::vector<Point3> background_;
  std::vector<Point3> group_;
  std::optional<std::pair<Point3, Point3>> p1p2_;
  bool requires_simple_ = false;
  Point3 lo_{-1, -1, -1};
  Point3 hi_{1, 1, 1};
};

enum class TemplateVariant { OriginalMaSonka, Corrected, CorrectedErrata };

std::string_view variant_name(TemplateVariant v);
std::optional<TemplateVariant> parse_variant(std::string_view name);

/// Immutable, ordered collection of deleting templates for one variant.
class TemplateSet {
 public:
  TemplateSet(TemplateVariant variant, std::vector<Template> templates);

  TemplateVariant variant() const { return variant_; }
  std::span<const Template> templates() const { return templates_; }
  std::size_t size() const { return templates_.size(); }
  std::size_t count_of_class(TemplateClass c) const;
  const Template* find(std::string_view id) const;

 private:
  TemplateVariant variant_;
  std::vector<Template> templates_;
};

/// The full literal template set for a variant.
///
/// OriginalMaSonka holds the 38 base templates (6 A, 12 B, 8 C, 12 D)
/// with (p1, p2) left as don't-care cells. Corrected replaces each Class
/// D template dX by dX-1, dX-2, dX-3 with (p1, p2) fixed to (0,0), (0,1)
/// and (1,0). CorrectedErrata additionally extends d3-2 and d8-2 by one
/// plane at the down side, d5-2, d6-2, d11-2 and d12-2 by one plane at
/// the south side, and d7-2 likewise at the down side; each added plane
/// is all don't-care except its center cell, which must be an object.
TemplateSet build_template_set(TemplateVariant variant);

/// True iff every Object cell reads object, every Background cell reads
/// background (out-of-bounds is background), the at-least-one-object
/// group (when non-empty) contains an object voxel, and the simple-center
/// requirement (when set) holds per the oracle.
/// Throws std::invalid_argument if p is not an object point, or if the
/// template requires a simple center and no oracle is given.
bool matches(const Template& t, const BinaryVolume& vol, Point3 p,
             const SimpleOracle& simple_oracle);

/// Id of the first matching template in set order, or nullopt.
std::optional<std::string_view> matches_any(const TemplateSet& set,
                                            const BinaryVolume& vol, Point3 p,
                                            const SimpleOracle& simple_oracle);

}  // namespace thin3d
