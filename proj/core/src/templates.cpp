#include "thin3d/templates.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "thin3d/template_tables.hpp"

namespace thin3d {

namespace {

constexpr std::array<std::string_view, 7> kErrataExtendedBases = {
    "d3", "d5", "d6", "d7", "d8", "d11", "d12"};

bool errata_extends(std::string_view base_id) {
  return std::find(kErrataExtendedBases.begin(), kErrataExtendedBases.end(),
                   base_id) != kErrataExtendedBases.end();
}

// Parses one 27-character table into a Template. 'p'/'q' cells stay
// don't-care and are recorded as the (p1, p2) offsets.
Template parse_record(const detail::TemplateRecord& rec) {
  Template t(rec.id, static_cast<TemplateClass>(rec.cls));
  Point3 p1{}, p2{};
  bool have_p1 = false, have_p2 = false;
  const char* c = rec.cells;
  for (int z = 1; z >= -1; --z)
    for (int y = 1; y >= -1; --y)
      for (int x = -1; x <= 1; ++x, ++c) {
        const Point3 o{x, y, z};
        if (o == Point3{0, 0, 0}) continue;  // the candidate point itself
        switch (*c) {
          case '0':
            t.add_cell(o, CellRequirement::Background);
            break;
          case '1':
            t.add_cell(o, CellRequirement::Object);
            break;
          case '.':
            break;
          case '?':
            t.add_group_cell(o);
            break;
          case 'p':
            p1 = o;
            have_p1 = true;
            break;
          case 'q':
            p2 = o;
            have_p2 = true;
            break;
          default:
            throw std::logic_error("bad cell character in template table");
        }
      }
  if (have_p1 != have_p2)
    throw std::logic_error("template table has an unpaired p1/p2 cell");
  if (have_p1) t.set_p1p2(p1, p2);
  t.set_requires_simple(t.cls() == TemplateClass::D);
  return t;
}

std::vector<Template> base_templates() {
  std::vector<Template> out;
  out.reserve(38);
  for (const auto& rec : detail::kBaseTemplates) out.push_back(parse_record(rec));
  return out;
}

// dX -> dX-1, dX-2, dX-3 with (p1, p2) fixed to (0,0), (0,1), (1,0).
std::array<Template, 3> split_class_d(const Template& base) {
  const auto [p1, p2] = *base.p1p2_offsets();
  constexpr std::array<std::pair<CellRequirement, CellRequirement>, 3> kCombos =
      {{{CellRequirement::Background, CellRequirement::Background},
        {CellRequirement::Background, CellRequirement::Object},
        {CellRequirement::Object, CellRequirement::Background}}};
  std::array<Template, 3> out = {base, base, base};
  for (std::size_t i = 0; i < 3; ++i) {
    Template& t = out[i];
    t = Template(base.id() + "-" + std::to_string(i + 1), TemplateClass::D);
    for (Point3 o : base.object_cells()) t.add_cell(o, CellRequirement::Object);
    for (Point3 o : base.background_cells())
      t.add_cell(o, CellRequirement::Background);
    for (Point3 o : base.any_object_group()) t.add_group_cell(o);
    t.add_cell(p1, kCombos[i].first);
    t.add_cell(p2, kCombos[i].second);
    t.set_p1p2(p1, p2);
    t.set_requires_simple(true);
  }
  return out;
}

// Appends the errata plane one step beyond p2: all don't-care except the
// center cell, which must be an object point.
void apply_errata_extension(Template& t) {
  const Point3 p2 = t.p1p2_offsets()->second;
  t.add_cell(p2 + p2, CellRequirement::Object);
}

}  // namespace

Template::Template(std::string id, TemplateClass cls)
    : id_(std::move(id)), cls_(cls) {}

void Template::grow_box(Point3 o) {
  lo_ = {std::min(lo_.x, o.x), std::min(lo_.y, o.y), std::min(lo_.z, o.z)};
  hi_ = {std::max(hi_.x, o.x), std::max(hi_.y, o.y), std::max(hi_.z, o.z)};
}

void Template::add_cell(Point3 offset, CellRequirement req) {
  if (offset == Point3{0, 0, 0})
    throw std::invalid_argument("the origin is implicitly the candidate");
  if (req == CellRequirement::DontCare) return;
  grow_box(offset);
  (req == CellRequirement::Object ? object_ : background_).push_back(offset);
}

void Template::add_group_cell(Point3 offset) {
  grow_box(offset);
  group_.push_back(offset);
}

void Template::set_p1p2(Point3 p1, Point3 p2) {
  if (squared_distance({0, 0, 0}, p1) != 1 ||
      squared_distance({0, 0, 0}, p2) != 1)
    throw std::invalid_argument("p1/p2 must be 6-neighbor offsets");
  p1p2_ = {p1, p2};
}

CellRequirement Template::requirement_at(Point3 offset) const {
  for (Point3 o : object_)
    if (o == offset) return CellRequirement::Object;
  for (Point3 o : background_)
    if (o == offset) return CellRequirement::Background;
  return CellRequirement::DontCare;
}

std::string_view variant_name(TemplateVariant v) {
  switch (v) {
    case TemplateVariant::OriginalMaSonka:
      return "original";
    case TemplateVariant::Corrected:
      return "corrected";
    case TemplateVariant::CorrectedErrata:
      return "corrected-errata";
  }
  return "?";
}

std::optional<TemplateVariant> parse_variant(std::string_view name) {
  if (name == "original") return TemplateVariant::OriginalMaSonka;
  if (name == "corrected") return TemplateVariant::Corrected;
  if (name == "corrected-errata") return TemplateVariant::CorrectedErrata;
  return std::nullopt;
}

TemplateSet::TemplateSet(TemplateVariant variant,
                         std::vector<Template> templates)
    : variant_(variant), templates_(std::move(templates)) {}

std::size_t TemplateSet::count_of_class(TemplateClass c) const {
  return static_cast<std::size_t>(
      std::count_if(templates_.begin(), templates_.end(),
                    [c](const Template& t) { return t.cls() == c; }));
}

const Template* TemplateSet::find(std::string_view id) const {
  for (const Template& t : templates_)
    if (t.id() == id) return &t;
  return nullptr;
}

TemplateSet build_template_set(TemplateVariant variant) {
  std::vector<Template> base = base_templates();
  if (variant == TemplateVariant::OriginalMaSonka)
    return TemplateSet(variant, std::move(base));

  std::vector<Template> out;
  out.reserve(62);
  for (const Template& t : base) {
    if (t.cls() != TemplateClass::D) {
      out.push_back(t);
      continue;
    }
    for (Template& d : split_class_d(t)) {
      if (variant == TemplateVariant::CorrectedErrata &&
          d.id().ends_with("-2") && errata_extends(t.id()))
        apply_errata_extension(d);
      out.push_back(std::move(d));
    }
  }
  return TemplateSet(variant, std::move(out));
}

bool matches(const Template& t, const BinaryVolume& vol, Point3 p,
             const SimpleOracle& simple_oracle) {
  if (!vol.is_object(p))
    throw std::invalid_argument("matches: p must be an object point");
  for (Point3 o : t.background_cells())
    if (vol.is_object(p + o)) return false;
  for (Point3 o : t.object_cells())
    if (!vol.is_object(p + o)) return false;
  if (!t.any_object_group().empty()) {
    bool any = false;
    for (Point3 o : t.any_object_group())
      if (vol.is_object(p + o)) {
        any = true;
        break;
      }
    if (!any) return false;
  }
  if (t.requires_simple_center()) {
    if (!simple_oracle)
      throw std::invalid_argument(
          "matches: template requires a simple-point oracle");
    if (!simple_oracle(vol, p)) return false;
  }
  return true;
}

std::optional<std::string_view> matches_any(const TemplateSet& set,
                                            const BinaryVolume& vol, Point3 p,
                                            const SimpleOracle& simple_oracle) {
  for (const Template& t : set.templates())
    if (matches(t, vol, p, simple_oracle)) return t.id();
  return std::nullopt;
}

}  // namespace thin3d
