#include "thin3d/verify.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <random>
#include <stdexcept>

#include "thin3d/engine.hpp"

namespace thin3d {

ComponentLabeling::ComponentLabeling(int adjacency, int dim_x, int dim_y,
                                     int dim_z)
    : adjacency_(adjacency),
      dx_(dim_x),
      dy_(dim_y),
      dz_(dim_z),
      labels_(static_cast<std::size_t>(dim_x) * dim_y * dim_z, -1) {}

int ComponentLabeling::label_of(Point3 p) const {
  if (p.x < 0 || p.x >= dx_ || p.y < 0 || p.y >= dy_ || p.z < 0 || p.z >= dz_)
    return -1;
  return labels_[(static_cast<std::size_t>(p.z) * dy_ + p.y) * dx_ + p.x];
}

void ComponentLabeling::set_label(Point3 p, int label) {
  labels_[(static_cast<std::size_t>(p.z) * dy_ + p.y) * dx_ + p.x] = label;
}

std::vector<std::size_t> ComponentLabeling::component_sizes() const {
  std::vector<std::size_t> sizes(count_, 0);
  for (int l : labels_)
    if (l >= 0) ++sizes[static_cast<std::size_t>(l)];
  return sizes;
}

ComponentLabeling label_components(const BinaryVolume& vol, int k) {
  const auto offs = neighbor_offsets(k);  // validates k
  ComponentLabeling out(k, vol.dim_x(), vol.dim_y(), vol.dim_z());

  int next = 0;
  std::deque<Point3> queue;
  for (int z = 0; z < vol.dim_z(); ++z)
    for (int y = 0; y < vol.dim_y(); ++y)
      for (int x = 0; x < vol.dim_x(); ++x) {
        const Point3 seed{x, y, z};
        if (!vol.is_object(seed) || out.label_of(seed) >= 0) continue;
        out.set_label(seed, next);
        queue.push_back(seed);
        while (!queue.empty()) {
          const Point3 p = queue.front();
          queue.pop_front();
          for (Point3 o : offs) {
            const Point3 q = p + o;
            if (vol.is_object(q) && out.label_of(q) < 0) {
              out.set_label(q, next);
              queue.push_back(q);
            }
          }
        }
        ++next;
      }
  out.set_count(static_cast<std::size_t>(next));
  return out;
}

std::size_t component_count(const BinaryVolume& vol, int k) {
  return label_components(vol, k).count();
}

namespace {

// Adjacency between neighborhood offsets, precomputed once. n26[i][j]
// marks 26-adjacency between the i-th and j-th entries of the 26-offset
// table; n18 marks 6-adjacency within the 18-offset table.
struct NeighborhoodGraphs {
  std::array<std::array<bool, 26>, 26> adj26{};
  std::array<std::array<bool, 18>, 18> adj18x6{};
  std::array<bool, 18> is6_18{};  // offset has squared length 1

  NeighborhoodGraphs() {
    const auto o26 = neighbor_offsets(26);
    const auto o18 = neighbor_offsets(18);
    for (std::size_t i = 0; i < 26; ++i)
      for (std::size_t j = 0; j < 26; ++j)
        adj26[i][j] = i != j && squared_distance(o26[i], o26[j]) <= 3;
    for (std::size_t i = 0; i < 18; ++i) {
      is6_18[i] = squared_distance({0, 0, 0}, o18[i]) == 1;
      for (std::size_t j = 0; j < 18; ++j)
        adj18x6[i][j] = i != j && squared_distance(o18[i], o18[j]) == 1;
    }
  }
};

const NeighborhoodGraphs& graphs() {
  static const NeighborhoodGraphs g;
  return g;
}

}  // namespace

bool is_simple(const BinaryVolume& vol, Point3 p) {
  if (!vol.is_object(p))
    throw std::invalid_argument("is_simple: p must be an object point");
  const auto& g = graphs();
  const auto o26 = neighbor_offsets(26);
  const auto o18 = neighbor_offsets(18);

  // (i) exactly one 26-component of object points in N26(p)
  std::array<bool, 26> object{};
  int object_total = 0;
  for (std::size_t i = 0; i < 26; ++i) {
    object[i] = vol.is_object(p + o26[i]);
    object_total += object[i];
  }
  if (object_total == 0) return false;

  std::array<int, 26> comp{};
  comp.fill(-1);
  int ncomp = 0;
  std::array<std::size_t, 26> stack{};
  for (std::size_t s = 0; s < 26; ++s) {
    if (!object[s] || comp[s] >= 0) continue;
    if (++ncomp > 1) return false;
    std::size_t top = 0;
    stack[top++] = s;
    comp[s] = 0;
    while (top) {
      const std::size_t i = stack[--top];
      for (std::size_t j = 0; j < 26; ++j)
        if (object[j] && comp[j] < 0 && g.adj26[i][j]) {
          comp[j] = 0;
          stack[top++] = j;
        }
    }
  }

  // (ii) the background 6-neighbors of p lie in exactly one 6-component
  // of background within N18(p)
  std::array<bool, 18> background{};
  bool any_bg6 = false;
  for (std::size_t i = 0; i < 18; ++i) {
    background[i] = !vol.is_object(p + o18[i]);
    if (background[i] && g.is6_18[i]) any_bg6 = true;
  }
  if (!any_bg6) return false;

  std::array<int, 18> bcomp{};
  bcomp.fill(-1);
  int nbg = 0;
  std::array<std::size_t, 18> bstack{};
  for (std::size_t s = 0; s < 18; ++s) {
    if (!background[s] || !g.is6_18[s] || bcomp[s] >= 0) continue;
    if (++nbg > 1) return false;
    std::size_t top = 0;
    bstack[top++] = s;
    bcomp[s] = 0;
    while (top) {
      const std::size_t i = bstack[--top];
      for (std::size_t j = 0; j < 18; ++j)
        if (background[j] && bcomp[j] < 0 && g.adj18x6[i][j]) {
          bcomp[j] = 0;
          bstack[top++] = j;
        }
    }
  }
  return nbg == 1;
}

P1P2AuditReport audit_p1p2(const TemplateSet& set) {
  P1P2AuditReport report;
  report.variant = set.variant();
  for (const Template& t : set.templates()) {
    if (!t.p1p2_offsets()) {
      ++report.non_class_d;
      continue;
    }
    const auto [p1, p2] = *t.p1p2_offsets();
    P1P2AuditReport::Entry e;
    e.id = t.id();
    e.p1 = t.requirement_at(p1);
    e.p2 = t.requirement_at(p2);
    e.violation = e.p1 != CellRequirement::Background &&
                  e.p2 != CellRequirement::Background;
    if (e.violation) ++report.violation_count;
    report.class_d.push_back(std::move(e));
  }
  return report;
}

Point3 Fixture::landmark(std::string_view name) const {
  for (const auto& [n, p] : landmarks)
    if (n == name) return p;
  throw std::invalid_argument("unknown landmark");
}

namespace {

Fixture from_points(std::span<const std::pair<std::string, Point3>> named,
                    std::span<const Point3> extra) {
  Point3 lo{0, 0, 0}, hi{0, 0, 0};
  bool first = true;
  auto grow = [&](Point3 p) {
    if (first) {
      lo = hi = p;
      first = false;
      return;
    }
    lo = {std::min(lo.x, p.x), std::min(lo.y, p.y), std::min(lo.z, p.z)};
    hi = {std::max(hi.x, p.x), std::max(hi.y, p.y), std::max(hi.z, p.z)};
  };
  for (const auto& [n, p] : named) grow(p);
  for (Point3 p : extra) grow(p);

  const Point3 shift{1 - lo.x, 1 - lo.y, 1 - lo.z};  // margin of one voxel
  Fixture fx{BinaryVolume(hi.x - lo.x + 3, hi.y - lo.y + 3, hi.z - lo.z + 3),
             {}};
  for (const auto& [n, p] : named) {
    fx.volume.set_object(p + shift, true);
    fx.landmarks.emplace_back(n, p + shift);
  }
  for (Point3 p : extra) fx.volume.set_object(p + shift, true);
  return fx;
}

// The seven chain points in template-relative coordinates: d at the
// origin, c and e its up and down neighbors, b the ne diagonal, f in the
// down-plane corner, a and g the outer tips.
constexpr std::array<std::pair<const char*, Point3>, 7> kFig7Points = {{
    {"a", {2, 2, 0}},
    {"b", {1, 1, 0}},
    {"c", {0, 0, 1}},
    {"d", {0, 0, 0}},
    {"e", {0, 0, -1}},
    {"f", {-1, -1, -1}},
    {"g", {-2, -2, -1}},
}};

std::vector<Point3> ring_xy(int x0, int x1, int y0, int y1, int z) {
  std::vector<Point3> out;
  for (int x = x0; x <= x1; ++x) {
    out.push_back({x, y0, z});
    out.push_back({x, y1, z});
  }
  for (int y = y0 + 1; y < y1; ++y) {
    out.push_back({x0, y, z});
    out.push_back({x1, y, z});
  }
  return out;
}

}  // namespace

Fixture fig7_fixture() {
  std::vector<std::pair<std::string, Point3>> named;
  for (const auto& [n, p] : kFig7Points) named.emplace_back(n, p);
  return from_points(named, {});
}

Fixture fig12_fixture() {
  std::vector<std::pair<std::string, Point3>> named;
  for (const auto& [n, p] : kFig7Points) named.emplace_back(n, p);
  // Two rings, one touching each chain tip at a corner.
  std::vector<Point3> extra = ring_xy(3, 6, 3, 6, 0);
  for (Point3 p : ring_xy(-6, -3, -6, -3, -1)) extra.push_back(p);
  return from_points(named, extra);
}

Fixture line_fixture(int n, Axis axis) {
  if (n < 1) throw std::invalid_argument("line length must be positive");
  std::vector<Point3> pts;
  for (int i = 0; i < n; ++i)
    pts.push_back(axis == Axis::X   ? Point3{i, 0, 0}
                  : axis == Axis::Y ? Point3{0, i, 0}
                                    : Point3{0, 0, i});
  return from_points({}, pts);
}

Fixture box_fixture(int a, int b, int c) {
  if (a < 1 || b < 1 || c < 1)
    throw std::invalid_argument("box sides must be positive");
  std::vector<Point3> pts;
  for (int z = 0; z < c; ++z)
    for (int y = 0; y < b; ++y)
      for (int x = 0; x < a; ++x) pts.push_back({x, y, z});
  return from_points({}, pts);
}

Fixture single_fixture() { return from_points({}, std::array<Point3, 1>{{{0, 0, 0}}}); }

Fixture random_fixture(std::uint64_t seed, int dim_x, int dim_y, int dim_z,
                       double density) {
  if (density < 0.0 || density > 1.0)
    throw std::invalid_argument("density must be within [0, 1]");
  Fixture fx{BinaryVolume(dim_x, dim_y, dim_z), {}};
  std::mt19937_64 gen(seed);
  for (int z = 0; z < dim_z; ++z)
    for (int y = 0; y < dim_y; ++y)
      for (int x = 0; x < dim_x; ++x) {
        const double u =
            static_cast<double>(gen() >> 11) * (1.0 / 9007199254740992.0);
        if (u < density) fx.volume.set_object({x, y, z}, true);
      }
  return fx;
}

std::uint64_t fuzz_trial_seed(std::uint64_t base_seed, int trial) {
  std::uint64_t z =
      base_seed + 0x9E3779B97F4A7C15ull * static_cast<std::uint64_t>(trial + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

FuzzReport fuzz_connectivity(const TemplateSet& set, const FuzzOptions& opts) {
  if (opts.trials < 1) throw std::invalid_argument("fuzz: trials must be >= 1");
  FuzzReport report;
  report.variant = set.variant();
  report.trials = opts.trials;
  report.seed = opts.seed;
  report.dim_x = opts.dim_x;
  report.dim_y = opts.dim_y;
  report.dim_z = opts.dim_z;
  report.density = opts.density;

  for (int trial = 0; trial < opts.trials; ++trial) {
    BinaryVolume volume;
    std::uint64_t volume_seed = 0;
    if (trial < static_cast<int>(opts.injected.size())) {
      volume = opts.injected[static_cast<std::size_t>(trial)];
    } else {
      volume_seed = fuzz_trial_seed(opts.seed, trial);
      volume = random_fixture(volume_seed, opts.dim_x, opts.dim_y, opts.dim_z,
                              opts.density)
                   .volume;
    }

    std::size_t current = component_count(volume);
    ThinningOptions topt;
    topt.observer = [&](int pass, int round, std::span<const Point3> deleted,
                        const BinaryVolume& after) {
      if (deleted.empty()) return;
      const std::size_t now = component_count(after);
      if (now != current)
        report.violations.push_back(
            {trial, volume_seed, pass, round, current, now});
      current = now;
    };
    thin(std::move(volume), set, topt);
  }
  return report;
}

FuzzReport fuzz_connectivity(const TemplateSet& set, int trials, int dim,
                             double density, std::uint64_t seed) {
  FuzzOptions opts;
  opts.trials = trials;
  opts.dim_x = opts.dim_y = opts.dim_z = dim;
  opts.density = density;
  opts.seed = seed;
  return fuzz_connectivity(set, opts);
}

}  // namespace thin3d
