#include "lsl/templates.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <set>

#include "lsl/errors.hpp"
#include "lsl/predicates.hpp"

namespace lsl {

namespace {

std::int64_t floor_div(std::int64_t x, std::int64_t m) {
  std::int64_t q = x / m;
  if ((x % m != 0) && ((x < 0) != (m < 0))) --q;
  return q;
}

std::int64_t floor_mod(std::int64_t x, std::int64_t m) { return x - floor_div(x, m) * m; }

// Returns g = gcd(x, y) >= 0 with s*x + t*y = g.
std::int64_t ext_gcd(std::int64_t x, std::int64_t y, std::int64_t& s, std::int64_t& t) {
  std::int64_t s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (y != 0) {
    const std::int64_t q = x / y;
    std::tie(x, y) = std::make_pair(y, x - q * y);
    std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
    std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
  }
  if (x < 0) {
    x = -x;
    s0 = -s0;
    t0 = -t0;
  }
  s = s0;
  t = t0;
  return x;
}

struct Vec2l {
  std::int64_t u = 0;
  std::int64_t v = 0;
};

}  // namespace

PeriodLattice PeriodLattice::from_generators(std::span<const Vec2i> generators) {
  // Incremental row reduction: `w` is the vector with the smallest positive
  // v-component found so far, `a` the gcd of u-components of v == 0 vectors.
  Vec2l w;
  std::int64_t a = 0;
  for (const Vec2i gi : generators) {
    Vec2l g{gi.u, gi.v};
    if (g.v == 0) {
      a = std::gcd(a, g.u);
      continue;
    }
    if (w.v == 0) {
      w = g.v > 0 ? g : Vec2l{-g.u, -g.v};
      continue;
    }
    std::int64_t s = 0, t = 0;
    const std::int64_t gg = ext_gcd(w.v, g.v, s, t);
    const Vec2l nw{s * w.u + t * g.u, s * w.v + t * g.v};
    const Vec2l z{(w.v / gg) * g.u - (g.v / gg) * w.u, 0};
    a = std::gcd(a, z.u);
    w = nw;
  }
  if (a == 0 || w.v == 0) throw UsageError("period vectors do not span a full-rank lattice");
  PeriodLattice l;
  l.a_ = static_cast<int>(std::llabs(a));
  l.d_ = static_cast<int>(w.v);
  l.b_ = static_cast<int>(floor_mod(w.u, l.a_));
  return l;
}

PeriodLattice PeriodLattice::from_periods(Vec2i t1, Vec2i t2) {
  const std::array<Vec2i, 2> gens{t1, t2};
  const std::int64_t det = static_cast<std::int64_t>(t1.u) * t2.v - static_cast<std::int64_t>(t1.v) * t2.u;
  if (det == 0) throw UsageError("period vectors are linearly dependent");
  return from_generators(gens);
}

std::vector<PeriodLattice> PeriodLattice::of_index(int index) {
  std::vector<PeriodLattice> out;
  for (int a = 1; a <= index; ++a) {
    if (index % a != 0) continue;
    for (int b = 0; b < a; ++b) {
      PeriodLattice l;
      l.a_ = a;
      l.b_ = b;
      l.d_ = index / a;
      out.push_back(l);
    }
  }
  return out;
}

Vec2i PeriodLattice::reduce(Vec2i p) const {
  const std::int64_t k = floor_div(p.v, d_);
  const std::int64_t u = static_cast<std::int64_t>(p.u) - k * b_;
  const std::int64_t v = static_cast<std::int64_t>(p.v) - k * d_;
  return {static_cast<int>(floor_mod(u, a_)), static_cast<int>(v)};
}

int PeriodLattice::class_of(Vec2i p) const {
  const Vec2i r = reduce(p);
  return r.v * a_ + r.u;
}

std::vector<Vec2i> PeriodLattice::cell() const {
  std::vector<Vec2i> out;
  out.reserve(static_cast<std::size_t>(index()));
  for (int v = 0; v < d_; ++v) {
    for (int u = 0; u < a_; ++u) out.push_back({u, v});
  }
  return out;
}

bool is_positive_delta(Vec2i d) { return d.u > 0 || (d.u == 0 && d.v > 0); }

PeriodicTemplate::PeriodicTemplate(LatticeKind kind, PeriodLattice periods,
                                   std::vector<EdgeRule> rules, int declared_cap)
    : kind_(kind), periods_(periods), declared_cap_(declared_cap) {
  rules_.reserve(rules.size());
  for (EdgeRule r : rules) {
    if (r.delta == Vec2i{0, 0}) throw UsageError("edge rule with zero delta");
    if (!is_positive_delta(r.delta)) {
      r.anchor = r.anchor + r.delta;
      r.delta = -r.delta;
    }
    r.anchor = periods_.reduce(r.anchor);
    rules_.push_back(r);
  }
  std::sort(rules_.begin(), rules_.end());
  rules_.erase(std::unique(rules_.begin(), rules_.end()), rules_.end());
}

PeriodicTemplate builtin(BuiltinId id) {
  const PeriodLattice unit;
  switch (id) {
    case BuiltinId::kSquareGrid4:
      return {LatticeKind::kSquare, unit, {{{0, 0}, {1, 0}}, {{0, 0}, {0, 1}}}, 4};
    case BuiltinId::kHexRhombic4:
      return {LatticeKind::kHexagonal, unit, {{{0, 0}, {1, 0}}, {{0, 0}, {0, 1}}}, 4};
    case BuiltinId::kHexUnit6:
      return {LatticeKind::kHexagonal,
              unit,
              {{{0, 0}, {1, 0}}, {{0, 0}, {0, 1}}, {{0, 0}, {1, -1}}},
              6};
  }
  throw UsageError("unknown builtin template");
}

BuiltinId parse_builtin(const std::string& name) {
  if (name == "square_grid_4") return BuiltinId::kSquareGrid4;
  if (name == "hex_rhombic_4") return BuiltinId::kHexRhombic4;
  if (name == "hex_unit_6") return BuiltinId::kHexUnit6;
  throw UsageError("unknown builtin template '" + name +
                   "' (expected square_grid_4|hex_rhombic_4|hex_unit_6)");
}

std::string builtin_name(BuiltinId id) {
  switch (id) {
    case BuiltinId::kSquareGrid4:
      return "square_grid_4";
    case BuiltinId::kHexRhombic4:
      return "hex_rhombic_4";
    case BuiltinId::kHexUnit6:
      return "hex_unit_6";
  }
  return "?";
}

GeomGraph instantiate(const PeriodicTemplate& t, const Section& s) {
  if (t.kind() != s.kind()) {
    throw KindMismatchError("template lattice (" + kind_name(t.kind()) + ") does not match section lattice (" +
                     kind_name(s.kind()) + ")");
  }
  const PeriodLattice& lattice = t.periods();
  std::vector<std::vector<Vec2i>> by_class(t.cell_size());
  for (const EdgeRule& r : t.rules()) by_class[lattice.class_of(r.anchor)].push_back(r.delta);

  std::vector<Edge> edges;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const Vec2i p = s.point(i);
    for (const Vec2i d : by_class[lattice.class_of(p)]) {
      if (const auto j = s.index_of(p + d)) edges.push_back({static_cast<int>(i), *j});
    }
  }
  return GeomGraph(s, std::move(edges));
}

double weight_per_vertex(const PeriodicTemplate& t) {
  double total = 0.0;
  for (const EdgeRule& r : t.rules()) total += std::sqrt(static_cast<double>(norm2(t.kind(), r.delta)));
  return total / static_cast<double>(t.cell_size());
}

std::vector<Vec2i> edge_alphabet(LatticeKind kind) {
  if (kind == LatticeKind::kSquare) return {{1, 0}, {0, 1}, {1, 1}, {1, -1}};
  return {{1, 0}, {0, 1}, {1, -1}, {1, 1}, {2, -1}, {1, -2}};
}

bool rules_conflict(const PeriodLattice& lattice, const EdgeRule& r1, const EdgeRule& r2) {
  const Segment e1{r1.anchor, r1.anchor + r1.delta};
  const int reach = std::max(std::abs(r1.delta.u), std::abs(r1.delta.v)) +
                    std::max(std::abs(r2.delta.u), std::abs(r2.delta.v)) + 1;
  const int target = lattice.class_of(r2.anchor);
  for (int dv = -reach; dv <= reach; ++dv) {
    for (int du = -reach; du <= reach; ++du) {
      const Vec2i p = r1.anchor + Vec2i{du, dv};
      if (lattice.class_of(p) != target) continue;
      if (p == r1.anchor && r1.delta == r2.delta) continue;  // the same edge
      if (segments_cross(e1, Segment{p, p + r2.delta})) return true;
    }
  }
  return false;
}

TemplateCheck check_template(const PeriodicTemplate& t) {
  TemplateCheck c;
  const PeriodLattice& lattice = t.periods();
  c.class_degree.assign(t.cell_size(), 0);
  const auto& rules = t.rules();
  for (std::size_t k = 0; k < rules.size(); ++k) {
    ++c.class_degree[lattice.class_of(rules[k].anchor)];
    ++c.class_degree[lattice.class_of(rules[k].anchor + rules[k].delta)];
    if (std::gcd(std::abs(rules[k].delta.u), std::abs(rules[k].delta.v)) > 1) {
      c.piercing_rules.push_back(static_cast<int>(k));
    }
    for (std::size_t l = k; l < rules.size(); ++l) {
      if (rules_conflict(lattice, rules[k], rules[l])) {
        c.conflicts.emplace_back(static_cast<int>(k), static_cast<int>(l));
      }
    }
  }
  for (int d : c.class_degree) c.max_degree = std::max(c.max_degree, d);
  return c;
}

namespace {

std::vector<Mat2i> close_group(std::vector<Mat2i> gens) {
  std::set<Mat2i> seen{Mat2i{}};
  std::vector<Mat2i> frontier{Mat2i{}};
  while (!frontier.empty()) {
    const Mat2i x = frontier.back();
    frontier.pop_back();
    for (const Mat2i& g : gens) {
      const Mat2i y = g * x;
      if (seen.insert(y).second) frontier.push_back(y);
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

const std::vector<Mat2i>& point_group(LatticeKind kind) {
  // Square: quarter turn and reflection in the u-axis.
  static const std::vector<Mat2i> square = close_group({{0, -1, 1, 0}, {1, 0, 0, -1}});
  // Hexagonal: (u,v) -> (-v, u+v) is a 60 degree turn; (u,v) -> (u+v, -v) a
  // reflection in the mu0 axis. Both preserve u^2 + v^2 + uv.
  static const std::vector<Mat2i> hex = close_group({{0, -1, 1, 1}, {1, 1, 0, -1}});
  return kind == LatticeKind::kSquare ? square : hex;
}

PeriodicTemplate transform(const PeriodicTemplate& t, const Mat2i& g, Vec2i shift) {
  const std::array<Vec2i, 2> gens{g(t.periods().t1()), g(t.periods().t2())};
  const PeriodLattice lattice = PeriodLattice::from_generators(gens);
  std::vector<EdgeRule> rules;
  rules.reserve(t.rules().size());
  for (const EdgeRule& r : t.rules()) rules.push_back({g(r.anchor) + shift, g(r.delta)});
  return PeriodicTemplate(t.kind(), lattice, std::move(rules), t.declared_cap());
}

PeriodicTemplate primitive(const PeriodicTemplate& t) {
  std::vector<Vec2i> gens{t.periods().t1(), t.periods().t2()};
  bool grew = false;
  for (const Vec2i s : t.periods().cell()) {
    if (s == Vec2i{0, 0}) continue;
    if (transform(t, Mat2i{}, s).rules() == t.rules()) {
      gens.push_back(s);
      grew = true;
    }
  }
  if (!grew) return t;
  const PeriodLattice lattice = PeriodLattice::from_generators(gens);
  return PeriodicTemplate(t.kind(), lattice, t.rules(), t.declared_cap());
}

namespace {

std::vector<int> key_of(const PeriodicTemplate& t) {
  std::vector<int> key{t.periods().a(), t.periods().b(), t.periods().d()};
  key.reserve(3 + 4 * t.rules().size());
  for (const EdgeRule& r : t.rules()) {
    key.insert(key.end(), {r.anchor.u, r.anchor.v, r.delta.u, r.delta.v});
  }
  return key;
}

std::pair<std::vector<int>, PeriodicTemplate> canonical(const PeriodicTemplate& t) {
  const PeriodicTemplate p = primitive(t);
  std::optional<std::pair<std::vector<int>, PeriodicTemplate>> best;
  for (const Mat2i& g : point_group(p.kind())) {
    const PeriodicTemplate image = transform(p, g, {0, 0});
    for (const Vec2i s : image.periods().cell()) {
      PeriodicTemplate shifted = transform(image, Mat2i{}, s);
      std::vector<int> key = key_of(shifted);
      if (!best || key < best->first) best.emplace(std::move(key), std::move(shifted));
    }
  }
  return std::move(*best);
}

}  // namespace

std::vector<int> canonical_key(const PeriodicTemplate& t) { return canonical(t).first; }

PeriodicTemplate canonical_form(const PeriodicTemplate& t) { return canonical(t).second; }

}  // namespace lsl
