#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>

#include "lsl/errors.hpp"
#include "lsl/graph.hpp"
#include "lsl/json_io.hpp"
#include "lsl/templates.hpp"
#include "support.hpp"

using namespace lsl;
using lsl::testing::stored;

namespace {

const LatticeKind kSq = LatticeKind::kSquare;
const LatticeKind kHex = LatticeKind::kHexagonal;

const char* const kStoredLabels[] = {
    "square-cap3-rank1", "square-cap3-rank2", "square-light-rank1", "hex-cap3-rank1",
    "hex-cap4-rank1",    "hex-cap4-rank2",    "square-cap4-rank1",
};

// Edge membership in the infinite periodic graph, straight from the rules.
bool has_edge_inf(const PeriodicTemplate& t, Vec2i p, Vec2i q) {
  Vec2i d = q - p;
  Vec2i base = p;
  if (!is_positive_delta(d)) {
    d = p - q;
    base = q;
  }
  for (const EdgeRule& r : t.rules()) {
    if (r.delta == d && t.periods().contains(base - r.anchor)) return true;
  }
  return false;
}

std::vector<Vec2i> all_deltas(LatticeKind k) {
  std::vector<Vec2i> out;
  for (const Vec2i d : edge_alphabet(k)) {
    out.push_back(d);
    out.push_back(Vec2i{0, 0} - d);
  }
  return out;
}

}  // namespace

TEST(PeriodLattice, HermiteFormAndEnumeration) {
  const std::array<Vec2i, 2> g{Vec2i{2, 1}, Vec2i{-1, 2}};
  const PeriodLattice l = PeriodLattice::from_generators(g);
  EXPECT_EQ(l.a(), 5);
  EXPECT_EQ(l.b(), 2);
  EXPECT_EQ(l.d(), 1);
  EXPECT_TRUE(l.contains({2, 1}));
  EXPECT_TRUE(l.contains({-1, 2}));
  EXPECT_FALSE(l.contains({1, 0}));
  // Number of index-n sublattices of Z^2 is the divisor sum of n.
  for (int n = 1; n <= 8; ++n) {
    int sigma = 0;
    for (int k = 1; k <= n; ++k) sigma += n % k == 0 ? k : 0;
    EXPECT_EQ(PeriodLattice::of_index(n).size(), static_cast<std::size_t>(sigma));
  }
  EXPECT_THROW(PeriodLattice::from_periods({1, 2}, {2, 4}), UsageError);
  const PeriodLattice q = PeriodLattice::from_periods({3, 1}, {1, 2});
  std::set<int> classes;
  for (int u = -6; u <= 6; ++u) {
    for (int v = -6; v <= 6; ++v) {
      const int c = q.class_of({u, v});
      EXPECT_EQ(c, q.class_of(Vec2i{u, v} + Vec2i{3, 1}));
      classes.insert(c);
    }
  }
  EXPECT_EQ(classes.size(), 5u);
}

TEST(Builtin, Examples) {
  const Section r22 = generate_section(kSq, Shape::rect(2, 2));
  EXPECT_EQ(instantiate(builtin(BuiltinId::kSquareGrid4), r22).edge_count(), 12u);
  const Section ball = generate_section(kHex, Shape::hexball(1));
  const GeomGraph rh = instantiate(builtin(BuiltinId::kHexRhombic4), ball);
  EXPECT_EQ(rh.edge_count(), 8u);
  int along_mu0 = 0;
  for (std::size_t k = 0; k < rh.edge_count(); ++k) {
    along_mu0 += (ball.point(rh.edge(k).j) - ball.point(rh.edge(k).i)).v == 0;
  }
  EXPECT_EQ(along_mu0, 4);
  EXPECT_EQ(instantiate(builtin(BuiltinId::kHexUnit6), ball).edge_count(), 12u);

  const GeomGraph big = instantiate(builtin(BuiltinId::kSquareGrid4), generate_section(kSq, Shape::rect(20, 20)));
  EXPECT_EQ(big.edge_count(), 840u);
  for (std::size_t i = 0; i < big.vertex_count(); ++i) {
    if (big.section().boundary_margin(i) >= 1) EXPECT_EQ(big.degree(static_cast<int>(i)), 4);
  }
  EXPECT_EQ(instantiate(builtin(BuiltinId::kSquareGrid4), generate_section(kSq, Shape::empty())).edge_count(), 0u);
  EXPECT_THROW(instantiate(builtin(BuiltinId::kSquareGrid4), ball), KindMismatchError);
  EXPECT_EQ(parse_builtin("hex_unit_6"), BuiltinId::kHexUnit6);
  EXPECT_THROW(parse_builtin("grid"), UsageError);
}

TEST(Weight, PerVertexValues) {
  EXPECT_DOUBLE_EQ(weight_per_vertex(builtin(BuiltinId::kSquareGrid4)), 2.0);
  EXPECT_DOUBLE_EQ(weight_per_vertex(builtin(BuiltinId::kHexRhombic4)), 2.0);
  EXPECT_DOUBLE_EQ(weight_per_vertex(builtin(BuiltinId::kHexUnit6)), 3.0);
  EXPECT_NEAR(weight_per_vertex(stored("square-light-rank1")), 1.6485281, 1e-6);
  EXPECT_NEAR(weight_per_vertex(stored("square-cap3-rank1")), 1.7071068, 1e-6);
  // Closed forms.
  EXPECT_NEAR(weight_per_vertex(stored("square-light-rank1")), 0.8 + 0.6 * std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(weight_per_vertex(stored("square-cap3-rank1")), 1.0 + std::sqrt(2.0) / 2.0, 1e-12);
}

TEST(Weight, EqualsHalfIncidentLengthAveragedOverClasses) {
  for (const char* label : kStoredLabels) {
    const PeriodicTemplate t = stored(label);
    double sum = 0.0;
    for (const Vec2i c : t.periods().cell()) {
      for (const Vec2i d : all_deltas(t.kind())) {
        if (has_edge_inf(t, c, c + d)) sum += 0.5 * std::sqrt(static_cast<double>(norm2(t.kind(), d)));
      }
    }
    EXPECT_NEAR(weight_per_vertex(t), sum / static_cast<double>(t.cell_size()), 1e-12) << label;
  }
}

TEST(Instantiate, IsLocal) {
  for (const char* label : kStoredLabels) {
    const PeriodicTemplate t = stored(label);
    const Shape big_shape = t.kind() == kSq ? Shape::rect(12, 11) : Shape::rhombus(12, 11);
    const Shape small_shape = t.kind() == kSq ? Shape::rect(7, 5) : Shape::rhombus(7, 5);
    const GeomGraph big = instantiate(t, generate_section(t.kind(), big_shape));
    const Section small = generate_section(t.kind(), small_shape);
    std::vector<Edge> restricted;
    for (const Edge& e : big.edges()) {
      const auto a = small.index_of(big.section().point(e.i));
      const auto b = small.index_of(big.section().point(e.j));
      if (a && b) restricted.push_back({std::min(*a, *b), std::max(*a, *b)});
    }
    std::sort(restricted.begin(), restricted.end());
    const GeomGraph direct = instantiate(t, small);
    ASSERT_EQ(restricted, std::vector<Edge>(direct.edges().begin(), direct.edges().end())) << label;
  }
}

// Truncation may strand boundary vertices of a degree-3 pattern, so only
// planarity and degree are required on every section.
TEST(Instantiate, StoredTemplatesAreValidOnEverySection) {
  for (const char* label : kStoredLabels) {
    const PeriodicTemplate t = stored(label);
    EXPECT_TRUE(check_template(t).ok(t.declared_cap())) << label;
    for (int n = 0; n <= 30; ++n) {
      const Shape shape = t.kind() == kSq ? Shape::rect(n, n) : Shape::rhombus(n, n);
      const ValidityReport r = validate(instantiate(t, generate_section(t.kind(), shape)), t.declared_cap());
      EXPECT_TRUE(r.plane()) << label << " n=" << n;
      EXPECT_LE(r.max_degree, t.declared_cap()) << label << " n=" << n;
    }
  }
  const PeriodicTemplate sq3 = stored("square-cap3-rank1");
  EXPECT_TRUE(validate(instantiate(sq3, generate_section(kSq, Shape::rect(4, 4))), 3).accepted());
}

TEST(CheckTemplate, DetectsDegreeAndCrossings) {
  EXPECT_TRUE(check_template(builtin(BuiltinId::kSquareGrid4)).ok(4));
  EXPECT_FALSE(check_template(builtin(BuiltinId::kSquareGrid4)).ok(3));
  const PeriodicTemplate x(kSq, PeriodLattice{}, {{{0, 0}, {1, 1}}, {{0, 0}, {1, -1}}}, 4);
  const TemplateCheck c = check_template(x);
  EXPECT_EQ(c.conflicts.size(), 1u);
  EXPECT_FALSE(c.ok(4));
  const PeriodicTemplate unit6 = builtin(BuiltinId::kHexUnit6);
  EXPECT_EQ(check_template(unit6).max_degree, 6);
  EXPECT_TRUE(check_template(unit6).ok(6));
}

TEST(Canonical, RulesAreNormalized) {
  const PeriodLattice l = PeriodLattice::from_periods({2, 0}, {0, 2});
  const PeriodicTemplate t(kSq, l, {{{3, 5}, {-1, 0}}, {{0, 1}, {0, 1}}, {{0, 1}, {0, 1}}}, 3);
  ASSERT_EQ(t.rules().size(), 2u);
  for (const EdgeRule& r : t.rules()) {
    EXPECT_TRUE(is_positive_delta(r.delta));
    EXPECT_EQ(l.reduce(r.anchor), r.anchor);
  }
  // (3,5)->(2,5) is the edge (2,5)->(3,5), anchored at class (0,1).
  EXPECT_EQ(t.rules()[0], (EdgeRule{{0, 1}, {0, 1}}));
  EXPECT_EQ(t.rules()[1], (EdgeRule{{0, 1}, {1, 0}}));
}

TEST(Canonical, PrimitiveFindsTheFullTranslationGroup) {
  const PeriodLattice l = PeriodLattice::from_periods({2, 0}, {0, 2});
  std::vector<EdgeRule> rules;
  for (const Vec2i c : l.cell()) {
    rules.push_back({c, {1, 0}});
    rules.push_back({c, {0, 1}});
  }
  const PeriodicTemplate blown(kSq, l, rules, 4);
  const PeriodicTemplate p = primitive(blown);
  EXPECT_EQ(p.periods().index(), 1);
  EXPECT_EQ(canonical_key(blown), canonical_key(builtin(BuiltinId::kSquareGrid4)));
}

TEST(Canonical, KeyIsInvariantUnderSymmetriesAndEquivalentTemplatesAreCongruent) {
  std::mt19937 rng(19);
  for (const char* label : kStoredLabels) {
    const PeriodicTemplate t = stored(label);
    const auto key = canonical_key(t);
    const auto& group = point_group(t.kind());
    EXPECT_EQ(group.size(), t.kind() == kSq ? 8u : 12u);
    std::uniform_int_distribution<int> sh(-7, 7);
    for (const Mat2i& g : group) {
      const Vec2i shift{sh(rng), sh(rng)};
      const PeriodicTemplate img = transform(t, g, shift);
      ASSERT_EQ(canonical_key(img), key) << label;
      EXPECT_EQ(canonical_form(img), canonical_form(t));
      // The image graph is the congruent copy: compare edges on a window.
      for (int u = -4; u <= 4; ++u) {
        for (int v = -4; v <= 4; ++v) {
          for (const Vec2i d : all_deltas(t.kind())) {
            const Vec2i p{u, v};
            ASSERT_EQ(has_edge_inf(t, p, p + d), has_edge_inf(img, g(p) + shift, g(p + d) + shift)) << label;
          }
        }
      }
    }
  }
}

TEST(Canonical, DistinctStoredTemplatesHaveDistinctKeys) {
  std::set<std::vector<int>> keys;
  for (const char* label : kStoredLabels) keys.insert(canonical_key(stored(label)));
  EXPECT_EQ(keys.size(), std::size(kStoredLabels));
  EXPECT_NE(canonical_key(builtin(BuiltinId::kHexRhombic4)), canonical_key(builtin(BuiltinId::kHexUnit6)));
}

TEST(TemplateJson, RoundTrip) {
  for (const char* label : kStoredLabels) {
    const PeriodicTemplate t = stored(label);
    EXPECT_EQ(template_from_json(parse_json(to_json(t).dump())), t);
  }
  EXPECT_THROW(template_from_json(parse_json(R"({"kind":"square","periods":[[1,0],[2,0]],"edges":[],"declared_cap":3})")),
               FormatError);
  EXPECT_THROW(template_from_json(parse_json(R"({"kind":"cubic","periods":[[1,0],[0,1]],"edges":[],"declared_cap":3})")),
               FormatError);
}
