#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "lsl/errors.hpp"
#include "lsl/ext_length.hpp"
#include "lsl/lattice.hpp"
#include "lsl/predicates.hpp"

using namespace lsl;

namespace {

const LatticeKind kSq = LatticeKind::kSquare;
const LatticeKind kHex = LatticeKind::kHexagonal;

LatticeCoord sq(int u, int v) { return {u, v, kSq}; }
LatticeCoord hx(int u, int v) { return {u, v, kHex}; }

}  // namespace

TEST(Lattice, BasisVectorsAreUnitAndHexAngleIs60) {
  for (LatticeKind k : {kSq, kHex}) {
    for (const Vec2d& b : basis(k)) EXPECT_NEAR(std::hypot(b.x, b.y), 1.0, 1e-12);
  }
  const auto hb = basis(kHex);
  EXPECT_NEAR(hb[0].x * hb[1].x + hb[0].y * hb[1].y, 0.5, 1e-12);
}

TEST(Lattice, EmbedExamples) {
  const Vec2d a = embed(sq(3, 4));
  EXPECT_EQ(a.x, 3.0);
  EXPECT_EQ(a.y, 4.0);
  const Vec2d b = embed(hx(1, 1));
  EXPECT_NEAR(b.x, 1.5, 1e-12);
  EXPECT_NEAR(b.y, 0.8660254037844386, 1e-12);
  const Vec2d c = embed(hx(0, 0));
  EXPECT_EQ(c.x, 0.0);
  EXPECT_EQ(c.y, 0.0);
}

TEST(Lattice, DistanceExamples) {
  EXPECT_NEAR(dist(sq(0, 0), sq(1, 2)), 2.2360680, 1e-7);
  EXPECT_NEAR(dist(hx(0, 0), hx(1, 1)), 1.7320508, 1e-7);
  EXPECT_NEAR(dist(hx(0, 0), hx(1, -1)), 1.0, 1e-12);
  EXPECT_EQ(sq_dist(hx(0, 0), hx(1, -1)), 1);
  EXPECT_THROW(dist(sq(0, 0), hx(1, 0)), UsageError);
  EXPECT_THROW(sq_dist(hx(0, 0), sq(1, 0)), UsageError);
}

TEST(Lattice, DistanceMatchesEmbeddingAndTriangleInequality) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> c(-40, 40);
  for (LatticeKind k : {kSq, kHex}) {
    for (int t = 0; t < 2000; ++t) {
      const LatticeCoord p{c(rng), c(rng), k}, q{c(rng), c(rng), k}, r{c(rng), c(rng), k};
      const double d = dist(p, q);
      EXPECT_NEAR(d * d, static_cast<double>(sq_dist(p, q)), 1e-9);
      const Vec2d ep = embed(p), eq = embed(q);
      EXPECT_NEAR(d, std::hypot(ep.x - eq.x, ep.y - eq.y), 1e-12 * std::max(1.0, d));
      EXPECT_EQ(d, dist(q, p));
      EXPECT_LE(dist(p, r), d + dist(q, r) + 1e-12);
    }
  }
}

TEST(Section, GenerateExamples) {
  EXPECT_EQ(generate_section(kSq, Shape::rect(2, 2)).size(), 9u);
  EXPECT_EQ(generate_section(kHex, Shape::hexball(1)).size(), 7u);
  EXPECT_EQ(generate_section(kHex, Shape::rhombus(1, 1)).size(), 4u);
  EXPECT_TRUE(generate_section(kSq, Shape::empty()).empty());
  EXPECT_THROW(generate_section(kSq, Shape::rect(-1, 2)), UsageError);
}

TEST(Section, CountsMatchClosedFormsAndPointsAreDistinctRowMajor) {
  for (int a = 0; a <= 20; ++a) {
    for (int b = 0; b <= 20; b += 4) {
      for (const Shape& sh : {Shape::rect(a, b), Shape::rhombus(a, b)}) {
        const Section s = generate_section(sh.type == ShapeType::kRect ? kSq : kHex, sh);
        EXPECT_EQ(s.size(), static_cast<std::size_t>((a + 1) * (b + 1)));
        EXPECT_EQ(s.size(), expected_point_count(sh));
      }
    }
    const Section ball = generate_section(kHex, Shape::hexball(a));
    EXPECT_EQ(ball.size(), static_cast<std::size_t>(1 + 3 * a * (a + 1)));
    for (std::size_t i = 0; i < ball.size(); ++i) {
      const Vec2i p = ball.point(i);
      EXPECT_LE(std::max({std::abs(p.u), std::abs(p.v), std::abs(p.u + p.v)}), a);
      if (i > 0) {
        const Vec2i q = ball.point(i - 1);
        EXPECT_TRUE(q.v < p.v || (q.v == p.v && q.u < p.u));
      }
      EXPECT_EQ(ball.index_of(p), static_cast<int>(i));
    }
  }
}

TEST(Section, IndexLookupAndMargin) {
  const Section s = generate_section(kSq, Shape::rect(4, 2));
  EXPECT_EQ(s.index_of({0, 0}), 0);
  EXPECT_EQ(s.index_of({4, 2}), 14);
  EXPECT_FALSE(s.index_of({5, 0}).has_value());
  EXPECT_FALSE(s.index_of({0, -1}).has_value());
  EXPECT_EQ(s.boundary_margin(*s.index_of({2, 1})), 1);
  EXPECT_EQ(s.boundary_margin(*s.index_of({1, 1})), 1);
  EXPECT_EQ(s.boundary_margin(*s.index_of({0, 1})), 0);
  const Section ball = generate_section(kHex, Shape::hexball(3));
  EXPECT_EQ(ball.boundary_margin(*ball.index_of({0, 0})), 3);
  EXPECT_EQ(ball.boundary_margin(*ball.index_of({1, 1})), 1);
  EXPECT_EQ(ball.boundary_margin(*ball.index_of({-3, 1})), 0);
}

TEST(Wedge, Examples) {
  const Wedge w = classify_wedge(sq(0, 0), sq(-3, 2));
  EXPECT_EQ(w.index, 2);
  EXPECT_EQ(w.canonical.u, 3);
  EXPECT_EQ(w.canonical.v, 2);

  const Wedge h = classify_wedge(hx(0, 0), hx(-2, 3));
  EXPECT_EQ(h.index, 2);
  EXPECT_EQ(h.local.u, 2);
  EXPECT_EQ(h.local.v, 1);

  EXPECT_EQ(classify_wedge(sq(0, 0), sq(0, 5)).index, 1);
  EXPECT_THROW(classify_wedge(sq(1, 1), sq(1, 1)), UsageError);
  EXPECT_THROW(classify_wedge(sq(0, 0), hx(1, 1)), UsageError);
}

TEST(Wedge, CanonicalFormIsAnIsometryIntoTheFundamentalDomain) {
  for (LatticeKind k : {kSq, kHex}) {
    for (int u = -9; u <= 9; ++u) {
      for (int v = -9; v <= 9; ++v) {
        if (u == 0 && v == 0) continue;
        const LatticeCoord p{2, -1, k};
        const LatticeCoord q{2 + u, -1 + v, k};
        const Wedge w = classify_wedge(p, q);
        EXPECT_GE(w.canonical.u, 0);
        EXPECT_GE(w.canonical.v, 0);
        EXPECT_GE(w.local.u, 0);
        EXPECT_GE(w.local.v, 0);
        EXPECT_NEAR(dist(p, q), dist({0, 0, k}, w.canonical), 1e-12);
        if (k == kHex) {
          EXPECT_GE(w.canonical.u, w.canonical.v);
          EXPECT_GE(w.index, 1);
          EXPECT_LE(w.index, 6);
        } else {
          EXPECT_LE(w.index, 4);
          EXPECT_EQ(w.y_ge_x, w.canonical.v >= w.canonical.u);
        }
      }
    }
  }
}

// ---- predicates -----------------------------------------------------------

namespace {

// Independent oracle: parametric intersection in exact rational arithmetic.
bool cross_oracle(Vec2i a, Vec2i b, Vec2i c, Vec2i d) {
  const std::int64_t rx = b.u - a.u, ry = b.v - a.v, sx = d.u - c.u, sy = d.v - c.v;
  const std::int64_t den = rx * sy - ry * sx;
  const std::int64_t qx = c.u - a.u, qy = c.v - a.v;
  if (den == 0) {
    if (qx * ry - qy * rx != 0) return false;  // parallel, distinct lines
    // Collinear: overlap of the parameter intervals on the first segment.
    const std::int64_t rr = rx * rx + ry * ry;
    std::int64_t t0 = qx * rx + qy * ry;                    // c, scaled by rr
    std::int64_t t1 = (d.u - a.u) * rx + (d.v - a.v) * ry;  // d, scaled by rr
    if (t0 > t1) std::swap(t0, t1);
    return std::min<std::int64_t>(t1, rr) - std::max<std::int64_t>(t0, 0) > 0;
  }
  std::int64_t tn = qx * sy - qy * sx;  // t = tn / den on segment 1
  std::int64_t un = qx * ry - qy * rx;  // u = un / den on segment 2
  std::int64_t dd = den;
  if (dd < 0) {
    dd = -dd;
    tn = -tn;
    un = -un;
  }
  if (tn < 0 || tn > dd || un < 0 || un > dd) return false;
  const bool t_end = tn == 0 || tn == dd;
  const bool u_end = un == 0 || un == dd;
  return !(t_end && u_end);  // endpoint meets endpoint: shared vertex
}

}  // namespace

TEST(Predicates, CrossingExamples) {
  EXPECT_TRUE(segments_cross({{0, 0}, {1, 1}}, {{0, 1}, {1, 0}}));
  EXPECT_FALSE(segments_cross({{0, 0}, {1, 0}}, {{1, 0}, {2, 1}}));
  EXPECT_TRUE(segments_cross({{0, 0}, {2, 0}}, {{1, 0}, {1, 1}}));
  EXPECT_TRUE(segments_cross({{0, 0}, {2, 0}}, {{1, 0}, {3, 0}}));   // collinear overlap
  EXPECT_FALSE(segments_cross({{0, 0}, {1, 0}}, {{1, 0}, {2, 0}}));  // collinear, shared endpoint
  EXPECT_FALSE(segments_cross({{0, 0}, {1, 0}}, {{2, 0}, {3, 0}}));
}

TEST(Predicates, CrossingAgreesWithRationalOracleAndIsStable) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> c(-4, 4);
  int crossings = 0;
  for (int t = 0; t < 200000; ++t) {
    const Vec2i a{c(rng), c(rng)}, b{c(rng), c(rng)}, p{c(rng), c(rng)}, q{c(rng), c(rng)};
    if (a == b || p == q) continue;
    const bool got = segments_cross({a, b}, {p, q});
    ASSERT_EQ(got, cross_oracle(a, b, p, q)) << a.u << "," << a.v << " " << b.u << "," << b.v << " | " << p.u
                                              << "," << p.v << " " << q.u << "," << q.v;
    EXPECT_EQ(got, segments_cross({p, q}, {a, b}));
    EXPECT_EQ(got, segments_cross({b, a}, {q, p}));
    EXPECT_EQ(got, segments_cross({a, b}, {p, q}));
    crossings += got;
  }
  EXPECT_GT(crossings, 1000);
}

TEST(Predicates, PiercingExamples) {
  const Section rect = generate_section(kSq, Shape::rect(2, 2));
  EXPECT_TRUE(edge_pierces_point({{0, 0}, {2, 0}}, rect));
  EXPECT_FALSE(edge_pierces_point({{0, 0}, {1, 1}}, rect));
  const Section ball = generate_section(kHex, Shape::hexball(2));
  EXPECT_TRUE(edge_pierces_point({{0, 0}, {2, 2}}, ball));
}

TEST(Predicates, PiercingAgreesWithInteriorPointScan) {
  const Section s = generate_section(kSq, Shape::rect(6, 5));
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      const Vec2i a = s.point(i), b = s.point(j);
      bool oracle = false;
      for (const Vec2i p : s.points()) {
        if (p == a || p == b) continue;
        const std::int64_t cr = std::int64_t(b.u - a.u) * (p.v - a.v) - std::int64_t(b.v - a.v) * (p.u - a.u);
        const std::int64_t dot = std::int64_t(p.u - a.u) * (b.u - a.u) + std::int64_t(p.v - a.v) * (b.v - a.v);
        const std::int64_t len = std::int64_t(b.u - a.u) * (b.u - a.u) + std::int64_t(b.v - a.v) * (b.v - a.v);
        if (cr == 0 && dot > 0 && dot < len) oracle = true;
      }
      ASSERT_EQ(edge_pierces_point({a, b}, s), oracle);
      EXPECT_EQ(std::gcd(b.u - a.u, b.v - a.v) > 1, oracle);  // the rectangle is convex
    }
  }
}

// ---- exact lengths --------------------------------------------------------

TEST(ExtLength, Examples) {
  const ExtLength x(2, 2, 2);
  EXPECT_NEAR(x.value(), 4.8284271, 1e-7);
  EXPECT_EQ(ExtLength(0, 0, 3).value(), 0.0);
  EXPECT_NEAR(ExtLength(2, 1, 3).value(), 3.7320508, 1e-7);
  EXPECT_THROW(ExtLength(1, 1, 5), UsageError);
  EXPECT_THROW((void)(ExtLength(1, 1, 2) < ExtLength(1, 1, 3)), UsageError);
  EXPECT_EQ(ExtLength(1, 1, 2) + ExtLength(2, 3, 2), ExtLength(3, 4, 2));
  EXPECT_TRUE(ExtLength(3, 0, 2) < ExtLength(1, 2, 2));  // 3 < 1 + 2 sqrt2
  EXPECT_TRUE(ExtLength(7, 0, 2) < ExtLength(0, 5, 2));  // 5 sqrt2 = 7.071...
}

TEST(ExtLength, ExactOrderAgreesWithDoublesWhenSeparated) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> c(-5000, 5000);
  for (int d : {2, 3}) {
    for (int t = 0; t < 100000; ++t) {
      const ExtLength x(c(rng), c(rng), d), y(c(rng), c(rng), d);
      const double dx = x.value(), dy = y.value();
      if (std::abs(dx - dy) <= 1e-9) continue;
      ASSERT_EQ(x < y, dx < dy);
    }
  }
  // Near ties that doubles cannot resolve: 19601^2 - 2*13860^2 = 1.
  EXPECT_TRUE(ExtLength(19601, 0, 2) > ExtLength(0, 13860, 2));
  EXPECT_TRUE(ExtLength(-19601, 13860, 2) < ExtLength(0, 0, 2));
  EXPECT_EQ(sign_of_surd(-19601, 13860, 2), -1);
  EXPECT_EQ(sign_of_surd(0, 0, 3), 0);
}

TEST(ExtLength, TextForm) {
  EXPECT_EQ(ExtLength(2, 0, 2).to_string(), "2");
  EXPECT_EQ(ExtLength(0, 1, 3).to_string(), "sqrt(3)");
  EXPECT_EQ(ExtLength(1, -1, 2).to_string(), "1-sqrt(2)");
  EXPECT_EQ(ExtLength(2, 3, 2).to_string(), "2+3*sqrt(2)");
  EXPECT_EQ(ExtLength(0, -2, 3).to_string(), "-2*sqrt(3)");
}
