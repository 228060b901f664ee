#include <gtest/gtest.h>

#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>

#include "lsl/errors.hpp"
#include "lsl/json_io.hpp"
#include "lsl/search.hpp"

using namespace lsl;

namespace {

const LatticeKind kSq = LatticeKind::kSquare;
const LatticeKind kHex = LatticeKind::kHexagonal;

SearchConfig config(LatticeKind k, Shape shape, int cap, std::int64_t max_sq) {
  SearchConfig c;
  c.section = generate_section(k, shape);
  c.degree_cap = cap;
  c.max_sq_length = max_sq;
  c.workers = 1;
  return c;
}

// Plain enumeration of every edge subset; Floyd-Warshall stretch per subset.
double brute_force_optimum(const Section& s, int cap, std::int64_t max_sq) {
  std::vector<Edge> cand;
  const int n = static_cast<int>(s.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Vec2i d = s.point(j) - s.point(i);
      if (max_sq > 0 && norm2(s.kind(), d) > max_sq) continue;
      if (edge_pierces_point({s.point(i), s.point(j)}, s)) continue;
      cand.push_back({i, j});
    }
  }
  const std::size_t m = cand.size();
  EXPECT_LE(m, 20u);
  std::vector<std::uint32_t> conflict(m, 0);
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      if (x != y && segments_cross({s.point(cand[x].i), s.point(cand[x].j)}, {s.point(cand[y].i), s.point(cand[y].j)})) {
        conflict[x] |= 1u << y;
      }
    }
  }
  double best = std::numeric_limits<double>::infinity();
  std::vector<double> d(n * n);
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    bool ok = true;
    std::vector<int> deg(n, 0);
    for (std::size_t e = 0; e < m && ok; ++e) {
      if (!(mask >> e & 1u)) continue;
      if (conflict[e] & mask) ok = false;
      if (++deg[cand[e].i] > cap || ++deg[cand[e].j] > cap) ok = false;
    }
    if (!ok) continue;
    std::fill(d.begin(), d.end(), std::numeric_limits<double>::infinity());
    for (int i = 0; i < n; ++i) d[i * n + i] = 0;
    for (std::size_t e = 0; e < m; ++e) {
      if (!(mask >> e & 1u)) continue;
      const double w = dist(s.coord(cand[e].i), s.coord(cand[e].j));
      d[cand[e].i * n + cand[e].j] = d[cand[e].j * n + cand[e].i] = w;
    }
    for (int k = 0; k < n; ++k) {
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) d[i * n + j] = std::min(d[i * n + j], d[i * n + k] + d[k * n + j]);
      }
    }
    double worst = 1.0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) worst = std::max(worst, d[i * n + j] / dist(s.coord(i), s.coord(j)));
    }
    best = std::min(best, worst);
  }
  return best;
}

}  // namespace

TEST(Candidates, CountsAndOrder) {
  EXPECT_EQ(candidate_edges(generate_section(kSq, Shape::rect(1, 1)), 2).size(), 6u);
  EXPECT_EQ(candidate_edges(generate_section(kHex, Shape::hexball(1)), 3).size(), 18u);
  const Section s33 = generate_section(kSq, Shape::rect(2, 2));
  const auto all = candidate_edges(s33, 0);
  // Oracle: pairs whose coordinate difference is primitive (the rectangle is convex).
  int coprime = 0;
  for (std::size_t i = 0; i < s33.size(); ++i) {
    for (std::size_t j = i + 1; j < s33.size(); ++j) {
      const Vec2i d = s33.point(j) - s33.point(i);
      coprime += std::gcd(std::abs(d.u), std::abs(d.v)) == 1;
    }
  }
  EXPECT_EQ(coprime, 28);
  EXPECT_EQ(all.size(), 28u);
  for (std::size_t k = 1; k < all.size(); ++k) {
    const auto len = [&](const Edge& e) { return norm2(kSq, s33.point(e.j) - s33.point(e.i)); };
    EXPECT_TRUE(len(all[k - 1]) < len(all[k]) || (len(all[k - 1]) == len(all[k]) && all[k - 1] < all[k]));
  }
}

TEST(Certificate, TwoByTwoSquareIsSqrt2) {
  const Certificate c = min_dilation_exact(config(kSq, Shape::rect(1, 1), 3, 2));
  EXPECT_TRUE(c.exhaustive);
  EXPECT_FALSE(c.infeasible);
  EXPECT_NEAR(c.optimum, std::sqrt(2.0), 1e-12);
  EXPECT_EQ(c.lower_bound, c.optimum);
  EXPECT_EQ(c.candidate_count, 6u);
  EXPECT_TRUE(validate(c.graph, 3).accepted());
}

TEST(Certificate, ThreeByThreeSquareIsAtLeastOnePlusSqrt2) {
  const Certificate c = min_dilation_exact(config(kSq, Shape::rect(2, 2), 3, 0));
  EXPECT_EQ(c.candidate_count, 28u);
  EXPECT_TRUE(c.exhaustive);
  EXPECT_GE(c.optimum, 1 + std::sqrt(2.0) - 1e-9);
  EXPECT_TRUE(validate(c.graph, 3).accepted());
  EXPECT_EQ(stretch(c.graph, PairFilter::all()).max_stretch, c.optimum);
}

TEST(Certificate, HexBallOneDegreeFourIsTwo) {
  const Certificate c = min_dilation_exact(config(kHex, Shape::hexball(1), 4, 3));
  EXPECT_EQ(c.candidate_count, 18u);
  EXPECT_TRUE(c.exhaustive);
  EXPECT_NEAR(c.optimum, 2.0, 1e-9);
  EXPECT_TRUE(validate(c.graph, 4).accepted());
}

TEST(Certificate, MatchesPlainEnumeration) {
  struct Case {
    LatticeKind k;
    Shape shape;
    int cap;
    std::int64_t max_sq;
  };
  const Case cases[] = {
      {kSq, Shape::rect(1, 1), 1, 2},     {kSq, Shape::rect(1, 1), 2, 2},     {kSq, Shape::rect(1, 1), 3, 2},
      {kSq, Shape::rect(2, 1), 2, 2},     {kSq, Shape::rect(2, 1), 3, 2},     {kSq, Shape::rect(2, 1), 3, 5},
      {kSq, Shape::rect(3, 1), 3, 2},     {kSq, Shape::rect(3, 1), 2, 5},     {kHex, Shape::hexball(1), 2, 3},
      {kHex, Shape::hexball(1), 3, 3},    {kHex, Shape::hexball(1), 4, 3},    {kHex, Shape::rhombus(2, 1), 3, 3},
      {kHex, Shape::rhombus(2, 1), 2, 7}, {kHex, Shape::rhombus(1, 1), 2, 0}, {kSq, Shape::rect(2, 2), 3, 1},
  };
  for (const Case& c : cases) {
    const SearchConfig cfg = config(c.k, c.shape, c.cap, c.max_sq);
    const Certificate cert = min_dilation_exact(cfg);
    ASSERT_LE(cert.candidate_count, 20u);
    const double want = brute_force_optimum(cfg.section, c.cap, c.max_sq);
    EXPECT_TRUE(cert.exhaustive);
    if (want == std::numeric_limits<double>::infinity()) {
      EXPECT_TRUE(cert.infeasible) << shape_name(c.shape) << " cap " << c.cap;
    } else {
      EXPECT_NEAR(cert.optimum, want, 1e-12) << shape_name(c.shape) << " cap " << c.cap << " max_sq " << c.max_sq;
      EXPECT_TRUE(validate(cert.graph, c.cap).accepted());
    }
  }
}

TEST(Certificate, MonotoneInCapAndCandidateLength) {
  const Section s = generate_section(kSq, Shape::rect(2, 1));
  double prev = std::numeric_limits<double>::infinity();
  for (int cap = 1; cap <= 5; ++cap) {
    const double v = min_dilation_exact(config(kSq, Shape::rect(2, 1), cap, 0)).optimum;
    EXPECT_LE(v, prev);
    prev = v;
  }
  prev = 0.0;
  for (std::int64_t max_sq : {0, 8, 5, 4, 2, 1}) {
    const double v = min_dilation_exact(config(kHex, Shape::rhombus(2, 1), 3, max_sq)).optimum;
    EXPECT_GE(v, prev);
    prev = v;
  }
}

TEST(Certificate, SameResultForEveryWorkerCount) {
  for (const SearchConfig& base : {config(kSq, Shape::rect(2, 2), 3, 0), config(kHex, Shape::hexball(1), 3, 3),
                                   config(kHex, Shape::hexball(1), 4, 3)}) {
    SearchConfig cfg = base;
    const std::string ref = to_json(min_dilation_exact(cfg), false).dump();
    for (int w : {4, 16}) {
      cfg.workers = w;
      EXPECT_EQ(to_json(min_dilation_exact(cfg), false).dump(), ref);
    }
  }
}

TEST(Certificate, InfeasibleAndBudgetAndErrors) {
  const Certificate inf = min_dilation_exact(config(kSq, Shape::rect(1, 1), 1, 0));
  EXPECT_TRUE(inf.infeasible);
  EXPECT_TRUE(inf.exhaustive);
  EXPECT_EQ(inf.optimum, std::numeric_limits<double>::infinity());
  EXPECT_EQ(inf.graph.edge_count(), 0u);

  const Certificate pair = min_dilation_exact(config(kSq, Shape::rect(1, 0), 1, 0));
  EXPECT_EQ(pair.optimum, 1.0);

  SearchConfig tight = config(kHex, Shape::hexball(2), 3, 3);
  tight.node_limit = 5;
  const Certificate partial = min_dilation_exact(tight);
  EXPECT_FALSE(partial.exhaustive);
  EXPECT_FALSE(partial.infeasible);
  EXPECT_LE(partial.lower_bound, partial.optimum);
  if (std::isfinite(partial.optimum)) EXPECT_TRUE(validate(partial.graph, 3).accepted());

  SearchConfig bad = config(kSq, Shape::rect(1, 1), 0, 0);
  EXPECT_THROW(min_dilation_exact(bad), UsageError);
  bad.degree_cap = 3;
  bad.node_limit = 0;
  EXPECT_THROW(min_dilation_exact(bad), UsageError);
  EXPECT_THROW(min_dilation_exact(config(kSq, Shape::rect(5, 5), 3, 0)), UsageError);
}

TEST(Certificate, HexBallTwoDegreeThreeWithBudget) {
  SearchConfig cfg = config(kHex, Shape::hexball(2), 3, 3);
  cfg.node_limit = 2'000'000;
  cfg.time_limit_seconds = 120;
  const Certificate c = min_dilation_exact(cfg);
  // A partial certificate still bounds the section optimum from below.
  EXPECT_LE(c.lower_bound, c.optimum + 1e-12);
  if (c.exhaustive) EXPECT_EQ(c.lower_bound, c.optimum);
  if (std::isfinite(c.optimum)) EXPECT_TRUE(validate(c.graph, 3).accepted());
}
