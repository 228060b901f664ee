#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "lsl/graph.hpp"
#include "lsl/lattice.hpp"
#include "lsl/templates.hpp"

namespace lsl {

/// Non-piercing segments between section points with squared length at most
/// max_sq_length (0: no limit), ordered by squared length, then (i, j).
std::vector<Edge> candidate_edges(const Section& s, std::int64_t max_sq_length);

struct SearchConfig {
  Section section;
  int degree_cap = 3;
  std::int64_t max_sq_length = 0;      // 0: all non-piercing segments
  std::uint64_t node_limit = 2'000'000'000ULL;
  double time_limit_seconds = 3600.0;
  int workers = 0;
};

struct SearchStats {
  std::uint64_t nodes_explored = 0;
  double elapsed_seconds = 0.0;
};

struct Certificate {
  double optimum = std::numeric_limits<double>::infinity();
  // Equal to optimum when exhaustive; otherwise the smallest bound among
  // subtrees left unexplored (still a valid lower bound for the section).
  double lower_bound = 0.0;
  GeomGraph graph;
  bool exhaustive = false;
  bool infeasible = false;  // no connected plane graph within the cap exists
  std::size_t candidate_count = 0;
  int degree_cap = 0;
  std::int64_t max_sq_length = 0;
  SearchStats stats;
};

/// Minimum over plane graphs with max degree <= cap on the section of the
/// all-pairs stretch, by branch and bound over candidate edges. The reported
/// graph is the first optimum in the sequential search order, so it does not
/// depend on the worker count. Throws UsageError for more than 256 candidates.
Certificate min_dilation_exact(const SearchConfig& cfg);

/// Max stretch of an arbitrary edge subset over all vertex pairs, by
/// Floyd-Warshall. Small sections only.
double all_pairs_stretch(const Section& s, const std::vector<Edge>& edges);

struct DiscoveryConfig {
  LatticeKind kind = LatticeKind::kSquare;
  int degree_cap = 3;
  std::vector<PeriodLattice> periods;
  std::optional<Shape> eval_shape;  // default RECT(30,30) / RHOMBUS(24,24)
  int margin = 4;
  std::size_t max_results = 8;
  double stretch_ceiling = std::numeric_limits<double>::infinity();
  // Keep only rule sets to which no further rule can be added. Adding edges
  // never increases stretch, so this loses no stretch optimum.
  bool maximal_only = true;
  // Keep only templates with this weight per vertex (within 1e-9).
  std::optional<double> weight_target;
  int workers = 0;
};

struct DiscoveredTemplate {
  PeriodicTemplate tmpl;  // canonical form
  double interior_stretch = 0.0;
  double weight = 0.0;
  std::pair<int, int> witness{-1, -1};  // vertex indices in the eval section
  Vec2i witness_offset;
};

struct DiscoveryStats {
  std::uint64_t rule_sets = 0;  // valid rule sets enumerated
  std::size_t distinct = 0;     // after symmetry dedup
  std::size_t screened = 0;     // connected and within the ceiling bound
  std::size_t evaluated = 0;    // full interior stretch computed
};

struct DiscoveryResult {
  std::vector<DiscoveredTemplate> templates;  // by (stretch, weight, canonical key)
  Section eval_section;
  int margin = 0;
  DiscoveryStats stats;
};

/// All period lattices with index in [1, max_index].
std::vector<PeriodLattice> periods_up_to(int max_index);

Shape default_eval_shape(LatticeKind kind);

DiscoveryResult discover_templates(const DiscoveryConfig& cfg);

/// Index-5 lattices spanned by (2,1),(-1,2) and by the mirror pair.
std::vector<PeriodLattice> light_periods();

/// Degree-3 square templates on light_periods() with weight 4/5 + 3 sqrt2/5.
DiscoveryResult discover_light_templates(double stretch_ceiling, std::size_t max_results = 8,
                                         int workers = 0);

}  // namespace lsl
