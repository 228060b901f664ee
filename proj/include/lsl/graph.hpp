#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "lsl/ext_length.hpp"
#include "lsl/lattice.hpp"
#include "lsl/predicates.hpp"

namespace lsl {

struct Edge {
  int i = 0;  // i < j
  int j = 0;

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Straight-line graph on the points of a section. Immutable: edges are
/// normalized (i < j), sorted and checked for duplicates at construction.
class GeomGraph {
 public:
  GeomGraph() = default;
  GeomGraph(Section section, std::vector<Edge> edges);

  const Section& section() const { return section_; }
  LatticeKind kind() const { return section_.kind(); }
  std::size_t vertex_count() const { return section_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(std::size_t k) const { return edges_[k]; }

  std::span<const int> neighbors(int v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  /// Edge lengths aligned with neighbors(v).
  std::span<const double> neighbor_lengths(int v) const {
    return {adj_len_.data() + offsets_[v], adj_len_.data() + offsets_[v + 1]};
  }
  int degree(int v) const { return offsets_[v + 1] - offsets_[v]; }
  bool has_edge(int a, int b) const;

  std::int64_t edge_sq_length(std::size_t k) const;
  double edge_length(std::size_t k) const;
  Segment segment(std::size_t k) const {
    return {section_.point(edges_[k].i), section_.point(edges_[k].j)};
  }

  /// Copy with extra edges (duplicates of existing edges are ignored).
  GeomGraph with_edges(std::span<const Edge> extra) const;

 private:
  Section section_;
  std::vector<Edge> edges_;
  std::vector<int> offsets_{0};
  std::vector<int> adj_;
  std::vector<double> adj_len_;
};

struct ValidityReport {
  int degree_cap = 0;
  int max_degree = 0;
  std::vector<std::pair<int, int>> crossings;  // edge index pairs, first < second
  std::vector<int> piercings;                  // edge indices
  bool connected = true;

  bool plane() const { return crossings.empty() && piercings.empty(); }
  bool accepted() const { return max_degree <= degree_cap && plane() && connected; }
};

/// Degree, crossing, piercing and connectivity checks in exact integer arithmetic.
ValidityReport validate(const GeomGraph& g, int degree_cap);

bool is_connected(const GeomGraph& g);

/// Exact length of a path whose edges all have length 1 or sqrt(d).
/// Throws MixedRadicalError otherwise, UsageError if two consecutive
/// vertices are not adjacent.
ExtLength path_length_exact(const GeomGraph& g, std::span<const int> path);

}  // namespace lsl
