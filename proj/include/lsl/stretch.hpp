#pragma once

#include <limits>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "lsl/ext_length.hpp"
#include "lsl/graph.hpp"

namespace lsl {

inline constexpr double kUnreachable = std::numeric_limits<double>::infinity();

/// Relative tolerance for treating two path lengths or ratios as tied.
inline constexpr double kTieTolerance = 1e-12;

struct ShortestPaths {
  std::vector<double> dist;  // kUnreachable if no path
  std::vector<int> parent;   // -1 for the source and unreachable vertices
};

/// Dijkstra under Euclidean edge weights. Among equally short paths the
/// parent with the smallest index wins.
ShortestPaths shortest_paths_from(const GeomGraph& g, int source);

struct PairFilter {
  enum class Kind { kAll, kInterior };
  Kind kind = Kind::kAll;
  int margin = 0;

  static PairFilter all() { return {}; }
  static PairFilter interior(int margin) { return {Kind::kInterior, margin}; }
  bool keeps(const Section& s, std::size_t i) const {
    return kind == Kind::kAll || s.boundary_margin(i) >= margin;
  }
  friend bool operator==(const PairFilter&, const PairFilter&) = default;
};

struct StretchReport {
  double max_stretch = 1.0;
  std::pair<int, int> witness{-1, -1};
  PairFilter filter;
  bool disconnected = false;
  // Per source vertex: max stretch to any other kept vertex; NaN for
  // vertices the filter drops.
  std::optional<std::vector<double>> per_source_max;

  friend bool operator==(const StretchReport&, const StretchReport&) = default;
};

struct StretchOptions {
  int workers = 0;  // 0: LSL_THREADS / hardware default
  bool per_source = false;
};

/// Maximum of path length / Euclidean distance over all kept vertex pairs.
/// The witness is the lexicographically smallest (source, target) pair whose
/// ratio is within kTieTolerance of the maximum. If some kept pair is
/// disconnected, max_stretch is +infinity and the witness is the first such
/// pair. Results are bit-identical for any worker count.
StretchReport stretch(const GeomGraph& g, PairFilter filter, StretchOptions options = {});

/// Writes "source,target,stretch" for every kept pair source < target.
void write_pair_csv(const GeomGraph& g, PairFilter filter, std::ostream& out, int workers = 0);

struct PathWitness {
  std::vector<int> vertices;
  double length = 0.0;
  std::optional<ExtLength> exact;
};

PathWitness witness_path(const GeomGraph& g, int from, int to);

struct WeightStats {
  double total_length = 0.0;
  double avg_per_vertex = 0.0;
};

WeightStats weight_stats(const GeomGraph& g);

}  // namespace lsl
