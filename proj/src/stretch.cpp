#include "lsl/stretch.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>

#include "lsl/errors.hpp"
#include "lsl/parallel.hpp"

namespace lsl {

namespace {

bool ties(double x, double y) { return std::abs(x - y) <= kTieTolerance * std::max(1.0, std::abs(y)); }

void dijkstra(const GeomGraph& g, int source, std::vector<double>& dist, std::vector<int>& parent) {
  const std::size_t n = g.vertex_count();
  dist.assign(n, kUnreachable);
  parent.assign(n, -1);
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[source] = 0.0;
  heap.emplace(0.0, source);
  while (!heap.empty()) {
    const auto [d, v] = heap.top();
    heap.pop();
    if (d > dist[v]) continue;
    const auto nb = g.neighbors(v);
    const auto len = g.neighbor_lengths(v);
    for (std::size_t k = 0; k < nb.size(); ++k) {
      const int w = nb[k];
      if (w == source) continue;
      const double nd = d + len[k];
      if (dist[w] == kUnreachable || (nd < dist[w] && !ties(nd, dist[w]))) {
        dist[w] = nd;
        parent[w] = v;
        heap.emplace(nd, w);
      } else if (ties(nd, dist[w]) && v < parent[w]) {
        parent[w] = v;
      }
    }
  }
}

double euclid(const Section& s, int a, int b) {
  return std::sqrt(static_cast<double>(norm2(s.kind(), s.point(b) - s.point(a))));
}

struct SourceResult {
  double max = 0.0;  // stretch to the worst kept target; kUnreachable if one is cut off
};

}  // namespace

ShortestPaths shortest_paths_from(const GeomGraph& g, int source) {
  if (source < 0 || source >= static_cast<int>(g.vertex_count())) {
    throw UsageError("shortest_paths_from: source index out of range");
  }
  ShortestPaths sp;
  dijkstra(g, source, sp.dist, sp.parent);
  return sp;
}

StretchReport stretch(const GeomGraph& g, PairFilter filter, StretchOptions options) {
  const Section& s = g.section();
  const std::size_t n = g.vertex_count();
  std::vector<int> kept;
  for (std::size_t i = 0; i < n; ++i) {
    if (filter.keeps(s, i)) kept.push_back(static_cast<int>(i));
  }
  if (kept.size() < 2) throw UsageError("stretch: the pair filter keeps no vertex pair");

  std::vector<SourceResult> per(kept.size());
  parallel_for(kept.size(), options.workers, [&](std::size_t k) {
    std::vector<double> dist;
    std::vector<int> parent;
    const int src = kept[k];
    dijkstra(g, src, dist, parent);
    double best = 0.0;
    for (const int t : kept) {
      if (t == src) continue;
      if (dist[t] == kUnreachable) {
        best = kUnreachable;
        break;
      }
      best = std::max(best, dist[t] / euclid(s, src, t));
    }
    per[k].max = best;
  });

  StretchReport report;
  report.filter = filter;
  double global = 0.0;
  for (const SourceResult& r : per) global = std::max(global, r.max);
  report.max_stretch = global;
  report.disconnected = global == kUnreachable;

  // Witness: first source reaching the maximum, then its first target.
  auto attains = [&](double x) {
    return report.disconnected ? x == kUnreachable : (x >= global || ties(x, global));
  };
  for (std::size_t k = 0; k < kept.size(); ++k) {
    if (!attains(per[k].max)) continue;
    std::vector<double> dist;
    std::vector<int> parent;
    const int src = kept[k];
    dijkstra(g, src, dist, parent);
    for (const int t : kept) {
      if (t == src) continue;
      const double ratio = dist[t] == kUnreachable ? kUnreachable : dist[t] / euclid(s, src, t);
      if (attains(ratio)) {
        report.witness = {src, t};
        break;
      }
    }
    break;
  }

  if (options.per_source) {
    std::vector<double> values(n, std::nan(""));
    for (std::size_t k = 0; k < kept.size(); ++k) values[kept[k]] = per[k].max;
    report.per_source_max = std::move(values);
  }
  return report;
}

void write_pair_csv(const GeomGraph& g, PairFilter filter, std::ostream& out, int workers) {
  const Section& s = g.section();
  std::vector<int> kept;
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    if (filter.keeps(s, i)) kept.push_back(static_cast<int>(i));
  }
  std::vector<std::vector<double>> rows(kept.size());
  parallel_for(kept.size(), workers, [&](std::size_t k) {
    std::vector<double> dist;
    std::vector<int> parent;
    dijkstra(g, kept[k], dist, parent);
    for (std::size_t l = k + 1; l < kept.size(); ++l) {
      rows[k].push_back(dist[kept[l]] / euclid(s, kept[k], kept[l]));
    }
  });
  out << "source,target,stretch\n";
  char buf[64];
  for (std::size_t k = 0; k < kept.size(); ++k) {
    for (std::size_t l = k + 1; l < kept.size(); ++l) {
      const double v = rows[k][l - k - 1];
      if (v == kUnreachable) {
        out << kept[k] << ',' << kept[l] << ",inf\n";
      } else {
        std::snprintf(buf, sizeof buf, "%.12f", v);
        out << kept[k] << ',' << kept[l] << ',' << buf << '\n';
      }
    }
  }
}

PathWitness witness_path(const GeomGraph& g, int from, int to) {
  const int n = static_cast<int>(g.vertex_count());
  if (from < 0 || to < 0 || from >= n || to >= n) throw UsageError("witness_path: index out of range");
  if (from == to) throw UsageError("witness_path: endpoints must differ");
  std::vector<double> dist;
  std::vector<int> parent;
  dijkstra(g, from, dist, parent);
  if (dist[to] == kUnreachable) {
    throw DisconnectedError("no path between vertices " + std::to_string(from) + " and " +
                            std::to_string(to));
  }
  PathWitness w;
  for (int v = to; v != -1; v = parent[v]) w.vertices.push_back(v);
  std::reverse(w.vertices.begin(), w.vertices.end());
  w.length = 0.0;
  for (std::size_t k = 1; k < w.vertices.size(); ++k) {
    w.length += euclid(g.section(), w.vertices[k - 1], w.vertices[k]);
  }
  try {
    w.exact = path_length_exact(g, w.vertices);
  } catch (const MixedRadicalError&) {
    w.exact.reset();
  }
  return w;
}

WeightStats weight_stats(const GeomGraph& g) {
  WeightStats w;
  for (std::size_t k = 0; k < g.edge_count(); ++k) w.total_length += g.edge_length(k);
  if (g.vertex_count() > 0) w.avg_per_vertex = w.total_length / static_cast<double>(g.vertex_count());
  return w;
}

}  // namespace lsl
