#include "lsl/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "lsl/errors.hpp"

namespace lsl {

GeomGraph::GeomGraph(Section section, std::vector<Edge> edges)
    : section_(std::move(section)), edges_(std::move(edges)) {
  const int n = static_cast<int>(section_.size());
  for (Edge& e : edges_) {
    if (e.i == e.j) throw UsageError("edge endpoints must be distinct");
    if (e.i > e.j) std::swap(e.i, e.j);
    if (e.i < 0 || e.j >= n) throw UsageError("edge endpoint out of range");
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw UsageError("duplicate edge");
  }

  std::vector<int> deg(n, 0);
  for (const Edge& e : edges_) {
    ++deg[e.i];
    ++deg[e.j];
  }
  offsets_.assign(n + 1, 0);
  for (int v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
  adj_.assign(offsets_[n], 0);
  adj_len_.assign(offsets_[n], 0.0);
  std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    const Edge& e = edges_[k];
    const double len = edge_length(k);
    adj_[fill[e.i]] = e.j;
    adj_len_[fill[e.i]++] = len;
    adj_[fill[e.j]] = e.i;
    adj_len_[fill[e.j]++] = len;
  }
  // Sorted edge order fills every neighbor list in ascending order.
}

bool GeomGraph::has_edge(int a, int b) const {
  if (a < 0 || b < 0 || a >= static_cast<int>(vertex_count()) ||
      b >= static_cast<int>(vertex_count())) {
    return false;
  }
  const auto nb = neighbors(a);
  return std::binary_search(nb.begin(), nb.end(), b);
}

std::int64_t GeomGraph::edge_sq_length(std::size_t k) const {
  return norm2(section_.kind(), section_.point(edges_[k].j) - section_.point(edges_[k].i));
}

double GeomGraph::edge_length(std::size_t k) const {
  return std::sqrt(static_cast<double>(edge_sq_length(k)));
}

GeomGraph GeomGraph::with_edges(std::span<const Edge> extra) const {
  std::vector<Edge> all = edges_;
  for (Edge e : extra) {
    if (e.i > e.j) std::swap(e.i, e.j);
    if (!has_edge(e.i, e.j)) all.push_back(e);
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return GeomGraph(section_, std::move(all));
}

bool is_connected(const GeomGraph& g) {
  const int n = static_cast<int>(g.vertex_count());
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n;
}

namespace {

// Uniform bucket grid over edge bounding boxes. A pair is tested only in the
// bucket holding the lower-left corner of their box intersection, so each
// pair is tested once.
std::vector<std::pair<int, int>> find_crossings(const GeomGraph& g) {
  std::vector<std::pair<int, int>> out;
  const std::size_t m = g.edge_count();
  if (m < 2) return out;

  constexpr int kCell = 2;
  int umin = 0, vmin = 0, umax = 0, vmax = 0;
  bool first = true;
  for (const Vec2i p : g.section().points()) {
    if (first) {
      umin = umax = p.u;
      vmin = vmax = p.v;
      first = false;
    }
    umin = std::min(umin, p.u);
    umax = std::max(umax, p.u);
    vmin = std::min(vmin, p.v);
    vmax = std::max(vmax, p.v);
  }
  auto cell_of = [&](int x, int lo) { return (x - lo) / kCell; };
  const int cols = cell_of(umax, umin) + 1;
  const int rows = cell_of(vmax, vmin) + 1;
  std::vector<std::vector<int>> buckets(static_cast<std::size_t>(cols) * rows);

  struct Box {
    int u0, v0, u1, v1;
  };
  std::vector<Box> boxes(m);
  for (std::size_t k = 0; k < m; ++k) {
    const Segment s = g.segment(k);
    Box b{std::min(s.a.u, s.b.u), std::min(s.a.v, s.b.v), std::max(s.a.u, s.b.u),
          std::max(s.a.v, s.b.v)};
    boxes[k] = b;
    for (int cy = cell_of(b.v0, vmin); cy <= cell_of(b.v1, vmin); ++cy) {
      for (int cx = cell_of(b.u0, umin); cx <= cell_of(b.u1, umin); ++cx) {
        buckets[static_cast<std::size_t>(cy) * cols + cx].push_back(static_cast<int>(k));
      }
    }
  }
  for (int cy = 0; cy < rows; ++cy) {
    for (int cx = 0; cx < cols; ++cx) {
      const auto& bucket = buckets[static_cast<std::size_t>(cy) * cols + cx];
      for (std::size_t x = 0; x < bucket.size(); ++x) {
        for (std::size_t y = x + 1; y < bucket.size(); ++y) {
          const int e = bucket[x];
          const int f = bucket[y];
          const Box& be = boxes[e];
          const Box& bf = boxes[f];
          const int iu = std::max(be.u0, bf.u0);
          const int iv = std::max(be.v0, bf.v0);
          if (iu > std::min(be.u1, bf.u1) || iv > std::min(be.v1, bf.v1)) continue;
          if (cell_of(iu, umin) != cx || cell_of(iv, vmin) != cy) continue;
          if (segments_cross(g.segment(e), g.segment(f))) {
            out.emplace_back(std::min(e, f), std::max(e, f));
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

ValidityReport validate(const GeomGraph& g, int degree_cap) {
  ValidityReport r;
  r.degree_cap = degree_cap;
  for (int v = 0; v < static_cast<int>(g.vertex_count()); ++v) {
    r.max_degree = std::max(r.max_degree, g.degree(v));
  }
  r.crossings = find_crossings(g);
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    if (edge_pierces_point(g.segment(k), g.section())) r.piercings.push_back(static_cast<int>(k));
  }
  r.connected = is_connected(g);
  return r;
}

ExtLength path_length_exact(const GeomGraph& g, std::span<const int> path) {
  const int d = radicand(g.kind());
  ExtLength total(0, 0, d);
  for (std::size_t k = 1; k < path.size(); ++k) {
    const int a = path[k - 1];
    const int b = path[k];
    if (!g.has_edge(a, b)) {
      throw UsageError("path vertices " + std::to_string(a) + " and " + std::to_string(b) +
                       " are not adjacent");
    }
    const std::int64_t sq = norm2(g.kind(), g.section().point(b) - g.section().point(a));
    if (sq == 1) {
      total += ExtLength(1, 0, d);
    } else if (sq == d) {
      total += ExtLength(0, 1, d);
    } else {
      throw MixedRadicalError("mixed-radical path: edge of squared length " + std::to_string(sq));
    }
  }
  return total;
}

}  // namespace lsl
