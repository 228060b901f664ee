#include "lsl/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bitset>
#include <chrono>
#include <cmath>
#include <map>
#include <mutex>
#include <tuple>

#include "lsl/errors.hpp"
#include "lsl/parallel.hpp"
#include "lsl/stretch.hpp"

namespace lsl {

std::vector<Edge> candidate_edges(const Section& s, std::int64_t max_sq_length) {
  struct Keyed {
    std::int64_t sq;
    Edge e;
  };
  std::vector<Keyed> out;
  const int n = static_cast<int>(s.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const std::int64_t sq = norm2(s.kind(), s.point(j) - s.point(i));
      if (max_sq_length > 0 && sq > max_sq_length) continue;
      if (edge_pierces_point({s.point(i), s.point(j)}, s)) continue;
      out.push_back({sq, {i, j}});
    }
  }
  std::sort(out.begin(), out.end(), [](const Keyed& x, const Keyed& y) {
    return std::tie(x.sq, x.e) < std::tie(y.sq, y.e);
  });
  std::vector<Edge> edges;
  edges.reserve(out.size());
  for (const Keyed& k : out) edges.push_back(k.e);
  return edges;
}

namespace {

constexpr std::size_t kMaxCandidates = 256;
constexpr double kPruneSlack = 1e-12;
// Distinct optimal values closer than this are treated as equal when the
// reported graph is chosen.
constexpr double kOptimumSlack = 1e-9;

using Mask = std::bitset<kMaxCandidates>;
using Clock = std::chrono::steady_clock;

std::vector<double> euclid_matrix(const Section& s) {
  const std::size_t n = s.size();
  std::vector<double> e(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      e[i * n + j] = std::sqrt(static_cast<double>(norm2(s.kind(), s.point(j) - s.point(i))));
    }
  }
  return e;
}

// Floyd-Warshall stretch over all pairs; +inf if disconnected.
class DenseStretch {
 public:
  explicit DenseStretch(const Section& s) : n_(s.size()), euclid_(euclid_matrix(s)), d_(n_ * n_) {}

  template <typename ForEachEdge>
  double operator()(ForEachEdge&& for_each_edge) {
    std::fill(d_.begin(), d_.end(), kUnreachable);
    for (std::size_t i = 0; i < n_; ++i) d_[i * n_ + i] = 0.0;
    for_each_edge([&](int i, int j, double len) {
      d_[i * n_ + j] = std::min(d_[i * n_ + j], len);
      d_[j * n_ + i] = d_[i * n_ + j];
    });
    for (std::size_t k = 0; k < n_; ++k) {
      const double* dk = &d_[k * n_];
      for (std::size_t i = 0; i < n_; ++i) {
        const double dik = d_[i * n_ + k];
        if (dik == kUnreachable) continue;
        double* di = &d_[i * n_];
        for (std::size_t j = 0; j < n_; ++j) di[j] = std::min(di[j], dik + dk[j]);
      }
    }
    double worst = 1.0;
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i + 1; j < n_; ++j) {
        const double dij = d_[i * n_ + j];
        if (dij == kUnreachable) return kUnreachable;
        worst = std::max(worst, dij / euclid_[i * n_ + j]);
      }
    }
    return worst;
  }

 private:
  std::size_t n_;
  std::vector<double> euclid_;
  std::vector<double> d_;
};

struct Problem {
  Section section;
  int cap = 0;
  std::vector<Edge> cand;
  std::vector<double> len;
  std::vector<std::vector<int>> conflicts;
  std::vector<Mask> conflict_mask;
};

Problem make_problem(const SearchConfig& cfg) {
  Problem p;
  p.section = cfg.section;
  p.cap = cfg.degree_cap;
  p.cand = candidate_edges(cfg.section, cfg.max_sq_length);
  if (p.cand.size() > kMaxCandidates) {
    throw UsageError("too many candidate edges (" + std::to_string(p.cand.size()) +
                     "); lower the squared length limit");
  }
  const std::size_t m = p.cand.size();
  p.len.resize(m);
  p.conflicts.assign(m, {});
  p.conflict_mask.assign(m, Mask{});
  std::vector<Segment> seg(m);
  for (std::size_t k = 0; k < m; ++k) {
    seg[k] = {p.section.point(p.cand[k].i), p.section.point(p.cand[k].j)};
    p.len[k] = std::sqrt(static_cast<double>(norm2(p.section.kind(), seg[k].b - seg[k].a)));
  }
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = x + 1; y < m; ++y) {
      if (segments_cross(seg[x], seg[y])) {
        p.conflicts[x].push_back(static_cast<int>(y));
        p.conflicts[y].push_back(static_cast<int>(x));
        p.conflict_mask[x].set(y);
        p.conflict_mask[y].set(x);
      }
    }
  }
  return p;
}

// Decision state along one branch: chosen edges, how many chosen edges
// cross each candidate, and vertex degrees.
struct State {
  Mask in;
  std::vector<int> blocked;
  std::vector<int> deg;

  explicit State(const Problem& p) : blocked(p.cand.size(), 0), deg(p.section.size(), 0) {}

  bool available(const Problem& p, std::size_t k) const {
    const Edge e = p.cand[k];
    return !in.test(k) && blocked[k] == 0 && deg[e.i] < p.cap && deg[e.j] < p.cap;
  }
  void add(const Problem& p, std::size_t k) {
    in.set(k);
    for (int c : p.conflicts[k]) ++blocked[c];
    ++deg[p.cand[k].i];
    ++deg[p.cand[k].j];
  }
  void remove(const Problem& p, std::size_t k) {
    in.reset(k);
    for (int c : p.conflicts[k]) --blocked[c];
    --deg[p.cand[k].i];
    --deg[p.cand[k].j];
  }
};

struct NodeEval {
  double bound = kUnreachable;
  bool complete = false;  // the optimistic edge set is itself plane and within the cap
  Mask edges;
};

NodeEval evaluate(const Problem& p, const State& st, std::size_t k, DenseStretch& fw) {
  NodeEval ev;
  ev.edges = st.in;
  for (std::size_t e = k; e < p.cand.size(); ++e) {
    if (st.available(p, e)) ev.edges.set(e);
  }
  ev.bound = fw([&](auto&& emit) {
    for (std::size_t e = 0; e < p.cand.size(); ++e) {
      if (ev.edges.test(e)) emit(p.cand[e].i, p.cand[e].j, p.len[e]);
    }
  });
  if (ev.bound == kUnreachable) return ev;
  std::vector<int> deg(p.section.size(), 0);
  ev.complete = true;
  for (std::size_t e = 0; e < p.cand.size() && ev.complete; ++e) {
    if (!ev.edges.test(e)) continue;
    if (++deg[p.cand[e].i] > p.cap || ++deg[p.cand[e].j] > p.cap) ev.complete = false;
    if ((p.conflict_mask[e] & ev.edges).any()) ev.complete = false;
  }
  return ev;
}

struct Frontier {
  std::vector<int> in;
  std::size_t k = 0;
};

class Searcher {
 public:
  Searcher(const Problem& p, const SearchConfig& cfg)
      : p_(p), cfg_(cfg), start_(Clock::now()) {}

  // Depth-limited expansion that stops at split_depth and records frontier nodes.
  void expand(State& st, std::size_t k, int depth, int split_depth, std::vector<Frontier>& out,
              DenseStretch& fw) {
    if (depth == split_depth) {
      Frontier f;
      for (std::size_t e = 0; e < p_.cand.size(); ++e) {
        if (st.in.test(e)) f.in.push_back(static_cast<int>(e));
      }
      f.k = k;
      out.push_back(std::move(f));
      return;
    }
    const auto next = step(st, k, fw);
    if (!next) return;
    st.add(p_, *next);
    expand(st, *next + 1, depth + 1, split_depth, out, fw);
    st.remove(p_, *next);
    expand(st, *next + 1, depth + 1, split_depth, out, fw);
  }

  void run(State& st, std::size_t k, DenseStretch& fw) {
    const auto next = step(st, k, fw);
    if (!next) return;
    st.add(p_, *next);
    run(st, *next + 1, fw);
    st.remove(p_, *next);
    run(st, *next + 1, fw);
  }

  double best() const { return best_.load(); }
  Mask best_edges() const { return best_edges_; }
  bool aborted() const { return aborted_.load(); }
  double abandoned_bound() const { return abandoned_; }
  std::uint64_t nodes() const { return nodes_.load(); }
  double elapsed() const { return std::chrono::duration<double>(Clock::now() - start_).count(); }

 private:
  // Evaluates the node; returns the candidate to branch on, or nothing if the
  // node is closed (pruned, solved, or abandoned for budget).
  std::optional<std::size_t> step(const State& st, std::size_t k, DenseStretch& fw) {
    const std::uint64_t count = nodes_.fetch_add(1) + 1;
    if (!aborted_.load() && (count > cfg_.node_limit ||
                             ((count & 1023) == 0 && elapsed() > cfg_.time_limit_seconds))) {
      aborted_.store(true);
    }
    const NodeEval ev = evaluate(p_, st, k, fw);
    if (ev.bound >= best_.load() - kPruneSlack) return std::nullopt;
    if (ev.complete) {
      record(ev.bound, ev.edges);
      return std::nullopt;
    }
    if (aborted_.load()) {
      std::lock_guard lock(mu_);
      abandoned_ = std::min(abandoned_, ev.bound);
      return std::nullopt;
    }
    for (std::size_t e = k; e < p_.cand.size(); ++e) {
      if (st.available(p_, e)) return e;
    }
    return std::nullopt;  // unreachable: an incomplete node has a free edge
  }

  void record(double value, const Mask& edges) {
    std::lock_guard lock(mu_);
    if (value < best_.load()) {
      best_.store(value);
      best_edges_ = edges;
    }
  }

  const Problem& p_;
  const SearchConfig& cfg_;
  Clock::time_point start_;
  std::atomic<double> best_{kUnreachable};
  std::atomic<bool> aborted_{false};
  std::atomic<std::uint64_t> nodes_{0};
  std::mutex mu_;
  Mask best_edges_;
  double abandoned_ = kUnreachable;
};

// Sequential search for the first complete node with value <= threshold.
bool find_first(const Problem& p, State& st, std::size_t k, double threshold, DenseStretch& fw,
                Mask& found) {
  const NodeEval ev = evaluate(p, st, k, fw);
  if (ev.bound > threshold) return false;
  if (ev.complete) {
    found = ev.edges;
    return true;
  }
  std::size_t next = p.cand.size();
  for (std::size_t e = k; e < p.cand.size(); ++e) {
    if (st.available(p, e)) {
      next = e;
      break;
    }
  }
  if (next == p.cand.size()) return false;
  st.add(p, next);
  const bool hit = find_first(p, st, next + 1, threshold, fw, found);
  st.remove(p, next);
  if (hit) return true;
  return find_first(p, st, next + 1, threshold, fw, found);
}

GeomGraph graph_of(const Problem& p, const Mask& edges) {
  std::vector<Edge> out;
  for (std::size_t e = 0; e < p.cand.size(); ++e) {
    if (edges.test(e)) out.push_back(p.cand[e]);
  }
  return GeomGraph(p.section, std::move(out));
}

}  // namespace

double all_pairs_stretch(const Section& s, const std::vector<Edge>& edges) {
  DenseStretch fw(s);
  return fw([&](auto&& emit) {
    for (const Edge& e : edges) {
      emit(e.i, e.j, std::sqrt(static_cast<double>(norm2(s.kind(), s.point(e.j) - s.point(e.i)))));
    }
  });
}

Certificate min_dilation_exact(const SearchConfig& cfg) {
  if (cfg.degree_cap < 1) throw UsageError("degree cap must be at least 1");
  if (cfg.node_limit == 0 || !(cfg.time_limit_seconds > 0)) throw UsageError("search budgets must be positive");
  if (cfg.section.size() < 2) throw UsageError("section needs at least two points");

  const Problem p = make_problem(cfg);
  Searcher search(p, cfg);
  const int workers = resolve_workers(cfg.workers);

  {
    DenseStretch fw(p.section);
    State st(p);
    if (workers <= 1) {
      search.run(st, 0, fw);
    } else {
      int split_depth = 0;
      while ((1 << split_depth) < 16 * workers && split_depth < 20) ++split_depth;
      std::vector<Frontier> frontier;
      search.expand(st, 0, 0, split_depth, frontier, fw);
      parallel_for(frontier.size(), workers, [&](std::size_t idx) {
        DenseStretch local_fw(p.section);
        State local(p);
        for (int e : frontier[idx].in) local.add(p, static_cast<std::size_t>(e));
        search.run(local, frontier[idx].k, local_fw);
      });
    }
  }

  Certificate cert;
  cert.candidate_count = p.cand.size();
  cert.degree_cap = cfg.degree_cap;
  cert.max_sq_length = cfg.max_sq_length;
  cert.exhaustive = !search.aborted();
  const double best = search.best();

  if (best == kUnreachable) {
    cert.graph = GeomGraph(p.section, {});
    cert.infeasible = cert.exhaustive;
    cert.lower_bound = cert.exhaustive ? kUnreachable : search.abandoned_bound();
  } else {
    Mask chosen = search.best_edges();
    if (cert.exhaustive) {
      DenseStretch fw(p.section);
      State st(p);
      Mask first;
      if (find_first(p, st, 0, best + kOptimumSlack, fw, first)) chosen = first;
    }
    cert.graph = graph_of(p, chosen);
    cert.optimum = all_pairs_stretch(p.section, {cert.graph.edges().begin(), cert.graph.edges().end()});
    cert.lower_bound = cert.exhaustive ? cert.optimum : std::min(best, search.abandoned_bound());
  }
  cert.stats.nodes_explored = search.nodes();
  cert.stats.elapsed_seconds = search.elapsed();
  return cert;
}

// ---------------------------------------------------------------------------
// Template discovery

std::vector<PeriodLattice> periods_up_to(int max_index) {
  std::vector<PeriodLattice> out;
  for (int n = 1; n <= max_index; ++n) {
    for (const PeriodLattice& l : PeriodLattice::of_index(n)) out.push_back(l);
  }
  return out;
}

Shape default_eval_shape(LatticeKind kind) {
  return kind == LatticeKind::kSquare ? Shape::rect(30, 30) : Shape::rhombus(24, 24);
}

std::vector<PeriodLattice> light_periods() {
  const std::array<Vec2i, 2> a{Vec2i{2, 1}, Vec2i{-1, 2}};
  const std::array<Vec2i, 2> b{Vec2i{2, -1}, Vec2i{1, 2}};
  return {PeriodLattice::from_generators(a), PeriodLattice::from_generators(b)};
}

namespace {

constexpr double kWeightTolerance = 1e-9;

struct RuleInfo {
  EdgeRule rule;
  int c1 = 0;
  int c2 = 0;
  double length = 0.0;
};

// Enumerates valid rule subsets for one period lattice and hands each to emit.
template <typename Emit>
std::uint64_t enumerate_rule_sets(const DiscoveryConfig& cfg, const PeriodLattice& lattice, Emit&& emit) {
  std::vector<RuleInfo> rules;
  for (const Vec2i c : lattice.cell()) {
    for (const Vec2i d : edge_alphabet(cfg.kind)) {
      const EdgeRule r{c, d};
      if (rules_conflict(lattice, r, r)) continue;
      rules.push_back({r, lattice.class_of(c), lattice.class_of(c + d),
                       std::sqrt(static_cast<double>(norm2(cfg.kind, d)))});
    }
  }
  const std::size_t m = rules.size();
  std::vector<std::vector<char>> conflict(m, std::vector<char>(m, 0));
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = x + 1; y < m; ++y) {
      conflict[x][y] = conflict[y][x] = rules_conflict(lattice, rules[x].rule, rules[y].rule) ? 1 : 0;
    }
  }
  const double cell = lattice.index();
  const double weight_cap =
      cfg.weight_target ? *cfg.weight_target * cell + kWeightTolerance : kUnreachable;

  std::vector<int> deg(static_cast<std::size_t>(lattice.index()), 0);
  std::vector<std::size_t> chosen;
  std::vector<int> blocked(m, 0);
  std::uint64_t count = 0;

  auto fits = [&](std::size_t r) {
    if (blocked[r] > 0) return false;
    const RuleInfo& ri = rules[r];
    if (ri.c1 == ri.c2) return deg[ri.c1] + 2 <= cfg.degree_cap;
    return deg[ri.c1] < cfg.degree_cap && deg[ri.c2] < cfg.degree_cap;
  };

  auto rec = [&](auto&& self, std::size_t idx, double weight) -> void {
    if (weight > weight_cap) return;
    if (idx == m) {
      if (chosen.empty()) return;
      if (cfg.weight_target && std::abs(weight / cell - *cfg.weight_target) > kWeightTolerance) return;
      if (cfg.maximal_only) {
        for (std::size_t r = 0; r < m; ++r) {
          if (std::find(chosen.begin(), chosen.end(), r) == chosen.end() && fits(r)) return;
        }
      }
      ++count;
      std::vector<EdgeRule> set;
      for (std::size_t r : chosen) set.push_back(rules[r].rule);
      emit(PeriodicTemplate(cfg.kind, lattice, std::move(set), cfg.degree_cap));
      return;
    }
    if (fits(idx)) {
      chosen.push_back(idx);
      ++deg[rules[idx].c1];
      ++deg[rules[idx].c2];
      for (std::size_t y = 0; y < m; ++y) blocked[y] += conflict[idx][y];
      self(self, idx + 1, weight + rules[idx].length);
      for (std::size_t y = 0; y < m; ++y) blocked[y] -= conflict[idx][y];
      --deg[rules[idx].c1];
      --deg[rules[idx].c2];
      chosen.pop_back();
    }
    self(self, idx + 1, weight);
  };
  rec(rec, 0, 0.0);
  return count;
}

struct Screened {
  PeriodicTemplate tmpl;
  std::vector<int> key;
  double weight = 0.0;
  double screen = kUnreachable;
};

// Lower bound on the interior stretch: Dijkstra from one interior vertex per
// residue class (the one nearest the section center) to all interior targets.
double screen_bound(const GeomGraph& g, const PeriodicTemplate& t, int margin) {
  const Section& s = g.section();
  Vec2d center{0.0, 0.0};
  std::size_t kept = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s.boundary_margin(i) < margin) continue;
    const Vec2d e = embed(s.kind(), s.point(i));
    center.x += e.x;
    center.y += e.y;
    ++kept;
  }
  if (kept < 2) throw UsageError("evaluation section has fewer than two interior points");
  center.x /= static_cast<double>(kept);
  center.y /= static_cast<double>(kept);

  std::vector<int> rep(t.cell_size(), -1);
  std::vector<double> rep_d(t.cell_size(), kUnreachable);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s.boundary_margin(i) < margin) continue;
    const Vec2d e = embed(s.kind(), s.point(i));
    const double dd = (e.x - center.x) * (e.x - center.x) + (e.y - center.y) * (e.y - center.y);
    const int c = t.periods().class_of(s.point(i));
    if (dd < rep_d[c]) {
      rep_d[c] = dd;
      rep[c] = static_cast<int>(i);
    }
  }

  double worst = 1.0;
  for (const int src : rep) {
    if (src < 0) continue;
    const ShortestPaths sp = shortest_paths_from(g, src);
    const LatticeCoord a = s.coord(src);
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (static_cast<int>(j) == src || s.boundary_margin(j) < margin) continue;
      if (sp.dist[j] == kUnreachable) return kUnreachable;
      worst = std::max(worst, sp.dist[j] / dist(a, s.coord(j)));
    }
  }
  return worst;
}

auto rank_tuple(const DiscoveredTemplate& d, const std::vector<int>& key) {
  return std::make_tuple(std::llround(d.interior_stretch * 1e9), d.weight, key);
}

}  // namespace

DiscoveryResult discover_templates(const DiscoveryConfig& cfg) {
  if (cfg.degree_cap < 1) throw UsageError("degree cap must be at least 1");
  if (cfg.periods.empty()) throw UsageError("no period lattices given");
  if (cfg.margin < 0) throw UsageError("margin must be non-negative");
  for (const PeriodLattice& l : cfg.periods) {
    if (l.index() > 8) throw UsageError("period lattice index above 8");
  }

  DiscoveryResult result;
  result.eval_section = generate_section(cfg.kind, cfg.eval_shape.value_or(default_eval_shape(cfg.kind)));
  result.margin = cfg.margin;

  std::map<std::vector<int>, PeriodicTemplate> distinct;
  for (const PeriodLattice& l : cfg.periods) {
    result.stats.rule_sets += enumerate_rule_sets(cfg, l, [&](const PeriodicTemplate& t) {
      std::vector<int> key = canonical_key(t);
      if (!distinct.contains(key)) distinct.emplace(std::move(key), canonical_form(t));
    });
  }
  result.stats.distinct = distinct.size();

  std::vector<Screened> pool;
  pool.reserve(distinct.size());
  for (auto& [key, t] : distinct) pool.push_back({t, key, weight_per_vertex(t), kUnreachable});
  const int workers = resolve_workers(cfg.workers);
  parallel_for(pool.size(), workers, [&](std::size_t i) {
    const GeomGraph g = instantiate(pool[i].tmpl, result.eval_section);
    pool[i].screen = screen_bound(g, pool[i].tmpl, cfg.margin);
  });
  std::erase_if(pool, [&](const Screened& s) {
    return s.screen == kUnreachable || s.screen > cfg.stretch_ceiling + 1e-9;
  });
  std::sort(pool.begin(), pool.end(), [](const Screened& x, const Screened& y) {
    return std::tie(x.screen, x.weight, x.key) < std::tie(y.screen, y.weight, y.key);
  });
  result.stats.screened = pool.size();

  std::vector<std::pair<DiscoveredTemplate, std::vector<int>>> found;
  auto sort_found = [&] {
    std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) {
      return rank_tuple(x.first, x.second) < rank_tuple(y.first, y.second);
    });
  };
  for (const Screened& cand : pool) {
    if (found.size() >= cfg.max_results &&
        cand.screen > found[cfg.max_results - 1].first.interior_stretch + kTieTolerance) {
      break;
    }
    const GeomGraph g = instantiate(cand.tmpl, result.eval_section);
    const StretchReport rep = stretch(g, PairFilter::interior(cfg.margin), {.workers = workers});
    ++result.stats.evaluated;
    if (rep.disconnected || rep.max_stretch > cfg.stretch_ceiling + 1e-9) continue;
    DiscoveredTemplate d;
    d.tmpl = cand.tmpl;
    d.interior_stretch = rep.max_stretch;
    d.weight = cand.weight;
    d.witness = rep.witness;
    d.witness_offset = result.eval_section.point(rep.witness.second) -
                       result.eval_section.point(rep.witness.first);
    found.emplace_back(std::move(d), cand.key);
    sort_found();
    if (found.size() > cfg.max_results) found.pop_back();
  }
  for (auto& f : found) result.templates.push_back(std::move(f.first));
  return result;
}

DiscoveryResult discover_light_templates(double stretch_ceiling, std::size_t max_results, int workers) {
  DiscoveryConfig cfg;
  cfg.kind = LatticeKind::kSquare;
  cfg.degree_cap = 3;
  cfg.periods = light_periods();
  cfg.maximal_only = false;
  cfg.weight_target = 0.8 + 0.6 * std::sqrt(2.0);
  cfg.stretch_ceiling = stretch_ceiling;
  cfg.max_results = max_results;
  cfg.workers = workers;
  return discover_templates(cfg);
}

}  // namespace lsl
