#include "lsl/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>

#include "lsl/bounds.hpp"
#include "lsl/errors.hpp"
#include "lsl/json_io.hpp"
#include "lsl/search.hpp"
#include "lsl/stretch.hpp"
#include "lsl/svg.hpp"
#include "lsl/templates.hpp"

namespace lsl {

namespace {

struct Options {
  // shared
  std::string out;
  bool timing = false;
  int threads = 0;
  // inputs
  std::string kind;
  std::string section;
  std::string tmpl;
  std::string graph;
  // build
  std::string graph_out;
  // stretch
  std::string filter = "all";
  int margin = 4;
  std::string csv;
  bool per_source = false;
  // verify-bounds
  bool text = false;
  // search-template
  int cap = 3;
  int max_index = 4;
  bool light = false;
  std::string eval_section;
  std::size_t max_results = 8;
  double ceiling = std::numeric_limits<double>::infinity();
  std::string store;
  std::string label;
  // certify-lb
  std::int64_t max_sq = 0;
  std::uint64_t node_limit = 0;
  double time_limit = 0.0;
  bool large_budget = false;
  // render
  std::vector<int> witness;
  bool stretch_witness = false;
};

class Run {
 public:
  Run(std::string command, const std::vector<std::string>& args, const Options& opt)
      : command_(std::move(command)), args_(args), opt_(opt), start_(std::chrono::steady_clock::now()) {}

  const Options& opt() const { return opt_; }

  std::string read_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read input file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    inputs_.push_back({{"path", path}, {"fnv1a64", hex64(fnv1a64(text))}});
    return text;
  }

  void note_builtin(const std::string& arg, const PeriodicTemplate& t) {
    inputs_.push_back({{"builtin", arg}, {"fnv1a64", hex64(fnv1a64(dump_canonical(to_json(t))))}});
  }

  Json report(Json result) const {
    Json r;
    r["command"] = command_;
    r["args"] = args_;
    r["inputs"] = inputs_;
    r["version"] = kVersion;
    r["result"] = std::move(result);
    if (opt_.timing) {
      r["elapsed_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }
    return r;
  }

  void emit(const Json& result, std::ostream& out) const {
    const std::string text = report(result).dump(2) + "\n";
    if (opt_.out.empty()) {
      out << text;
    } else {
      write_text_file(opt_.out, text);
    }
  }

 private:
  std::string command_;
  std::vector<std::string> args_;
  Options opt_;
  std::chrono::steady_clock::time_point start_;
  Json inputs_ = Json::array();
};

Shape parse_shape(const std::string& arg) {
  const auto colon = arg.find(':');
  if (colon == std::string::npos) throw UsageError("section argument must look like rect:AxB, rhombus:AxB or hexball:R");
  const std::string type = arg.substr(0, colon);
  const std::string rest = arg.substr(colon + 1);
  auto to_int = [&](const std::string& s) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
        s.size() > 6) {
      throw UsageError("bad section size in '" + arg + "'");
    }
    return std::stoi(s);
  };
  if (type == "rect" || type == "rhombus") {
    const auto x = rest.find('x');
    if (x == std::string::npos) throw UsageError("section argument '" + arg + "' needs AxB");
    const int a = to_int(rest.substr(0, x));
    const int b = to_int(rest.substr(x + 1));
    return type == "rect" ? Shape::rect(a, b) : Shape::rhombus(a, b);
  }
  if (type == "hexball") return Shape::hexball(to_int(rest));
  throw UsageError("unknown section type '" + type + "'");
}

void check_shape_kind(LatticeKind kind, const Shape& shape) {
  if (shape.type == ShapeType::kHexBall && kind != LatticeKind::kHexagonal) {
    throw KindMismatchError("hexball sections exist only on the hex lattice");
  }
}

std::optional<LatticeKind> requested_kind(const Options& o) {
  if (o.kind.empty()) return std::nullopt;
  return parse_kind(o.kind);
}

PeriodicTemplate load_template_arg(Run& run, const std::string& arg) {
  if (arg.rfind("builtin:", 0) == 0) {
    const std::string name = arg.substr(8);
    const PeriodicTemplate t = builtin(parse_builtin(name));
    run.note_builtin(arg, t);
    return t;
  }
  return template_from_json(parse_json(run.read_input(arg)));
}

// A graph file holds either bare graph JSON or a report whose result has a graph.
GeomGraph load_graph_file(Run& run, const std::string& path) {
  const Json j = parse_json(run.read_input(path));
  if (j.is_object() && j.contains("section") && j.contains("edges")) return graph_from_json(j);
  if (j.is_object() && j.contains("result") && j["result"].is_object() && j["result"].contains("graph")) {
    return graph_from_json(j["result"]["graph"]);
  }
  throw FormatError("malformed input: " + path + " holds neither a graph nor a report with a graph");
}

struct GraphInput {
  GeomGraph graph;
  std::optional<PeriodicTemplate> tmpl;
};

GraphInput load_graph_input(Run& run) {
  const Options& o = run.opt();
  const auto kind = requested_kind(o);
  if (!o.graph.empty()) {
    if (!o.tmpl.empty() || !o.section.empty()) throw UsageError("--graph excludes --template and --section");
    GraphInput in{load_graph_file(run, o.graph), std::nullopt};
    if (kind && *kind != in.graph.kind()) {
      throw KindMismatchError("graph is on the " + kind_name(in.graph.kind()) + " lattice, --kind says " + o.kind);
    }
    return in;
  }
  if (o.tmpl.empty() || o.section.empty()) throw UsageError("need --graph, or --template with --section");
  const PeriodicTemplate t = load_template_arg(run, o.tmpl);
  if (kind && *kind != t.kind()) {
    throw KindMismatchError("template is on the " + kind_name(t.kind()) + " lattice, --kind says " + o.kind);
  }
  const Shape shape = parse_shape(o.section);
  check_shape_kind(t.kind(), shape);
  return {instantiate(t, generate_section(t.kind(), shape)), t};
}

Json graph_summary(const GeomGraph& g) {
  Json j;
  j["kind"] = kind_name(g.kind());
  j["shape"] = to_json(g.section().shape());
  j["vertices"] = g.vertex_count();
  j["edges"] = g.edge_count();
  return j;
}

PairFilter parse_filter(const Options& o) {
  if (o.filter == "all") return PairFilter::all();
  if (o.filter == "interior") {
    if (o.margin < 0) throw UsageError("--margin must be non-negative");
    return PairFilter::interior(o.margin);
  }
  throw UsageError("--filter must be 'all' or 'interior'");
}

int cmd_generate(Run& run, std::ostream& out) {
  const Options& o = run.opt();
  const LatticeKind kind = parse_kind(o.kind);
  const Shape shape = parse_shape(o.section);
  check_shape_kind(kind, shape);
  const Section s = generate_section(kind, shape);
  Json result;
  result["section"] = to_json(s);
  result["point_count"] = s.size();
  run.emit(result, out);
  return kExitOk;
}

int cmd_build(Run& run, std::ostream& out) {
  const GraphInput in = load_graph_input(run);
  const int cap = in.tmpl ? in.tmpl->declared_cap() : run.opt().cap;
  const ValidityReport v = validate(in.graph, cap);
  Json result;
  if (in.tmpl) result["template"] = to_json(*in.tmpl);
  result["validity"] = to_json(v);
  result["graph"] = to_json(in.graph);
  if (!run.opt().graph_out.empty()) write_text_file(run.opt().graph_out, to_json(in.graph).dump() + "\n");
  run.emit(result, out);
  return v.accepted() ? kExitOk : kExitValidation;
}

int cmd_stretch(Run& run, std::ostream& out) {
  const Options& o = run.opt();
  const PairFilter filter = parse_filter(o);
  const GraphInput in = load_graph_input(run);
  const StretchReport rep = stretch(in.graph, filter, {.workers = o.threads, .per_source = o.per_source});
  if (!o.csv.empty()) {
    std::ofstream csv(o.csv, std::ios::binary | std::ios::trunc);
    if (!csv) throw UsageError("cannot write " + o.csv);
    write_pair_csv(in.graph, filter, csv, o.threads);
  }
  Json result;
  result["graph"] = graph_summary(in.graph);
  result["stretch"] = to_json(rep);
  if (!rep.disconnected && rep.witness.first >= 0) {
    const Section& s = in.graph.section();
    result["witness_points"] = Json::array({Json::array({s.point(rep.witness.first).u, s.point(rep.witness.first).v}),
                                            Json::array({s.point(rep.witness.second).u, s.point(rep.witness.second).v})});
    result["witness_path"] = to_json(witness_path(in.graph, rep.witness.first, rep.witness.second));
  }
  run.emit(result, out);
  return kExitOk;
}

int cmd_weight(Run& run, std::ostream& out) {
  const GraphInput in = load_graph_input(run);
  const WeightStats w = weight_stats(in.graph);
  Json result;
  result["graph"] = graph_summary(in.graph);
  if (in.tmpl) result["template_weight_per_vertex"] = weight_per_vertex(*in.tmpl);
  result["total_length"] = w.total_length;
  result["avg_per_vertex"] = w.avg_per_vertex;
  run.emit(result, out);
  return kExitOk;
}

int cmd_verify_bounds(Run& run, std::ostream& out) {
  const std::vector<bounds::ClaimResult> claims = bounds::property_checks();
  const bool all_pass = std::all_of(claims.begin(), claims.end(), [](const auto& c) { return c.pass; });
  if (run.opt().text) {
    std::string text;
    char line[512];
    std::snprintf(line, sizeof line, "%-26s %-11s %18s %18s %9s  %-4s  %s\n", "id", "relation", "computed",
                  "expected", "tol", "pass", "context");
    text += line;
    for (const auto& c : claims) {
      std::snprintf(line, sizeof line, "%-26s %-11s %18.12f %18.12f %9.1e  %-4s  %s\n", c.id.c_str(),
                    c.relation.c_str(), c.computed, c.expected, c.tolerance, c.pass ? "ok" : "FAIL",
                    c.context.c_str());
      text += line;
    }
    if (run.opt().out.empty()) {
      out << text;
    } else {
      write_text_file(run.opt().out, text);
    }
  } else {
    Json rows = Json::array();
    for (const auto& c : claims) rows.push_back(to_json(c));
    Json result;
    result["rows"] = std::move(rows);
    result["all_pass"] = all_pass;
    run.emit(result, out);
  }
  return all_pass ? kExitOk : kExitValidation;
}

int cmd_search_template(Run& run, std::ostream& out) {
  const Options& o = run.opt();
  DiscoveryResult res;
  std::string prefix = o.label;
  if (o.light) {
    if (!o.kind.empty() && parse_kind(o.kind) != LatticeKind::kSquare) {
      throw KindMismatchError("light templates are defined on the square lattice");
    }
    res = discover_light_templates(o.ceiling, o.max_results, o.threads);
    if (prefix.empty()) prefix = "square-light";
  } else {
    if (o.kind.empty()) throw UsageError("--kind is required");
    if (o.max_index < 1 || o.max_index > 8) throw UsageError("--max-index must be in [1, 8]");
    DiscoveryConfig cfg;
    cfg.kind = parse_kind(o.kind);
    cfg.degree_cap = o.cap;
    cfg.periods = periods_up_to(o.max_index);
    if (!o.eval_section.empty()) {
      cfg.eval_shape = parse_shape(o.eval_section);
      check_shape_kind(cfg.kind, *cfg.eval_shape);
    }
    cfg.margin = o.margin;
    cfg.max_results = o.max_results;
    cfg.stretch_ceiling = o.ceiling;
    cfg.workers = o.threads;
    res = discover_templates(cfg);
    if (prefix.empty()) prefix = o.kind + "-cap" + std::to_string(o.cap);
  }
  Json result = to_json(res);
  if (!o.store.empty()) {
    std::vector<StoredTemplate> entries;
    Json files = Json::array();
    for (std::size_t k = 0; k < res.templates.size(); ++k) {
      entries.push_back({prefix + "-rank" + std::to_string(k + 1), res.templates[k]});
      files.push_back(template_file_name(res.templates[k].tmpl));
    }
    save_templates(o.store, entries, res.eval_section, res.margin);
    result["stored"] = std::move(files);
  }
  run.emit(result, out);
  return kExitOk;
}

int cmd_certify(Run& run, std::ostream& out) {
  const Options& o = run.opt();
  const LatticeKind kind = parse_kind(o.kind);
  const Shape shape = parse_shape(o.section);
  check_shape_kind(kind, shape);
  SearchConfig cfg;
  cfg.section = generate_section(kind, shape);
  cfg.degree_cap = o.cap;
  cfg.max_sq_length = o.max_sq;
  cfg.workers = o.threads;
  cfg.node_limit = o.large_budget ? 2'000'000'000'000ULL : 50'000'000ULL;
  cfg.time_limit_seconds = o.large_budget ? 1e7 : 600.0;
  if (o.node_limit > 0) cfg.node_limit = o.node_limit;
  if (o.time_limit > 0) cfg.time_limit_seconds = o.time_limit;
  const Certificate cert = min_dilation_exact(cfg);
  Json result = to_json(cert, o.timing);
  run.emit(result, out);
  return cert.exhaustive ? kExitOk : kExitNonExhaustive;
}

int cmd_render(Run& run, std::ostream& out) {
  const Options& o = run.opt();
  const GraphInput in = load_graph_input(run);
  std::optional<PathWitness> hl;
  if (!o.witness.empty()) {
    if (o.stretch_witness) throw UsageError("--witness excludes --stretch-witness");
    hl = witness_path(in.graph, o.witness[0], o.witness[1]);
  } else if (o.stretch_witness) {
    const StretchReport rep = stretch(in.graph, parse_filter(o), {.workers = o.threads});
    if (rep.disconnected) throw DisconnectedError("graph is disconnected; no stretch witness");
    hl = witness_path(in.graph, rep.witness.first, rep.witness.second);
  }
  const std::string svg = render_svg(in.graph, hl);
  if (o.out.empty()) {
    out << svg;
  } else {
    write_text_file(o.out, svg);
  }
  return kExitOk;
}

void add_graph_inputs(CLI::App* sub, Options& o) {
  sub->add_option("--graph", o.graph, "Graph JSON, or a report containing one");
  sub->add_option("--template", o.tmpl, "builtin:NAME or a template JSON file");
  sub->add_option("--section", o.section, "rect:AxB, rhombus:AxB or hexball:R");
  sub->add_option("--kind", o.kind, "Expected lattice kind (square|hex)");
}

}  // namespace

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Low-degree plane spanners on square and hexagonal lattice sections", "lsl"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--out", o.out, "Write the report (or SVG) to this file");
  app.add_flag("--timing", o.timing, "Include elapsed time and node counts");
  app.add_option("--threads", o.threads, "Worker threads (default: LSL_THREADS or all cores)")->check(CLI::NonNegativeNumber);

  auto* gen = app.add_subcommand("generate", "Generate a lattice section");
  gen->add_option("--kind", o.kind, "square|hex")->required();
  gen->add_option("--section", o.section, "rect:AxB, rhombus:AxB or hexball:R")->required();

  auto* build = app.add_subcommand("build", "Instantiate a template on a section and validate it");
  add_graph_inputs(build, o);
  build->add_option("--cap", o.cap, "Degree cap for --graph input");
  build->add_option("--graph-out", o.graph_out, "Also write the bare graph JSON here");

  auto* st = app.add_subcommand("stretch", "Maximum stretch factor and its witness");
  add_graph_inputs(st, o);
  st->add_option("--filter", o.filter, "all|interior")->capture_default_str();
  st->add_option("--margin", o.margin, "Interior margin in lattice steps")->capture_default_str();
  st->add_option("--csv", o.csv, "Dump source,target,stretch for every pair");
  st->add_flag("--per-source", o.per_source, "Include the per-source maxima");

  auto* wt = app.add_subcommand("weight", "Total and per-vertex edge length");
  add_graph_inputs(wt, o);

  auto* vb = app.add_subcommand("verify-bounds", "Evaluate the analytic bound checks");
  vb->add_flag("--text", o.text, "Print an aligned table instead of JSON");

  auto* srch = app.add_subcommand("search-template", "Discover periodic templates");
  srch->add_option("--kind", o.kind, "square|hex");
  srch->add_option("--cap", o.cap, "Degree cap")->capture_default_str();
  srch->add_option("--max-index", o.max_index, "Largest period lattice index")->capture_default_str();
  srch->add_flag("--light", o.light, "Index-5 light degree-3 square templates");
  srch->add_option("--eval-section", o.eval_section, "Evaluation section");
  srch->add_option("--margin", o.margin, "Interior margin")->capture_default_str();
  srch->add_option("--max-results", o.max_results, "Templates to keep")->capture_default_str();
  srch->add_option("--ceiling", o.ceiling, "Discard templates with larger stretch");
  srch->add_option("--store", o.store, "Directory for template files and index.json");
  srch->add_option("--label", o.label, "Index label prefix");

  auto* cert = app.add_subcommand("certify-lb", "Exact minimum stretch on a small section");
  cert->add_option("--kind", o.kind, "square|hex")->required();
  cert->add_option("--section", o.section, "rect:AxB, rhombus:AxB or hexball:R")->required();
  cert->add_option("--cap", o.cap, "Degree cap")->capture_default_str();
  cert->add_option("--max-sq", o.max_sq, "Largest squared candidate length (0: all)")->capture_default_str();
  cert->add_option("--node-limit", o.node_limit, "Node budget");
  cert->add_option("--time-limit", o.time_limit, "Wall-clock budget in seconds");
  cert->add_flag("--large-budget", o.large_budget, "Effectively unbounded budgets");

  auto* render = app.add_subcommand("render", "Draw a graph as SVG");
  add_graph_inputs(render, o);
  render->add_option("--witness", o.witness, "Highlight a shortest path between two vertices")->expected(2);
  render->add_flag("--stretch-witness", o.stretch_witness, "Highlight the max-stretch witness path");
  render->add_option("--filter", o.filter, "Pair filter for --stretch-witness")->capture_default_str();
  render->add_option("--margin", o.margin, "Interior margin for --stretch-witness")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  Run run(chosen->get_name(), args, o);
  try {
    if (chosen == gen) return cmd_generate(run, out);
    if (chosen == build) return cmd_build(run, out);
    if (chosen == st) return cmd_stretch(run, out);
    if (chosen == wt) return cmd_weight(run, out);
    if (chosen == vb) return cmd_verify_bounds(run, out);
    if (chosen == srch) return cmd_search_template(run, out);
    if (chosen == cert) return cmd_certify(run, out);
    return cmd_render(run, out);
  } catch (const KindMismatchError& e) {
    err << "error: kind mismatch: " << e.what() << "\n";
    return kExitKindMismatch;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DisconnectedError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const MixedRadicalError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }
}

}  // namespace lsl
