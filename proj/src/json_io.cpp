#include "lsl/json_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "lsl/errors.hpp"

namespace lsl {

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

[[noreturn]] void malformed(const std::string& what) { throw FormatError("malformed input: " + what); }

const Json& field(const Json& j, const char* name) {
  if (!j.is_object()) malformed(std::string("expected an object with field '") + name + "'");
  const auto it = j.find(name);
  if (it == j.end()) malformed(std::string("missing field '") + name + "'");
  return *it;
}

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) malformed(std::string(what) + " must be an integer");
  return j.get<int>();
}

Vec2i as_vec(const Json& j, const char* what) {
  if (!j.is_array() || j.size() != 2) malformed(std::string(what) + " must be a pair [u, v]");
  return {as_int(j[0], what), as_int(j[1], what)};
}

Json vec(Vec2i p) { return Json::array({p.u, p.v}); }

// Non-finite values have no JSON literal; they are written as null.
Json real(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

LatticeKind kind_of(const Json& j) {
  const Json& k = field(j, "kind");
  if (!k.is_string()) malformed("kind must be a string");
  try {
    return parse_kind(k.get<std::string>());
  } catch (const UsageError& e) {
    malformed(e.what());
  }
}

}  // namespace

Json to_json(const Shape& shape) {
  Json j;
  switch (shape.type) {
    case ShapeType::kEmpty:
      j["type"] = "empty";
      break;
    case ShapeType::kRect:
    case ShapeType::kRhombus:
      j["type"] = shape.type == ShapeType::kRect ? "rect" : "rhombus";
      j["a"] = shape.a;
      j["b"] = shape.b;
      break;
    case ShapeType::kHexBall:
      j["type"] = "hexball";
      j["r"] = shape.a;
      break;
  }
  return j;
}

Shape shape_from_json(const Json& j) {
  const Json& t = field(j, "type");
  if (!t.is_string()) malformed("shape type must be a string");
  const std::string type = t.get<std::string>();
  Shape s;
  if (type == "empty") {
    s = Shape::empty();
  } else if (type == "rect" || type == "rhombus") {
    const int a = as_int(field(j, "a"), "shape a");
    const int b = as_int(field(j, "b"), "shape b");
    s = type == "rect" ? Shape::rect(a, b) : Shape::rhombus(a, b);
  } else if (type == "hexball") {
    s = Shape::hexball(as_int(field(j, "r"), "hexball radius"));
  } else {
    malformed("unknown shape type '" + type + "'");
  }
  if (s.a < 0 || s.b < 0) malformed("negative shape parameter");
  return s;
}

Json to_json(const Section& s) {
  Json j;
  j["kind"] = kind_name(s.kind());
  j["shape"] = to_json(s.shape());
  Json pts = Json::array();
  for (const Vec2i p : s.points()) pts.push_back(vec(p));
  j["points"] = std::move(pts);
  return j;
}

Section section_from_json(const Json& j) {
  const LatticeKind kind = kind_of(j);
  Section s = generate_section(kind, shape_from_json(field(j, "shape")));
  const auto it = j.find("points");
  if (it != j.end()) {
    if (!it->is_array() || it->size() != s.size()) malformed("points do not match the shape");
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (as_vec((*it)[i], "point") != s.point(i)) malformed("points do not match the shape");
    }
  }
  return s;
}

Json to_json(const GeomGraph& g) {
  Json j;
  j["section"] = to_json(g.section());
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back(Json::array({e.i, e.j}));
  j["edges"] = std::move(edges);
  return j;
}

GeomGraph graph_from_json(const Json& j) {
  Section s = section_from_json(field(j, "section"));
  const Json& list = field(j, "edges");
  if (!list.is_array()) malformed("edges must be an array");
  std::vector<Edge> edges;
  edges.reserve(list.size());
  for (const Json& e : list) {
    const Vec2i p = as_vec(e, "edge");
    edges.push_back({p.u, p.v});
  }
  try {
    return GeomGraph(std::move(s), std::move(edges));
  } catch (const UsageError& e) {
    malformed(e.what());
  }
}

Json to_json(const PeriodicTemplate& t) {
  Json j;
  j["kind"] = kind_name(t.kind());
  j["periods"] = Json::array({vec(t.periods().t1()), vec(t.periods().t2())});
  Json edges = Json::array();
  for (const EdgeRule& r : t.rules()) {
    Json e;
    e["anchor"] = vec(r.anchor);
    e["delta"] = vec(r.delta);
    edges.push_back(std::move(e));
  }
  j["edges"] = std::move(edges);
  j["declared_cap"] = t.declared_cap();
  return j;
}

PeriodicTemplate template_from_json(const Json& j) {
  const LatticeKind kind = kind_of(j);
  const Json& periods = field(j, "periods");
  if (!periods.is_array() || periods.size() != 2) malformed("periods must hold two vectors");
  const Json& list = field(j, "edges");
  if (!list.is_array()) malformed("edges must be an array");
  std::vector<EdgeRule> rules;
  for (const Json& e : list) rules.push_back({as_vec(field(e, "anchor"), "anchor"), as_vec(field(e, "delta"), "delta")});
  try {
    const PeriodLattice lattice =
        PeriodLattice::from_periods(as_vec(periods[0], "period"), as_vec(periods[1], "period"));
    return PeriodicTemplate(kind, lattice, std::move(rules), as_int(field(j, "declared_cap"), "declared_cap"));
  } catch (const UsageError& e) {
    malformed(e.what());
  }
}

Json to_json(const PairFilter& f) {
  Json j;
  j["kind"] = f.kind == PairFilter::Kind::kAll ? "all" : "interior";
  if (f.kind == PairFilter::Kind::kInterior) j["margin"] = f.margin;
  return j;
}

Json to_json(const StretchReport& r) {
  Json j;
  j["max_stretch"] = real(r.max_stretch);
  j["witness"] = Json::array({r.witness.first, r.witness.second});
  j["filter"] = to_json(r.filter);
  j["disconnected"] = r.disconnected;
  if (r.per_source_max) {
    Json per = Json::array();
    for (double x : *r.per_source_max) per.push_back(real(x));
    j["per_source_max"] = std::move(per);
  }
  return j;
}

Json to_json(const ValidityReport& r) {
  Json j;
  j["degree_cap"] = r.degree_cap;
  j["max_degree"] = r.max_degree;
  Json cr = Json::array();
  for (const auto& [a, b] : r.crossings) cr.push_back(Json::array({a, b}));
  j["crossings"] = std::move(cr);
  j["piercings"] = r.piercings;
  j["connected"] = r.connected;
  j["plane"] = r.plane();
  j["accepted"] = r.accepted();
  return j;
}

Json to_json(const PathWitness& w) {
  Json j;
  j["vertices"] = w.vertices;
  j["length"] = real(w.length);
  if (w.exact) {
    j["exact"] = {{"a", w.exact->a()}, {"b", w.exact->b()}, {"d", w.exact->radicand()}, {"text", w.exact->to_string()}};
  } else {
    j["exact"] = nullptr;
  }
  return j;
}

Json to_json(const bounds::ClaimResult& c) {
  Json j;
  j["id"] = c.id;
  j["context"] = c.context;
  j["relation"] = c.relation;
  j["computed"] = real(c.computed);
  j["expected"] = real(c.expected);
  j["tolerance"] = c.tolerance;
  j["pass"] = c.pass;
  return j;
}

Json to_json(const Certificate& c, bool timing) {
  Json j;
  j["optimum"] = real(c.optimum);
  j["lower_bound"] = real(c.lower_bound);
  j["exhaustive"] = c.exhaustive;
  j["infeasible"] = c.infeasible;
  j["degree_cap"] = c.degree_cap;
  j["max_sq_length"] = c.max_sq_length;
  j["candidate_count"] = c.candidate_count;
  if (timing) {
    j["nodes_explored"] = c.stats.nodes_explored;
    j["elapsed_seconds"] = c.stats.elapsed_seconds;
  }
  j["graph"] = to_json(c.graph);
  return j;
}

Json to_json(const DiscoveredTemplate& d, const Section& eval_section) {
  Json j;
  j["template"] = to_json(d.tmpl);
  j["interior_stretch"] = real(d.interior_stretch);
  j["weight"] = d.weight;
  j["witness"] = Json::array({d.witness.first, d.witness.second});
  if (d.witness.first >= 0) {
    j["witness_points"] = Json::array({vec(eval_section.point(d.witness.first)),
                                       vec(eval_section.point(d.witness.second))});
  }
  j["witness_offset"] = vec(d.witness_offset);
  return j;
}

Json to_json(const DiscoveryResult& r) {
  Json j;
  j["eval_section"] = {{"kind", kind_name(r.eval_section.kind())}, {"shape", to_json(r.eval_section.shape())}};
  j["margin"] = r.margin;
  j["stats"] = {{"rule_sets", r.stats.rule_sets},
                {"distinct", r.stats.distinct},
                {"screened", r.stats.screened},
                {"evaluated", r.stats.evaluated}};
  Json list = Json::array();
  for (const DiscoveredTemplate& d : r.templates) list.push_back(to_json(d, r.eval_section));
  j["templates"] = std::move(list);
  return j;
}

std::string dump_canonical(const Json& j) { return j.dump(); }

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str());
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw UsageError("cannot write " + path.string());
  out << text;
  if (!out) throw UsageError("write failed: " + path.string());
}

std::string template_file_name(const PeriodicTemplate& t) {
  return kind_name(t.kind()) + "-cap" + std::to_string(t.declared_cap()) + "-" +
         hex64(fnv1a64(dump_canonical(to_json(t)))) + ".json";
}

void save_templates(const std::filesystem::path& dir, const std::vector<StoredTemplate>& entries,
                    const Section& eval_section, int margin) {
  std::filesystem::create_directories(dir);
  const std::filesystem::path index_path = dir / "index.json";
  Json index = Json::array();
  if (std::filesystem::exists(index_path)) {
    const Json old = read_json_file(index_path);
    for (const Json& e : old.value("templates", Json::array())) {
      const std::string label = e.value("label", "");
      const bool replaced = std::any_of(entries.begin(), entries.end(),
                                        [&](const StoredTemplate& s) { return s.label == label; });
      if (!replaced) index.push_back(e);
    }
  }
  for (const StoredTemplate& s : entries) {
    const std::string name = template_file_name(s.entry.tmpl);
    write_text_file(dir / name, to_json(s.entry.tmpl).dump(2) + "\n");
    Json e;
    e["label"] = s.label;
    e["file"] = name;
    e["kind"] = kind_name(s.entry.tmpl.kind());
    e["declared_cap"] = s.entry.tmpl.declared_cap();
    e["interior_stretch"] = real(s.entry.interior_stretch);
    e["weight"] = s.entry.weight;
    e["witness_offset"] = vec(s.entry.witness_offset);
    e["eval_section"] = {{"kind", kind_name(eval_section.kind())}, {"shape", to_json(eval_section.shape())}};
    e["margin"] = margin;
    index.push_back(std::move(e));
  }
  std::stable_sort(index.begin(), index.end(), [](const Json& x, const Json& y) {
    return x.at("label").get<std::string>() < y.at("label").get<std::string>();
  });
  Json doc;
  doc["templates"] = std::move(index);
  write_text_file(index_path, doc.dump(2) + "\n");
}

PeriodicTemplate load_template(const std::filesystem::path& dir, const std::string& label) {
  const Json index = read_json_file(dir / "index.json");
  for (const Json& e : index.value("templates", Json::array())) {
    if (e.value("label", "") == label) return template_from_json(read_json_file(dir / e.at("file").get<std::string>()));
  }
  throw UsageError("no stored template labelled '" + label + "'");
}

}  // namespace lsl
