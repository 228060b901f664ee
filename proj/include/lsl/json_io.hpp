#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "lsl/bounds.hpp"
#include "lsl/graph.hpp"
#include "lsl/search.hpp"
#include "lsl/stretch.hpp"
#include "lsl/templates.hpp"

namespace lsl {

using Json = nlohmann::ordered_json;

/// 64-bit FNV-1a, rendered as 16 lowercase hex digits.
std::uint64_t fnv1a64(std::string_view bytes);
std::string hex64(std::uint64_t h);

// Parsers throw FormatError on malformed or inconsistent input.
Json to_json(const Shape& shape);
Shape shape_from_json(const Json& j);

Json to_json(const Section& s);
Section section_from_json(const Json& j);

Json to_json(const GeomGraph& g);
GeomGraph graph_from_json(const Json& j);

Json to_json(const PeriodicTemplate& t);
PeriodicTemplate template_from_json(const Json& j);

Json to_json(const PairFilter& f);
Json to_json(const StretchReport& r);
Json to_json(const ValidityReport& r);
Json to_json(const PathWitness& w);
Json to_json(const bounds::ClaimResult& c);

/// Node counts and elapsed time depend on scheduling, so they are included
/// only on request.
Json to_json(const Certificate& c, bool timing);
Json to_json(const DiscoveredTemplate& d, const Section& eval_section);
Json to_json(const DiscoveryResult& r);

/// Canonical text of a JSON value: compact, field order as stored.
std::string dump_canonical(const Json& j);

Json parse_json(std::string_view text);
Json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

/// Content-addressed file name of a template: "<kind>-cap<k>-<hash>.json".
std::string template_file_name(const PeriodicTemplate& t);

struct StoredTemplate {
  std::string label;  // e.g. "square-cap3-rank1"
  DiscoveredTemplate entry;
};

/// Writes each template as its own file under dir and a ranked index.json.
/// Existing index entries with other labels are kept.
void save_templates(const std::filesystem::path& dir, const std::vector<StoredTemplate>& entries,
                    const Section& eval_section, int margin);

/// Loads the template with the given index label.
PeriodicTemplate load_template(const std::filesystem::path& dir, const std::string& label);

}  // namespace lsl
