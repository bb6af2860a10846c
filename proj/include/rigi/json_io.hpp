#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "rigi/constructions.hpp"
#include "rigi/cover_bounds.hpp"
#include "rigi/flex_sign.hpp"
#include "rigi/graph.hpp"
#include "rigi/sparsity.hpp"

namespace rigi {

using Json = nlohmann::ordered_json;

// On-disk graph document. Field names are part of the file format:
// {"n", "edges", "labels"?, "coords"?, "cover"?, "marked_nonedges"?,
//  "provenance"?}.
struct GraphFile {
  Graph graph;
  std::optional<Cover> cover;
  std::vector<VertexPair> marked_nonedges;
  std::optional<std::vector<std::array<Rat, 3>>> coords;
  Json provenance;  // null when absent
};

Json graph_file_to_json(const GraphFile& gf);
GraphFile graph_file_from_json(const Json& j);

Json construction_to_json(const ConstructionResult& r);

struct AnalysisReport;
Json analysis_report_to_json(const AnalysisReport& r);
Json sandwich_certificate_to_json(const SandwichCertificate& c,
                                  const Cover& cover);
Json flex_sign_certificate_to_json(const FlexSignCertificate& c);
Json probe_report_to_json(const ProbeReport& r);

std::string rat_to_string(const Rat& r);
Rat rat_from_json(const Json& j);

Json pairs_to_json(const std::vector<VertexPair>& ps);
std::vector<VertexPair> pairs_from_json(const Json& j);

}  // namespace rigi
