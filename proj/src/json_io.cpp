#include "rigi/json_io.hpp"

#include "rigi/analysis.hpp"

namespace rigi {

std::string rat_to_string(const Rat& r) { return r.get_str(); }

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
  if (j.is_string()) {
    Rat r;
    if (r.set_str(j.get<std::string>(), 10) != 0)
      throw Error(ErrorCode::ParseError, "bad rational literal");
    r.canonicalize();
    return r;
  }
  throw Error(ErrorCode::ParseError, "rational must be int or string");
}

Json pairs_to_json(const std::vector<VertexPair>& ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(Json::array({p.u, p.v}));
  return out;
}

std::vector<VertexPair> pairs_from_json(const Json& j) {
  std::vector<VertexPair> out;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2)
      throw Error(ErrorCode::ParseError, "pair must be [u, v]");
    out.push_back(make_pair_sorted(e[0].get<int>(), e[1].get<int>()));
  }
  return out;
}

Json graph_file_to_json(const GraphFile& gf) {
  Json j;
  j["n"] = gf.graph.n;
  Json edges = Json::array();
  for (const auto& e : gf.graph.edges) edges.push_back(Json::array({e.u, e.v}));
  j["edges"] = edges;
  if (!gf.graph.labels.empty()) j["labels"] = gf.graph.labels;
  if (gf.coords) {
    Json coords = Json::array();
    for (const auto& p : *gf.coords)
      coords.push_back(Json::array({rat_to_string(p[0]), rat_to_string(p[1]),
                                    rat_to_string(p[2])}));
    j["coords"] = coords;
  }
  if (gf.cover) {
    Json cover = Json::array();
    for (const auto& s : gf.cover->sets) cover.push_back(s);
    j["cover"] = cover;
  }
  if (!gf.marked_nonedges.empty())
    j["marked_nonedges"] = pairs_to_json(gf.marked_nonedges);
  if (!gf.provenance.is_null()) j["provenance"] = gf.provenance;
  return j;
}

GraphFile graph_file_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw Error(ErrorCode::ParseError, "graph file needs n and edges");
  GraphFile gf;
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2)
      throw Error(ErrorCode::ParseError, "edge must be [u, v]");
    edges.push_back({e[0].get<int>(), e[1].get<int>()});
  }
  gf.graph = build_graph(j["n"].get<int>(), edges);
  if (j.contains("labels")) {
    gf.graph.labels = j["labels"].get<std::vector<std::string>>();
    if (gf.graph.labels.size() != static_cast<std::size_t>(gf.graph.n))
      throw Error(ErrorCode::ParseError, "labels must cover every vertex");
  }
  if (j.contains("coords")) {
    std::vector<std::array<Rat, 3>> coords;
    for (const auto& p : j["coords"]) {
      if (!p.is_array() || p.size() != 3)
        throw Error(ErrorCode::ParseError, "coordinate must be [x, y, z]");
      coords.push_back({rat_from_json(p[0]), rat_from_json(p[1]),
                        rat_from_json(p[2])});
    }
    if (coords.size() != static_cast<std::size_t>(gf.graph.n))
      throw Error(ErrorCode::ParseError, "coords must cover every vertex");
    gf.coords = std::move(coords);
  }
  if (j.contains("cover")) {
    Cover c;
    for (const auto& s : j["cover"]) c.sets.push_back(s.get<std::vector<int>>());
    gf.cover = std::move(c);
  }
  if (j.contains("marked_nonedges"))
    gf.marked_nonedges = pairs_from_json(j["marked_nonedges"]);
  if (j.contains("provenance")) gf.provenance = j["provenance"];
  return gf;
}

Json construction_to_json(const ConstructionResult& r) {
  GraphFile gf;
  gf.graph = r.graph;
  gf.marked_nonedges = r.marked_nonedges;
  Json prov;
  prov["scheme"] = r.scheme;
  Json params = Json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  prov["params"] = params;
  if (!r.marked_edges.empty())
    prov["marked_edges"] = pairs_to_json(r.marked_edges);
  if (!r.vertex_map.empty()) prov["vertex_map"] = r.vertex_map;
  if (!r.vertex_map2.empty()) prov["vertex_map2"] = r.vertex_map2;
  if (r.warning_nucleation) prov["warning_nucleation"] = true;
  if (r.ring) {
    Json ring;
    ring["bodies"] = r.ring->bodies;
    ring["hinges"] = pairs_to_json(r.ring->hinges);
    prov["ring"] = ring;
  }
  gf.provenance = prov;
  return graph_file_to_json(gf);
}

namespace {

const char* mode_name(RankMode m) {
  return m == RankMode::RandomField ? "random-field" : "rational-oracle";
}

Json sets_to_json(const std::vector<std::vector<Vertex>>& sets) {
  Json out = Json::array();
  for (const auto& s : sets) out.push_back(s);
  return out;
}

}  // namespace

Json analysis_report_to_json(const AnalysisReport& r) {
  Json j;
  j["n"] = r.n;
  j["m"] = r.m;
  j["rank"] = r.rank;
  j["dof"] = r.degrees_of_freedom;
  j["independent"] = r.independent;
  j["implied_nonedges"] = pairs_to_json(r.implied_nonedges);
  j["nucleations"] = {{"nuclei", sets_to_json(r.nucleations.nuclei)},
                      {"complete", r.nucleations.complete},
                      {"size_limit", r.nucleation_limit}};
  j["is_circuit"] = r.circuit;
  Json sp;
  sp["is_sparse"] = r.sparsity.is_sparse;
  sp["is_tight"] = r.sparsity.is_tight;
  if (r.sparsity.violating_subgraph)
    sp["violating_subgraph"] = *r.sparsity.violating_subgraph;
  j["sparsity"] = sp;
  j["module_rigidity"] = {
      {"module_rigid", r.module_rigidity.module_rigid},
      {"nuclei_found", sets_to_json(r.module_rigidity.nuclei_found)},
      {"dependence_detected", r.module_rigidity.dependence_detected}};
  j["gap_report"] = {{"module_rigid", r.gap.module_rigid},
                     {"truly_rigid", r.gap.truly_rigid},
                     {"gap", r.gap.gap}};
  j["mode"] = mode_name(r.options.mode);
  j["trials"] = r.options.trials;
  j["seed"] = r.options.seed;
  return j;
}

Json sandwich_certificate_to_json(const SandwichCertificate& c,
                                  const Cover& cover) {
  Json j;
  j["bound"] = c.bound;
  j["rank"] = c.rank;
  j["edges"] = c.edges;
  j["valid"] = c.valid;
  j["implied_pairs"] = pairs_to_json(c.implied_pairs);
  Json sets = Json::array();
  for (const auto& s : cover.sets) sets.push_back(s);
  j["cover"] = sets;
  return j;
}

Json flex_sign_certificate_to_json(const FlexSignCertificate& c) {
  Json j;
  j["k"] = c.k;
  j["applicable"] = c.applicable;
  if (!c.applicable) {
    j["ring_dof"] = c.ring_dof;
    return j;
  }
  j["holds"] = c.holds();
  j["parity_holds"] = c.parity_holds;
  j["motions_fix_hinges"] = c.motions_fix_hinges;
  j["perturbation_stable"] = c.perturbation_stable;
  j["perturbations"] = c.perturbations;
  j["seed"] = c.seed;
  j["sigma"] = c.sigma;
  Json signs = Json::array();
  for (const auto& s : c.roof_signs) signs.push_back(Json::array({s[0], s[1]}));
  j["sign_matrix"] = signs;
  Json coords = Json::array();
  for (const auto& p : c.framework.coords)
    coords.push_back(Json::array({rat_to_string(p[0]), rat_to_string(p[1]),
                                  rat_to_string(p[2])}));
  j["coords"] = coords;
  Json motions = Json::array();
  for (const auto& v : motion_space(c.framework).vectors) {
    Json row = Json::array();
    for (const auto& x : v) row.push_back(rat_to_string(x));
    motions.push_back(row);
  }
  j["motion_basis"] = motions;
  return j;
}

Json probe_report_to_json(const ProbeReport& r) {
  Json j;
  j["stress_dim"] = r.stress_dim;
  j["claim_apex_projections"] = r.claim_apex_projections;
  j["claim_roof_terms_cancel"] = r.claim_roof_terms_cancel;
  j["claim_restriction_stress"] = r.claim_restriction_stress;
  j["restriction_forced_nonzero"] = r.restriction_forced_nonzero;
  j["gadget_only_stress_dim"] = r.gadget_only_stress_dim;
  return j;
}

}  // namespace rigi
