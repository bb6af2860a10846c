#include "rigi/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "rigi/analysis.hpp"
#include "rigi/constructions.hpp"
#include "rigi/cover_bounds.hpp"
#include "rigi/flex_sign.hpp"
#include "rigi/json_io.hpp"

namespace rigi {

namespace {

std::uint64_t default_seed() {
  if (const char* env = std::getenv("RIGISCOPE_SEED"))
    return std::strtoull(env, nullptr, 10);
  return RankOptions{}.seed;
}

Json make_manifest(const std::string& command,
                   const std::vector<std::string>& args,
                   const RankOptions& opt) {
  Json m;
  m["command"] = command;
  m["arguments"] = args;
  m["seed"] = opt.seed;
  m["trials"] = opt.trials;
  m["mode"] = opt.mode == RankMode::RandomField ? "random-field"
                                                : "rational-oracle";
  m["version"] = kToolVersion;
  return m;
}

void emit(const Json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream f(out_path);
    if (!f) throw Error(ErrorCode::ParseError, "cannot open " + out_path);
    f << j.dump(2) << "\n";
  }
}

GraphFile load_graph_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorCode::ParseError, "cannot open " + path);
  Json j;
  try {
    f >> j;
  } catch (const std::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("bad JSON: ") + e.what());
  }
  return graph_file_from_json(j);
}

std::vector<Vertex> parse_vertex_list(const std::string& s) {
  std::vector<Vertex> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(std::stoi(item));
  return out;
}

VertexPair parse_pair(const std::string& s) {
  auto v = parse_vertex_list(s);
  if (v.size() != 2)
    throw Error(ErrorCode::BadParameter, "expected a pair u,v");
  return make_pair_sorted(v[0], v[1]);
}

// Side-2 neighbor lists; every other neighbor stays on side 1.
EdgeDistribution parse_distribution(const Graph& h, VertexPair ab,
                                    const std::string& a2,
                                    const std::string& b2) {
  EdgeDistribution dist;
  for (Vertex w : h.neighbors(ab.u)) dist.at_a[w] = 1;
  for (Vertex w : h.neighbors(ab.v)) dist.at_b[w] = 1;
  for (Vertex w : parse_vertex_list(a2)) dist.at_a[w] = 2;
  for (Vertex w : parse_vertex_list(b2)) dist.at_b[w] = 2;
  return dist;
}

RingDescriptor ring_from_provenance(const GraphFile& gf) {
  if (gf.provenance.is_null() || !gf.provenance.contains("ring"))
    throw Error(ErrorCode::NotARing, "input file carries no ring metadata");
  RingDescriptor ring;
  for (const auto& b : gf.provenance["ring"]["bodies"])
    ring.bodies.push_back(b.get<std::vector<int>>());
  ring.hinges = pairs_from_json(gf.provenance["ring"]["hinges"]);
  return ring;
}

void print_human_report(const AnalysisReport& r) {
  std::cout << "vertices " << r.n << ", edges " << r.m << "\n";
  std::cout << "generic rank " << r.rank << ", dof " << r.degrees_of_freedom
            << (r.degrees_of_freedom == 0 ? " (rigid)" : " (flexible)")
            << "\n";
  std::cout << (r.independent ? "independent" : "dependent")
            << (r.circuit ? ", circuit" : "") << "\n";
  std::cout << "implied non-edges: " << r.implied_nonedges.size();
  if (!r.implied_nonedges.empty()) {
    std::cout << " [";
    for (std::size_t i = 0; i < r.implied_nonedges.size(); ++i)
      std::cout << (i ? " " : "") << "{" << r.implied_nonedges[i].u << ","
                << r.implied_nonedges[i].v << "}";
    std::cout << "]";
  }
  std::cout << "\n";
  std::cout << "nucleations: " << r.nucleations.nuclei.size()
            << (r.nucleations.complete ? "" : " (search capped)") << "\n";
  std::cout << "(3,6)-sparse: " << (r.sparsity.is_sparse ? "yes" : "no")
            << ", tight: " << (r.sparsity.is_tight ? "yes" : "no") << "\n";
  std::cout << "module-rigid: "
            << (r.module_rigidity.module_rigid ? "yes" : "no")
            << ", gap: " << (r.gap.gap ? "yes" : "no") << "\n";
}

int run(const std::vector<std::string>& args) {
  CLI::App app{"rigiscope: nucleation-free rigidity analysis"};
  app.require_subcommand(1);

  RankOptions opt;
  opt.seed = default_seed();

  // generate
  auto* gen = app.add_subcommand("generate", "emit a named graph family");
  std::string gen_family, gen_out;
  int gen_k = 7, gen_k1 = 7, gen_k2 = 7;
  gen->add_option("family", gen_family,
                  "roof|banana|ring-of-roofs|ring-of-tetrahedra|double-banana|"
                  "double-ring|braced-double-ring|ring-of-octahedra|"
                  "ring-of-icosahedra")
      ->required();
  gen->add_option("--k", gen_k, "ring size");
  gen->add_option("--k1", gen_k1, "first ring size");
  gen->add_option("--k2", gen_k2, "second ring size");
  gen->add_option("-o,--out", gen_out, "output file (default stdout)");

  // analyze
  auto* an = app.add_subcommand("analyze", "full rigidity report");
  std::string an_in, an_out;
  int an_limit = -1;
  bool an_rational = false, an_json = false;
  an->add_option("input", an_in, "graph JSON file")->required();
  an->add_option("--nucleation-limit", an_limit, "max nucleus size");
  an->add_option("--trials", opt.trials, "random evaluations per rank query");
  an->add_option("--seed", opt.seed, "seed for coordinate sampling");
  an->add_flag("--rational", an_rational, "use the rational-oracle mode");
  an->add_flag("--json", an_json, "machine-readable report on stdout");
  an->add_option("-o,--out", an_out, "also write the JSON report here");

  // bound
  auto* bd = app.add_subcommand("bound", "2-thin cover rank certificate");
  std::string bd_in, bd_cover, bd_out;
  bool bd_rational = false;
  bd->add_option("input", bd_in, "graph JSON file")->required();
  bd->add_option("--cover", bd_cover,
                 "cover file (defaults to the input's cover field)");
  bd->add_option("--trials", opt.trials, "random evaluations per rank query");
  bd->add_option("--seed", opt.seed, "seed");
  bd->add_flag("--rational", bd_rational, "rational-oracle mode");
  bd->add_option("-o,--out", bd_out, "output file (default stdout)");

  // flexsign
  auto* fs = app.add_subcommand("flexsign", "flex-sign ring certificate");
  int fs_k = 7, fs_pert = 10;
  std::string fs_out;
  std::uint64_t fs_seed = default_seed();
  fs->add_option("--k", fs_k, "ring size")->required();
  fs->add_option("--perturbations", fs_pert, "stability rechecks");
  fs->add_option("--seed", fs_seed, "perturbation seed");
  fs->add_option("-o,--out", fs_out, "output file (default stdout)");

  // construct
  auto* cs = app.add_subcommand("construct", "apply an inductive scheme");
  std::string cs_scheme, cs_in, cs_in2, cs_out;
  std::string cs_w, cs_remove, cs_moved, cs_match, cs_pair, cs_pair2;
  std::string cs_a2, cs_b2;
  int cs_u = -1, cs_extra = 0;
  cs->add_option("scheme", cs_scheme,
                 "henneberg1|henneberg2|vertex-split|k-sum|roof-addition|"
                 "graph-combination|henneberg-extender")
      ->required();
  cs->add_option("--in", cs_in, "primary input graph")->required();
  cs->add_option("--in2", cs_in2, "secondary input graph");
  cs->add_option("--w", cs_w, "vertex list w1,w2,...");
  cs->add_option("--remove", cs_remove, "edge u,v to remove (henneberg2)");
  cs->add_option("--u", cs_u, "vertex to split");
  cs->add_option("--moved", cs_moved, "neighbors moved to the new vertex");
  cs->add_option("--extra", cs_extra, "extra shared neighbors (0..2)");
  cs->add_option("--match", cs_match, "k-sum matching a:b,c:d,...");
  cs->add_option("--pair", cs_pair, "non-edge u,v");
  cs->add_option("--pair2", cs_pair2, "second graph's non-edge u,v");
  cs->add_option("--a-side2", cs_a2, "neighbors of a assigned to side 2");
  cs->add_option("--b-side2", cs_b2, "neighbors of b assigned to side 2");
  cs->add_option("-o,--out", cs_out, "output file (default stdout)");

  // gap-report
  auto* gr = app.add_subcommand("gap-report",
                                "module-rigidity vs true rigidity");
  std::string gr_in;
  bool gr_json = false;
  gr->add_option("input", gr_in, "graph JSON file")->required();
  gr->add_option("--trials", opt.trials, "random evaluations per rank query");
  gr->add_option("--seed", opt.seed, "seed");
  gr->add_flag("--json", gr_json, "machine-readable report on stdout");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::cerr << (e.get_exit_code() == 0 ? "" : "error: ") << e.what() << "\n";
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  if (gen->parsed()) {
    ConstructionResult r;
    if (gen_family == "roof") r = roof();
    else if (gen_family == "banana") r = banana();
    else if (gen_family == "ring-of-roofs") r = ring_of_roofs(gen_k);
    else if (gen_family == "ring-of-tetrahedra") r = ring_of_tetrahedra(gen_k);
    else if (gen_family == "double-banana") r = double_banana();
    else if (gen_family == "double-ring") r = double_ring(gen_k1, gen_k2);
    else if (gen_family == "braced-double-ring")
      r = braced_double_ring(gen_k1, gen_k2);
    else if (gen_family == "ring-of-octahedra")
      r = ring_of_polyhedra(octahedron(), {0, 1}, {2, 3}, gen_k);
    else if (gen_family == "ring-of-icosahedra") {
      Graph ico = icosahedron();
      auto hits = search_hinge_pairs(ico, gen_k, true, 10000, opt);
      if (hits.empty())
        throw Error(ErrorCode::NoValidHinges, "no icosahedron hinge choice");
      r = ring_of_polyhedra(ico, hits[0].h1, hits[0].h2, gen_k);
    } else
      throw Error(ErrorCode::BadParameter, "unknown family " + gen_family);
    Json j = construction_to_json(r);
    j["provenance"]["manifest"] = make_manifest("generate", args, opt);
    emit(j, gen_out);
    return 0;
  }

  if (an->parsed()) {
    if (an_rational) opt.mode = RankMode::RationalOracle;
    GraphFile gf = load_graph_file(an_in);
    AnalysisReport rep = analyze(gf.graph, an_limit, opt);
    Json j = analysis_report_to_json(rep);
    j["manifest"] = make_manifest("analyze", args, opt);
    if (an_json)
      std::cout << j.dump(2) << "\n";
    else
      print_human_report(rep);
    if (!an_out.empty()) emit(j, an_out);
    return 0;
  }

  if (bd->parsed()) {
    if (bd_rational) opt.mode = RankMode::RationalOracle;
    GraphFile gf = load_graph_file(bd_in);
    Cover cover;
    if (!bd_cover.empty()) {
      GraphFile cf = load_graph_file(bd_cover);
      if (!cf.cover)
        throw Error(ErrorCode::ParseError, "cover file has no cover field");
      cover = *cf.cover;
    } else if (gf.cover) {
      cover = *gf.cover;
    } else {
      throw Error(ErrorCode::BadParameter, "no cover supplied");
    }
    auto cert = certify_implied_by_sandwich(gf.graph, cover, opt);
    Json j = sandwich_certificate_to_json(cert, cover);
    j["manifest"] = make_manifest("bound", args, opt);
    emit(j, bd_out);
    return 0;
  }

  if (fs->parsed()) {
    auto cert = flex_sign_certificate(fs_k, fs_pert, fs_seed);
    Json j = flex_sign_certificate_to_json(cert);
    j["manifest"] = make_manifest("flexsign", args, opt);
    emit(j, fs_out);
    return 0;
  }

  if (cs->parsed()) {
    GraphFile gf = load_graph_file(cs_in);
    ConstructionResult r;
    if (cs_scheme == "henneberg1") {
      auto w = parse_vertex_list(cs_w);
      if (w.size() != 3)
        throw Error(ErrorCode::BadVertices, "henneberg1 needs --w a,b,c");
      r = henneberg1(gf.graph, w[0], w[1], w[2]);
    } else if (cs_scheme == "henneberg2") {
      auto w = parse_vertex_list(cs_w);
      if (w.size() != 4)
        throw Error(ErrorCode::BadVertices, "henneberg2 needs --w a,b,c,d");
      r = henneberg2(gf.graph, {w[0], w[1], w[2], w[3]}, parse_pair(cs_remove));
    } else if (cs_scheme == "vertex-split") {
      r = vertex_split(gf.graph, cs_u, parse_vertex_list(cs_moved), cs_extra);
    } else if (cs_scheme == "k-sum") {
      if (cs_in2.empty())
        throw Error(ErrorCode::BadParameter, "k-sum needs --in2");
      GraphFile gf2 = load_graph_file(cs_in2);
      std::vector<std::pair<Vertex, Vertex>> matching;
      std::stringstream ss(cs_match);
      std::string item;
      while (std::getline(ss, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos)
          throw Error(ErrorCode::BadParameter, "matching entries are a:b");
        matching.push_back({std::stoi(item.substr(0, colon)),
                            std::stoi(item.substr(colon + 1))});
      }
      r = k_sum(gf.graph, gf2.graph, matching);
    } else if (cs_scheme == "roof-addition") {
      VertexPair ab = parse_pair(cs_pair);
      auto dist = parse_distribution(gf.graph, ab, cs_a2, cs_b2);
      r = roof_addition(gf.graph, ab, dist);
    } else if (cs_scheme == "graph-combination") {
      if (cs_in2.empty())
        throw Error(ErrorCode::BadParameter, "graph-combination needs --in2");
      GraphFile gf2 = load_graph_file(cs_in2);
      r = graph_combination(gf.graph, parse_pair(cs_pair), gf2.graph,
                            parse_pair(cs_pair2));
    } else if (cs_scheme == "henneberg-extender") {
      r = henneberg_extender_ring(gf.graph, ring_from_provenance(gf));
    } else {
      throw Error(ErrorCode::BadParameter, "unknown scheme " + cs_scheme);
    }
    Json j = construction_to_json(r);
    j["provenance"]["manifest"] = make_manifest("construct", args, opt);
    emit(j, cs_out);
    return 0;
  }

  if (gr->parsed()) {
    GraphFile gf = load_graph_file(gr_in);
    GapReport rep = rigidity_gap_report(gf.graph, opt);
    Json j;
    j["module_rigid"] = rep.module_rigid;
    j["truly_rigid"] = rep.truly_rigid;
    j["gap"] = rep.gap;
    j["manifest"] = make_manifest("gap-report", args, opt);
    if (gr_json)
      std::cout << j.dump(2) << "\n";
    else
      std::cout << "module-rigid: " << (rep.module_rigid ? "yes" : "no")
                << ", truly rigid: " << (rep.truly_rigid ? "yes" : "no")
                << ", gap: " << (rep.gap ? "yes" : "no") << "\n";
    return 0;
  }

  return 0;
}

}  // namespace

int cli_main(const std::vector<std::string>& args) {
  try {
    return run(args);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code) {
      case ErrorCode::ParseError:
        return 1;
      case ErrorCode::AssemblyFailed:
        return 3;
      default:
        return 2;
    }
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace rigi
