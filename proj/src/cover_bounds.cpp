#include "rigi/cover_bounds.hpp"

#include <algorithm>
#include <set>

namespace rigi {

namespace {

struct CoverData {
  CoverCheck check;
  Graph gstar;
  std::vector<VertexPair> shared_nonedges;
};

CoverData prepare(const Graph& g, const Cover& c, const RankOptions& opt) {
  CoverData d;
  d.check = validate_cover(g, c);
  if (!d.check.is_cover || !d.check.is_2thin)
    throw Error(ErrorCode::NotTwoThin, "need a 2-thin cover of G");
  std::vector<std::pair<int, int>> shared_edges;
  for (const auto& sp : d.check.shared.pairs) {
    shared_edges.push_back({sp.pair.u, sp.pair.v});
    if (!sp.is_edge) d.shared_nonedges.push_back(sp.pair);
  }
  Graph shared_graph = build_graph(g.n, shared_edges);
  if (!is_independent(shared_graph, opt))
    throw Error(ErrorCode::SharedPartDependent,
                "shared part must be independent");
  d.gstar = add_edges(g, d.shared_nonedges);
  return d;
}

}  // namespace

long long jj_upper_bound(const Graph& g, const Cover& c,
                         const RankOptions& opt) {
  CoverData d = prepare(g, c, opt);
  long long total = 0;
  for (const auto& s : c.sets)
    total += generic_rank(induced(d.gstar, s).graph, opt).rank;
  for (const auto& sp : d.check.shared.pairs) total -= sp.multiplicity - 1;
  return total;
}

SandwichCertificate certify_implied_by_sandwich(const Graph& g, const Cover& c,
                                                const RankOptions& opt) {
  CoverData d = prepare(g, c, opt);
  SandwichCertificate cert;
  cert.edges = g.m();
  cert.rank = generic_rank(g, opt).rank;
  long long total = 0;
  for (const auto& s : c.sets)
    total += generic_rank(induced(d.gstar, s).graph, opt).rank;
  for (const auto& sp : d.check.shared.pairs) total -= sp.multiplicity - 1;
  cert.bound = total;
  cert.valid = cert.rank == cert.edges && cert.bound == cert.edges;
  if (cert.valid) cert.implied_pairs = d.shared_nonedges;
  return cert;
}

int body_hinge_lower_bound(const Graph& g, const RingDescriptor& ring,
                           const RankOptions& opt) {
  int k = static_cast<int>(ring.bodies.size());
  if (k < 3) throw Error(ErrorCode::NotARing, "need at least 3 bodies");
  Graph gstar = g;
  for (const auto& h : ring.hinges)
    if (!gstar.has_edge(h.u, h.v)) gstar = add_edge(gstar, h.u, h.v);
  for (const auto& body : ring.bodies) {
    auto sub = induced(gstar, body).graph;
    if (generic_rank(sub, opt).rank != 3 * sub.n - 6)
      throw Error(ErrorCode::BodyNotRigid,
                  "each completed body must be generically rigid");
  }
  return std::max(0, k - 6);
}

}  // namespace rigi
