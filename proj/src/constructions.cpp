#include "rigi/constructions.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "rigi/sparsity.hpp"

namespace rigi {

namespace {

std::string fmt_pair(VertexPair p) {
  return "(" + std::to_string(p.u) + "," + std::to_string(p.v) + ")";
}

ConstructionResult with_scheme(Graph g, std::string scheme) {
  ConstructionResult r;
  r.graph = std::move(g);
  r.scheme = std::move(scheme);
  return r;
}

}  // namespace

ConstructionResult roof() {
  Graph g = complete_graph(5);
  g = remove_edge(g, 0, 1);
  g = remove_edge(g, 2, 3);
  auto r = with_scheme(g, "roof");
  r.marked_nonedges = {{0, 1}, {2, 3}};
  return r;
}

ConstructionResult banana() {
  Graph g = remove_edge(complete_graph(5), 0, 1);
  auto r = with_scheme(g, "banana");
  r.marked_nonedges = {{0, 1}};
  return r;
}

ConstructionResult ring_of_roofs(int k) {
  if (k < 3) throw Error(ErrorCode::BadParameter, "ring needs k >= 3");
  // Hinge pair i is {2i, 2i+1}; roof i spans hinges i and i+1 with apex 2k+i.
  Graph g;
  g.n = 3 * k;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < k; ++i) {
    int a = 2 * i, b = 2 * i + 1;
    int a2 = (2 * i + 2) % (2 * k), b2 = (2 * i + 3) % (2 * k);
    int apex = 2 * k + i;
    edges.insert(edges.end(), {{a, a2}, {a, b2}, {b, a2}, {b, b2},
                               {apex, a}, {apex, b}, {apex, a2}, {apex, b2}});
  }
  auto r = with_scheme(build_graph(3 * k, edges), "ring-of-roofs");
  r.params = {{"k", std::to_string(k)}};
  RingDescriptor ring;
  for (int i = 0; i < k; ++i) {
    r.marked_nonedges.push_back({2 * i, 2 * i + 1});
    ring.bodies.push_back({2 * i, 2 * i + 1, (2 * i + 2) % (2 * k),
                           (2 * i + 3) % (2 * k), 2 * k + i});
    ring.hinges.push_back(
        {(2 * i + 2) % (2 * k), (2 * i + 3) % (2 * k)});
  }
  for (auto& body : ring.bodies) std::sort(body.begin(), body.end());
  std::sort(r.marked_nonedges.begin(), r.marked_nonedges.end());
  r.ring = ring;
  return r;
}

ConstructionResult ring_of_tetrahedra(int k) {
  if (k < 3) throw Error(ErrorCode::BadParameter, "ring needs k >= 3");
  std::set<std::pair<int, int>> edges;
  for (int i = 0; i < k; ++i) {
    int vs[4] = {2 * i, 2 * i + 1, (2 * i + 2) % (2 * k),
                 (2 * i + 3) % (2 * k)};
    for (int x = 0; x < 4; ++x)
      for (int y = x + 1; y < 4; ++y)
        edges.insert(std::minmax(vs[x], vs[y]));
  }
  auto r = with_scheme(
      build_graph(2 * k, {edges.begin(), edges.end()}), "ring-of-tetrahedra");
  r.params = {{"k", std::to_string(k)}};
  RingDescriptor ring;
  for (int i = 0; i < k; ++i) {
    r.marked_edges.push_back({2 * i, 2 * i + 1});
    std::vector<Vertex> body = {2 * i, 2 * i + 1, (2 * i + 2) % (2 * k),
                                (2 * i + 3) % (2 * k)};
    std::sort(body.begin(), body.end());
    ring.bodies.push_back(body);
    ring.hinges.push_back({(2 * i + 2) % (2 * k), (2 * i + 3) % (2 * k)});
  }
  std::sort(r.marked_edges.begin(), r.marked_edges.end());
  r.ring = ring;
  return r;
}

ConstructionResult double_banana() {
  auto b = banana();
  auto r = graph_combination(b.graph, {0, 1}, b.graph, {0, 1});
  r.scheme = "double-banana";
  r.params.clear();
  return r;
}

ConstructionResult double_ring(int k1, int k2) {
  if (k1 < 7 || k2 < 7)
    throw Error(ErrorCode::BadParameter, "double ring needs k1,k2 >= 7");
  auto r1 = ring_of_roofs(k1), r2 = ring_of_roofs(k2);
  auto r = graph_combination(r1.graph, {0, 1}, r2.graph, {0, 1});
  r.scheme = "double-ring";
  r.params = {{"k1", std::to_string(k1)}, {"k2", std::to_string(k2)}};
  // Hinges of both rings stay non-edges; the identified pair appears once.
  std::set<VertexPair> marks;
  for (auto p : r1.marked_nonedges)
    marks.insert(make_pair_sorted(r.vertex_map[p.u], r.vertex_map[p.v]));
  for (auto p : r2.marked_nonedges)
    marks.insert(make_pair_sorted(r.vertex_map2[p.u], r.vertex_map2[p.v]));
  r.marked_nonedges.assign(marks.begin(), marks.end());
  return r;
}

ConstructionResult braced_double_ring(int k1, int k2) {
  auto dr = double_ring(k1, k2);
  // Apexes of ring 1 are 2*k1..3*k1-1 before mapping; likewise for ring 2.
  std::vector<Vertex> apex1, apex2;
  for (int i = 0; i < k1; ++i) apex1.push_back(dr.vertex_map[2 * k1 + i]);
  for (int i = 0; i < k2; ++i) apex2.push_back(dr.vertex_map2[2 * k2 + i]);
  // First pair of braces (in lexicographic order over apex pairs) that
  // keeps the graph (3,6)-sparse wins.
  std::vector<VertexPair> candidates;
  for (Vertex x : apex1)
    for (Vertex y : apex2)
      if (!dr.graph.has_edge(x, y)) candidates.push_back(make_pair_sorted(x, y));
  std::sort(candidates.begin(), candidates.end());
  for (std::size_t i = 0; i < candidates.size(); ++i)
    for (std::size_t j = i + 1; j < candidates.size(); ++j) {
      Graph braced = add_edge(dr.graph, candidates[i].u, candidates[i].v);
      if (braced.has_edge(candidates[j].u, candidates[j].v)) continue;
      braced = add_edge(braced, candidates[j].u, candidates[j].v);
      if (!maxwell_check(braced).is_sparse) continue;
      // Bracing must not spawn a proper tight subgraph: that would be a
      // nucleus and the count-based verdicts would stop being plain.
      if (!minimal_tight_sets(braced, 5, braced.n - 1).empty()) continue;
      ConstructionResult r = dr;
      r.graph = braced;
      r.scheme = "braced-double-ring";
      r.params.push_back({"brace1", fmt_pair(candidates[i])});
      r.params.push_back({"brace2", fmt_pair(candidates[j])});
      r.marked_edges = {candidates[i], candidates[j]};
      return r;
    }
  throw Error(ErrorCode::BraceSearchFailed,
              "no sparsity-preserving brace placement found");
}

ConstructionResult henneberg1(const Graph& g, Vertex w1, Vertex w2, Vertex w3) {
  std::set<Vertex> ws = {w1, w2, w3};
  if (ws.size() != 3 || w1 < 0 || w2 < 0 || w3 < 0 || w1 >= g.n || w2 >= g.n ||
      w3 >= g.n)
    throw Error(ErrorCode::BadVertices, "need three distinct vertices of G");
  Graph out = g;
  out.n = g.n + 1;
  Vertex v = g.n;
  for (Vertex w : ws) out = add_edge(out, v, w);
  auto r = with_scheme(out, "henneberg1");
  r.vertex_map.resize(g.n);
  for (Vertex i = 0; i < g.n; ++i) r.vertex_map[i] = i;
  r.params = {{"w", std::to_string(w1) + "," + std::to_string(w2) + "," +
                        std::to_string(w3)}};
  return r;
}

ConstructionResult henneberg2(const Graph& g, const std::array<Vertex, 4>& w,
                              VertexPair removed) {
  std::set<Vertex> ws(w.begin(), w.end());
  if (ws.size() != 4)
    throw Error(ErrorCode::BadVertices, "need four distinct vertices");
  for (Vertex x : ws)
    if (x < 0 || x >= g.n)
      throw Error(ErrorCode::BadVertices, "vertex out of range");
  if (!ws.count(removed.u) || !ws.count(removed.v) ||
      !g.has_edge(removed.u, removed.v))
    throw Error(ErrorCode::EdgeNotInW, "removed edge must be induced by W");
  Graph out = remove_edge(g, removed.u, removed.v);
  out.n = g.n + 1;
  Vertex v = g.n;
  for (Vertex x : ws) out = add_edge(out, v, x);
  auto r = with_scheme(out, "henneberg2");
  r.vertex_map.resize(g.n);
  for (Vertex i = 0; i < g.n; ++i) r.vertex_map[i] = i;
  r.params = {{"removed", fmt_pair(removed)}};
  return r;
}

ConstructionResult vertex_split(const Graph& g, Vertex u,
                                const std::vector<Vertex>& moved, int extra) {
  if (u < 0 || u >= g.n) throw Error(ErrorCode::OutOfRange, "u out of range");
  if (extra < 0 || extra > 2)
    throw Error(ErrorCode::BadParameter,
                "vertex split preserves independence only for extra <= 2");
  auto nbrs = g.neighbors(u);
  std::set<Vertex> nbr_set(nbrs.begin(), nbrs.end());
  std::set<Vertex> moved_set(moved.begin(), moved.end());
  if (moved_set.size() != moved.size())
    throw Error(ErrorCode::BadVertices, "moved neighbors must be distinct");
  for (Vertex w : moved)
    if (!nbr_set.count(w))
      throw Error(ErrorCode::NotANeighbor, "moved vertex is not a neighbor");
  std::vector<Vertex> remaining;
  for (Vertex w : nbrs)
    if (!moved_set.count(w)) remaining.push_back(w);
  if (static_cast<int>(remaining.size()) < extra)
    throw Error(ErrorCode::BadParameter, "not enough remaining neighbors");
  Graph out = g;
  out.n = g.n + 1;
  Vertex v = g.n;
  for (Vertex w : moved) out = remove_edge(out, u, w);
  for (Vertex w : moved) out = add_edge(out, v, w);
  out = add_edge(out, u, v);
  for (int i = 0; i < extra; ++i) out = add_edge(out, v, remaining[i]);
  auto r = with_scheme(out, "vertex-split");
  r.vertex_map.resize(g.n);
  for (Vertex i = 0; i < g.n; ++i) r.vertex_map[i] = i;
  r.params = {{"u", std::to_string(u)}, {"extra", std::to_string(extra)}};
  return r;
}

ConstructionResult k_sum(const Graph& g1, const Graph& g2,
                         const std::vector<std::pair<Vertex, Vertex>>& matching) {
  int k = static_cast<int>(matching.size());
  if (k < 1 || k > 3)
    throw Error(ErrorCode::BadParameter, "k-sum needs k in {1,2,3}");
  std::set<Vertex> s1, s2;
  for (auto [a, b] : matching) {
    if (a < 0 || a >= g1.n || b < 0 || b >= g2.n)
      throw Error(ErrorCode::OutOfRange, "matched vertex out of range");
    s1.insert(a);
    s2.insert(b);
  }
  if (static_cast<int>(s1.size()) != k || static_cast<int>(s2.size()) != k)
    throw Error(ErrorCode::BadVertices, "matching must pair distinct vertices");
  for (auto [a, b] : matching)
    for (auto [c, d] : matching) {
      if (a == c) continue;
      if (!g1.has_edge(a, c) || !g2.has_edge(b, d))
        throw Error(ErrorCode::NotAClique,
                    "matched sets must induce K_k in both graphs");
    }

  ConstructionResult r;
  r.vertex_map.resize(g1.n);
  for (Vertex i = 0; i < g1.n; ++i) r.vertex_map[i] = i;
  r.vertex_map2.assign(g2.n, -1);
  for (auto [a, b] : matching) r.vertex_map2[b] = a;
  Vertex next = g1.n;
  for (Vertex i = 0; i < g2.n; ++i)
    if (r.vertex_map2[i] < 0) r.vertex_map2[i] = next++;

  std::set<std::pair<int, int>> edges;
  for (const auto& e : g1.edges) edges.insert({e.u, e.v});
  for (const auto& e : g2.edges)
    edges.insert(std::minmax(r.vertex_map2[e.u], r.vertex_map2[e.v]));
  r.graph = build_graph(next, {edges.begin(), edges.end()});
  r.scheme = std::to_string(k) + "-sum";

  if (k == 3) {
    // Warn when the shared triangle sits inside a K4 on either side.
    auto in_k4 = [](const Graph& g, const std::set<Vertex>& tri) {
      for (Vertex x = 0; x < g.n; ++x) {
        if (tri.count(x)) continue;
        bool all = true;
        for (Vertex t : tri) all = all && g.has_edge(x, t);
        if (all) return true;
      }
      return false;
    };
    r.warning_nucleation = in_k4(g1, s1) || in_k4(g2, s2);
  }
  return r;
}

ConstructionResult henneberg_extender_ring(const Graph& g,
                                           const RingDescriptor& ring) {
  int k = static_cast<int>(ring.bodies.size());
  if (k < 3 || ring.hinges.size() != ring.bodies.size())
    throw Error(ErrorCode::NotARing, "need k >= 3 bodies with k hinges");
  for (int i = 0; i < k; ++i) {
    VertexPair h = ring.hinges[i];
    if (!g.has_edge(h.u, h.v))
      throw Error(ErrorCode::NotARing, "hinge must be an edge");
    int count = 0;
    for (const auto& body : ring.bodies) {
      bool has_u = std::find(body.begin(), body.end(), h.u) != body.end();
      bool has_v = std::find(body.begin(), body.end(), h.v) != body.end();
      if (has_u && has_v) ++count;
    }
    if (count != 2)
      throw Error(ErrorCode::NotARing,
                  "each hinge must be shared by exactly two bodies");
  }
  Graph out = g;
  out.n = g.n + k;
  for (int i = 0; i < k; ++i) {
    Vertex v = g.n + i;
    VertexPair h1 = ring.hinges[(i + k - 1) % k];  // shared with previous body
    VertexPair h2 = ring.hinges[i];                // shared with next body
    out = add_edge(out, v, h1.u);
    out = add_edge(out, v, h1.v);
    out = add_edge(out, v, h2.u);
    out = add_edge(out, v, h2.v);
  }
  for (int i = 0; i < k; ++i)
    out = remove_edge(out, ring.hinges[i].u, ring.hinges[i].v);
  auto r = with_scheme(out, "henneberg-extender-ring");
  r.vertex_map.resize(g.n);
  for (Vertex i = 0; i < g.n; ++i) r.vertex_map[i] = i;
  r.marked_nonedges = ring.hinges;
  std::sort(r.marked_nonedges.begin(), r.marked_nonedges.end());
  RingDescriptor out_ring = ring;
  for (int i = 0; i < k; ++i) {
    out_ring.bodies[i].push_back(g.n + i);
    std::sort(out_ring.bodies[i].begin(), out_ring.bodies[i].end());
  }
  r.ring = out_ring;
  return r;
}

namespace {

void check_distribution(const Graph& h, VertexPair ab,
                        const EdgeDistribution& dist) {
  if (ab.u < 0 || ab.v >= h.n)
    throw Error(ErrorCode::OutOfRange, "pair out of range");
  if (h.has_edge(ab.u, ab.v))
    throw Error(ErrorCode::NotANonEdge, "{a,b} must be a non-edge of H");
  for (auto [side_map, vertex] :
       {std::pair{&dist.at_a, ab.u}, std::pair{&dist.at_b, ab.v}}) {
    for (Vertex w : h.neighbors(vertex)) {
      auto it = side_map->find(w);
      if (it == side_map->end())
        throw Error(ErrorCode::IncompleteDistribution,
                    "every edge at a and b needs a side");
      if (it->second != 1 && it->second != 2)
        throw Error(ErrorCode::IncompleteDistribution, "sides are 1 or 2");
    }
  }
}

}  // namespace

ConstructionResult graph_cut(const Graph& h, VertexPair ab,
                             const EdgeDistribution& dist) {
  check_distribution(h, ab, dist);
  Vertex a1 = ab.u, b1 = ab.v, a2 = h.n, b2 = h.n + 1;
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : h.edges) {
    Vertex x = e.u, y = e.v;
    auto map_end = [&](Vertex z, Vertex other) -> Vertex {
      if (z == ab.u) return dist.at_a.at(other) == 1 ? a1 : a2;
      if (z == ab.v) return dist.at_b.at(other) == 1 ? b1 : b2;
      return z;
    };
    edges.push_back({map_end(x, y), map_end(y, x)});
  }
  auto r = with_scheme(build_graph(h.n + 2, edges), "graph-cut");
  r.vertex_map.resize(h.n);
  for (Vertex i = 0; i < h.n; ++i) r.vertex_map[i] = i;
  r.marked_nonedges = {make_pair_sorted(a1, b1), make_pair_sorted(a2, b2)};
  r.params = {{"a", std::to_string(ab.u)}, {"b", std::to_string(ab.v)}};
  return r;
}

ConstructionResult roof_addition(const Graph& h, VertexPair ab,
                                 const EdgeDistribution& dist,
                                 RoofAdditionIds* ids) {
  ConstructionResult cut = graph_cut(h, ab, dist);
  Vertex a1 = ab.u, b1 = ab.v, a2 = h.n, b2 = h.n + 1;
  Vertex u = h.n + 2, v = h.n + 3, c = h.n + 4, c2 = h.n + 5;
  Graph out = cut.graph;
  out.n = h.n + 6;
  for (auto [x, y] : std::vector<std::pair<Vertex, Vertex>>{
           {a1, u}, {a1, v}, {b1, u}, {b1, v},                // roof 1 base
           {c, a1}, {c, b1}, {c, u}, {c, v},                  // roof 1 apex
           {a2, u}, {a2, v}, {b2, u}, {b2, v},                // roof 2 base
           {c2, a2}, {c2, b2}, {c2, u}, {c2, v}})             // roof 2 apex
    out = add_edge(out, x, y);
  auto r = with_scheme(out, "roof-addition");
  r.vertex_map = cut.vertex_map;
  r.marked_nonedges = {make_pair_sorted(a1, b1), make_pair_sorted(a2, b2),
                       make_pair_sorted(u, v)};
  std::sort(r.marked_nonedges.begin(), r.marked_nonedges.end());
  r.params = {{"a", std::to_string(ab.u)}, {"b", std::to_string(ab.v)}};
  if (ids) *ids = {a1, a2, b1, b2, u, v, c, c2};
  return r;
}

ConstructionResult graph_combination(const Graph& g1, VertexPair ne1,
                                     const Graph& g2, VertexPair ne2) {
  for (auto [g, ne] : {std::pair{&g1, ne1}, std::pair{&g2, ne2}}) {
    if (ne.u < 0 || ne.v >= g->n)
      throw Error(ErrorCode::OutOfRange, "pair out of range");
    if (g->has_edge(ne.u, ne.v))
      throw Error(ErrorCode::NotANonEdge, "glued pair must be a non-edge");
  }
  ConstructionResult r;
  r.vertex_map.resize(g1.n);
  for (Vertex i = 0; i < g1.n; ++i) r.vertex_map[i] = i;
  r.vertex_map2.assign(g2.n, -1);
  r.vertex_map2[ne2.u] = ne1.u;
  r.vertex_map2[ne2.v] = ne1.v;
  Vertex next = g1.n;
  for (Vertex i = 0; i < g2.n; ++i)
    if (r.vertex_map2[i] < 0) r.vertex_map2[i] = next++;
  std::set<std::pair<int, int>> edges;
  for (const auto& e : g1.edges) edges.insert({e.u, e.v});
  for (const auto& e : g2.edges)
    edges.insert(std::minmax(r.vertex_map2[e.u], r.vertex_map2[e.v]));
  r.graph = build_graph(next, {edges.begin(), edges.end()});
  r.scheme = "graph-combination";
  r.marked_nonedges = {ne1};
  r.params = {{"ne1", fmt_pair(ne1)}, {"ne2", fmt_pair(ne2)}};
  return r;
}

StartingConditions check_starting_conditions(const Graph& h, const Cover& c,
                                             VertexPair ab,
                                             const EdgeDistribution& dist,
                                             const RankOptions& opt) {
  StartingConditions out;
  auto check = validate_cover(h, c);
  out.cover_is_2thin = check.is_cover && check.is_2thin;

  std::vector<std::pair<int, int>> shared_edges;
  std::vector<VertexPair> shared_nonedge_pairs;
  for (const auto& sp : check.shared.pairs) {
    shared_edges.push_back({sp.pair.u, sp.pair.v});
    if (!sp.is_edge) shared_nonedge_pairs.push_back(sp.pair);
  }
  Graph shared_graph = build_graph(h.n, shared_edges);
  out.shared_part_independent = is_independent(shared_graph, opt);

  // rank(H) = sum of covering subgraph ranks in H* minus multiplicities.
  Graph hstar = add_edges(h, shared_nonedge_pairs);
  long long rhs = 0;
  for (const auto& s : c.sets)
    rhs += generic_rank(induced(hstar, s).graph, opt).rank;
  for (const auto& sp : check.shared.pairs) rhs -= sp.multiplicity - 1;
  out.rank_formula_holds = generic_rank(h, opt).rank == rhs;

  // {a,b} must be a shared non-edge, and no covering subgraph carrying a
  // shared non-edge may be split across the two sides.
  bool ab_shared = false;
  for (const auto& sp : check.shared.pairs)
    ab_shared = ab_shared || (sp.pair == ab && !sp.is_edge);
  out.distribution_ok = ab_shared && !h.has_edge(ab.u, ab.v);
  if (out.distribution_ok) {
    try {
      check_distribution(h, ab, dist);
    } catch (const Error&) {
      out.distribution_ok = false;
    }
  }
  if (out.distribution_ok) {
    std::set<VertexPair> shared_nonedges(shared_nonedge_pairs.begin(),
                                         shared_nonedge_pairs.end());
    for (const auto& s : c.sets) {
      std::set<Vertex> sv(s.begin(), s.end());
      bool carries_nonedge = false;
      for (const auto& p : shared_nonedges)
        if (sv.count(p.u) && sv.count(p.v)) carries_nonedge = true;
      if (!carries_nonedge) continue;
      std::set<int> sides;
      if (sv.count(ab.u))
        for (Vertex w : h.neighbors(ab.u))
          if (sv.count(w)) sides.insert(dist.at_a.at(w));
      if (sv.count(ab.v))
        for (Vertex w : h.neighbors(ab.v))
          if (sv.count(w)) sides.insert(dist.at_b.at(w));
      if (sides.size() > 1) {
        out.distribution_ok = false;
        break;
      }
    }
  }

  if (out.distribution_ok) {
    Graph cut = graph_cut(h, ab, dist).graph;
    out.postcut_nucleation_free =
        find_nucleations(cut, cut.n, opt).nuclei.empty();
  }
  return out;
}

Cover transport_cover(const Cover& c, const Graph& h, VertexPair ab,
                      const EdgeDistribution& dist,
                      const RoofAdditionIds& ids) {
  Cover out;
  for (const auto& s : c.sets) {
    std::set<Vertex> sv(s.begin(), s.end());
    std::vector<Vertex> mapped;
    // A set containing a (or b) follows the side its edges were assigned;
    // sets split across sides fall apart into trivial edge sets.
    std::set<int> sides;
    if (sv.count(ab.u))
      for (Vertex w : h.neighbors(ab.u))
        if (sv.count(w)) sides.insert(dist.at_a.at(w));
    if (sv.count(ab.v))
      for (Vertex w : h.neighbors(ab.v))
        if (sv.count(w)) sides.insert(dist.at_b.at(w));
    if (sides.size() > 1) {
      // Preserve the set's edges as trivial two-vertex sets.
      auto ind = induced(h, s);
      for (const auto& e : ind.graph.edges) {
        Vertex x = ind.old_of_new[e.u], y = ind.old_of_new[e.v];
        auto map_end = [&](Vertex z, Vertex other) -> Vertex {
          if (z == ab.u) return dist.at_a.at(other) == 1 ? ids.a1 : ids.a2;
          if (z == ab.v) return dist.at_b.at(other) == 1 ? ids.b1 : ids.b2;
          return z;
        };
        out.sets.push_back({map_end(x, y), map_end(y, x)});
      }
      continue;
    }
    int side = sides.empty() ? 1 : *sides.begin();
    for (Vertex x : s) {
      if (x == ab.u)
        mapped.push_back(side == 1 ? ids.a1 : ids.a2);
      else if (x == ab.v)
        mapped.push_back(side == 1 ? ids.b1 : ids.b2);
      else
        mapped.push_back(x);
    }
    std::sort(mapped.begin(), mapped.end());
    out.sets.push_back(mapped);
  }
  out.sets.push_back({ids.a1, ids.b1, ids.u, ids.v, ids.c});
  out.sets.push_back({ids.a2, ids.b2, ids.u, ids.v, ids.c2});
  for (auto& s : out.sets) std::sort(s.begin(), s.end());
  return out;
}

ConstructionResult ring_of_polyhedra(const Graph& base, VertexPair h1,
                                     VertexPair h2, int k) {
  if (k < 3)
    throw Error(ErrorCode::NotARing,
                "each hinge must be shared by exactly two bodies");
  std::set<Vertex> hv = {h1.u, h1.v, h2.u, h2.v};
  if (hv.size() != 4)
    throw Error(ErrorCode::BadParameter, "hinge pairs must be disjoint");
  Graph body = base;
  bool dropped1 = body.has_edge(h1.u, h1.v);
  if (dropped1) body = remove_edge(body, h1.u, h1.v);
  bool dropped2 = body.has_edge(h2.u, h2.v);
  if (dropped2) body = remove_edge(body, h2.u, h2.v);

  int interior = base.n - 4;
  int n = 2 * k + interior * k;
  // Hinge pair i has ids {2i, 2i+1}; body i spans hinge pairs i and i+1.
  std::vector<std::vector<Vertex>> body_map(k,
                                            std::vector<Vertex>(base.n, -1));
  for (int i = 0; i < k; ++i) {
    body_map[i][h1.u] = 2 * i;
    body_map[i][h1.v] = 2 * i + 1;
    body_map[i][h2.u] = (2 * i + 2) % (2 * k);
    body_map[i][h2.v] = (2 * i + 3) % (2 * k);
    int next = 2 * k + interior * i;
    for (Vertex x = 0; x < base.n; ++x)
      if (body_map[i][x] < 0) body_map[i][x] = next++;
  }
  std::set<std::pair<int, int>> edges;
  for (int i = 0; i < k; ++i)
    for (const auto& e : body.edges)
      edges.insert(std::minmax(body_map[i][e.u], body_map[i][e.v]));
  auto r = with_scheme(build_graph(n, {edges.begin(), edges.end()}),
                       "ring-of-polyhedra");
  r.params = {{"k", std::to_string(k)},
              {"h1", fmt_pair(h1)},
              {"h2", fmt_pair(h2)},
              {"dropped1", dropped1 ? "true" : "false"},
              {"dropped2", dropped2 ? "true" : "false"}};
  RingDescriptor ring;
  for (int i = 0; i < k; ++i) {
    r.marked_nonedges.push_back({2 * i, 2 * i + 1});
    std::vector<Vertex> bv;
    for (Vertex x = 0; x < base.n; ++x) bv.push_back(body_map[i][x]);
    std::sort(bv.begin(), bv.end());
    ring.bodies.push_back(bv);
    ring.hinges.push_back({(2 * i + 2) % (2 * k), (2 * i + 3) % (2 * k)});
  }
  std::sort(r.marked_nonedges.begin(), r.marked_nonedges.end());
  r.ring = ring;
  return r;
}

namespace {

std::vector<std::vector<Vertex>> automorphisms(const Graph& g) {
  // Backtracking over all degree-compatible bijections; desk scale only.
  std::vector<std::vector<Vertex>> out;
  std::vector<int> map(g.n, -1);
  std::vector<bool> used(g.n, false);
  auto adj = g.adjacency();
  std::vector<int> deg(g.n);
  for (Vertex v = 0; v < g.n; ++v) deg[v] = g.degree(v);
  std::function<void(int)> rec = [&](int v) {
    if (v == g.n) {
      out.push_back(std::vector<Vertex>(map.begin(), map.end()));
      return;
    }
    for (Vertex w = 0; w < g.n; ++w) {
      if (used[w] || deg[v] != deg[w]) continue;
      bool ok = true;
      for (Vertex x = 0; x < v && ok; ++x) ok = adj[v][x] == adj[w][map[x]];
      if (!ok) continue;
      map[v] = w;
      used[w] = true;
      rec(v + 1);
      used[w] = false;
      map[v] = -1;
    }
  };
  rec(0);
  return out;
}

}  // namespace

std::vector<HingeSearchHit> search_hinge_pairs(const Graph& base, int k,
                                               bool stop_after_first,
                                               std::size_t cap,
                                               const RankOptions& opt) {
  std::vector<VertexPair> pairs;
  for (Vertex u = 0; u < base.n; ++u)
    for (Vertex v = u + 1; v < base.n; ++v) pairs.push_back({u, v});
  auto autos = automorphisms(base);

  auto canonical = [&](VertexPair p, VertexPair q) {
    std::pair<VertexPair, VertexPair> best{{-1, -1}, {-1, -1}};
    bool first = true;
    for (const auto& g : autos) {
      VertexPair gp = make_pair_sorted(g[p.u], g[p.v]);
      VertexPair gq = make_pair_sorted(g[q.u], g[q.v]);
      if (gq < gp) std::swap(gp, gq);
      if (first || std::pair{gp, gq} < best) {
        best = {gp, gq};
        first = false;
      }
    }
    return best;
  };

  std::set<std::pair<VertexPair, VertexPair>> seen;
  std::vector<HingeSearchHit> hits;
  std::size_t candidates = 0;
  // Dropped-edge/non-edge combinations first, matching the search order the
  // ring observations describe.
  auto rank_combo = [&](VertexPair p, VertexPair q) {
    int e = base.has_edge(p.u, p.v) + base.has_edge(q.u, q.v);
    return e == 1 ? 0 : (e == 0 ? 1 : 2);
  };
  std::vector<std::pair<VertexPair, VertexPair>> combos;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      VertexPair p = pairs[i], q = pairs[j];
      if (p.u == q.u || p.u == q.v || p.v == q.u || p.v == q.v) continue;
      combos.push_back({p, q});
    }
  std::stable_sort(combos.begin(), combos.end(),
                   [&](const auto& a, const auto& b) {
                     return rank_combo(a.first, a.second) <
                            rank_combo(b.first, b.second);
                   });
  for (const auto& [p, q] : combos) {
    if (candidates >= cap) break;
    if (!seen.insert(canonical(p, q)).second) continue;
    ++candidates;
    ConstructionResult ring = ring_of_polyhedra(base, p, q, k);
    if (generic_rank(ring.graph, opt).rank != ring.graph.m()) continue;
    auto implied = implied_nonedges(ring.graph, opt);
    std::set<VertexPair> implied_set(implied.begin(), implied.end());
    bool all_hinges = true;
    for (const auto& hp : ring.marked_nonedges)
      all_hinges = all_hinges && implied_set.count(hp);
    if (!all_hinges) continue;
    if (!find_nucleations(ring.graph, ring.graph.n, opt).nuclei.empty())
      continue;
    HingeSearchHit hit;
    hit.h1 = p;
    hit.h2 = q;
    hit.dropped1 = base.has_edge(p.u, p.v);
    hit.dropped2 = base.has_edge(q.u, q.v);
    hits.push_back(hit);
    if (stop_after_first) break;
  }
  if (hits.empty() && !stop_after_first)
    throw Error(ErrorCode::NoValidHinges, "no hinge choice passed the checks");
  return hits;
}

Graph octahedron() {
  // K6 minus the perfect matching {0,1},{2,3},{4,5}.
  Graph g = complete_graph(6);
  for (auto [a, b] : {std::pair{0, 1}, {2, 3}, {4, 5}})
    g = remove_edge(g, a, b);
  return g;
}

Graph modified_octahedron() { return octahedron(); }

Graph icosahedron() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= 5; ++i) {
    edges.push_back({0, i});
    edges.push_back({i, i % 5 + 1});
    edges.push_back({11, 5 + i});
    edges.push_back({5 + i, 5 + (i % 5) + 1});
    edges.push_back({i, 5 + i});
    edges.push_back({i, 5 + (i % 5) + 1});
  }
  return build_graph(12, edges);
}

}  // namespace rigi
