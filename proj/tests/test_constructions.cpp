#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "rigi/constructions.hpp"
#include "rigi/rigidity.hpp"
#include "rigi/sparsity.hpp"

using namespace rigi;

namespace {

// Independent seed graphs grown from K4 by Henneberg moves; used by the
// preservation property tests.
Graph random_henneberg_graph(int target_n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Graph g = complete_graph(4);
  while (g.n < target_n) {
    if (rng() % 2 == 0) {
      std::set<Vertex> ws;
      while (ws.size() < 3) ws.insert(static_cast<Vertex>(rng() % g.n));
      auto it = ws.begin();
      Vertex w1 = *it++, w2 = *it++, w3 = *it;
      g = henneberg1(g, w1, w2, w3).graph;
    } else {
      const auto& e = g.edges[rng() % g.edges.size()];
      std::set<Vertex> ws = {e.u, e.v};
      while (ws.size() < 4) ws.insert(static_cast<Vertex>(rng() % g.n));
      std::vector<Vertex> w(ws.begin(), ws.end());
      g = henneberg2(g, {w[0], w[1], w[2], w[3]}, e).graph;
    }
  }
  return g;
}

EdgeDistribution random_distribution(const Graph& h, VertexPair ab,
                                     std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  EdgeDistribution d;
  for (Vertex w : h.neighbors(ab.u)) d.at_a[w] = 1 + rng() % 2;
  for (Vertex w : h.neighbors(ab.v)) d.at_b[w] = 1 + rng() % 2;
  return d;
}

}  // namespace

TEST_CASE("generator counts match their closed forms") {
  CHECK(roof().graph.n == 5);
  CHECK(roof().graph.m() == 8);
  CHECK(banana().graph.n == 5);
  CHECK(banana().graph.m() == 9);
  for (int k : {3, 6, 7, 10}) {
    auto rr = ring_of_roofs(k);
    CHECK(rr.graph.n == 3 * k);
    CHECK(rr.graph.m() == 8 * k);
    CHECK(static_cast<int>(rr.marked_nonedges.size()) == k);
    auto rt = ring_of_tetrahedra(k);
    CHECK(rt.graph.n == 2 * k);
    CHECK(rt.graph.m() == 5 * k);
  }
  auto db = double_banana();
  CHECK(db.graph.n == 8);
  CHECK(db.graph.m() == 18);
  auto dr = double_ring(7, 7);
  CHECK(dr.graph.n == 40);
  CHECK(dr.graph.m() == 112);
  CHECK_THROWS_AS(ring_of_roofs(2), Error);
}

TEST_CASE("roof hinges are disjoint and roof contains no K4") {
  auto r = roof();
  CHECK(r.marked_nonedges[0] == VertexPair{0, 1});
  CHECK(r.marked_nonedges[1] == VertexPair{2, 3});
  // Exhaustive 4-subset check.
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b)
      for (int c = b + 1; c < 5; ++c)
        for (int d = c + 1; d < 5; ++d) {
          int cnt = r.graph.has_edge(a, b) + r.graph.has_edge(a, c) +
                    r.graph.has_edge(a, d) + r.graph.has_edge(b, c) +
                    r.graph.has_edge(b, d) + r.graph.has_edge(c, d);
          CHECK(cnt < 6);
        }
}

TEST_CASE("ring of roofs: hinge sharing structure") {
  auto rr = ring_of_roofs(7);
  // Each hinge pair lies in exactly two bodies; consecutive bodies share
  // exactly the two hinge vertices.
  const auto& ring = *rr.ring;
  for (const auto& h : rr.marked_nonedges) {
    int count = 0;
    for (const auto& body : ring.bodies) {
      std::set<Vertex> bs(body.begin(), body.end());
      if (bs.count(h.u) && bs.count(h.v)) ++count;
    }
    CHECK(count == 2);
  }
  for (int i = 0; i < 7; ++i) {
    std::set<Vertex> a(ring.bodies[i].begin(), ring.bodies[i].end());
    std::set<Vertex> b(ring.bodies[(i + 1) % 7].begin(),
                       ring.bodies[(i + 1) % 7].end());
    std::vector<Vertex> inter;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(inter));
    CHECK(inter.size() == 2);
  }
}

TEST_CASE("rings of roofs: rigid up to six, flexible beyond") {
  CHECK(dof(ring_of_roofs(6).graph) == 0);
  CHECK(dof(ring_of_roofs(7).graph) == 1);
  CHECK(generic_rank(ring_of_roofs(10).graph).rank == 80);
}

TEST_CASE("rings of tetrahedra are independent from six on") {
  for (int k : {6, 7}) {
    auto rt = ring_of_tetrahedra(k);
    CHECK(is_independent(rt.graph));
  }
  CHECK(dof(ring_of_tetrahedra(7).graph) == 1);
  auto r3 = ring_of_tetrahedra(3);
  CHECK(r3.graph.m() == 15);  // constructor only, no independence claim
}

TEST_CASE("henneberg1") {
  Graph tri = complete_graph(3);
  auto r = henneberg1(tri, 0, 1, 2);
  CHECK(r.graph == complete_graph(4));
  CHECK_THROWS_AS(henneberg1(tri, 0, 0, 1), Error);

  auto rr = ring_of_roofs(7);
  auto ext = henneberg1(rr.graph, 0, 2, 4);
  CHECK(is_independent(ext.graph));
  CHECK(find_nucleations(ext.graph, ext.graph.n).nuclei.empty());
}

TEST_CASE("henneberg2 turns K4 into the banana") {
  auto r = henneberg2(complete_graph(4), {0, 1, 2, 3}, {0, 1});
  CHECK(r.graph.n == 5);
  CHECK(r.graph.m() == 9);
  CHECK(isomorphic(r.graph, banana().graph));
  CHECK_THROWS_AS(henneberg2(roof().graph, {0, 1, 2, 3}, {0, 1}), Error);
}

TEST_CASE("seven henneberg-II steps turn the tetrahedra ring into R7") {
  auto rt = ring_of_tetrahedra(7);
  Graph g = rt.graph;
  // One H2 step per shared K4 edge, on the two K4s that share it.
  for (int i = 0; i < 7; ++i) {
    VertexPair h = rt.marked_edges[i];  // {2i, 2i+1}
    Vertex prev_a = (h.u - 2 + 14) % 14, prev_b = (h.u - 1 + 14) % 14;
    Vertex next_a = (h.u + 2) % 14, next_b = (h.u + 3) % 14;
    // W spans the hinge edge plus one vertex of each neighboring K4.
    (void)prev_a;
    (void)prev_b;
    auto step = henneberg2(g, {h.u, h.v, next_a, next_b}, h);
    g = step.graph;
    CHECK(is_independent(g));
  }
  CHECK(g.n == 21);
  CHECK(g.m() == 56);
  CHECK(isomorphic(g, ring_of_roofs(7).graph));
}

TEST_CASE("vertex split") {
  // Splitting a K4 vertex on 0 edges moving two neighbors.
  auto r = vertex_split(complete_graph(4), 0, {1, 2}, 0);
  CHECK(r.graph.n == 5);
  CHECK(r.graph.m() == 7);  // 6 - 2 moved + 2 reattached + 1 new uv edge
  CHECK(is_independent(r.graph));
  CHECK(rigi_test::bareiss_generic_rank(r.graph, 3) == r.graph.m());

  CHECK_THROWS_AS(vertex_split(complete_graph(4), 0, {1, 2}, 3), Error);
  CHECK_THROWS_AS(vertex_split(roof().graph, 0, {1}, 0), Error);  // 0-1 hinge

  auto rr = ring_of_roofs(7);
  auto split = vertex_split(rr.graph, 0, {2, 14}, 0);
  CHECK(is_independent(split.graph));
}

TEST_CASE("k-sums") {
  auto one = k_sum(complete_graph(4), complete_graph(4), {{0, 0}});
  CHECK(one.graph.n == 7);
  CHECK(one.graph.m() == 12);
  CHECK(is_independent(one.graph));

  auto rr = ring_of_roofs(7);
  auto two = k_sum(rr.graph, rr.graph, {{0, 0}, {2, 2}});
  CHECK(two.graph.n == 40);
  CHECK(two.graph.m() == 111);  // 112 minus the shared edge
  CHECK(is_independent(two.graph));
  CHECK(find_nucleations(two.graph, two.graph.n).nuclei.empty());

  // A 3-sum identifying a K4-embedded triangle on both sides is flagged.
  auto three = k_sum(complete_graph(4), complete_graph(4),
                     {{0, 0}, {1, 1}, {2, 2}});
  CHECK(three.warning_nucleation);

  CHECK_THROWS_AS(k_sum(roof().graph, roof().graph, {{0, 1}, {1, 0}}), Error);
}

TEST_CASE("henneberg extender ring rebuilds rings of roofs from tetrahedra") {
  auto rt = ring_of_tetrahedra(7);
  RingDescriptor ring = *rt.ring;
  auto ext = henneberg_extender_ring(rt.graph, ring);
  CHECK(ext.graph.n == 21);
  CHECK(ext.graph.m() == 56);
  CHECK(isomorphic(ext.graph, ring_of_roofs(7).graph));
  CHECK(static_cast<int>(ext.marked_nonedges.size()) == 7);

  // The ring of K5s turns into a ring of modified octahedral blocks.
  auto rr = ring_of_roofs(7);
  Graph c7 = add_edges(rr.graph, rr.marked_nonedges);
  RingDescriptor c7ring = *rr.ring;
  c7ring.hinges = rr.marked_nonedges;
  // Hinge i must be shared by bodies i and i+1: marked hinge {2i,2i+1} is
  // shared by roofs i-1 and i, so rotate.
  for (int i = 0; i < 7; ++i)
    c7ring.hinges[i] = {(2 * i + 2) % 14, (2 * i + 3) % 14};
  auto oct = henneberg_extender_ring(c7, c7ring);
  CHECK(oct.graph.n == 28);
  CHECK(oct.graph.m() == 7 * 12);  // +1 vertex, +3 net edges per body
  for (const auto& body : oct.ring->bodies) {
    auto sub = induced(oct.graph, body).graph;
    CHECK(sub.n == 6);
    CHECK(sub.m() == 12);
    CHECK(isomorphic(sub, octahedron()));
  }

  // Malformed ring: a hinge claimed by three bodies.
  RingDescriptor bad = *rt.ring;
  bad.bodies[2].push_back(bad.hinges[0].u);
  bad.bodies[2].push_back(bad.hinges[0].v);
  CHECK_THROWS_AS(henneberg_extender_ring(rt.graph, bad), Error);
}

TEST_CASE("roof addition on a ring gives the ring two sizes up") {
  for (int k : {7, 8}) {
    auto rr = ring_of_roofs(k);
    VertexPair hinge{0, 1};  // shared by roofs k-1 and 0
    EdgeDistribution dist;
    // Natural assignment: roof 0's edges to side 1, roof k-1's to side 2.
    std::set<Vertex> roof0(rr.ring->bodies[0].begin(),
                           rr.ring->bodies[0].end());
    for (Vertex w : rr.graph.neighbors(0)) dist.at_a[w] = roof0.count(w) ? 1 : 2;
    for (Vertex w : rr.graph.neighbors(1)) dist.at_b[w] = roof0.count(w) ? 1 : 2;
    auto out = roof_addition(rr.graph, hinge, dist);
    CHECK(out.graph.n == 3 * k + 6);
    CHECK(out.graph.m() == 8 * k + 16);
    CHECK(isomorphic(out.graph, ring_of_roofs(k + 2).graph));
  }
}

TEST_CASE("roof addition errors") {
  auto rr = ring_of_roofs(7);
  EdgeDistribution dist;
  CHECK_THROWS_AS(roof_addition(rr.graph, {0, 2}, dist), Error);  // an edge
  CHECK_THROWS_AS(roof_addition(rr.graph, {0, 1}, dist), Error);  // no sides
}

TEST_CASE("roof addition preserves independence on random seeds") {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 25; ++trial) {
    Graph h = random_henneberg_graph(8 + trial % 9, 500 + trial);
    auto nonedges = h.nonedges();
    if (nonedges.empty()) continue;
    REQUIRE(is_independent(h));
    VertexPair ab = nonedges[rng() % nonedges.size()];
    auto out = roof_addition(h, ab, random_distribution(h, ab, 900 + trial));
    CHECK(is_independent(out.graph));
  }
}

TEST_CASE("graph combination") {
  auto b = banana();
  auto db = graph_combination(b.graph, {0, 1}, b.graph, {0, 1});
  CHECK(db.graph == double_banana().graph);

  auto dr = double_ring(7, 7);
  CHECK(!is_independent(dr.graph));
  CHECK(is_circuit(dr.graph));

  CHECK_THROWS_AS(
      graph_combination(b.graph, {0, 2}, b.graph, {0, 1}), Error);
}

TEST_CASE("the roof-addition output is not a one-step successor of H") {
  // Any single vertex split of H at a leaves the two copies adjacent; the
  // roof-addition split leaves them non-adjacent.
  auto rr = ring_of_roofs(7);
  Graph h = rr.graph;
  Vertex a = 0;
  auto nbrs = h.neighbors(a);
  for (unsigned mask = 0; mask < (1u << nbrs.size()); ++mask) {
    std::vector<Vertex> moved;
    for (std::size_t i = 0; i < nbrs.size(); ++i)
      if (mask >> i & 1) moved.push_back(nbrs[i]);
    auto split = vertex_split(h, a, moved, 0);
    CHECK(split.graph.has_edge(a, split.graph.n - 1));
  }
  // Henneberg steps never reassign an existing edge away from a.
  auto h1 = henneberg1(h, 0, 2, 4);
  CHECK(h1.graph.neighbors(0).size() >= h.neighbors(0).size());
}

TEST_CASE("check_starting_conditions on the ring of roofs") {
  auto rr = ring_of_roofs(7);
  Cover cover;
  for (const auto& body : rr.ring->bodies) cover.sets.push_back(body);
  VertexPair hinge{0, 1};
  std::set<Vertex> roof0(rr.ring->bodies[0].begin(), rr.ring->bodies[0].end());
  EdgeDistribution dist;
  for (Vertex w : rr.graph.neighbors(0)) dist.at_a[w] = roof0.count(w) ? 1 : 2;
  for (Vertex w : rr.graph.neighbors(1)) dist.at_b[w] = roof0.count(w) ? 1 : 2;

  auto cond = check_starting_conditions(rr.graph, cover, hinge, dist);
  CHECK(cond.cover_is_2thin);
  CHECK(cond.shared_part_independent);
  CHECK(cond.rank_formula_holds);
  CHECK(cond.distribution_ok);
  CHECK(cond.postcut_nucleation_free);
  CHECK(cond.all());

  // A distribution splitting a covering subgraph fails the manner clause.
  EdgeDistribution bad = dist;
  bool flipped = false;
  for (auto& [w, side] : bad.at_a)
    if (roof0.count(w) && !flipped) {
      side = 2;
      flipped = true;
    }
  auto bad_cond = check_starting_conditions(rr.graph, cover, hinge, bad);
  CHECK(!bad_cond.distribution_ok);

  // A cover that is not 2-thin flips that flag.
  Cover fat = cover;
  fat.sets[0].push_back(4);
  fat.sets[0].push_back(5);
  std::sort(fat.sets[0].begin(), fat.sets[0].end());
  auto fat_cond = check_starting_conditions(rr.graph, fat, hinge, dist);
  CHECK(!fat_cond.cover_is_2thin);
}

TEST_CASE("ring of octahedra matches the extender construction") {
  auto ring = ring_of_polyhedra(octahedron(), {0, 1}, {2, 3}, 7);
  CHECK(ring.graph.n == 28);
  CHECK(ring.graph.m() == 84);
  auto rr = ring_of_roofs(7);
  Graph c7 = add_edges(rr.graph, rr.marked_nonedges);
  RingDescriptor c7ring = *rr.ring;
  for (int i = 0; i < 7; ++i)
    c7ring.hinges[i] = {(2 * i + 2) % 14, (2 * i + 3) % 14};
  auto ext = henneberg_extender_ring(c7, c7ring);
  CHECK(isomorphic(ring.graph, ext.graph));
  CHECK_THROWS_AS(ring_of_polyhedra(octahedron(), {0, 1}, {2, 3}, 2), Error);
}

TEST_CASE("octahedron hinge search finds an independent ring") {
  auto hits = search_hinge_pairs(octahedron(), 7, true);
  REQUIRE(hits.size() == 1);
  CHECK(hits[0].dropped1 != hits[0].dropped2);  // one dropped edge, one non-edge
  auto ring = ring_of_polyhedra(octahedron(), hits[0].h1, hits[0].h2, 7);
  CHECK(ring.graph.n == 28);
  CHECK(ring.graph.m() == 77);  // one-dof bodies of 11 edges each
  CHECK(is_independent(ring.graph));
  auto implied = implied_nonedges(ring.graph);
  std::set<VertexPair> implied_set(implied.begin(), implied.end());
  for (const auto& h : ring.marked_nonedges) CHECK(implied_set.count(h) == 1);
  CHECK(find_nucleations(ring.graph, ring.graph.n).nuclei.empty());
}

TEST_CASE("icosahedron hinge search finds a passing choice") {
  auto hits = search_hinge_pairs(icosahedron(), 7, true);
  REQUIRE(hits.size() == 1);
  auto ring = ring_of_polyhedra(icosahedron(), hits[0].h1, hits[0].h2, 7);
  CHECK(ring.graph.n == 70);
  CHECK(is_independent(ring.graph));
  auto implied = implied_nonedges(ring.graph);
  std::set<VertexPair> implied_set(implied.begin(), implied.end());
  for (const auto& h : ring.marked_nonedges) CHECK(implied_set.count(h) == 1);
}

TEST_CASE("icosahedron base sanity") {
  Graph ico = icosahedron();
  CHECK(ico.n == 12);
  CHECK(ico.m() == 30);
  for (Vertex v = 0; v < 12; ++v) CHECK(ico.degree(v) == 5);
  CHECK(dof(ico) == 0);  // isostatic
}

TEST_CASE("braced double ring search is deterministic") {
  auto a = braced_double_ring(7, 7);
  auto b = braced_double_ring(7, 7);
  CHECK(a.graph == b.graph);
  CHECK(a.marked_edges == b.marked_edges);
}
