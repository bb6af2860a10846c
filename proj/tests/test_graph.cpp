#include <doctest.h>

#include "rigi/constructions.hpp"
#include "rigi/graph.hpp"
#include "rigi/json_io.hpp"

using namespace rigi;

TEST_CASE("build_graph canonicalizes and validates") {
  Graph k4 = build_graph(4, {{3, 2}, {0, 1}, {0, 2}, {1, 3}, {0, 3}, {2, 1}});
  CHECK(k4.m() == 6);
  CHECK(k4.edges.front() == VertexPair{0, 1});
  CHECK(k4.edges.back() == VertexPair{2, 3});
  CHECK(k4 == complete_graph(4));

  CHECK_THROWS_AS(build_graph(3, {{0, 0}}), Error);
  CHECK_THROWS_AS(build_graph(3, {{0, 3}}), Error);
  CHECK_THROWS_AS(build_graph(3, {{0, 1}, {1, 0}}), Error);
}

TEST_CASE("roof is K5 minus two non-adjacent edges") {
  Graph r = roof().graph;
  CHECK(r.n == 5);
  CHECK(r.m() == 8);
  CHECK(!r.has_edge(0, 1));
  CHECK(!r.has_edge(2, 3));
}

TEST_CASE("induced subgraphs") {
  Graph r = roof().graph;
  auto whole = induced(r, {0, 1, 2, 3, 4});
  CHECK(whole.graph == r);

  Graph db = double_banana().graph;
  auto half = induced(db, {0, 1, 2, 3, 4});
  CHECK(half.graph.n == 5);
  CHECK(half.graph.m() == 9);  // K5 minus one edge
  CHECK(!half.graph.has_edge(half.new_of_old[0], half.new_of_old[1]));

  auto tri = induced(complete_graph(4), {1, 2, 3});
  CHECK(tri.graph.m() == 3);

  CHECK_THROWS_AS(induced(r, {0, 7}), Error);
}

TEST_CASE("validate_cover on the ring of K5s") {
  auto rr = ring_of_roofs(7);
  Graph c7 = add_edges(rr.graph, rr.marked_nonedges);
  Cover cover;
  REQUIRE(rr.ring.has_value());
  for (const auto& body : rr.ring->bodies) cover.sets.push_back(body);
  auto check = validate_cover(c7, cover);
  CHECK(check.is_cover);
  CHECK(check.is_2thin);
  CHECK(check.shared.pairs.size() == 7);
  for (const auto& sp : check.shared.pairs) CHECK(sp.multiplicity == 2);
}

TEST_CASE("validate_cover trivial and derived cases") {
  Graph k4 = complete_graph(4);
  Cover single;
  single.sets = {{0, 1, 2, 3}};
  auto check = validate_cover(k4, single);
  CHECK(check.is_cover);
  CHECK(check.is_2thin);
  CHECK(check.shared.pairs.empty());

  Graph db = double_banana().graph;
  Cover bananas;
  bananas.sets = {{0, 1, 2, 3, 4}, {0, 1, 5, 6, 7}};
  auto dc = validate_cover(db, bananas);
  CHECK(dc.is_cover);
  CHECK(dc.is_2thin);
  REQUIRE(dc.shared.pairs.size() == 1);
  CHECK(dc.shared.pairs[0].pair == VertexPair{0, 1});
  CHECK(dc.shared.pairs[0].multiplicity == 2);
  CHECK(!dc.shared.pairs[0].is_edge);

  // A set contained in another breaks incomparability.
  Cover bad;
  bad.sets = {{0, 1, 2, 3, 4}, {0, 1, 5, 6, 7}, {0, 1, 2}};
  CHECK(!validate_cover(db, bad).is_cover);

  // Order of the sets is irrelevant.
  Cover swapped;
  swapped.sets = {{0, 1, 5, 6, 7}, {0, 1, 2, 3, 4}};
  auto sc = validate_cover(db, swapped);
  CHECK(sc.is_cover == dc.is_cover);
  CHECK(sc.shared.pairs.size() == dc.shared.pairs.size());
}

TEST_CASE("graph json round trip is the identity") {
  auto rr = ring_of_roofs(8);
  GraphFile gf;
  gf.graph = rr.graph;
  gf.marked_nonedges = rr.marked_nonedges;
  Cover cover;
  for (const auto& body : rr.ring->bodies) cover.sets.push_back(body);
  gf.cover = cover;
  Json j = graph_file_to_json(gf);
  GraphFile back = graph_file_from_json(j);
  CHECK(back.graph == gf.graph);
  CHECK(back.marked_nonedges == gf.marked_nonedges);
  REQUIRE(back.cover.has_value());
  CHECK(back.cover->sets == cover.sets);
  CHECK(graph_file_to_json(back) == j);
}

TEST_CASE("isomorphism finds relabelings and rejects non-isomorphic pairs") {
  Graph a = ring_of_roofs(6).graph;
  // Relabel by an arbitrary permutation.
  std::vector<int> perm(a.n);
  for (int i = 0; i < a.n; ++i) perm[i] = (i * 7 + 3) % a.n;
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : a.edges) edges.push_back({perm[e.u], perm[e.v]});
  Graph b = build_graph(a.n, edges);
  auto iso = find_isomorphism(a, b);
  REQUIRE(iso.has_value());
  for (const auto& e : a.edges) CHECK(b.has_edge((*iso)[e.u], (*iso)[e.v]));

  CHECK(!isomorphic(roof().graph, banana().graph));
  CHECK(!isomorphic(ring_of_roofs(6).graph, ring_of_roofs(7).graph));
}
