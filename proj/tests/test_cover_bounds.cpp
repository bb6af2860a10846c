#include <doctest.h>

#include "rigi/constructions.hpp"
#include "rigi/cover_bounds.hpp"

using namespace rigi;

namespace {
Cover ring_cover(const ConstructionResult& rr) {
  Cover c;
  for (const auto& body : rr.ring->bodies) c.sets.push_back(body);
  return c;
}
}  // namespace

TEST_CASE("two-thin cover bound on rings and bananas") {
  auto r7 = ring_of_roofs(7);
  CHECK(jj_upper_bound(r7.graph, ring_cover(r7)) == 56);  // 9*7 - 7

  Cover single;
  single.sets = {{0, 1, 2, 3}};
  CHECK(jj_upper_bound(complete_graph(4), single) == 6);

  Cover bananas;
  bananas.sets = {{0, 1, 2, 3, 4}, {0, 1, 5, 6, 7}};
  CHECK(jj_upper_bound(double_banana().graph, bananas) == 17);  // 9 + 9 - 1
}

TEST_CASE("bound errors") {
  auto r7 = ring_of_roofs(7);
  Cover fat = ring_cover(r7);
  fat.sets[0].push_back(4);
  fat.sets[0].push_back(5);
  std::sort(fat.sets[0].begin(), fat.sets[0].end());
  CHECK_THROWS_AS(jj_upper_bound(r7.graph, fat), Error);
}

TEST_CASE("sandwich certificates on rings") {
  for (int k : {6, 7}) {
    auto rk = ring_of_roofs(k);
    auto cert = certify_implied_by_sandwich(rk.graph, ring_cover(rk));
    CHECK(cert.valid);
    CHECK(cert.bound == 8 * k);
    CHECK(cert.rank == 8 * k);
    CHECK(cert.implied_pairs == rk.marked_nonedges);
    // Cross-check against the sampling route.
    auto sampled = implied_nonedges(rk.graph);
    for (const auto& p : cert.implied_pairs)
      CHECK(std::find(sampled.begin(), sampled.end(), p) != sampled.end());
  }

  Cover single;
  single.sets = {{0, 1, 2, 3}};
  auto cert = certify_implied_by_sandwich(complete_graph(4), single);
  CHECK(cert.valid);
  CHECK(cert.implied_pairs.empty());  // vacuous: no shared non-edges
}

TEST_CASE("the bound dominates the rank of G plus its shared part") {
  auto r7 = ring_of_roofs(7);
  Graph gstar = add_edges(r7.graph, r7.marked_nonedges);
  CHECK(jj_upper_bound(r7.graph, ring_cover(r7)) >=
        generic_rank(gstar).rank);

  Cover bananas;
  bananas.sets = {{0, 1, 2, 3, 4}, {0, 1, 5, 6, 7}};
  Graph dbstar = add_edge(double_banana().graph, 0, 1);
  CHECK(jj_upper_bound(double_banana().graph, bananas) >=
        generic_rank(dbstar).rank);
}

TEST_CASE("body-hinge lower bound") {
  auto r7 = ring_of_roofs(7);
  CHECK(body_hinge_lower_bound(r7.graph, *r7.ring) == 1);
  auto r6 = ring_of_roofs(6);
  CHECK(body_hinge_lower_bound(r6.graph, *r6.ring) == 0);
  for (int k : {7, 8, 9, 10}) {
    auto rk = ring_of_roofs(k);
    int bound = body_hinge_lower_bound(rk.graph, *rk.ring);
    int actual = dof(rk.graph);
    CHECK(bound == k - 6);
    CHECK(bound <= actual);
    CHECK(bound == actual);  // equality on these instances
  }

  // A ring whose bodies stay flexible even when completed is rejected.
  auto rt = ring_of_tetrahedra(6);
  RingDescriptor broken = *rt.ring;
  for (auto& body : broken.bodies) body.push_back((body[0] + 7) % 12);
  CHECK_THROWS_AS(body_hinge_lower_bound(rt.graph, broken), Error);
}
