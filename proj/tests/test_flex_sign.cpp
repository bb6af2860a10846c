#include <doctest.h>

#include <set>

#include "rigi/constructions.hpp"
#include "rigi/flex_sign.hpp"

using namespace rigi;

TEST_CASE("roof realizations carry one internal motion and their signs") {
  auto convex = realize_roof(RoofKind::Convex);
  auto pattern = hinge_sign_pattern(convex.framework,
                                    {convex.hinges[0], convex.hinges[1]});
  REQUIRE(pattern.size() == 1);
  CHECK(pattern[0][0] * pattern[0][1] == -1);  // opposite signs

  auto pointed = realize_roof(RoofKind::Pointed);
  auto pp = hinge_sign_pattern(pointed.framework,
                               {pointed.hinges[0], pointed.hinges[1]});
  REQUIRE(pp.size() == 1);
  CHECK(pp[0][0] * pp[0][1] == 1);  // equal signs

  auto crossing = realize_roof(RoofKind::Crossing);
  CHECK(internal_motions(crossing.framework).size() == 1);
}

TEST_CASE("sign patterns are scale invariant") {
  auto convex = realize_roof(RoofKind::Convex);
  Framework<Rat> scaled = convex.framework;
  for (auto& p : scaled.coords)
    for (int c = 0; c < 3; ++c) p[c] *= Rat(7, 3);
  auto a = hinge_sign_pattern(convex.framework, {{0, 1}, {2, 3}});
  auto b = hinge_sign_pattern(scaled, {{0, 1}, {2, 3}});
  REQUIRE(a.size() == 1);
  REQUIRE(b.size() == 1);
  CHECK(a[0][0] * a[0][1] == b[0][0] * b[0][1]);
}

TEST_CASE("rigid frameworks have an empty sign matrix") {
  auto k4 = random_rational_framework(complete_graph(4), 77);
  CHECK(hinge_sign_pattern(k4, {{0, 1}}).empty());
}

TEST_CASE("flex-sign certificate holds for k = 7") {
  auto cert = flex_sign_certificate(7, 3);
  CHECK(cert.applicable);
  CHECK(cert.parity_holds);
  CHECK(cert.motions_fix_hinges);
  CHECK(cert.perturbation_stable);
  CHECK(cert.holds());
  REQUIRE(cert.sigma.size() == 7);
  CHECK(cert.sigma[0] == -1);
  for (int i = 1; i < 7; ++i) CHECK(cert.sigma[i] == 1);
}

TEST_CASE("flex-sign certificate not applicable below seven roofs") {
  auto cert = flex_sign_certificate(6, 2);
  CHECK(!cert.applicable);
  CHECK(cert.ring_dof == 0);
}

TEST_CASE("certificate verdicts agree with implied non-edge membership") {
  for (int k : {7, 8}) {
    auto cert = flex_sign_certificate(k, 1);
    auto rr = ring_of_roofs(k);
    auto implied = implied_nonedges(rr.graph);
    std::set<VertexPair> implied_set(implied.begin(), implied.end());
    bool all_hinges_implied = true;
    for (const auto& h : rr.marked_nonedges)
      all_hinges_implied = all_hinges_implied && implied_set.count(h);
    CHECK(cert.motions_fix_hinges == all_hinges_implied);
  }
}

TEST_CASE("coincident probe on a path through a and b") {
  // H: path 2-0-3-1 with {0,1} the probed non-edge.
  Graph h = build_graph(4, {{0, 2}, {0, 3}, {1, 3}});
  EdgeDistribution dist;
  dist.at_a = {{2, 1}, {3, 2}};
  dist.at_b = {{3, 1}};
  auto rep = coincident_probe(h, {0, 1}, dist);
  CHECK(rep.stress_dim == 0);
  CHECK(rep.claim_apex_projections);
  CHECK(rep.claim_roof_terms_cancel);
  CHECK(rep.claim_restriction_stress);
  CHECK(rep.restriction_forced_nonzero);
}

TEST_CASE("coincident probe on the cut ring of roofs") {
  auto rr = ring_of_roofs(7);
  std::set<Vertex> roof0(rr.ring->bodies[0].begin(), rr.ring->bodies[0].end());
  EdgeDistribution dist;
  for (Vertex w : rr.graph.neighbors(0)) dist.at_a[w] = roof0.count(w) ? 1 : 2;
  for (Vertex w : rr.graph.neighbors(1)) dist.at_b[w] = roof0.count(w) ? 1 : 2;
  auto rep = coincident_probe(rr.graph, {0, 1}, dist);
  CHECK(rep.stress_dim == 0);  // no self-stress even at the special position
  CHECK(rep.restriction_forced_nonzero);
}

TEST_CASE("gadget-only probe identities") {
  // H with no edges at a or b beyond the gadget: two isolated extra points
  // joined to each other so the graph stays connected away from a, b.
  Graph h = build_graph(4, {{2, 3}});
  EdgeDistribution dist;  // a and b have no incident edges
  auto rep = coincident_probe(h, {0, 1}, dist);
  CHECK(rep.gadget_only_stress_dim == 0);
  CHECK(rep.claim_apex_projections);
  CHECK(rep.claim_roof_terms_cancel);
  CHECK(rep.restriction_forced_nonzero);
}
