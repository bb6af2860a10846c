#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "rigi/constructions.hpp"
#include "rigi/graph.hpp"
#include "rigi/rigidity.hpp"

namespace rigi {

enum class RoofKind { Convex, Pointed, Crossing };

// A concrete rational realization of the roof graph (hinges {0,1}, {2,3},
// apex 4) with internal motion dimension exactly 1.
struct RoofRealization {
  RoofKind kind;
  Framework<Rat> framework;
  std::array<VertexPair, 2> hinges;
};

RoofRealization realize_roof(RoofKind kind);

// Signs of d/dt |p_a - p_b|^2 per internal-motion basis vector per pair;
// rows follow the basis, entries are -1, 0, +1.
std::vector<std::vector<int>> hinge_sign_pattern(
    const Framework<Rat>& f, const std::vector<VertexPair>& pairs);

struct FlexSignCertificate {
  int k = 0;
  bool applicable = false;  // rings with k <= 6 are rigid
  int ring_dof = 0;         // reported when not applicable
  bool parity_holds = false;        // sign couplings multiply to -1
  bool motions_fix_hinges = false;  // all motions have zero hinge derivative
  bool perturbation_stable = false;
  int perturbations = 0;
  std::uint64_t seed = 0;
  std::vector<int> sigma;  // per-roof coupling: -1 convex, +1 pointed
  std::vector<std::array<int, 2>> roof_signs;  // hinge-derivative signs
  Framework<Rat> framework;
  bool holds() const {
    return applicable && parity_holds && motions_fix_hinges &&
           perturbation_stable;
  }
};

// Assembles a ring framework of 1 strictly convex and k-1 strictly pointed
// roofs, verifies the parity contradiction and that every motion of the
// assembled framework fixes every hinge length, then re-verifies under
// perturbations that preserve strict convexity/pointedness.
FlexSignCertificate flex_sign_certificate(int k, int perturbations = 10,
                                          std::uint64_t seed = 0x464C4558u);

struct ProbeReport {
  int stress_dim = 0;
  bool claim_apex_projections = false;  // stress pairs equal at c and c'
  bool claim_roof_terms_cancel = false; // added-roof terms vanish at a and b
  bool claim_restriction_stress = false;  // restriction is a stress of H(p)
  bool restriction_forced_nonzero = false;
  int gadget_only_stress_dim = 0;
};

// Builds the coincident two-roof framework over the unit-square hinge layout
// with H at random rational generic positions and checks the stress-balance
// identities that force any self-stress to restrict to one of H itself.
ProbeReport coincident_probe(const Graph& h, VertexPair ab,
                             const EdgeDistribution& dist,
                             std::uint64_t seed = 0x50524F42u);

}  // namespace rigi
