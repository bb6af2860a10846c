#pragma once

#include <vector>

#include "rigi/constructions.hpp"
#include "rigi/graph.hpp"
#include "rigi/rigidity.hpp"

namespace rigi {

struct SandwichCertificate {
  long long bound = 0;  // right-hand side of the cover inequality
  int rank = 0;
  int edges = 0;
  bool valid = false;  // rank == |E| == bound
  std::vector<VertexPair> implied_pairs;  // shared non-edges certified implied
};

// Sum of covering-subgraph ranks in G* = G ∪ S(X) minus the shared-pair
// multiplicities. Requires a 2-thin cover with independent shared part.
long long jj_upper_bound(const Graph& g, const Cover& c,
                         const RankOptions& opt = {});

// When rank(G) = |E| = jj_upper_bound, every shared non-edge is implied.
SandwichCertificate certify_implied_by_sandwich(const Graph& g, const Cover& c,
                                                const RankOptions& opt = {});

// Counting lower bound on internal motions of a ring of rigid bodies:
// max(0, k - 6). Each body completed by its hinge pairs must be rigid.
int body_hinge_lower_bound(const Graph& g, const RingDescriptor& ring,
                           const RankOptions& opt = {});

}  // namespace rigi
