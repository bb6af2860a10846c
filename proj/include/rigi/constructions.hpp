#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rigi/graph.hpp"
#include "rigi/rigidity.hpp"

namespace rigi {

// Ring metadata emitted by the ring generators: bodies[i] is a vertex set,
// hinges[i] is the pair shared by bodies[i] and bodies[(i+1) % k].
struct RingDescriptor {
  std::vector<std::vector<Vertex>> bodies;
  std::vector<VertexPair> hinges;
};

struct ConstructionResult {
  Graph graph;
  std::vector<Vertex> vertex_map;   // primary input old id -> new id
  std::vector<Vertex> vertex_map2;  // secondary input old id -> new id
  std::vector<VertexPair> marked_nonedges;  // designated hinge/implied pairs
  std::vector<VertexPair> marked_edges;     // shared edges (tetrahedra rings)
  std::optional<RingDescriptor> ring;
  std::string scheme;
  std::vector<std::pair<std::string, std::string>> params;
  bool warning_nucleation = false;  // 3-sum with a K4-embedded triangle
};

// K5 minus two non-adjacent edges; hinge pairs {0,1} and {2,3}, apex 4.
ConstructionResult roof();
// K5 minus one edge; marked pair {0,1}.
ConstructionResult banana();

// k roofs cyclically sharing hinge non-edges: 3k vertices, 8k edges.
ConstructionResult ring_of_roofs(int k);
// k tetrahedra, consecutive ones sharing an edge: 2k vertices, 5k edges.
ConstructionResult ring_of_tetrahedra(int k);

ConstructionResult double_banana();
// Two rings joined by identifying one hinge pair from each.
ConstructionResult double_ring(int k1, int k2);
// double_ring plus two bracing edges between apexes of distinct rings,
// found by deterministic search so the result stays (3,6)-tight.
ConstructionResult braced_double_ring(int k1, int k2);

ConstructionResult henneberg1(const Graph& g, Vertex w1, Vertex w2, Vertex w3);
ConstructionResult henneberg2(const Graph& g, const std::array<Vertex, 4>& w,
                              VertexPair removed);
// New vertex v adjacent to moved ∪ {u} ∪ the first `extra` remaining
// neighbors of u; the moved edges switch from u to v.
ConstructionResult vertex_split(const Graph& g, Vertex u,
                                const std::vector<Vertex>& moved, int extra);
ConstructionResult k_sum(const Graph& g1, const Graph& g2,
                         const std::vector<std::pair<Vertex, Vertex>>& matching);

// Per body: one new vertex joined to both hinge edges' endpoints, then all
// hinge edges removed and marked as non-edges.
ConstructionResult henneberg_extender_ring(const Graph& g,
                                           const RingDescriptor& ring);

// Side assignment (1 or 2) for every edge of H at a and at b.
struct EdgeDistribution {
  std::map<Vertex, int> at_a;  // neighbor of a -> side
  std::map<Vertex, int> at_b;  // neighbor of b -> side
};

struct RoofAdditionIds {
  Vertex a1, a2, b1, b2, u, v, c, c2;
};

// Graph cutting along the non-edge {a,b} followed by pasting two roofs that
// share a fresh hinge non-edge {u,v}.
ConstructionResult roof_addition(const Graph& h, VertexPair ab,
                                 const EdgeDistribution& dist,
                                 RoofAdditionIds* ids = nullptr);

// Only the cutting step: split a and b, redistribute their edges.
ConstructionResult graph_cut(const Graph& h, VertexPair ab,
                             const EdgeDistribution& dist);

ConstructionResult graph_combination(const Graph& g1, VertexPair ne1,
                                     const Graph& g2, VertexPair ne2);

struct StartingConditions {
  bool cover_is_2thin = false;
  bool shared_part_independent = false;
  bool rank_formula_holds = false;
  bool distribution_ok = false;
  bool postcut_nucleation_free = false;
  bool all() const {
    return cover_is_2thin && shared_part_independent && rank_formula_holds &&
           distribution_ok && postcut_nucleation_free;
  }
};

StartingConditions check_starting_conditions(const Graph& h, const Cover& c,
                                             VertexPair ab,
                                             const EdgeDistribution& dist,
                                             const RankOptions& opt = {});

// Transports a cover of H through roof_addition: covering sets containing a
// or b follow their side, the two pasted roofs join as fresh sets.
Cover transport_cover(const Cover& c, const Graph& h, VertexPair ab,
                      const EdgeDistribution& dist, const RoofAdditionIds& ids);

// Chains k copies of a body on two designated hinge pairs. Hinge pairs that
// are edges of `base` are dropped first and recorded.
ConstructionResult ring_of_polyhedra(const Graph& base, VertexPair h1,
                                     VertexPair h2, int k);

struct HingeSearchHit {
  VertexPair h1, h2;
  bool dropped1 = false, dropped2 = false;  // hinge was an edge of the base
};

// Enumerates (dropped-edge, non-edge) hinge choices up to base automorphism
// and keeps those whose k-ring is independent, nucleation-free, and has all
// hinges implied.
std::vector<HingeSearchHit> search_hinge_pairs(const Graph& base, int k = 7,
                                               bool stop_after_first = false,
                                               std::size_t cap = 10000,
                                               const RankOptions& opt = {});

Graph octahedron();           // K6 minus a perfect matching
Graph modified_octahedron();  // same adjacency, the Henneberg-extender block
Graph icosahedron();

}  // namespace rigi
