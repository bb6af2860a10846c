#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rigi {

using Vertex = int;

enum class ErrorCode {
  SelfLoop,
  DuplicateEdge,
  OutOfRange,
  BadParameter,
  BadVertices,
  NotAClique,
  NotANonEdge,
  NotANeighbor,
  EdgeNotInW,
  NotARing,
  IncompleteDistribution,
  BraceSearchFailed,
  NoValidHinges,
  MissingCoordinates,
  AssemblyFailed,
  BodyNotRigid,
  NotTwoThin,
  SharedPartDependent,
  ParseError,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code(code) {}
  ErrorCode code;
};

// Unordered pair with u < v.
struct VertexPair {
  Vertex u = 0, v = 0;
  friend bool operator==(const VertexPair&, const VertexPair&) = default;
  friend auto operator<=>(const VertexPair&, const VertexPair&) = default;
};

inline VertexPair make_pair_sorted(Vertex a, Vertex b) {
  if (a == b) throw Error(ErrorCode::SelfLoop, "pair with equal endpoints");
  return a < b ? VertexPair{a, b} : VertexPair{b, a};
}

// Finite simple undirected graph; vertices 0..n-1; edge list sorted
// lexicographically so equality is syntactic.
struct Graph {
  int n = 0;
  std::vector<VertexPair> edges;
  std::vector<std::string> labels;  // empty, or one label per vertex

  int m() const { return static_cast<int>(edges.size()); }
  bool has_edge(Vertex a, Vertex b) const;
  int degree(Vertex v) const;
  std::vector<Vertex> neighbors(Vertex v) const;
  std::vector<VertexPair> nonedges() const;
  std::vector<std::vector<bool>> adjacency() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n == b.n && a.edges == b.edges;
  }
};

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges);
Graph add_edge(const Graph& g, Vertex a, Vertex b);
Graph remove_edge(const Graph& g, Vertex a, Vertex b);
Graph add_edges(const Graph& g, const std::vector<VertexPair>& pairs);

Graph complete_graph(int n);

struct InducedResult {
  Graph graph;
  std::vector<Vertex> old_of_new;  // new id -> old id
  std::vector<int> new_of_old;     // old id -> new id, -1 outside S
};
InducedResult induced(const Graph& g, const std::vector<Vertex>& s);

// Cover of a graph: pairwise incomparable vertex subsets, each of size >= 2,
// whose induced edge sets union to E.
struct Cover {
  std::vector<std::vector<Vertex>> sets;
};

struct SharedPair {
  VertexPair pair;
  int multiplicity = 0;  // d(a,b): number of cover sets containing both
  bool is_edge = false;
};

struct SharedPart {
  std::vector<SharedPair> pairs;
};

struct CoverCheck {
  bool is_cover = false;   // incomparable and induced edges union to E
  bool is_2thin = false;   // all pairwise intersections have size <= 2
  bool incomparable = false;
  bool covers_edges = false;
  SharedPart shared;       // size-2 intersections with multiplicities
};

CoverCheck validate_cover(const Graph& g, const Cover& c);

// Simple backtracking isomorphism for desk-scale graphs.
std::optional<std::vector<Vertex>> find_isomorphism(const Graph& a,
                                                    const Graph& b);
inline bool isomorphic(const Graph& a, const Graph& b) {
  return find_isomorphism(a, b).has_value();
}

}  // namespace rigi
