#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "rigi/graph.hpp"
#include "rigi/matrix.hpp"

namespace rigi {

// Graph together with exact 3D coordinates per vertex.
template <class S>
struct Framework {
  Graph graph;
  std::vector<std::array<S, 3>> coords;
};

// |E| x 3n matrix; row for edge (i,j) carries p_i - p_j in i's columns and
// p_j - p_i in j's columns.
template <class S>
Mat<S> rigidity_matrix(const Framework<S>& f) {
  if (static_cast<int>(f.coords.size()) != f.graph.n)
    throw Error(ErrorCode::MissingCoordinates,
                "framework must place every vertex");
  Mat<S> m(f.graph.edges.size(), 3 * static_cast<std::size_t>(f.graph.n));
  for (std::size_t r = 0; r < f.graph.edges.size(); ++r) {
    const auto& e = f.graph.edges[r];
    for (int c = 0; c < 3; ++c) {
      S d = f.coords[e.u][c] - f.coords[e.v][c];
      m.at(r, 3 * e.u + c) = d;
      m.at(r, 3 * e.v + c) = -d;
    }
  }
  return m;
}

Framework<Fp> random_field_framework(const Graph& g, std::uint64_t seed);
Framework<Rat> random_rational_framework(const Graph& g, std::uint64_t seed);

enum class RankMode { RandomField, RationalOracle };

struct RankOptions {
  int trials = 3;
  std::uint64_t seed = 0x52494749u;  // overridable via CLI / RIGISCOPE_SEED
  RankMode mode = RankMode::RandomField;
};

struct GenericRankResult {
  int rank = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  RankMode mode = RankMode::RandomField;
};

// Max rank over `trials` random exact evaluations; never exceeds the true
// generic rank, and equals it except with Schwartz-Zippel failure
// probability. Deterministic for a fixed seed.
GenericRankResult generic_rank(const Graph& g, const RankOptions& opt = {});

// 3n - 6 - rank for n >= 3; totalized for n < 3 (trivial motion count 3 for
// a single vertex, 5 for two) so small-graph queries are defined.
int dof(const Graph& g, const RankOptions& opt = {});

bool is_independent(const Graph& g, const RankOptions& opt = {});

// Non-edges whose addition leaves the generic rank unchanged. Each verdict
// reuses one coordinate sample for G and G+{a,b} per trial.
std::vector<VertexPair> implied_nonedges(const Graph& g,
                                         const RankOptions& opt = {});

// G plus every implied non-edge; idempotent.
Graph closure(const Graph& g, const RankOptions& opt = {});

// Maximal vertex sets (size >= 2) inducing complete subgraphs in closure(G).
std::vector<std::vector<Vertex>> rigid_components(const Graph& g,
                                                  const RankOptions& opt = {});

struct NucleationResult {
  std::vector<std::vector<Vertex>> nuclei;  // sorted by size then lex
  bool complete = true;  // false when the candidate cap was hit
};

// All S with 5 <= |S| <= size_limit and induced(G,S) generically rigid.
// Candidates are cliques of closure(G): any rigid induced subgraph's vertex
// set is a clique there.
NucleationResult find_nucleations(const Graph& g, int size_limit,
                                  const RankOptions& opt = {});

// Dependent with every single-edge deletion independent. Decided through the
// corank and the support of the self-stress at max-rank samples.
bool is_circuit(const Graph& g, const RankOptions& opt = {});

template <class S>
SubspaceBasis<S> motion_space(const Framework<S>& f) {
  return right_nullspace(rigidity_matrix(f));
}

template <class S>
SubspaceBasis<S> stress_space(const Framework<S>& f) {
  return left_nullspace(rigidity_matrix(f));
}

// Basis of the infinitesimal rigid motions (translations and rotations) at
// the given positions; dimension 6 whenever the points affinely span 3-space.
template <class S>
std::vector<std::vector<S>> trivial_motions(
    const std::vector<std::array<S, 3>>& coords) {
  std::size_t n = coords.size();
  std::vector<std::vector<S>> out;
  for (int c = 0; c < 3; ++c) {
    std::vector<S> t(3 * n, S(0));
    for (std::size_t i = 0; i < n; ++i) t[3 * i + c] = S(1);
    out.push_back(std::move(t));
  }
  // Rotation fields v_i = w x p_i for w = e_x, e_y, e_z.
  for (int axis = 0; axis < 3; ++axis) {
    std::vector<S> t(3 * n, S(0));
    for (std::size_t i = 0; i < n; ++i) {
      const auto& p = coords[i];
      int a = (axis + 1) % 3, b = (axis + 2) % 3;
      t[3 * i + a] = -p[b];
      t[3 * i + b] = p[a];
    }
    out.push_back(std::move(t));
  }
  return out;
}

// Representatives of motion_space modulo trivial motions.
template <class S>
std::vector<std::vector<S>> internal_motions(const Framework<S>& f) {
  auto motions = motion_space(f);
  RowBasis<S> basis(3 * static_cast<std::size_t>(f.graph.n));
  for (auto& t : trivial_motions(f.coords)) basis.insert(std::move(t));
  std::vector<std::vector<S>> out;
  for (auto& v : motions.vectors) {
    std::vector<S> w = v;
    if (!basis.reduce(w)) {
      basis.insert(w);
      out.push_back(std::move(w));
    }
  }
  return out;
}

}  // namespace rigi
