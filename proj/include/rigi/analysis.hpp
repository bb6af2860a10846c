#pragma once

#include "rigi/graph.hpp"
#include "rigi/rigidity.hpp"
#include "rigi/sparsity.hpp"

namespace rigi {

// Everything the analyzer reports about one graph.
struct AnalysisReport {
  int n = 0;
  int m = 0;
  int rank = 0;
  int degrees_of_freedom = 0;
  bool independent = false;
  std::vector<VertexPair> implied_nonedges;
  NucleationResult nucleations;
  int nucleation_limit = 0;
  bool circuit = false;
  SparsityVerdict sparsity;
  ModuleRigidityResult module_rigidity;
  GapReport gap;
  RankOptions options;
};

AnalysisReport analyze(const Graph& g, int nucleation_limit = -1,
                       const RankOptions& opt = {});

}  // namespace rigi
