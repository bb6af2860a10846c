#include "rigi/analysis.hpp"

namespace rigi {

AnalysisReport analyze(const Graph& g, int nucleation_limit,
                       const RankOptions& opt) {
  AnalysisReport r;
  r.n = g.n;
  r.m = g.m();
  r.options = opt;
  r.nucleation_limit = nucleation_limit < 0 ? g.n : nucleation_limit;
  r.rank = generic_rank(g, opt).rank;
  r.degrees_of_freedom = dof(g, opt);
  r.independent = r.rank == r.m;
  r.implied_nonedges = implied_nonedges(g, opt);
  r.nucleations = find_nucleations(g, r.nucleation_limit, opt);
  r.circuit = is_circuit(g, opt);
  r.sparsity = maxwell_check(g);
  r.module_rigidity = module_rigidity_approx(g);
  r.gap.module_rigid = r.module_rigidity.module_rigid;
  r.gap.truly_rigid = g.n >= 1 && r.degrees_of_freedom == 0;
  r.gap.gap = r.gap.module_rigid && !r.gap.truly_rigid;
  return r;
}

}  // namespace rigi
