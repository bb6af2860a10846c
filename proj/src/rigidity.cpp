#include "rigi/rigidity.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace rigi {

namespace {

std::uint64_t trial_seed(std::uint64_t seed, int trial) {
  return splitmix64(seed ^ (0xC001D00Dull + 0x9E3779B9ull * trial));
}

template <class S>
std::vector<S> edge_row(const Graph& g,
                        const std::vector<std::array<S, 3>>& coords, Vertex a,
                        Vertex b) {
  std::vector<S> row(3 * static_cast<std::size_t>(g.n), S(0));
  for (int c = 0; c < 3; ++c) {
    S d = coords[a][c] - coords[b][c];
    row[3 * a + c] = d;
    row[3 * b + c] = -d;
  }
  return row;
}

int trivial_motion_count(int n) {
  if (n <= 0) return 0;
  if (n == 1) return 3;
  if (n == 2) return 5;
  return 6;
}

// One exact evaluation: coordinates, row basis of the rigidity matrix, rank.
template <class S>
struct TrialData {
  std::vector<std::array<S, 3>> coords;
  RowBasis<S> basis;
  int rank = 0;
};

template <class S>
TrialData<S> run_trial(const Graph& g, const Framework<S>& f) {
  TrialData<S> t{f.coords, RowBasis<S>(3 * static_cast<std::size_t>(g.n)), 0};
  for (const auto& e : g.edges) t.basis.insert(edge_row(g, t.coords, e.u, e.v));
  t.rank = t.basis.rank();
  return t;
}

}  // namespace

Framework<Fp> random_field_framework(const Graph& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Framework<Fp> f;
  f.graph = g;
  f.coords.resize(g.n);
  for (auto& p : f.coords)
    for (int c = 0; c < 3; ++c) p[c] = Fp::random(rng);
  return f;
}

Framework<Rat> random_rational_framework(const Graph& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Framework<Rat> f;
  f.graph = g;
  f.coords.resize(g.n);
  for (auto& p : f.coords)
    for (int c = 0; c < 3; ++c)
      p[c] = Rat(static_cast<unsigned long>(1 + rng() % (1u << 20)));
  return f;
}

namespace {

// Runs all requested trials and hands each trial's basis to `visit`.
// Returns the max rank seen.
template <class S, class MakeFramework, class Visit>
int for_each_trial(const Graph& g, const RankOptions& opt,
                   MakeFramework make_framework, Visit visit) {
  int best = 0;
  for (int t = 0; t < opt.trials; ++t) {
    Framework<S> f = make_framework(g, trial_seed(opt.seed, t));
    TrialData<S> data = run_trial(g, f);
    best = std::max(best, data.rank);
    visit(data);
  }
  return best;
}

template <class S, class MakeFramework>
std::vector<VertexPair> implied_nonedges_impl(const Graph& g,
                                              const RankOptions& opt,
                                              MakeFramework make_framework) {
  auto nonedges = g.nonedges();
  int best = 0;
  std::vector<std::pair<int, std::vector<bool>>> trials;
  for (int t = 0; t < opt.trials; ++t) {
    Framework<S> f = make_framework(g, trial_seed(opt.seed, t));
    TrialData<S> data = run_trial(g, f);
    best = std::max(best, data.rank);
    std::vector<bool> in_space(nonedges.size(), false);
    for (std::size_t i = 0; i < nonedges.size(); ++i) {
      auto row = edge_row(g, data.coords, nonedges[i].u, nonedges[i].v);
      in_space[i] = data.basis.reduce(row);
    }
    trials.emplace_back(data.rank, std::move(in_space));
  }
  std::vector<VertexPair> out;
  for (std::size_t i = 0; i < nonedges.size(); ++i) {
    bool all = true;
    for (const auto& [rank, in_space] : trials) {
      if (rank != best) continue;  // sub-generic sample, verdict unreliable
      all = all && in_space[i];
    }
    if (all) out.push_back(nonedges[i]);
  }
  return out;
}

}  // namespace

GenericRankResult generic_rank(const Graph& g, const RankOptions& opt) {
  if (opt.trials < 1) throw Error(ErrorCode::BadParameter, "trials >= 1");
  GenericRankResult res;
  res.trials = opt.trials;
  res.seed = opt.seed;
  res.mode = opt.mode;
  auto noop_fp = [](const TrialData<Fp>&) {};
  auto noop_q = [](const TrialData<Rat>&) {};
  if (opt.mode == RankMode::RandomField)
    res.rank =
        for_each_trial<Fp>(g, opt, random_field_framework, noop_fp);
  else
    res.rank =
        for_each_trial<Rat>(g, opt, random_rational_framework, noop_q);
  return res;
}

int dof(const Graph& g, const RankOptions& opt) {
  int r = generic_rank(g, opt).rank;
  int d = 3 * g.n - trivial_motion_count(g.n) - r;
  return std::max(0, d);
}

bool is_independent(const Graph& g, const RankOptions& opt) {
  return generic_rank(g, opt).rank == g.m();
}

std::vector<VertexPair> implied_nonedges(const Graph& g,
                                         const RankOptions& opt) {
  if (opt.mode == RankMode::RandomField)
    return implied_nonedges_impl<Fp>(g, opt, random_field_framework);
  return implied_nonedges_impl<Rat>(g, opt, random_rational_framework);
}

Graph closure(const Graph& g, const RankOptions& opt) {
  return add_edges(g, implied_nonedges(g, opt));
}

namespace {

void bron_kerbosch(const std::vector<std::vector<bool>>& adj,
                   std::vector<Vertex>& r, std::vector<Vertex> p,
                   std::vector<Vertex> x,
                   std::vector<std::vector<Vertex>>& out) {
  if (p.empty() && x.empty()) {
    if (r.size() >= 2) out.push_back(r);
    return;
  }
  Vertex pivot = -1;
  std::size_t best = 0;
  for (const auto& cand : {p, x})
    for (Vertex v : cand) {
      std::size_t cnt = 0;
      for (Vertex w : p) cnt += adj[v][w];
      if (pivot < 0 || cnt > best) {
        pivot = v;
        best = cnt;
      }
    }
  std::vector<Vertex> ext;
  for (Vertex v : p)
    if (pivot < 0 || !adj[pivot][v]) ext.push_back(v);
  for (Vertex v : ext) {
    std::vector<Vertex> p2, x2;
    for (Vertex w : p)
      if (adj[v][w]) p2.push_back(w);
    for (Vertex w : x)
      if (adj[v][w]) x2.push_back(w);
    r.push_back(v);
    bron_kerbosch(adj, r, std::move(p2), std::move(x2), out);
    r.pop_back();
    p.erase(std::find(p.begin(), p.end(), v));
    x.push_back(v);
  }
}

std::vector<std::vector<Vertex>> maximal_cliques(const Graph& g) {
  auto adj = g.adjacency();
  std::vector<Vertex> r, p(g.n), x;
  for (Vertex v = 0; v < g.n; ++v) p[v] = v;
  std::vector<std::vector<Vertex>> out;
  bron_kerbosch(adj, r, std::move(p), x, out);
  for (auto& c : out) std::sort(c.begin(), c.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

}  // namespace

std::vector<std::vector<Vertex>> rigid_components(const Graph& g,
                                                  const RankOptions& opt) {
  return maximal_cliques(closure(g, opt));
}

namespace {

void enumerate_subsets(const std::vector<Vertex>& clique, int size,
                       std::size_t start, std::vector<Vertex>& cur,
                       std::set<std::vector<Vertex>>& out, std::size_t cap,
                       bool& exceeded) {
  if (exceeded) return;
  if (static_cast<int>(cur.size()) == size) {
    if (out.size() >= cap) {
      exceeded = true;
      return;
    }
    out.insert(cur);
    return;
  }
  int need = size - static_cast<int>(cur.size());
  for (std::size_t i = start;
       i + static_cast<std::size_t>(need) <= clique.size(); ++i) {
    cur.push_back(clique[i]);
    enumerate_subsets(clique, size, i + 1, cur, out, cap, exceeded);
    cur.pop_back();
  }
}

}  // namespace

NucleationResult find_nucleations(const Graph& g, int size_limit,
                                  const RankOptions& opt) {
  NucleationResult res;
  if (size_limit < 0) size_limit = g.n;
  Graph cl = closure(g, opt);
  auto cliques = maximal_cliques(cl);
  constexpr std::size_t kCandidateCap = 200000;
  std::set<std::vector<Vertex>> candidates;
  bool exceeded = false;
  for (const auto& clique : cliques) {
    int top = std::min<int>(static_cast<int>(clique.size()), size_limit);
    for (int size = 5; size <= top; ++size) {
      std::vector<Vertex> cur;
      enumerate_subsets(clique, size, 0, cur, candidates, kCandidateCap,
                        exceeded);
    }
  }
  res.complete = !exceeded;
  for (const auto& s : candidates) {
    auto sub = induced(g, s);
    int want = 3 * sub.graph.n - 6;
    if (generic_rank(sub.graph, opt).rank == want) res.nuclei.push_back(s);
  }
  std::sort(res.nuclei.begin(), res.nuclei.end(),
            [](const auto& a, const auto& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  return res;
}

namespace {

// A dependent graph is a circuit iff its corank is 1 and the self-stress has
// full support; support is read off max-rank samples only.
template <class S, class MakeFramework>
bool is_circuit_impl(const Graph& g, const RankOptions& opt,
                     MakeFramework make_framework) {
  int m = g.m();
  if (m == 0) return false;
  int best = 0;
  std::vector<std::pair<int, std::vector<bool>>> trials;
  for (int t = 0; t < opt.trials; ++t) {
    Framework<S> f = make_framework(g, trial_seed(opt.seed, t));
    Mat<S> rm = rigidity_matrix(f);
    auto stresses = left_nullspace(rm);
    int rank = m - stresses.dimension();
    best = std::max(best, rank);
    std::vector<bool> nonzero(m, false);
    if (stresses.dimension() == 1)
      for (int e = 0; e < m; ++e)
        nonzero[e] = !is_zero_scalar(stresses.vectors[0][e]);
    trials.emplace_back(rank, std::move(nonzero));
  }
  if (best != m - 1) return false;  // independent, or corank >= 2
  std::vector<bool> any(m, false);
  for (const auto& [rank, nonzero] : trials)
    if (rank == best)
      for (int e = 0; e < m; ++e)
        if (nonzero[e]) any[e] = true;
  return std::all_of(any.begin(), any.end(), [](bool b) { return b; });
}

}  // namespace

bool is_circuit(const Graph& g, const RankOptions& opt) {
  if (opt.mode == RankMode::RandomField)
    return is_circuit_impl<Fp>(g, opt, random_field_framework);
  return is_circuit_impl<Rat>(g, opt, random_rational_framework);
}

}  // namespace rigi
