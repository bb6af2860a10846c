#include "rigi/sparsity.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace rigi {

namespace {

// Directed pebble game state. Covered edges are oriented; each vertex holds
// 3 - outdeg free pebbles. Pebble searches walk arcs and reverse the path.
class PebbleGame {
 public:
  explicit PebbleGame(int n) : n_(n), out_(n), peb_(n, 3) {}

  int pebbles_on(const std::vector<Vertex>& vs) const {
    int total = 0;
    for (Vertex v : vs) total += peb_[v];
    return total;
  }

  struct Gather {
    bool ok = false;
    int pebbles = 0;               // free pebbles on the anchors at stall
    std::vector<Vertex> reach;     // reachable set at stall, sorted
  };

  // Raise the free-pebble count on `anchors` to `target` via pebble searches.
  Gather gather(const std::vector<Vertex>& anchors, int target) {
    while (pebbles_on(anchors) < target) {
      if (!search_and_pull(anchors)) {
        Gather g;
        g.ok = false;
        g.pebbles = pebbles_on(anchors);
        g.reach = last_reach_;
        return g;
      }
    }
    return Gather{true, pebbles_on(anchors), {}};
  }

  // Requires 6 pebbles on {u, v} before covering the edge.
  bool insert_edge(Vertex u, Vertex v, std::vector<Vertex>* witness) {
    auto g = gather({u, v}, 6);
    if (!g.ok) {
      if (witness) *witness = g.reach;
      return false;
    }
    --peb_[u];
    out_[u].push_back(v);
    return true;
  }

 private:
  // DFS from the anchors for a free pebble outside them; on success the path
  // is reversed and the pebble lands on the anchor the path started from.
  bool search_and_pull(const std::vector<Vertex>& anchors) {
    std::vector<int> parent(n_, -2);
    std::vector<Vertex> stack;
    for (Vertex a : anchors)
      if (parent[a] == -2) {
        parent[a] = -1;
        stack.push_back(a);
      }
    std::vector<bool> is_anchor(n_, false);
    for (Vertex a : anchors) is_anchor[a] = true;
    std::vector<Vertex> visited;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      visited.push_back(v);
      if (!is_anchor[v] && peb_[v] > 0) {
        // Walk back to the originating anchor, reversing arcs.
        --peb_[v];
        Vertex w = v;
        while (parent[w] != -1) {
          Vertex p = parent[w];
          auto it = std::find(out_[p].begin(), out_[p].end(), w);
          out_[p].erase(it);
          out_[w].push_back(p);
          w = p;
        }
        ++peb_[w];
        return true;
      }
      for (Vertex t : out_[v])
        if (parent[t] == -2) {
          parent[t] = v;
          stack.push_back(t);
        }
    }
    std::sort(visited.begin(), visited.end());
    last_reach_ = std::move(visited);
    return false;
  }

  int n_;
  std::vector<std::vector<Vertex>> out_;
  std::vector<int> peb_;
  std::vector<Vertex> last_reach_;
};

struct Scan {
  bool sparse = true;
  std::optional<std::vector<Vertex>> violation;
  std::set<std::vector<Vertex>> tight_sets;
};

// Insert all edges, then try to free 7 pebbles on every vertex triple.
// A stall below 6 exhibits a count violation; a stall at exactly 6 exhibits
// the minimal set S with |E(S)| = 3|S| - 6 containing the triple.
Scan scan_graph(const Graph& g, bool collect_tight) {
  Scan res;
  PebbleGame game(g.n);
  for (const auto& e : g.edges) {
    std::vector<Vertex> witness;
    if (!game.insert_edge(e.u, e.v, &witness)) {
      res.sparse = false;
      res.violation = witness;
      return res;
    }
  }
  for (Vertex u = 0; u < g.n; ++u)
    for (Vertex v = u + 1; v < g.n; ++v)
      for (Vertex w = v + 1; w < g.n; ++w) {
        auto got = game.gather({u, v, w}, 7);
        if (got.ok) continue;
        if (got.pebbles < 6) {
          res.sparse = false;
          res.violation = got.reach;
          return res;
        }
        if (collect_tight) res.tight_sets.insert(got.reach);
      }
  return res;
}

}  // namespace

SparsityVerdict maxwell_check(const Graph& g) {
  Scan scan = scan_graph(g, false);
  SparsityVerdict out;
  out.is_sparse = scan.sparse;
  out.violating_subgraph = scan.violation;
  out.is_tight = out.is_sparse && g.m() == 3 * g.n - 6;
  return out;
}

std::vector<std::vector<Vertex>> minimal_tight_sets(const Graph& g,
                                                    int min_size,
                                                    int max_size) {
  Scan scan = scan_graph(g, true);
  std::vector<std::vector<Vertex>> out;
  if (!scan.sparse) return out;
  for (const auto& s : scan.tight_sets) {
    int size = static_cast<int>(s.size());
    if (size >= min_size && size <= max_size) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

ModuleRigidityResult module_rigidity_approx(const Graph& g) {
  ModuleRigidityResult res;
  Graph h = g;
  std::set<std::vector<Vertex>> seen;
  for (;;) {
    if (!maxwell_check(h).is_sparse) {
      res.dependence_detected = true;
      break;
    }
    auto tight = minimal_tight_sets(h, 5, h.n - 1);
    // Smallest-first, lexicographic; identified nuclei must themselves be
    // module-rigid before they are completed.
    std::vector<std::vector<Vertex>> round;
    for (const auto& s : tight) {
      if (seen.count(s)) continue;
      auto sub = induced(h, s);
      if (module_rigidity_approx(sub.graph).module_rigid) round.push_back(s);
    }
    if (round.empty()) break;
    std::map<VertexPair, int> additions;
    for (const auto& s : round) {
      seen.insert(s);
      res.nuclei_found.push_back(s);
      auto sub = induced(h, s);
      for (const auto& ne : sub.graph.nonedges())
        ++additions[make_pair_sorted(sub.old_of_new[ne.u],
                                     sub.old_of_new[ne.v])];
    }
    for (const auto& [p, count] : additions) {
      if (count > 1) res.dependence_detected = true;  // doubly-implied pair
      h = add_edge(h, p.u, p.v);
    }
    if (res.dependence_detected) break;
  }
  res.completed_graph = h;
  res.module_rigid = !res.dependence_detected && maxwell_check(h).is_tight;
  std::sort(res.nuclei_found.begin(), res.nuclei_found.end(),
            [](const auto& a, const auto& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  return res;
}

GapReport rigidity_gap_report(const Graph& g, const RankOptions& opt) {
  GapReport out;
  out.module_rigid = module_rigidity_approx(g).module_rigid;
  out.truly_rigid = g.n >= 1 && dof(g, opt) == 0;
  out.gap = out.module_rigid && !out.truly_rigid;
  return out;
}

}  // namespace rigi
