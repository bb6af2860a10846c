#include "rigi/graph.hpp"

#include <algorithm>
#include <set>

namespace rigi {

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a == b) return false;
  VertexPair p = make_pair_sorted(a, b);
  return std::binary_search(edges.begin(), edges.end(), p);
}

int Graph::degree(Vertex v) const {
  int d = 0;
  for (const auto& e : edges) d += (e.u == v || e.v == v);
  return d;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  for (const auto& e : edges) {
    if (e.u == v) out.push_back(e.v);
    if (e.v == v) out.push_back(e.u);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexPair> Graph::nonedges() const {
  std::vector<VertexPair> out;
  auto it = edges.begin();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      VertexPair p{u, v};
      while (it != edges.end() && *it < p) ++it;
      if (it == edges.end() || !(*it == p)) out.push_back(p);
    }
  return out;
}

std::vector<std::vector<bool>> Graph::adjacency() const {
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const auto& e : edges) adj[e.u][e.v] = adj[e.v][e.u] = true;
  return adj;
}

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 0) throw Error(ErrorCode::BadParameter, "negative vertex count");
  Graph g;
  g.n = n;
  g.edges.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    if (a == b) throw Error(ErrorCode::SelfLoop, "self-loop rejected");
    if (a < 0 || b < 0 || a >= n || b >= n)
      throw Error(ErrorCode::OutOfRange, "edge endpoint out of range");
    g.edges.push_back(make_pair_sorted(a, b));
  }
  std::sort(g.edges.begin(), g.edges.end());
  if (std::adjacent_find(g.edges.begin(), g.edges.end()) != g.edges.end())
    throw Error(ErrorCode::DuplicateEdge, "duplicate edge rejected");
  return g;
}

Graph add_edge(const Graph& g, Vertex a, Vertex b) {
  if (a < 0 || b < 0 || a >= g.n || b >= g.n)
    throw Error(ErrorCode::OutOfRange, "endpoint out of range");
  if (g.has_edge(a, b)) throw Error(ErrorCode::DuplicateEdge, "edge exists");
  Graph out = g;
  out.edges.push_back(make_pair_sorted(a, b));
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

Graph remove_edge(const Graph& g, Vertex a, Vertex b) {
  VertexPair p = make_pair_sorted(a, b);
  Graph out = g;
  auto it = std::find(out.edges.begin(), out.edges.end(), p);
  if (it == out.edges.end())
    throw Error(ErrorCode::BadParameter, "edge not present");
  out.edges.erase(it);
  return out;
}

Graph add_edges(const Graph& g, const std::vector<VertexPair>& pairs) {
  Graph out = g;
  for (const auto& p : pairs)
    if (!out.has_edge(p.u, p.v)) out = add_edge(out, p.u, p.v);
  return out;
}

Graph complete_graph(int n) {
  Graph g;
  g.n = n;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.edges.push_back({u, v});
  return g;
}

InducedResult induced(const Graph& g, const std::vector<Vertex>& s) {
  InducedResult res;
  res.new_of_old.assign(g.n, -1);
  std::vector<Vertex> sorted = s;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (Vertex v : sorted) {
    if (v < 0 || v >= g.n)
      throw Error(ErrorCode::OutOfRange, "induced set vertex out of range");
    res.new_of_old[v] = static_cast<int>(res.old_of_new.size());
    res.old_of_new.push_back(v);
  }
  res.graph.n = static_cast<int>(res.old_of_new.size());
  for (const auto& e : g.edges) {
    int a = res.new_of_old[e.u], b = res.new_of_old[e.v];
    if (a >= 0 && b >= 0) res.graph.edges.push_back(make_pair_sorted(a, b));
  }
  std::sort(res.graph.edges.begin(), res.graph.edges.end());
  return res;
}

CoverCheck validate_cover(const Graph& g, const Cover& c) {
  CoverCheck out;
  std::vector<std::set<Vertex>> sets;
  for (const auto& s : c.sets) sets.emplace_back(s.begin(), s.end());
  for (const auto& s : sets)
    for (Vertex v : s)
      if (v < 0 || v >= g.n)
        throw Error(ErrorCode::OutOfRange, "cover vertex out of range");

  bool sizes_ok = true;
  for (const auto& s : sets) sizes_ok = sizes_ok && s.size() >= 2;

  out.incomparable = true;
  for (std::size_t i = 0; i < sets.size() && out.incomparable; ++i)
    for (std::size_t j = 0; j < sets.size(); ++j) {
      if (i == j) continue;
      if (std::includes(sets[j].begin(), sets[j].end(), sets[i].begin(),
                        sets[i].end())) {
        out.incomparable = false;
        break;
      }
    }

  std::set<VertexPair> covered;
  for (const auto& s : c.sets) {
    auto ind = induced(g, s);
    for (const auto& e : ind.graph.edges)
      covered.insert(make_pair_sorted(ind.old_of_new[e.u], ind.old_of_new[e.v]));
  }
  out.covers_edges =
      covered.size() == g.edges.size() &&
      std::equal(covered.begin(), covered.end(), g.edges.begin());
  out.is_cover = out.covers_edges && out.incomparable && sizes_ok;

  out.is_2thin = true;
  std::set<VertexPair> shared_pairs;
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      std::vector<Vertex> inter;
      std::set_intersection(sets[i].begin(), sets[i].end(), sets[j].begin(),
                            sets[j].end(), std::back_inserter(inter));
      if (inter.size() > 2) out.is_2thin = false;
      if (inter.size() == 2)
        shared_pairs.insert(make_pair_sorted(inter[0], inter[1]));
    }
  for (const auto& p : shared_pairs) {
    SharedPair sp;
    sp.pair = p;
    sp.is_edge = g.has_edge(p.u, p.v);
    for (const auto& s : sets)
      if (s.count(p.u) && s.count(p.v)) ++sp.multiplicity;
    out.shared.pairs.push_back(sp);
  }
  return out;
}

namespace {

// Backtrack over vertices in degree-descending order, mapping a -> b.
bool extend_iso(const Graph& a, const Graph& b,
                const std::vector<std::vector<bool>>& adj_a,
                const std::vector<std::vector<bool>>& adj_b,
                const std::vector<Vertex>& order, std::size_t k,
                std::vector<int>& map_ab, std::vector<bool>& used_b) {
  if (k == order.size()) return true;
  Vertex va = order[k];
  for (Vertex vb = 0; vb < b.n; ++vb) {
    if (used_b[vb]) continue;
    if (a.degree(va) != b.degree(vb)) continue;
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i) {
      Vertex wa = order[i];
      ok = adj_a[va][wa] == adj_b[vb][map_ab[wa]];
    }
    if (!ok) continue;
    map_ab[va] = vb;
    used_b[vb] = true;
    if (extend_iso(a, b, adj_a, adj_b, order, k + 1, map_ab, used_b))
      return true;
    used_b[vb] = false;
    map_ab[va] = -1;
  }
  return false;
}

}  // namespace

std::optional<std::vector<Vertex>> find_isomorphism(const Graph& a,
                                                    const Graph& b) {
  if (a.n != b.n || a.edges.size() != b.edges.size()) return std::nullopt;
  std::vector<int> deg_a(a.n), deg_b(b.n);
  for (Vertex v = 0; v < a.n; ++v) deg_a[v] = a.degree(v);
  for (Vertex v = 0; v < b.n; ++v) deg_b[v] = b.degree(v);
  {
    auto sa = deg_a, sb = deg_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  std::vector<Vertex> order(a.n);
  for (Vertex v = 0; v < a.n; ++v) order[v] = v;
  std::sort(order.begin(), order.end(),
            [&](Vertex x, Vertex y) { return deg_a[x] > deg_a[y]; });
  std::vector<int> map_ab(a.n, -1);
  std::vector<bool> used(b.n, false);
  auto adj_a = a.adjacency(), adj_b = b.adjacency();
  if (extend_iso(a, b, adj_a, adj_b, order, 0, map_ab, used))
    return std::vector<Vertex>(map_ab.begin(), map_ab.end());
  return std::nullopt;
}

}  // namespace rigi
