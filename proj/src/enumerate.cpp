#include "ricci/enumerate.hpp"

#include <algorithm>
#include <set>
#include <thread>

namespace ricci {

Graph GeneratedGraph::to_graph(WeightScheme scheme) const { return Graph::from_edges(n, edges, scheme); }

namespace {

using Adjacency = std::vector<std::vector<int>>;

Adjacency adjacency_of(int n, const std::vector<Edge>& edges) {
  Adjacency adj(static_cast<std::size_t>(n));
  for (const Edge& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  return adj;
}

// Tarjan low-link; marks articulation points of a connected graph.
void articulation_dfs(const Adjacency& adj, int v, int parent, int& timer, std::vector<int>& tin,
                      std::vector<int>& low, std::vector<bool>& cut) {
  tin[v] = low[v] = timer++;
  int children = 0;
  for (int w : adj[v]) {
    if (w == parent) continue;
    if (tin[w] >= 0) {
      low[v] = std::min(low[v], tin[w]);
    } else {
      articulation_dfs(adj, w, v, timer, tin, low, cut);
      low[v] = std::min(low[v], low[w]);
      if (low[w] >= tin[v] && parent != -1) cut[v] = true;
      ++children;
    }
  }
  if (parent == -1 && children > 1) cut[v] = true;
}

std::vector<bool> cut_vertices(const Adjacency& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> tin(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<bool> cut(static_cast<std::size_t>(n), false);
  int timer = 0;
  articulation_dfs(adj, 0, -1, timer, tin, low, cut);
  return cut;
}

// Cheap isomorphism invariant of a vertex: degree, then sorted neighbour degrees.
long vertex_invariant(const Adjacency& adj, int v) {
  std::vector<int> nd;
  for (int w : adj[v]) nd.push_back(static_cast<int>(adj[w].size()));
  std::sort(nd.begin(), nd.end(), std::greater<>());
  long key = static_cast<long>(adj[v].size());
  for (int d : nd) key = key * 16 + d;
  for (std::size_t i = nd.size(); i < 8; ++i) key *= 16;
  return key;
}

std::vector<Edge> delete_vertex(const std::vector<Edge>& edges, int x) {
  std::vector<Edge> out;
  for (const Edge& e : edges) {
    if (e.u == x || e.v == x) continue;
    out.push_back(Edge{e.u > x ? e.u - 1 : e.u, e.v > x ? e.v - 1 : e.v});
  }
  return out;
}

void subsets_up_to(const std::vector<int>& pool, std::size_t k, std::size_t start, std::vector<int>& cur,
                   std::vector<std::vector<int>>& out) {
  if (!cur.empty()) out.push_back(cur);
  if (cur.size() == k) return;
  for (std::size_t i = start; i < pool.size(); ++i) {
    cur.push_back(pool[i]);
    subsets_up_to(pool, k, i + 1, cur, out);
    cur.pop_back();
  }
}

std::vector<GeneratedGraph> children_of(const GeneratedGraph& parent, int max_degree) {
  const int n = parent.n + 1;
  const int x = parent.n;  // the new vertex
  const Adjacency parent_adj = adjacency_of(parent.n, parent.edges);
  std::vector<int> pool;
  for (int v = 0; v < parent.n; ++v) {
    if (static_cast<int>(parent_adj[v].size()) < max_degree) pool.push_back(v);
  }
  std::vector<std::vector<int>> subsets;
  std::vector<int> cur;
  subsets_up_to(pool, static_cast<std::size_t>(max_degree), 0, cur, subsets);

  std::set<CanonicalForm> seen;
  std::vector<GeneratedGraph> out;
  for (const auto& subset : subsets) {
    std::vector<Edge> edges = parent.edges;
    for (int v : subset) edges.push_back(Edge{v, x});
    const Adjacency adj = adjacency_of(n, edges);
    const std::vector<bool> cut = cut_vertices(adj);

    long best_invariant = -1;
    for (int v = 0; v < n; ++v) {
      if (!cut[v]) best_invariant = std::max(best_invariant, vertex_invariant(adj, v));
    }
    if (vertex_invariant(adj, x) != best_invariant) continue;

    const CanonicalLabeling lab = canonical_labeling(n, edges);
    int deletion = -1;
    for (int v = 0; v < n; ++v) {
      if (cut[v] || vertex_invariant(adj, v) != best_invariant) continue;
      if (deletion < 0 || lab.position[v] > lab.position[deletion]) deletion = v;
    }
    if (deletion != x && canonical_form(parent.n, delete_vertex(edges, deletion)) != parent.form) continue;
    if (!seen.insert(lab.form).second) continue;
    out.push_back(GeneratedGraph{n, relabel(edges, lab.position), lab.form});
  }
  return out;
}

std::vector<GeneratedGraph> next_level(const std::vector<GeneratedGraph>& parents, int max_degree, int jobs) {
  jobs = std::max(1, jobs);
  std::vector<std::vector<GeneratedGraph>> partial(static_cast<std::size_t>(jobs));
  auto work = [&](int worker) {
    for (std::size_t i = static_cast<std::size_t>(worker); i < parents.size(); i += static_cast<std::size_t>(jobs)) {
      auto kids = children_of(parents[i], max_degree);
      for (auto& k : kids) partial[worker].push_back(std::move(k));
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < jobs; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  std::vector<GeneratedGraph> merged;
  for (auto& part : partial) {
    for (auto& g : part) merged.push_back(std::move(g));
  }
  std::sort(merged.begin(), merged.end(),
            [](const GeneratedGraph& a, const GeneratedGraph& b) { return a.form < b.form; });
  return merged;
}

}  // namespace

std::vector<std::vector<GeneratedGraph>> enumerate_levels(int n_max, int max_degree, int jobs) {
  if (n_max < 1 || max_degree < 1) throw Error(ErrorCode::BadParam, "need n_max >= 1 and max_degree >= 1");
  std::vector<std::vector<GeneratedGraph>> levels;
  levels.push_back({GeneratedGraph{1, {}, canonical_form(1, {})}});
  for (int n = 2; n <= n_max; ++n) levels.push_back(next_level(levels.back(), max_degree, jobs));
  return levels;
}

std::vector<GeneratedGraph> enumerate_connected(int n, int max_degree, int jobs) {
  return enumerate_levels(n, max_degree, jobs).back();
}

std::vector<Graph> enumerate_subcubic(int n, int jobs) {
  std::vector<Graph> out;
  for (const auto& g : enumerate_connected(n, 3, jobs)) out.push_back(g.to_graph());
  return out;
}

}  // namespace ricci
