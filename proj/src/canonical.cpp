#include "ricci/canonical.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "ricci/graph_io.hpp"

namespace ricci {

namespace {

using Cell = std::vector<int>;
using Partition = std::vector<Cell>;

struct Search {
  int n;
  std::vector<std::vector<int>> adj;
  std::vector<std::vector<char>> matrix;
  std::vector<int> colors;
  std::optional<std::string> best;
  std::vector<int> best_position;
};

// Equitable refinement: split every cell by neighbour counts into every other
// cell until stable. Sub-cells are ordered by count, so the result depends
// only on the ordered partition and the graph structure.
void refine(const Search& s, Partition& p) {
  std::vector<int> count(static_cast<std::size_t>(s.n), 0);
  std::vector<int> cell_of(static_cast<std::size_t>(s.n), 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t c = 0; c < p.size(); ++c) {
      for (int v : p[c]) cell_of[v] = static_cast<int>(c);
    }
    for (std::size_t splitter = 0; splitter < p.size() && !changed; ++splitter) {
      std::fill(count.begin(), count.end(), 0);
      for (int w : p[splitter]) {
        for (int x : s.adj[w]) ++count[x];
      }
      Partition next;
      next.reserve(p.size() + 4);
      for (const Cell& cell : p) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        std::map<int, Cell> groups;
        for (int v : cell) groups[count[v]].push_back(v);
        if (groups.size() > 1) changed = true;
        for (auto& [k, group] : groups) next.push_back(std::move(group));
      }
      if (changed) p = std::move(next);
    }
  }
}

std::string certificate(const Search& s, const Partition& p, std::vector<int>& position) {
  for (std::size_t i = 0; i < p.size(); ++i) position[p[i].front()] = static_cast<int>(i);
  std::string bits;
  bits.reserve(static_cast<std::size_t>(s.n) * (s.n - 1) / 2);
  std::vector<int> vertex_at(static_cast<std::size_t>(s.n));
  for (int v = 0; v < s.n; ++v) vertex_at[position[v]] = v;
  for (int j = 1; j < s.n; ++j) {
    for (int i = 0; i < j; ++i) bits.push_back(s.matrix[vertex_at[i]][vertex_at[j]] ? '1' : '0');
  }
  return bits;
}

void search(Search& s, Partition p) {
  refine(s, p);
  if (static_cast<int>(p.size()) == s.n) {
    std::vector<int> position(static_cast<std::size_t>(s.n));
    std::string cert = certificate(s, p, position);
    if (!s.best || cert > *s.best) {
      s.best = std::move(cert);
      s.best_position = std::move(position);
    }
    return;
  }
  std::size_t target = p.size();
  for (std::size_t c = 0; c < p.size(); ++c) {
    if (p[c].size() > 1 && (target == p.size() || p[c].size() < p[target].size())) target = c;
  }
  Cell cell = p[target];
  std::sort(cell.begin(), cell.end());
  for (int v : cell) {
    Partition child;
    child.reserve(p.size() + 1);
    for (std::size_t c = 0; c < p.size(); ++c) {
      if (c != target) {
        child.push_back(p[c]);
        continue;
      }
      child.push_back(Cell{v});
      Cell rest;
      for (int x : p[c]) {
        if (x != v) rest.push_back(x);
      }
      child.push_back(std::move(rest));
    }
    search(s, std::move(child));
  }
}

}  // namespace

std::vector<Edge> relabel(std::span<const Edge> edges, std::span<const int> position) {
  std::vector<Edge> out;
  out.reserve(edges.size());
  for (const Edge& e : edges) {
    const int a = position[e.u];
    const int b = position[e.v];
    out.push_back(Edge{std::min(a, b), std::max(a, b)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

CanonicalLabeling canonical_labeling(int n, std::span<const Edge> edges, std::span<const int> colors) {
  Search s;
  s.n = n;
  s.adj.assign(static_cast<std::size_t>(n), {});
  s.matrix.assign(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
  for (const Edge& e : edges) {
    s.adj[e.u].push_back(e.v);
    s.adj[e.v].push_back(e.u);
    s.matrix[e.u][e.v] = s.matrix[e.v][e.u] = 1;
  }
  s.colors.assign(colors.begin(), colors.end());
  if (s.colors.empty()) s.colors.assign(static_cast<std::size_t>(n), 0);

  CanonicalLabeling out;
  if (n == 0) {
    out.form.bytes = encode_graph6(0, {});
    return out;
  }
  std::map<int, Cell> by_color;
  for (int v = 0; v < n; ++v) by_color[s.colors[v]].push_back(v);
  Partition initial;
  std::string color_prefix;
  for (auto& [color, cell] : by_color) {
    color_prefix += std::to_string(color) + "x" + std::to_string(cell.size()) + ";";
    initial.push_back(std::move(cell));
  }
  search(s, std::move(initial));

  out.position = s.best_position;
  const std::vector<Edge> canon = relabel(edges, out.position);
  out.form.bytes = encode_graph6(n, canon);
  if (!colors.empty()) out.form.bytes = color_prefix + "|" + out.form.bytes;
  return out;
}

CanonicalForm canonical_form(int n, std::span<const Edge> edges, std::span<const int> colors) {
  return canonical_labeling(n, edges, colors).form;
}

CanonicalForm canonical_form(const Graph& g) { return canonical_form(g.order(), g.edges()); }

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace ricci
