#include "ricci/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <string>

namespace ricci {

std::string_view to_string(WeightScheme scheme) {
  switch (scheme) {
    case WeightScheme::Combinatorial: return "combinatorial";
    case WeightScheme::Normalized: return "normalized";
    case WeightScheme::GeneralWeighted: return "general";
  }
  return "?";
}

WeightScheme parse_scheme(std::string_view text) {
  if (text == "combinatorial") return WeightScheme::Combinatorial;
  if (text == "normalized") return WeightScheme::Normalized;
  if (text == "general") return WeightScheme::GeneralWeighted;
  throw Error(ErrorCode::BadParam, "unknown weight scheme '" + std::string(text) + "'");
}

std::string_view to_string(State s) {
  switch (s) {
    case State::Two: return "2";
    case State::ThreeMinus: return "3-";
    case State::ThreeZero: return "30";
    case State::ThreePlus: return "3+";
  }
  return "?";
}

int DistanceMatrix::max() const {
  int best = 0;
  for (int x : d_) best = std::max(best, x);
  return best;
}

std::vector<int> bfs_within(const Graph& g, Vertex source, const std::vector<bool>& allowed) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), DistanceMatrix::kUnreachable);
  if (!allowed[source]) return dist;
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop_front();
    for (Vertex y : g.neighbors(x)) {
      if (allowed[y] && dist[y] == DistanceMatrix::kUnreachable) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

namespace {

void validate_pair(int n, const Edge& e) {
  if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
    throw Error(ErrorCode::VertexOutOfRange,
                "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} with n = " + std::to_string(n));
  }
  if (e.u == e.v) throw Error(ErrorCode::SelfLoop, "vertex " + std::to_string(e.u));
}

}  // namespace

Graph Graph::from_edges(int n, std::span<const Edge> edges, WeightScheme scheme, std::optional<int> max_degree) {
  if (n < 1) throw Error(ErrorCode::BadParam, "graph needs at least one vertex");
  Graph g;
  g.n_ = n;
  g.scheme_ = scheme;
  g.adj_.assign(static_cast<std::size_t>(n), {});
  g.edges_.reserve(edges.size());
  for (const Edge& raw : edges) {
    validate_pair(n, raw);
    g.edges_.push_back(Edge{std::min(raw.u, raw.v), std::max(raw.u, raw.v)});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  if (auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end()); dup != g.edges_.end()) {
    throw Error(ErrorCode::DuplicateEdge, "{" + std::to_string(dup->u) + "," + std::to_string(dup->v) + "}");
  }
  for (const Edge& e : g.edges_) {
    g.adj_[e.u].push_back(e.v);
    g.adj_[e.v].push_back(e.u);
  }
  for (auto& row : g.adj_) std::sort(row.begin(), row.end());
  if (max_degree) {
    for (Vertex u = 0; u < n; ++u) {
      if (g.degree(u) > *max_degree) {
        throw Error(ErrorCode::DegreeOverflow, "vertex " + std::to_string(u) + " has degree " +
                                                   std::to_string(g.degree(u)) + " > " +
                                                   std::to_string(*max_degree));
      }
    }
  }

  g.dist_ = DistanceMatrix(n);
  const std::vector<bool> everything(static_cast<std::size_t>(n), true);
  for (Vertex s = 0; s < n; ++s) {
    const auto row = bfs_within(g, s, everything);
    for (Vertex t = 0; t < n; ++t) {
      if (row[t] == DistanceMatrix::kUnreachable) {
        throw Error(ErrorCode::Disconnected, "vertex " + std::to_string(t) + " unreachable from " + std::to_string(s));
      }
      g.dist_.at(s, t) = row[t];
    }
  }

  g.w_.assign(g.edges_.size(), Rational(1));
  g.m_.resize(static_cast<std::size_t>(n));
  for (Vertex u = 0; u < n; ++u) {
    g.m_[u] = scheme == WeightScheme::Normalized ? Rational(g.degree(u)) : Rational(1);
  }
  // An isolated single vertex has degree 0; keep m positive.
  if (n == 1) g.m_[0] = 1;
  return g;
}

Graph Graph::with_weights(int n, std::span<const Edge> edges, std::span<const Rational> edge_weights,
                          std::span<const Rational> vertex_weights) {
  if (edge_weights.size() != edges.size() || vertex_weights.size() != static_cast<std::size_t>(n)) {
    throw Error(ErrorCode::BadWeight, "weight vectors do not match the edge list / vertex count");
  }
  Graph g = from_edges(n, edges, WeightScheme::GeneralWeighted);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edge_weights[i] <= 0) throw Error(ErrorCode::BadWeight, "edge weights must be positive");
    const Edge key{std::min(edges[i].u, edges[i].v), std::max(edges[i].u, edges[i].v)};
    const auto it = std::lower_bound(g.edges_.begin(), g.edges_.end(), key);
    g.w_[static_cast<std::size_t>(it - g.edges_.begin())] = edge_weights[i];
  }
  for (Vertex u = 0; u < n; ++u) {
    if (vertex_weights[u] <= 0) throw Error(ErrorCode::BadWeight, "vertex weights must be positive");
    g.m_[u] = vertex_weights[u];
  }
  return g;
}

Graph Graph::with_scheme(WeightScheme scheme) const {
  if (scheme == WeightScheme::GeneralWeighted) {
    throw Error(ErrorCode::WrongScheme, "use with_weights for general weights");
  }
  Graph g = *this;
  g.scheme_ = scheme;
  std::fill(g.w_.begin(), g.w_.end(), Rational(1));
  for (Vertex u = 0; u < n_; ++u) {
    g.m_[u] = scheme == WeightScheme::Normalized && degree(u) > 0 ? Rational(degree(u)) : Rational(1);
  }
  return g;
}

void Graph::check_vertex(Vertex u) const {
  if (u < 0 || u >= n_) throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(u));
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& row : adj_) best = std::max(best, static_cast<int>(row.size()));
  return best;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

Rational Graph::edge_weight(Vertex u, Vertex v) const {
  const Edge key{std::min(u, v), std::max(u, v)};
  const auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) {
    throw Error(ErrorCode::NotAdjacent, std::to_string(u) + " and " + std::to_string(v));
  }
  return w_[static_cast<std::size_t>(it - edges_.begin())];
}

Rational Graph::weighted_degree(Vertex u) const {
  Rational total = 0;
  for (Vertex v : adj_[u]) total += edge_weight(u, v);
  return total / m_[u];
}

Graph build_graph(int n, std::span<const Edge> edges, WeightScheme scheme, std::optional<int> max_degree) {
  return Graph::from_edges(n, edges, scheme, max_degree);
}

DistanceMatrix all_pairs_distances(const Graph& g) { return g.distances(); }

int diameter(const Graph& g) { return g.distances().max(); }

GeodesicPath GeodesicPath::reversed() const {
  return GeodesicPath{std::vector<Vertex>(vertices.rbegin(), vertices.rend())};
}

bool is_geodesic_path(const Graph& g, std::span<const Vertex> path) {
  if (path.empty()) return false;
  for (Vertex v : path) {
    if (v < 0 || v >= g.order()) return false;
  }
  const int l = static_cast<int>(path.size()) - 1;
  for (int i = 0; i < l; ++i) {
    if (!g.adjacent(path[i], path[i + 1])) return false;
  }
  // d(v_0, v_l) = l already forces d(v_i, v_j) = |i - j|; check all pairs anyway.
  for (int i = 0; i <= l; ++i) {
    for (int j = i + 1; j <= l; ++j) {
      if (g.distance(path[i], path[j]) != j - i) return false;
    }
  }
  return true;
}

namespace {

// Extends `prefix` (a geodesic from prefix.front()) greedily in increasing
// vertex order towards any endpoint t with d(s, t) = target.
void enumerate_geodesics(const Graph& g, int target, std::vector<Vertex>& prefix,
                         std::vector<GeodesicPath>& out, bool first_only) {
  const Vertex s = prefix.front();
  const int i = static_cast<int>(prefix.size()) - 1;
  if (i == target) {
    out.push_back(GeodesicPath{prefix});
    return;
  }
  const Vertex cur = prefix.back();
  for (Vertex w : g.neighbors(cur)) {
    if (g.distance(s, w) != i + 1) continue;
    bool extendable = false;
    for (Vertex t = 0; t < g.order() && !extendable; ++t) {
      extendable = g.distance(s, t) == target && g.distance(w, t) == target - i - 1;
    }
    if (!extendable) continue;
    prefix.push_back(w);
    enumerate_geodesics(g, target, prefix, out, first_only);
    prefix.pop_back();
    if (first_only && !out.empty()) return;
  }
}

}  // namespace

GeodesicPath diameter_path(const Graph& g) {
  const int diam = diameter(g);
  for (Vertex s = 0; s < g.order(); ++s) {
    bool starts_diameter = false;
    for (Vertex t = 0; t < g.order() && !starts_diameter; ++t) starts_diameter = g.distance(s, t) == diam;
    if (!starts_diameter) continue;
    std::vector<Vertex> prefix{s};
    std::vector<GeodesicPath> out;
    enumerate_geodesics(g, diam, prefix, out, true);
    return out.front();
  }
  return GeodesicPath{{0}};
}

std::vector<GeodesicPath> all_diameter_paths(const Graph& g) {
  const int diam = diameter(g);
  std::vector<GeodesicPath> out;
  for (Vertex s = 0; s < g.order(); ++s) {
    std::vector<Vertex> prefix{s};
    enumerate_geodesics(g, diam, prefix, out, false);
  }
  return out;
}

bool is_geodesic_cycle(const Graph& g, std::span<const Vertex> cycle) {
  const int len = static_cast<int>(cycle.size());
  if (len < 3) throw Error(ErrorCode::NotACycle, "a cycle needs at least 3 vertices");
  std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
  for (Vertex v : cycle) {
    if (v < 0 || v >= g.order() || seen[v]) throw Error(ErrorCode::NotACycle, "repeated or invalid vertex");
    seen[v] = true;
  }
  for (int i = 0; i < len; ++i) {
    if (!g.adjacent(cycle[i], cycle[(i + 1) % len])) {
      throw Error(ErrorCode::NotACycle, "consecutive vertices not adjacent");
    }
  }
  for (int i = 0; i < len; ++i) {
    for (int j = i + 1; j < len; ++j) {
      if (g.distance(cycle[i], cycle[j]) != std::min(j - i, len - (j - i))) return false;
    }
  }
  return true;
}

bool is_geodesic_subgraph(const Graph& g, std::span<const Vertex> subset) {
  std::vector<bool> allowed(static_cast<std::size_t>(g.order()), false);
  for (Vertex v : subset) {
    if (v < 0 || v >= g.order()) throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v));
    allowed[v] = true;
  }
  bool geodesic = true;
  for (Vertex s : subset) {
    const auto row = bfs_within(g, s, allowed);
    for (Vertex t : subset) {
      if (row[t] == DistanceMatrix::kUnreachable) {
        throw Error(ErrorCode::DisconnectedSubset, "subset does not induce a connected subgraph");
      }
      if (row[t] != g.distance(s, t)) geodesic = false;
    }
  }
  return geodesic;
}

StateAssignment state_function(const Graph& g, const GeodesicPath& path) {
  if (g.max_degree() > 3) throw Error(ErrorCode::DegreeTooHigh, "state function needs max degree <= 3");
  if (!is_geodesic_path(g, path.vertices)) throw Error(ErrorCode::NotGeodesic, "path is not geodesic");
  const auto& p = path.vertices;
  const Vertex root = p.front();
  StateAssignment out{root, {}};
  for (int i = 1; i < path.length(); ++i) {
    StateEntry entry{i, p[i], State::Two, std::nullopt};
    for (Vertex x : g.neighbors(p[i])) {
      if (x != p[i - 1] && x != p[i + 1]) entry.extra = x;
    }
    if (entry.extra) {
      const int r_u = g.distance(root, *entry.extra);
      entry.state = r_u < i ? State::ThreeMinus : r_u == i ? State::ThreeZero : State::ThreePlus;
    }
    out.entries.push_back(entry);
  }
  return out;
}

}  // namespace ricci
