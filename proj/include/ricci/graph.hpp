#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "ricci/error.hpp"
#include "ricci/rational.hpp"

namespace ricci {

using Vertex = int;

struct Edge {
  Vertex u;
  Vertex v;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

enum class WeightScheme { Combinatorial, Normalized, GeneralWeighted };

std::string_view to_string(WeightScheme scheme);
/// "combinatorial" | "normalized" | "general". Throws Error{BadParam}.
WeightScheme parse_scheme(std::string_view text);

/// Symmetric hop-count matrix. Distances are combinatorial regardless of the
/// weight scheme of the graph they were computed on.
class DistanceMatrix {
 public:
  static constexpr int kUnreachable = -1;

  DistanceMatrix() = default;
  explicit DistanceMatrix(int n) : n_(n), d_(static_cast<std::size_t>(n) * n, kUnreachable) {}

  int order() const { return n_; }
  int operator()(Vertex u, Vertex v) const { return d_[index(u, v)]; }
  int& at(Vertex u, Vertex v) { return d_[index(u, v)]; }
  int max() const;

 private:
  std::size_t index(Vertex u, Vertex v) const { return static_cast<std::size_t>(u) * n_ + v; }

  int n_ = 0;
  std::vector<int> d_;
};

/// Connected simple undirected graph with vertex weights m and edge weights w.
/// Immutable after construction; distances are computed eagerly.
class Graph {
 public:
  /// Validates simplicity and connectivity. `max_degree`, when given, turns a
  /// vertex of larger degree into Error{DegreeOverflow}. The scheme fixes the
  /// weights: Combinatorial w = m = 1, Normalized w = 1 and m = deg.
  /// GeneralWeighted starts at unit weights; use `with_weights`.
  static Graph from_edges(int n, std::span<const Edge> edges,
                          WeightScheme scheme = WeightScheme::Combinatorial,
                          std::optional<int> max_degree = std::nullopt);

  /// GeneralWeighted graph. `edge_weights[i]` belongs to `edges[i]`.
  static Graph with_weights(int n, std::span<const Edge> edges, std::span<const Rational> edge_weights,
                            std::span<const Rational> vertex_weights);

  /// Same vertices and edges, re-equipped with another (non-general) scheme.
  Graph with_scheme(WeightScheme scheme) const;

  int order() const { return n_; }
  std::size_t size() const { return edges_.size(); }
  WeightScheme scheme() const { return scheme_; }

  const std::vector<Vertex>& neighbors(Vertex u) const { return adj_[u]; }
  int degree(Vertex u) const { return static_cast<int>(adj_[u].size()); }
  int max_degree() const;
  bool adjacent(Vertex u, Vertex v) const;

  /// Sorted (u < v) edge list.
  const std::vector<Edge>& edges() const { return edges_; }

  const Rational& vertex_weight(Vertex u) const { return m_[u]; }
  Rational edge_weight(Vertex u, Vertex v) const;
  /// Deg(u) = sum over neighbours of w(u,v)/m(u).
  Rational weighted_degree(Vertex u) const;

  const DistanceMatrix& distances() const { return dist_; }
  int distance(Vertex u, Vertex v) const { return dist_(u, v); }

 private:
  Graph() = default;
  void check_vertex(Vertex u) const;

  int n_ = 0;
  WeightScheme scheme_ = WeightScheme::Combinatorial;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<Edge> edges_;
  std::vector<Rational> w_;  // parallel to edges_
  std::vector<Rational> m_;
  DistanceMatrix dist_;
};

Graph build_graph(int n, std::span<const Edge> edges, WeightScheme scheme = WeightScheme::Combinatorial,
                  std::optional<int> max_degree = std::nullopt);

DistanceMatrix all_pairs_distances(const Graph& g);

/// BFS distances from `source` inside the subgraph induced by `allowed`
/// (allowed[x] == true). Unreachable vertices get DistanceMatrix::kUnreachable.
std::vector<int> bfs_within(const Graph& g, Vertex source, const std::vector<bool>& allowed);

int diameter(const Graph& g);

/// Ordered vertex list v_0..v_l; `length()` = l.
struct GeodesicPath {
  std::vector<Vertex> vertices;

  int length() const { return static_cast<int>(vertices.size()) - 1; }
  GeodesicPath reversed() const;
  friend bool operator==(const GeodesicPath&, const GeodesicPath&) = default;
};

/// True iff consecutive vertices are adjacent and d(v_i, v_j) = |i - j|.
bool is_geodesic_path(const Graph& g, std::span<const Vertex> path);

/// Lexicographically smallest vertex sequence among the geodesics of length diam(G).
GeodesicPath diameter_path(const Graph& g);

/// Every geodesic path of length diam(G), in lexicographic order. Each
/// undirected diameter appears once per direction.
std::vector<GeodesicPath> all_diameter_paths(const Graph& g);

/// `cycle` lists the cycle's vertices once each (no repeated start).
bool is_geodesic_cycle(const Graph& g, std::span<const Vertex> cycle);

/// Tests d_H = d_G on the subgraph H induced by `subset`.
bool is_geodesic_subgraph(const Graph& g, std::span<const Vertex> subset);

enum class State { Two, ThreeMinus, ThreeZero, ThreePlus };

std::string_view to_string(State s);

struct StateEntry {
  int position;                        // index i of v_i on the path, 1 <= i <= l-1
  Vertex vertex;                       // v_i
  State state;
  std::optional<Vertex> extra;         // u_i, absent for State::Two
};

struct StateAssignment {
  Vertex root;
  std::vector<StateEntry> entries;     // entries[i - 1] describes v_i

  const StateEntry& at(int position) const { return entries.at(static_cast<std::size_t>(position - 1)); }
  State state(int position) const { return at(position).state; }
};

/// Labels v_1..v_{l-1} by the root distance r = d(v_0, .) of their extra
/// neighbour. Requires max degree <= 3 and a geodesic path.
StateAssignment state_function(const Graph& g, const GeodesicPath& path);

}  // namespace ricci
