#include "ricci/harmonic.hpp"

#include <algorithm>

#include "ricci/error.hpp"
#include "ricci/graph_io.hpp"

namespace ricci {

Rational laplacian(const Graph& g, const VertexFunction& f, Vertex u) {
  Rational sum = 0;
  for (Vertex v : g.neighbors(u)) sum += g.edge_weight(u, v) * (f.values[v] - f.values[u]);
  return sum / g.vertex_weight(u);
}

VertexFunction solve_harmonic(const HarmonicProblem& problem) {
  const Graph& g = problem.graph;
  const int n = g.order();
  if (problem.boundary.empty()) throw Error(ErrorCode::SingularSystem, "empty boundary");
  for (const auto& [v, value] : problem.boundary) {
    if (v < 0 || v >= n) throw Error(ErrorCode::BadParam, "boundary vertex " + std::to_string(v) + " out of range");
  }

  std::vector<int> index(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> interior;
  for (Vertex v = 0; v < n; ++v) {
    if (!problem.boundary.count(v)) {
      index[v] = static_cast<int>(interior.size());
      interior.push_back(v);
    }
  }
  const std::size_t k = interior.size();

  // Row i: sum_v w(u,v) f(v) - Deg_w(u) f(u) = 0 with boundary terms moved right.
  std::vector<std::vector<Rational>> a(k, std::vector<Rational>(k + 1, Rational(0)));
  for (std::size_t i = 0; i < k; ++i) {
    const Vertex u = interior[i];
    for (Vertex v : g.neighbors(u)) {
      const Rational w = g.edge_weight(u, v);
      a[i][i] -= w;
      if (index[v] >= 0) {
        a[i][static_cast<std::size_t>(index[v])] += w;
      } else {
        a[i][k] -= w * problem.boundary.at(v);
      }
    }
  }
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t pivot = col;
    while (pivot < k && a[pivot][col] == 0) ++pivot;
    if (pivot == k) throw Error(ErrorCode::SingularSystem, "interior vertex cut off from the boundary");
    std::swap(a[col], a[pivot]);
    for (std::size_t r = 0; r < k; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational factor = a[r][col] / a[col][col];
      for (std::size_t c = col; c <= k; ++c) a[r][c] -= factor * a[col][c];
    }
  }

  VertexFunction f{std::vector<Rational>(static_cast<std::size_t>(n))};
  for (const auto& [v, value] : problem.boundary) f.values[v] = value;
  for (std::size_t i = 0; i < k; ++i) f.values[interior[i]] = a[i][k] / a[i][i];

  Rational bmin = problem.boundary.begin()->second, bmax = bmin;
  for (const auto& [v, value] : problem.boundary) {
    bmin = std::min(bmin, value);
    bmax = std::max(bmax, value);
  }
  for (const Rational& x : f.values) {
    if (x < bmin || x > bmax) throw Error(ErrorCode::SelfValidationFailed, "solution leaves the boundary range");
  }
  for (Vertex u : interior) {
    if (laplacian(g, f, u) != 0) throw Error(ErrorCode::SelfValidationFailed, "solution is not harmonic");
  }
  return f;
}

HarmonicProblem parse_harmonic_problem(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::MalformedJson, e.what());
  }
  if (!doc.is_object() || !doc.contains("graph") || !doc.contains("boundary") || !doc["boundary"].is_object())
    throw Error(ErrorCode::MalformedJson, "expected {\"graph\": ..., \"boundary\": {\"v\": \"p/q\"}}");
  const auto& gj = doc["graph"];
  Graph g = gj.is_string() ? parse_graph6(gj.get<std::string>()) : parse_edge_json(gj.dump());
  HarmonicProblem p{std::move(g), {}};
  for (const auto& [key, value] : doc["boundary"].items()) {
    int v = 0;
    try {
      std::size_t used = 0;
      v = std::stoi(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw Error(ErrorCode::MalformedJson, "boundary key '" + key + "' is not a vertex");
    }
    if (value.is_string()) {
      p.boundary[v] = parse_rational(value.get<std::string>());
    } else if (value.is_number_integer()) {
      p.boundary[v] = Rational(value.get<long>());
    } else {
      throw Error(ErrorCode::MalformedJson, "boundary values must be \"p/q\" strings");
    }
  }
  return p;
}

nlohmann::json harmonic_solution_json(const HarmonicProblem& problem, const VertexFunction& f) {
  nlohmann::json values = nlohmann::json::object();
  for (std::size_t v = 0; v < f.values.size(); ++v) values[std::to_string(v)] = to_string(f.values[v]);
  nlohmann::json out;
  out["values"] = values;
  out["boundary_size"] = problem.boundary.size();
  return out;
}

std::vector<Rational> ladder_difference_sequence(const Rational& z0, const Rational& z1, int count) {
  std::vector<Rational> z;
  if (count > 0) z.push_back(z0);
  if (count > 1) z.push_back(z1);
  while (static_cast<int>(z.size()) < count) z.push_back(4 * z[z.size() - 1] - z[z.size() - 2]);
  return z;
}

bool LiouvilleReport::ok() const {
  return harmonic && matches_recurrence && z_identity && h_identity && h_linear && max_principle &&
         (!growth_applicable || (z_monotone && growth));
}

nlohmann::json LiouvilleReport::to_json() const {
  nlohmann::json j;
  j["width"] = width;
  j["z"] = nlohmann::json::array();
  j["h"] = nlohmann::json::array();
  for (const auto& x : z) j["z"].push_back(to_string(x));
  for (const auto& x : h) j["h"].push_back(to_string(x));
  j["checks"] = {{"harmonic", harmonic},           {"matches_recurrence", matches_recurrence},
                 {"z_identity", z_identity},       {"h_identity", h_identity},
                 {"h_linear", h_linear},           {"growth_applicable", growth_applicable},
                 {"z_monotone", z_monotone},       {"growth", growth},
                 {"max_principle", max_principle}};
  j["ok"] = ok();
  return j;
}

LiouvilleReport liouville_window_check(int width, const LiouvilleOptions& o) {
  if (width < 4) throw Error(ErrorCode::BadParam, "window width must be >= 4");
  const int N = width;
  auto x = [](int i) { return 2 * i; };
  auto y = [](int i) { return 2 * i + 1; };
  std::vector<Edge> edges;
  for (int i = 0; i <= N; ++i) {
    edges.push_back(Edge{x(i), y(i)});
    if (i > 0) {
      edges.push_back(Edge{x(i - 1), x(i)});
      edges.push_back(Edge{y(i - 1), y(i)});
    }
  }
  const auto zs = ladder_difference_sequence(o.z0, o.z1, N + 1);
  const Rational hN = o.h0 + N * (o.h1 - o.h0);

  HarmonicProblem p{Graph::from_edges(2 * (N + 1), edges), {}};
  p.boundary[x(0)] = (o.h0 + o.z0) / 2;
  p.boundary[y(0)] = (o.h0 - o.z0) / 2;
  p.boundary[x(N)] = (hN + zs[N]) / 2;
  p.boundary[y(N)] = (hN - zs[N]) / 2;

  LiouvilleReport r;
  r.width = N;
  VertexFunction f;
  try {
    f = solve_harmonic(p);
    r.max_principle = true;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::SelfValidationFailed) throw;
    return r;
  }
  for (int i = 0; i <= N; ++i) {
    r.z.push_back(f.values[x(i)] - f.values[y(i)]);
    r.h.push_back(f.values[x(i)] + f.values[y(i)]);
  }
  r.harmonic = true;
  for (int i = 1; i < N; ++i) {
    r.harmonic = r.harmonic && laplacian(p.graph, f, x(i)) == 0 && laplacian(p.graph, f, y(i)) == 0;
  }
  r.matches_recurrence = r.z == zs;
  r.z_identity = r.h_identity = true;
  for (int i = 1; i < N; ++i) {
    r.z_identity = r.z_identity && 4 * r.z[i] == r.z[i - 1] + r.z[i + 1];
    r.h_identity = r.h_identity && 2 * r.h[i] == r.h[i - 1] + r.h[i + 1];
  }
  r.h_linear = true;
  for (int i = 0; i <= N; ++i) r.h_linear = r.h_linear && r.h[i] == r.h[0] + i * (r.h[1] - r.h[0]);
  r.growth_applicable = r.z[0] > 0 && r.z[1] >= r.z[0];
  r.z_monotone = r.growth = true;
  Rational power = r.z[1];  // z_n >= z_1 3^(n-1)
  for (int i = 1; i <= N; ++i) {
    r.z_monotone = r.z_monotone && r.z[i] >= r.z[i - 1];
    if (i >= 2) {
      power *= 3;
      r.growth = r.growth && r.z[i] >= 3 * r.z[i - 1] && r.z[i] >= power;
    }
  }
  return r;
}

}  // namespace ricci
