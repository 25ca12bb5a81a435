#pragma once

#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ricci/graph.hpp"

namespace ricci {

/// Sparse probability vector on the vertices of one graph.
struct ProbabilityMeasure {
  std::map<Vertex, Rational> mass;

  Rational total() const;
  Rational at(Vertex v) const;
};

/// Coupling between `source` and `target`; entries keyed (x, y).
struct TransportPlan {
  std::map<std::pair<Vertex, Vertex>, Rational> entries;
  ProbabilityMeasure source;
  ProbabilityMeasure target;

  Rational cost(const DistanceMatrix& d) const;
  /// Row sums equal source masses, column sums equal target masses, entries >= 0.
  bool is_coupling() const;
};

/// phi : D(phi) subset of B_u^v  ->  B_v^u, injective. Stored as (w, phi(w)).
struct PartialBijection {
  std::vector<std::pair<Vertex, Vertex>> pairs;
};

struct CurvatureValue {
  Rational value;
  std::optional<TransportPlan> plan;
  std::optional<PartialBijection> bijection;
};

/// mu_u^eps: 1 - eps*Deg(u) at u, eps*w(u,v)/m(u) at each neighbour v.
ProbabilityMeasure measure_mu(const Graph& g, Vertex u, const Rational& eps);

/// Largest admissible eps for mu_u^eps, i.e. 1/Deg(u).
Rational max_epsilon(const Graph& g, Vertex u);

/// W(mu, nu) with hop distances, plus an optimal coupling. Solved as an
/// integer min-cost flow after clearing the common denominator.
std::pair<Rational, TransportPlan> wasserstein(const Graph& g, const ProbabilityMeasure& mu,
                                               const ProbabilityMeasure& nu);

/// 1 - W(mu_u^eps, mu_v^eps) / d(u, v), for any u != v.
Rational kappa_eps(const Graph& g, Vertex u, Vertex v, const Rational& eps);

/// kappa^O(u, v) = kappa_1(u, v). Normalized scheme only.
Rational kappa_ollivier(const Graph& g, Vertex u, Vertex v);

struct LlyOptions {
  int max_halvings = 20;
  /// Combinatorial graphs only: compare with kappa_transport and throw
  /// Error{NoConvergence} on disagreement.
  bool cross_check = false;
};

/// Lin-Lu-Yau limit of kappa_eps / eps on an edge. Evaluates the slope at
/// eps1 = 1/(D+1) and eps1/2; agreement certifies linearity on (0, eps1]
/// because eps -> kappa_eps is concave, piecewise linear and vanishes at 0.
/// Otherwise eps1 is halved. The witness plan is the coupling at eps1/2.
CurvatureValue kappa_lly(const Graph& g, Vertex u, Vertex v, const LlyOptions& options = {});

/// Transport formula for combinatorial graphs:
///   kappa(u,v) = #B_uv - min_phi ( #D(phi)^c + #R(phi)^c + sum_{w in D(phi)} (d(w, phi(w)) - 1) ).
/// Direct enumeration of partial injections when both outer sets have at most
/// three elements, an exact assignment solve otherwise.
CurvatureValue kappa_transport(const Graph& g, Vertex u, Vertex v);

struct NegativeCertificate {
  std::vector<Vertex> outer_u;  // N_u = B_1(u) \ {u, v}
  std::vector<Vertex> outer_v;  // N_v
  /// d(N_u, N_v); std::nullopt when one side is empty (infinite distance).
  std::optional<int> distance;
};

/// Sufficient condition for kappa(u,v) < 0 on a combinatorial graph:
/// |N_u| + |N_v| >= 3 and d(N_u, N_v) >= 3. No certificate says nothing.
std::optional<NegativeCertificate> negative_test(const Graph& g, Vertex u, Vertex v);

enum class Engine { Auto, Transport, OtLimit, Ollivier };

std::string_view to_string(Engine e);
Engine parse_engine(std::string_view text);

struct EdgeCurvature {
  Edge edge;
  CurvatureValue curvature;
};

/// One entry per edge, in the graph's sorted edge order. Auto picks the
/// transport formula on combinatorial graphs and the OT limit otherwise.
/// Ollivier requires the normalized scheme (Error{WrongScheme}).
std::vector<EdgeCurvature> edge_curvatures(const Graph& g, Engine engine = Engine::Auto);

/// kappa(G) = min over edges. A graph without edges has no curvature; 0 is returned.
Rational min_curvature(const Graph& g, Engine engine = Engine::Auto);

/// Sign-only query kappa(G) >= 0. On combinatorial graphs negative_test is
/// tried first on every edge so negative graphs usually exit without a solve.
bool has_nonnegative_curvature(const Graph& g);

/// (eps, kappa_eps(u,v)) for each sample.
std::vector<std::pair<Rational, Rational>> curvature_profile(const Graph& g, Vertex u, Vertex v,
                                                             std::span<const Rational> samples);

}  // namespace ricci
