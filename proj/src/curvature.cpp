#include "ricci/curvature.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "ricci/transport.hpp"

namespace ricci {

Rational ProbabilityMeasure::total() const {
  Rational sum = 0;
  for (const auto& [v, m] : mass) sum += m;
  return sum;
}

Rational ProbabilityMeasure::at(Vertex v) const {
  const auto it = mass.find(v);
  return it == mass.end() ? Rational(0) : it->second;
}

Rational TransportPlan::cost(const DistanceMatrix& d) const {
  Rational sum = 0;
  for (const auto& [xy, m] : entries) sum += m * d(xy.first, xy.second);
  return sum;
}

bool TransportPlan::is_coupling() const {
  std::map<Vertex, Rational> rows;
  std::map<Vertex, Rational> cols;
  for (const auto& [xy, m] : entries) {
    if (m < 0) return false;
    rows[xy.first] += m;
    cols[xy.second] += m;
  }
  auto matches = [](const std::map<Vertex, Rational>& sums, const ProbabilityMeasure& measure) {
    for (const auto& [v, m] : measure.mass) {
      const auto it = sums.find(v);
      if ((it == sums.end() ? Rational(0) : it->second) != m) return false;
    }
    for (const auto& [v, m] : sums) {
      if (measure.at(v) != m) return false;
    }
    return true;
  };
  return matches(rows, source) && matches(cols, target);
}

Rational max_epsilon(const Graph& g, Vertex u) {
  const Rational deg = g.weighted_degree(u);
  if (deg == 0) return Rational(1);
  return 1 / deg;
}

ProbabilityMeasure measure_mu(const Graph& g, Vertex u, const Rational& eps) {
  if (u < 0 || u >= g.order()) throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(u));
  if (eps < 0 || eps > max_epsilon(g, u)) {
    throw Error(ErrorCode::EpsilonOutOfRange, "eps = " + to_string(eps) + " outside [0, 1/Deg(" + std::to_string(u) + ")]");
  }
  ProbabilityMeasure mu;
  const Rational stay = 1 - eps * g.weighted_degree(u);
  if (stay != 0) mu.mass[u] = stay;
  if (eps != 0) {
    for (Vertex v : g.neighbors(u)) mu.mass[v] = eps * g.edge_weight(u, v) / g.vertex_weight(u);
  }
  return mu;
}

std::pair<Rational, TransportPlan> wasserstein(const Graph& g, const ProbabilityMeasure& mu,
                                               const ProbabilityMeasure& nu) {
  for (const auto* m : {&mu, &nu}) {
    for (const auto& [v, mass] : m->mass) {
      if (v < 0 || v >= g.order()) throw Error(ErrorCode::VertexOutOfRange, "measure outside the graph");
      if (mass < 0) throw Error(ErrorCode::MassMismatch, "negative mass");
    }
    if (m->total() != 1) throw Error(ErrorCode::MassMismatch, "total mass " + to_string(m->total()) + " != 1");
  }

  std::vector<Vertex> rows;
  std::vector<Vertex> cols;
  Integer scale = 1;
  for (const auto& [v, m] : mu.mass) {
    if (m == 0) continue;
    rows.push_back(v);
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m.get_den().get_mpz_t());
  }
  for (const auto& [v, m] : nu.mass) {
    if (m == 0) continue;
    cols.push_back(v);
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m.get_den().get_mpz_t());
  }

  TransportationProblem problem;
  for (Vertex v : rows) problem.supply.push_back(Integer(Rational(mu.mass.at(v) * scale)));
  for (Vertex v : cols) problem.demand.push_back(Integer(Rational(nu.mass.at(v) * scale)));
  problem.cost.assign(rows.size(), std::vector<long>(cols.size(), 0));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) problem.cost[i][j] = g.distance(rows[i], cols[j]);
  }
  const TransportationSolution solution = solve_transportation(problem);

  TransportPlan plan{{}, mu, nu};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (solution.flow[i][j] != 0) plan.entries[{rows[i], cols[j]}] = Rational(solution.flow[i][j], scale);
    }
  }
  for (auto& [xy, m] : plan.entries) m.canonicalize();
  Rational w(solution.total_cost, scale);
  w.canonicalize();
  return {w, plan};
}

namespace {

void check_pair(const Graph& g, Vertex u, Vertex v) {
  for (Vertex x : {u, v}) {
    if (x < 0 || x >= g.order()) throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(x));
  }
}

void check_edge(const Graph& g, Vertex u, Vertex v) {
  check_pair(g, u, v);
  if (!g.adjacent(u, v)) {
    throw Error(ErrorCode::NotAdjacent, std::to_string(u) + " and " + std::to_string(v) + " are not adjacent");
  }
}

std::pair<Rational, TransportPlan> kappa_eps_with_plan(const Graph& g, Vertex u, Vertex v, const Rational& eps) {
  check_pair(g, u, v);
  if (u == v) throw Error(ErrorCode::BadParam, "kappa_eps needs two distinct vertices");
  auto [w, plan] = wasserstein(g, measure_mu(g, u, eps), measure_mu(g, v, eps));
  return {1 - w / g.distance(u, v), std::move(plan)};
}

std::vector<Vertex> closed_ball(const Graph& g, Vertex u) {
  std::vector<Vertex> ball = g.neighbors(u);
  ball.insert(std::lower_bound(ball.begin(), ball.end(), u), u);
  return ball;
}

std::vector<Vertex> set_minus(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  std::vector<Vertex> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

struct Matching {
  long cost = std::numeric_limits<long>::max();
  std::vector<std::pair<Vertex, Vertex>> pairs;
};

// Exhaustive search over partial injections left -> right.
void enumerate_injections(const Graph& g, const std::vector<Vertex>& left, const std::vector<Vertex>& right,
                          std::size_t i, std::vector<bool>& used, long cost,
                          std::vector<std::pair<Vertex, Vertex>>& current, Matching& best) {
  if (i == left.size()) {
    long unmatched_right = 0;
    for (bool b : used) unmatched_right += b ? 0 : 1;
    if (cost + unmatched_right < best.cost) best = Matching{cost + unmatched_right, current};
    return;
  }
  // Leave left[i] unmatched.
  enumerate_injections(g, left, right, i + 1, used, cost + 1, current, best);
  for (std::size_t j = 0; j < right.size(); ++j) {
    if (used[j]) continue;
    used[j] = true;
    current.emplace_back(left[i], right[j]);
    enumerate_injections(g, left, right, i + 1, used, cost + g.distance(left[i], right[j]) - 1, current, best);
    current.pop_back();
    used[j] = false;
  }
}

// Hungarian algorithm (potentials, O(n^3)) on a square integer matrix.
std::vector<int> hungarian(const std::vector<std::vector<long>>& a) {
  const int n = static_cast<int>(a.size());
  constexpr long kInf = std::numeric_limits<long>::max() / 4;
  std::vector<long> pu(n + 1, 0), pv(n + 1, 0);
  std::vector<int> match(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    match[0] = i;
    int j0 = 0;
    std::vector<long> minv(n + 1, kInf);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      const int i0 = match[j0];
      long delta = kInf;
      int j1 = 0;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const long cur = a[i0 - 1][j - 1] - pu[i0] - pv[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          pu[match[j]] += delta;
          pv[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (match[j0] != 0);
    do {
      const int j1 = way[j0];
      match[j0] = match[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<int> row_to_col(n, -1);
  for (int j = 1; j <= n; ++j) row_to_col[match[j] - 1] = j - 1;
  return row_to_col;
}

// Square assignment: rows = left + dummies for right, cols = right + dummies for left.
Matching assignment_solve(const Graph& g, const std::vector<Vertex>& left, const std::vector<Vertex>& right) {
  const std::size_t a = left.size();
  const std::size_t b = right.size();
  const std::size_t n = a + b;
  std::vector<std::vector<long>> cost(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const bool real_row = i < a;
      const bool real_col = j < b;
      if (real_row && real_col) cost[i][j] = g.distance(left[i], right[j]) - 1;
      else if (real_row || real_col) cost[i][j] = 1;
      else cost[i][j] = 0;
    }
  }
  const std::vector<int> assign = hungarian(cost);
  Matching out{0, {}};
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = static_cast<std::size_t>(assign[i]);
    out.cost += cost[i][j];
    if (i < a && j < b) out.pairs.emplace_back(left[i], right[j]);
  }
  return out;
}

}  // namespace

Rational kappa_eps(const Graph& g, Vertex u, Vertex v, const Rational& eps) {
  return kappa_eps_with_plan(g, u, v, eps).first;
}

Rational kappa_ollivier(const Graph& g, Vertex u, Vertex v) {
  if (g.scheme() != WeightScheme::Normalized) {
    throw Error(ErrorCode::WrongScheme, "Ollivier curvature is defined on normalized graphs");
  }
  return kappa_eps(g, u, v, Rational(1));
}

CurvatureValue kappa_lly(const Graph& g, Vertex u, Vertex v, const LlyOptions& options) {
  check_edge(g, u, v);
  Rational eps = make_rational(1, g.max_degree() + 1);
  while (eps > max_epsilon(g, u) || eps > max_epsilon(g, v)) eps /= 2;

  Rational slope_far = kappa_eps(g, u, v, eps) / eps;
  for (int depth = 0; depth <= options.max_halvings; ++depth) {
    const Rational half = eps / 2;
    auto [k_half, plan] = kappa_eps_with_plan(g, u, v, half);
    const Rational slope_near = k_half / half;
    if (slope_near == slope_far) {
      CurvatureValue out{slope_near, std::move(plan), std::nullopt};
      if (options.cross_check && g.scheme() == WeightScheme::Combinatorial) {
        const CurvatureValue other = kappa_transport(g, u, v);
        if (other.value != out.value) {
          throw Error(ErrorCode::NoConvergence, "OT limit " + to_string(out.value) + " disagrees with transport formula " +
                                                    to_string(other.value));
        }
      }
      return out;
    }
    eps = half;
    slope_far = slope_near;
  }
  throw Error(ErrorCode::NoConvergence, "kappa_eps/eps not constant after " + std::to_string(options.max_halvings) +
                                            " halvings on edge " + std::to_string(u) + "-" + std::to_string(v));
}

CurvatureValue kappa_transport(const Graph& g, Vertex u, Vertex v) {
  if (g.scheme() != WeightScheme::Combinatorial) {
    throw Error(ErrorCode::WrongScheme, "transport formula needs the combinatorial scheme");
  }
  check_edge(g, u, v);
  const std::vector<Vertex> ball_u = closed_ball(g, u);
  const std::vector<Vertex> ball_v = closed_ball(g, v);
  std::vector<Vertex> common;
  std::set_intersection(ball_u.begin(), ball_u.end(), ball_v.begin(), ball_v.end(), std::back_inserter(common));
  const std::vector<Vertex> only_u = set_minus(ball_u, ball_v);
  const std::vector<Vertex> only_v = set_minus(ball_v, ball_u);

  Matching best;
  if (only_u.size() <= 3 && only_v.size() <= 3) {
    std::vector<bool> used(only_v.size(), false);
    std::vector<std::pair<Vertex, Vertex>> current;
    enumerate_injections(g, only_u, only_v, 0, used, 0, current, best);
  } else {
    best = assignment_solve(g, only_u, only_v);
  }
  return CurvatureValue{Rational(static_cast<long>(common.size()) - best.cost), std::nullopt,
                        PartialBijection{best.pairs}};
}

std::optional<NegativeCertificate> negative_test(const Graph& g, Vertex u, Vertex v) {
  if (g.scheme() != WeightScheme::Combinatorial) {
    throw Error(ErrorCode::WrongScheme, "negative_test applies to combinatorial graphs");
  }
  check_edge(g, u, v);
  NegativeCertificate cert;
  for (Vertex x : g.neighbors(u)) {
    if (x != v) cert.outer_u.push_back(x);
  }
  for (Vertex x : g.neighbors(v)) {
    if (x != u) cert.outer_v.push_back(x);
  }
  if (cert.outer_u.size() + cert.outer_v.size() < 3) return std::nullopt;
  if (!cert.outer_u.empty() && !cert.outer_v.empty()) {
    int best = std::numeric_limits<int>::max();
    for (Vertex a : cert.outer_u) {
      for (Vertex b : cert.outer_v) best = std::min(best, g.distance(a, b));
    }
    if (best < 3) return std::nullopt;
    cert.distance = best;
  }
  return cert;
}

std::string_view to_string(Engine e) {
  switch (e) {
    case Engine::Auto: return "auto";
    case Engine::Transport: return "transport";
    case Engine::OtLimit: return "ot-limit";
    case Engine::Ollivier: return "ollivier";
  }
  return "?";
}

Engine parse_engine(std::string_view text) {
  if (text == "auto") return Engine::Auto;
  if (text == "transport") return Engine::Transport;
  if (text == "ot-limit") return Engine::OtLimit;
  if (text == "ollivier") return Engine::Ollivier;
  throw Error(ErrorCode::BadParam, "unknown engine '" + std::string(text) + "'");
}

std::vector<EdgeCurvature> edge_curvatures(const Graph& g, Engine engine) {
  if (engine == Engine::Auto) {
    engine = g.scheme() == WeightScheme::Combinatorial ? Engine::Transport : Engine::OtLimit;
  }
  if (engine == Engine::Transport && g.scheme() != WeightScheme::Combinatorial) {
    throw Error(ErrorCode::WrongScheme, "transport engine needs the combinatorial scheme");
  }
  if (engine == Engine::Ollivier && g.scheme() != WeightScheme::Normalized) {
    throw Error(ErrorCode::WrongScheme, "Ollivier curvature is defined on normalized graphs");
  }
  std::vector<EdgeCurvature> out;
  out.reserve(g.size());
  for (const Edge& e : g.edges()) {
    switch (engine) {
      case Engine::Transport:
        out.push_back({e, kappa_transport(g, e.u, e.v)});
        break;
      case Engine::OtLimit:
        out.push_back({e, kappa_lly(g, e.u, e.v)});
        break;
      case Engine::Ollivier: {
        auto [k, plan] = kappa_eps_with_plan(g, e.u, e.v, Rational(1));
        out.push_back({e, CurvatureValue{k, std::move(plan), std::nullopt}});
        break;
      }
      case Engine::Auto:
        break;
    }
  }
  return out;
}

Rational min_curvature(const Graph& g, Engine engine) {
  const auto all = edge_curvatures(g, engine);
  if (all.empty()) return Rational(0);
  Rational best = all.front().curvature.value;
  for (const auto& ec : all) best = std::min(best, ec.curvature.value);
  return best;
}

bool has_nonnegative_curvature(const Graph& g) {
  if (g.scheme() == WeightScheme::Combinatorial) {
    for (const Edge& e : g.edges()) {
      if (negative_test(g, e.u, e.v)) return false;
    }
    for (const Edge& e : g.edges()) {
      if (kappa_transport(g, e.u, e.v).value < 0) return false;
    }
    return true;
  }
  for (const Edge& e : g.edges()) {
    if (kappa_lly(g, e.u, e.v).value < 0) return false;
  }
  return true;
}

std::vector<std::pair<Rational, Rational>> curvature_profile(const Graph& g, Vertex u, Vertex v,
                                                             std::span<const Rational> samples) {
  std::vector<std::pair<Rational, Rational>> out;
  out.reserve(samples.size());
  for (const Rational& eps : samples) out.emplace_back(eps, kappa_eps(g, u, v, eps));
  return out;
}

}  // namespace ricci
