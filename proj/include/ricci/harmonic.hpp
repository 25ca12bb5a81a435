#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ricci/graph.hpp"

namespace ricci {

struct VertexFunction {
  std::vector<Rational> values;  // indexed by vertex
};

/// (1/m(u)) * sum_{v ~ u} w(u,v) (f(v) - f(u)).
Rational laplacian(const Graph& g, const VertexFunction& f, Vertex u);

struct HarmonicProblem {
  Graph graph;
  std::map<Vertex, Rational> boundary;
};

/// Exact solve of Laplacian = 0 on the non-boundary vertices by rational
/// Gaussian elimination. Throws SingularSystem when the boundary does not pin
/// the solution, BadParam on out-of-range boundary vertices, and
/// SelfValidationFailed if the result breaks the maximum principle.
VertexFunction solve_harmonic(const HarmonicProblem& problem);

/// {"graph": edge JSON object or graph6 string, "boundary": {"v": "p/q", ...}}.
HarmonicProblem parse_harmonic_problem(std::string_view text);
nlohmann::json harmonic_solution_json(const HarmonicProblem& problem, const VertexFunction& f);

/// z_{n+1} = 4 z_n - z_{n-1}, terms z_0 .. z_{count-1}.
std::vector<Rational> ladder_difference_sequence(const Rational& z0, const Rational& z1, int count);

struct LiouvilleOptions {
  Rational z0 = 1;
  Rational z1 = 4;
  Rational h0 = 1;
  Rational h1 = 2;
};

/// Ladder window x_0..x_N, y_0..y_N: rungs 0 and N are boundary, with values
/// chosen so that z = g(x) - g(y) starts z0, z1 and h = g(x) + g(y) starts
/// h0, h1. Every check is exact.
struct LiouvilleReport {
  int width = 0;
  std::vector<Rational> z;
  std::vector<Rational> h;
  bool harmonic = false;              // Laplacian is 0 at every interior vertex
  bool matches_recurrence = false;    // solved z equals the iterated recurrence
  bool z_identity = false;            // 4 z_n = z_{n-1} + z_{n+1}, 1 <= n <= N-1
  bool h_identity = false;            // 2 h_n = h_{n-1} + h_{n+1}, 1 <= n <= N-1
  bool h_linear = false;              // h_n = h_0 + n (h_1 - h_0)
  bool growth_applicable = false;     // z_1 >= z_0 > 0
  bool z_monotone = false;            // z_n >= z_{n-1}
  bool growth = false;                // z_{n+1} >= 3 z_n and z_n >= z_1 3^(n-1), n >= 1
  bool max_principle = false;

  bool ok() const;
  nlohmann::json to_json() const;
};

/// Throws BadParam when width < 4.
LiouvilleReport liouville_window_check(int width, const LiouvilleOptions& options = {});

}  // namespace ricci
