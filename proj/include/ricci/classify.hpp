#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ricci/families.hpp"
#include "ricci/graph.hpp"

namespace ricci {

/// Membership in the class of subcubic graphs with nonnegative curvature and
/// diameter at least 6. The curvature is taken in the graph's own scheme.
struct ClassGMembership {
  bool max_degree_ok = false;
  Rational min_curvature;
  int diameter = 0;
  bool in_G = false;
};

ClassGMembership membership_G(const Graph& g);

/// Outcome of recognition. `family` is empty for Unrecognized, in which case
/// `note` says which stage gave up.
struct Classification {
  std::optional<FamilyDescriptor> family;
  std::string note;

  bool recognized() const { return family.has_value(); }
};

/// Throws NotInClassG when membership_G fails.
Classification classify(const Graph& g);

/// Recognition without the membership test.
Classification classify_structure(const Graph& g);

/// Variant for normalized graphs with kappa^O >= 0 on every edge. Only paths,
/// cycles, prisms, Moebius ladders and quasi-ladders whose two end forms are
/// Ollivier-compatible are accepted. Throws NotInClassG when the graph is not
/// subcubic, has diameter < 6 or an edge with kappa^O < 0, and WrongScheme on
/// non-normalized input.
Classification classify_ollivier(const Graph& g);

/// Every geodesic cycle of length >= min_length, each listed once, starting
/// at its smallest vertex.
std::vector<std::vector<Vertex>> geodesic_cycles(const Graph& g, int min_length = 3);

/// V = A + B + C1 + C2 with E(A,B) = E(C1,C2) = empty, C1 and C2 cliques and
/// both G(A+C1+C2), G(B+C1+C2) connected.
struct VertexPartition {
  std::vector<Vertex> a;
  std::vector<Vertex> b;
  std::vector<Vertex> c1;
  std::vector<Vertex> c2;
};

struct PartitionCycle {
  std::vector<Vertex> cycle;  // shortest closed walk C1 -> A -> C2 -> B -> C1
  int bound = 0;              // d_{G_A}(C1, C2) + d_{G_B}(C1, C2)
  bool geodesic = false;
};

/// Throws BadParam when the partition breaks one of the conditions above.
PartitionCycle find_geodesic_cycle(const Graph& g, const VertexPartition& partition);

// ---- local structure along geodesic paths ----

struct PatternVertex {
  std::string name;
  int r = 0;  // root distance relative to the window start p0
};

/// Existence template: extra vertices (distinct from p0..p3, u1, u2 and from
/// each other) at fixed root distances, and edges that must be present.
/// Vertex names: p0..p3 for the window, u1/u2 for the extra neighbours of
/// p1/p2, and the names declared in `extra`.
struct LocalPattern {
  std::string label;
  std::vector<PatternVertex> extra;
  std::vector<std::pair<std::string, std::string>> edges;
  bool excluded_on_long_paths = false;
};

struct LocalCase {
  State first = State::Two;
  State second = State::Two;
  std::vector<LocalPattern> patterns;
};

struct PatternLibrary {
  std::vector<LocalCase> cases;
  std::vector<std::pair<State, State>> impossible;

  const LocalCase* find(State first, State second) const;
  bool is_impossible(State first, State second) const;
};

/// Loaded once from `local_patterns.json` in the data directory.
const PatternLibrary& local_patterns();

/// "2", "3-", "30", "3+".
State parse_state(std::string_view text);

enum class PairStatus {
  Matched,
  ForbiddenPair,  // a pair that cannot occur
  NoPattern,      // no template of the case is present
  ExcludedOnly,   // path length >= 6 and only long-path-excluded templates are present
};

std::string_view to_string(PairStatus s);

struct PairReport {
  int position = 0;  // i, the window is v_i .. v_{i+3}
  State first = State::Two;
  State second = State::Two;
  PairStatus status = PairStatus::Matched;
  std::vector<std::string> matched;  // labels of the templates present
};

struct LocalStructureReport {
  GeodesicPath path;
  std::vector<PairReport> pairs;

  int violations() const;
  bool ok() const { return violations() == 0; }
};

/// Checks every window v_i..v_{i+3}, 0 <= i <= l-3. Throws NotGeodesic.
LocalStructureReport forbidden_pair_check(const Graph& g, const GeodesicPath& path);

/// A 3+ at index i forces 3+ on 1..i, a 3- at i >= 2 forces 3- on i..l-1.
/// Throws NotGeodesic, and BadParam when the path is shorter than 4.
bool propagation_check(const Graph& g, const GeodesicPath& path);

}  // namespace ricci
