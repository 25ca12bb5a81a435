#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ricci/graph.hpp"

namespace ricci {

struct EnumerationConfig {
  int n_max = 12;
  int max_degree = 3;
  int min_diameter = 6;
  bool require_kappa_nonneg = true;
  WeightScheme scheme = WeightScheme::Combinatorial;
  int jobs = 1;
  /// Largest n_max accepted before ResourceExceeded.
  int order_limit = 14;
};

/// Desk-scale defaults: classification 12, scheme-equivalence 10, engines 9,
/// ollivier 10. Throws BadParam for an unknown task.
EnumerationConfig default_config(std::string_view task);

struct LevelCounts {
  int n = 0;
  long generated = 0;
  long after_filter = 0;
  std::map<std::string, long> by_kind;
  long edges_checked = 0;
};

/// Failures are keyed by check name ("unrecognized", "local-structure",
/// "counterexample", ...) and list graph6 strings, optionally followed by a
/// space and a short reason.
struct VerificationReport {
  std::string task;
  EnumerationConfig config;
  std::vector<LevelCounts> levels;
  std::map<std::string, std::vector<std::string>> failures;
  std::vector<std::string> survivors;  // graph6, one per line in the sidecar
  double wall_seconds = 0;

  bool verified() const;
  long total(long LevelCounts::*field) const;
  /// Timing is left out when `with_timing` is false so runs can be compared byte for byte.
  nlohmann::json to_json(bool with_timing = true) const;
};

/// Survivors of max degree <= 3, diameter >= min_diameter and kappa >= 0 are
/// classified. Also runs the local-structure checker and the propagation
/// check on every diameter path and checks that geodesic cycles of length >= 8
/// only occur in cycles, prisms and Moebius ladders, with length >= 11.
VerificationReport verify_classification(const EnumerationConfig& config);

/// sign(min kappa_C >= 0) = sign(min kappa_N >= 0) on every connected
/// subcubic graph, and kappa_C = deg * kappa_N on edges with equal end degrees.
VerificationReport verify_scheme_equivalence(const EnumerationConfig& config);

/// kappa_transport = kappa_lly on every edge.
VerificationReport cross_check_engines(const EnumerationConfig& config);

/// Normalized graphs with kappa^O >= 0 everywhere and diameter >= min_diameter
/// go through classify_ollivier. kappa^O >= 0 => kappa >= 0 is checked on
/// every edge of every enumerated graph. Throws WrongScheme unless
/// config.scheme is normalized.
VerificationReport verify_ollivier_classification(const EnumerationConfig& config);

VerificationReport run_verification(std::string_view task, const EnumerationConfig& config);

}  // namespace ricci
