#include "ricci/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <thread>

#include "ricci/classify.hpp"
#include "ricci/curvature.hpp"
#include "ricci/enumerate.hpp"
#include "ricci/graph_io.hpp"

namespace ricci {

EnumerationConfig default_config(std::string_view task) {
  EnumerationConfig c;
  if (task == "classification") {
    c.n_max = 12;
  } else if (task == "scheme-equivalence") {
    c.n_max = 10;
  } else if (task == "engines") {
    c.n_max = 9;
  } else if (task == "ollivier") {
    c.n_max = 10;
    c.scheme = WeightScheme::Normalized;
  } else {
    throw Error(ErrorCode::BadParam, "unknown verification task '" + std::string(task) + "'");
  }
  return c;
}

bool VerificationReport::verified() const {
  return std::all_of(failures.begin(), failures.end(), [](const auto& kv) { return kv.second.empty(); });
}

long VerificationReport::total(long LevelCounts::*field) const {
  long sum = 0;
  for (const auto& l : levels) sum += l.*field;
  return sum;
}

nlohmann::json VerificationReport::to_json(bool with_timing) const {
  nlohmann::json j;
  j["task"] = task;
  j["config"] = {{"n_max", config.n_max},
                 {"max_degree", config.max_degree},
                 {"min_diameter", config.min_diameter},
                 {"require_kappa_nonneg", config.require_kappa_nonneg},
                 {"scheme", std::string(ricci::to_string(config.scheme))},
                 {"jobs", config.jobs}};
  j["levels"] = nlohmann::json::array();
  for (const auto& l : levels) {
    j["levels"].push_back({{"n", l.n},
                           {"generated", l.generated},
                           {"after_filter", l.after_filter},
                           {"by_kind", l.by_kind},
                           {"edges_checked", l.edges_checked}});
  }
  j["failures"] = failures;
  j["unrecognized"] = failures.count("unrecognized") ? failures.at("unrecognized") : std::vector<std::string>{};
  j["survivor_count"] = survivors.size();
  j["verified"] = verified();
  if (with_timing) j["wall_seconds"] = wall_seconds;
  return j;
}

namespace {

struct GraphOutcome {
  bool survivor = false;
  std::string kind;
  long edges_checked = 0;
  std::vector<std::pair<std::string, std::string>> failures;
};

void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& body) {
  jobs = std::max(1, jobs);
  if (jobs == 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  for (int w = 0; w < jobs; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = static_cast<std::size_t>(w); i < count; i += static_cast<std::size_t>(jobs)) body(i);
    });
  }
  for (auto& t : pool) t.join();
}

using Check = std::function<GraphOutcome(const Graph&)>;

// Enumerates levels 1..n_max, runs `check` on every graph and merges the
// outcomes in canonical order.
VerificationReport harness(std::string task, const EnumerationConfig& config, const Check& check) {
  if (config.n_max < 1 || config.max_degree < 1) throw Error(ErrorCode::BadParam, "need n_max >= 1 and max_degree >= 1");
  if (config.n_max > config.order_limit)
    throw Error(ErrorCode::ResourceExceeded, "n_max = " + std::to_string(config.n_max) + " exceeds the limit " +
                                                 std::to_string(config.order_limit));
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.task = std::move(task);
  report.config = config;
  const auto levels = enumerate_levels(config.n_max, config.max_degree, config.jobs);
  for (const auto& level : levels) {
    LevelCounts counts;
    counts.n = level.empty() ? 0 : level.front().n;
    counts.generated = static_cast<long>(level.size());
    std::vector<GraphOutcome> outcomes(level.size());
    parallel_for(level.size(), config.jobs, [&](std::size_t i) { outcomes[i] = check(level[i].to_graph(config.scheme)); });
    for (std::size_t i = 0; i < level.size(); ++i) {
      const GraphOutcome& o = outcomes[i];
      const std::string g6 = encode_graph6(level[i].n, level[i].edges);
      counts.edges_checked += o.edges_checked;
      if (o.survivor) {
        ++counts.after_filter;
        report.survivors.push_back(g6);
        if (!o.kind.empty()) ++counts.by_kind[o.kind];
      }
      for (const auto& [key, why] : o.failures) report.failures[key].push_back(why.empty() ? g6 : g6 + " " + why);
    }
    report.levels.push_back(std::move(counts));
  }
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string edge_text(const Edge& e) { return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")"; }

}  // namespace

VerificationReport verify_classification(const EnumerationConfig& config) {
  auto check = [&](const Graph& g) {
    GraphOutcome o;
    if (g.max_degree() > 3 || diameter(g) < config.min_diameter) return o;
    if (config.require_kappa_nonneg && !has_nonnegative_curvature(g)) return o;
    o.survivor = true;
    const Classification c = classify_structure(g);
    if (c.family) {
      o.kind = std::string(to_string(c.family->kind));
    } else {
      o.kind = "Unrecognized";
      o.failures.emplace_back("unrecognized", "");
    }
    for (const GeodesicPath& p : all_diameter_paths(g)) {
      const LocalStructureReport r = forbidden_pair_check(g, p);
      for (const PairReport& pr : r.pairs) {
        if (pr.status == PairStatus::Matched) continue;
        o.failures.emplace_back("local-structure", std::string(to_string(pr.status)) + " at " +
                                                       std::to_string(pr.position) + " (" +
                                                       std::string(to_string(pr.first)) + "," +
                                                       std::string(to_string(pr.second)) + ")");
      }
      if (p.length() >= 4 && !propagation_check(g, p)) o.failures.emplace_back("propagation", "");
    }
    const auto cycles = geodesic_cycles(g, 8);
    if (!cycles.empty()) {
      const bool family_ok = c.family && (c.family->kind == FamilyKind::Cycle || c.family->kind == FamilyKind::Prism ||
                                          c.family->kind == FamilyKind::MobiusLadder);
      std::size_t shortest = cycles.front().size();
      for (const auto& cyc : cycles) shortest = std::min(shortest, cyc.size());
      if (!family_ok || shortest < 11)
        o.failures.emplace_back("geodesic-cycle", "shortest long geodesic cycle " + std::to_string(shortest));
    }
    return o;
  };
  return harness("classification", config, check);
}

VerificationReport verify_scheme_equivalence(const EnumerationConfig& config) {
  auto check = [](const Graph& g) {
    GraphOutcome o;
    const Graph gc = g.with_scheme(WeightScheme::Combinatorial);
    const Graph gn = g.with_scheme(WeightScheme::Normalized);
    const auto kc = edge_curvatures(gc, Engine::Transport);
    const auto kn = edge_curvatures(gn, Engine::OtLimit);
    bool nonneg_c = true, nonneg_n = true;
    for (std::size_t i = 0; i < kc.size(); ++i) {
      const Edge e = kc[i].edge;
      nonneg_c = nonneg_c && kc[i].curvature.value >= 0;
      nonneg_n = nonneg_n && kn[i].curvature.value >= 0;
      const int d = gc.degree(e.u);
      if (d == gc.degree(e.v) && kc[i].curvature.value != Rational(d) * kn[i].curvature.value) {
        o.failures.emplace_back("degree-scaling", edge_text(e) + " kappa_C=" + to_string(kc[i].curvature.value) +
                                                      " kappa_N=" + to_string(kn[i].curvature.value));
      }
    }
    o.edges_checked = static_cast<long>(kc.size());
    o.survivor = nonneg_c;
    o.kind = nonneg_c ? "nonnegative" : "";
    if (nonneg_c != nonneg_n) {
      o.failures.emplace_back("counterexample", std::string("combinatorial ") + (nonneg_c ? ">= 0" : "< 0") +
                                                    ", normalized " + (nonneg_n ? ">= 0" : "< 0"));
    }
    return o;
  };
  return harness("scheme-equivalence", config, check);
}

VerificationReport cross_check_engines(const EnumerationConfig& config) {
  auto check = [](const Graph& g) {
    GraphOutcome o;
    const Graph gc = g.with_scheme(WeightScheme::Combinatorial);
    for (const Edge& e : gc.edges()) {
      const Rational a = kappa_transport(gc, e.u, e.v).value;
      const Rational b = kappa_lly(gc, e.u, e.v).value;
      if (a != b)
        o.failures.emplace_back("discrepancy", edge_text(e) + " transport=" + to_string(a) + " lly=" + to_string(b));
      ++o.edges_checked;
    }
    return o;
  };
  return harness("engines", config, check);
}

VerificationReport verify_ollivier_classification(const EnumerationConfig& config) {
  if (config.scheme != WeightScheme::Normalized)
    throw Error(ErrorCode::WrongScheme, "Ollivier curvature is defined on normalized graphs");
  auto check = [&](const Graph& g) {
    GraphOutcome o;
    const Graph gn = g.with_scheme(WeightScheme::Normalized);
    const auto ko = edge_curvatures(gn, Engine::Ollivier);
    bool nonneg = true;
    for (const auto& ec : ko) {
      nonneg = nonneg && ec.curvature.value >= 0;
      if (ec.curvature.value < 0) continue;
      const Rational k = kappa_lly(gn, ec.edge.u, ec.edge.v).value;
      ++o.edges_checked;
      if (k < 0)
        o.failures.emplace_back("implication", edge_text(ec.edge) + " kappa^O=" + to_string(ec.curvature.value) +
                                                   " kappa=" + to_string(k));
    }
    if (!nonneg || gn.max_degree() > 3 || diameter(gn) < config.min_diameter) return o;
    o.survivor = true;
    const Classification c = classify_ollivier(gn);
    if (c.family) {
      o.kind = std::string(to_string(c.family->kind));
    } else {
      o.kind = "Unrecognized";
      o.failures.emplace_back("unrecognized", c.note);
    }
    return o;
  };
  return harness("ollivier", config, check);
}

VerificationReport run_verification(std::string_view task, const EnumerationConfig& config) {
  if (task == "classification") return verify_classification(config);
  if (task == "scheme-equivalence") return verify_scheme_equivalence(config);
  if (task == "engines") return cross_check_engines(config);
  if (task == "ollivier") return verify_ollivier_classification(config);
  throw Error(ErrorCode::BadParam, "unknown verification task '" + std::string(task) + "'");
}

}  // namespace ricci
