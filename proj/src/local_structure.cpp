#include <algorithm>
#include <map>

#include "ricci/classify.hpp"
#include "ricci/data.hpp"
#include "ricci/error.hpp"

namespace ricci {

State parse_state(std::string_view text) {
  if (text == "2") return State::Two;
  if (text == "3-") return State::ThreeMinus;
  if (text == "30") return State::ThreeZero;
  if (text == "3+") return State::ThreePlus;
  throw Error(ErrorCode::BadParam, "unknown state '" + std::string(text) + "'");
}

std::string_view to_string(PairStatus s) {
  switch (s) {
    case PairStatus::Matched: return "matched";
    case PairStatus::ForbiddenPair: return "forbidden-pair";
    case PairStatus::NoPattern: return "no-pattern";
    case PairStatus::ExcludedOnly: return "excluded-only";
  }
  return "?";
}

const LocalCase* PatternLibrary::find(State first, State second) const {
  for (const auto& c : cases) {
    if (c.first == first && c.second == second) return &c;
  }
  return nullptr;
}

bool PatternLibrary::is_impossible(State first, State second) const {
  return std::find(impossible.begin(), impossible.end(), std::pair{first, second}) != impossible.end();
}

namespace {

const std::vector<std::string> kNamed = {"p0", "p1", "p2", "p3", "u1", "u2"};

PatternLibrary load_patterns() {
  const nlohmann::json doc = load_data_json("local_patterns.json");
  PatternLibrary lib;
  try {
    if (doc.at("version").get<int>() != 1) throw Error(ErrorCode::DataFile, "local_patterns.json: unsupported version");
    for (const auto& pair : doc.at("impossible")) {
      lib.impossible.emplace_back(parse_state(pair.at(0).get<std::string>()), parse_state(pair.at(1).get<std::string>()));
    }
    for (const auto& item : doc.at("cases")) {
      LocalCase c;
      c.first = parse_state(item.at("pair").at(0).get<std::string>());
      c.second = parse_state(item.at("pair").at(1).get<std::string>());
      if (lib.find(c.first, c.second) || lib.is_impossible(c.first, c.second))
        throw Error(ErrorCode::DataFile, "local_patterns.json: case listed twice");
      for (const auto& pj : item.at("patterns")) {
        LocalPattern p;
        p.label = pj.at("label").get<std::string>();
        p.excluded_on_long_paths = pj.value("excluded_on_long_paths", false);
        std::vector<std::string> names = kNamed;
        if (pj.contains("extra")) {
          for (const auto& v : pj.at("extra")) {
            p.extra.push_back(PatternVertex{v.at("name").get<std::string>(), v.at("r").get<int>()});
            if (std::find(names.begin(), names.end(), p.extra.back().name) != names.end())
              throw Error(ErrorCode::DataFile, "pattern " + p.label + ": name reused");
            names.push_back(p.extra.back().name);
          }
        }
        for (const auto& e : pj.at("edges")) {
          p.edges.emplace_back(e.at(0).get<std::string>(), e.at(1).get<std::string>());
          for (const auto& end : {p.edges.back().first, p.edges.back().second}) {
            if (std::find(names.begin(), names.end(), end) == names.end())
              throw Error(ErrorCode::DataFile, "pattern " + p.label + ": unknown vertex " + end);
            if ((end == "u1" && c.first == State::Two) || (end == "u2" && c.second == State::Two))
              throw Error(ErrorCode::DataFile, "pattern " + p.label + ": extra neighbour of a state-2 vertex");
          }
        }
        c.patterns.push_back(std::move(p));
      }
      if (c.patterns.empty()) throw Error(ErrorCode::DataFile, "local_patterns.json: case without patterns");
      lib.cases.push_back(std::move(c));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::DataFile, std::string("local_patterns.json: ") + e.what());
  }
  const State all[] = {State::Two, State::ThreeMinus, State::ThreeZero, State::ThreePlus};
  for (State a : all) {
    for (State b : all) {
      if (!lib.find(a, b) && !lib.is_impossible(a, b))
        throw Error(ErrorCode::DataFile, "local_patterns.json: pair (" + std::string(to_string(a)) + "," +
                                             std::string(to_string(b)) + ") not covered");
    }
  }
  return lib;
}

// Backtracking over the extra vertices of `p`.
bool place(const Graph& g, const LocalPattern& p, const std::vector<int>& r, int base, std::size_t next,
           std::map<std::string, Vertex>& at, std::vector<Vertex>& taken) {
  if (next == p.extra.size()) {
    for (const auto& [a, b] : p.edges) {
      if (!g.adjacent(at.at(a), at.at(b))) return false;
    }
    return true;
  }
  const PatternVertex& pv = p.extra[next];
  for (Vertex w = 0; w < g.order(); ++w) {
    if (r[w] != base + pv.r || std::find(taken.begin(), taken.end(), w) != taken.end()) continue;
    // Prune on edges whose endpoints are both placed already.
    at[pv.name] = w;
    bool ok = true;
    for (const auto& [a, b] : p.edges) {
      auto ia = at.find(a);
      auto ib = at.find(b);
      if (ia != at.end() && ib != at.end() && !g.adjacent(ia->second, ib->second)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      taken.push_back(w);
      if (place(g, p, r, base, next + 1, at, taken)) return true;
      taken.pop_back();
    }
    at.erase(pv.name);
  }
  return false;
}

}  // namespace

const PatternLibrary& local_patterns() {
  static const PatternLibrary lib = load_patterns();
  return lib;
}

int LocalStructureReport::violations() const {
  return static_cast<int>(
      std::count_if(pairs.begin(), pairs.end(), [](const PairReport& p) { return p.status != PairStatus::Matched; }));
}

LocalStructureReport forbidden_pair_check(const Graph& g, const GeodesicPath& path) {
  if (!is_geodesic_path(g, path.vertices)) throw Error(ErrorCode::NotGeodesic, "path is not geodesic");
  const StateAssignment states = state_function(g, path);
  const PatternLibrary& lib = local_patterns();
  const int l = path.length();
  std::vector<int> r(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) r[v] = g.distance(path.vertices.front(), v);

  LocalStructureReport report{path, {}};
  for (int i = 0; i + 3 <= l; ++i) {
    const StateEntry& e1 = states.at(i + 1);
    const StateEntry& e2 = states.at(i + 2);
    PairReport pr{i, e1.state, e2.state, PairStatus::Matched, {}};
    if (lib.is_impossible(e1.state, e2.state)) {
      pr.status = PairStatus::ForbiddenPair;
      report.pairs.push_back(std::move(pr));
      continue;
    }
    std::map<std::string, Vertex> named;
    for (int j = 0; j < 4; ++j) named["p" + std::to_string(j)] = path.vertices[i + j];
    if (e1.extra) named["u1"] = *e1.extra;
    if (e2.extra) named["u2"] = *e2.extra;
    std::vector<Vertex> base_taken;
    for (const auto& [name, v] : named) base_taken.push_back(v);

    bool allowed_found = false;
    for (const LocalPattern& p : lib.find(e1.state, e2.state)->patterns) {
      auto at = named;
      auto taken = base_taken;
      if (place(g, p, r, i, 0, at, taken)) {
        pr.matched.push_back(p.label);
        allowed_found = allowed_found || !p.excluded_on_long_paths;
      }
    }
    if (pr.matched.empty()) {
      pr.status = PairStatus::NoPattern;
    } else if (l >= 6 && !allowed_found) {
      pr.status = PairStatus::ExcludedOnly;
    }
    report.pairs.push_back(std::move(pr));
  }
  return report;
}

bool propagation_check(const Graph& g, const GeodesicPath& path) {
  if (path.length() < 4) throw Error(ErrorCode::BadParam, "propagation needs a path of length >= 4");
  const StateAssignment states = state_function(g, path);
  const int l = path.length();
  for (int i = 1; i <= l - 1; ++i) {
    if (states.state(i) == State::ThreePlus) {
      for (int j = 1; j <= i; ++j) {
        if (states.state(j) != State::ThreePlus) return false;
      }
    }
    if (i >= 2 && states.state(i) == State::ThreeMinus) {
      for (int j = i; j <= l - 1; ++j) {
        if (states.state(j) != State::ThreeMinus) return false;
      }
    }
  }
  return true;
}

}  // namespace ricci
