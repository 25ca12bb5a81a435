#include <doctest.h>

#include <optional>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "ricci/canonical.hpp"
#include "ricci/classify.hpp"
#include "ricci/curvature.hpp"
#include "ricci/enumerate.hpp"
#include "ricci/families.hpp"
#include "ricci/graph_io.hpp"

using namespace ricci;

namespace {

Graph make(int n, std::vector<Edge> edges, WeightScheme s = WeightScheme::Combinatorial) {
  return build_graph(n, edges, s);
}

oracle::EdgeList to_pairs(const Graph& g) {
  oracle::EdgeList out;
  for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an ricci::Error");
  return ErrorCode::BadParam;
}

Graph shuffled(const Graph& g, std::mt19937& rng) {
  std::vector<int> perm(static_cast<std::size_t>(g.order()));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return make(g.order(), relabel(g.edges(), perm), g.scheme());
}

// Every generator instance in the class, with its expected kind.
std::vector<std::pair<Graph, FamilyKind>> family_instances() {
  std::vector<std::pair<Graph, FamilyKind>> out;
  for (int l = 6; l <= 16; ++l) out.emplace_back(gen_path(l), FamilyKind::Path);
  for (int n = 12; n <= 18; ++n) out.emplace_back(gen_cycle(n), FamilyKind::Cycle);
  for (int k = 3; k <= 15; ++k) {
    if (diameter(gen_prism(k)) >= 6) out.emplace_back(gen_prism(k), FamilyKind::Prism);
    if (diameter(gen_mobius(k)) >= 6) out.emplace_back(gen_mobius(k), FamilyKind::MobiusLadder);
  }
  out.emplace_back(gen_particular(), FamilyKind::Particular);
  out.emplace_back(gen_particular(ParticularVariant::LemmaText), FamilyKind::Particular);
  return out;
}

}  // namespace

TEST_SUITE("classify") {

TEST_CASE("membership") {
  const auto p = membership_G(gen_path(6));
  CHECK(p.in_G);
  CHECK(p.min_curvature == 0);
  CHECK(p.diameter == 6);
  CHECK(membership_G(gen_cycle(12)).in_G);
  const auto k4 = membership_G(make(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));
  CHECK_FALSE(k4.in_G);
  CHECK(k4.diameter == 1);
  CHECK_FALSE(membership_G(gen_path(5)).in_G);
  CHECK(code_of([] { classify(gen_cycle(11)); }) == ErrorCode::NotInClassG);
}

TEST_CASE("canonical forms") {
  const Graph c6 = gen_cycle(6);
  const Graph c6b = make(6, {{0, 2}, {2, 4}, {4, 1}, {1, 3}, {3, 5}, {5, 0}});
  CHECK(canonical_form(c6) == canonical_form(c6b));
  const Graph p7 = gen_path(6);
  const Graph p7r = make(7, {{6, 5}, {5, 4}, {4, 3}, {3, 2}, {2, 1}, {1, 0}});
  CHECK(canonical_form(p7) == canonical_form(p7r));
  CHECK(canonical_form(gen_prism(3)) != canonical_form(gen_mobius(3)));

  std::mt19937 rng(5);
  for (int n = 5; n <= 8; ++n) {
    const auto level = enumerate_connected(n);
    for (int trial = 0; trial < 60; ++trial) {
      const Graph a = level[rng() % level.size()].to_graph();
      const Graph b = trial % 3 == 0 ? shuffled(a, rng) : shuffled(level[rng() % level.size()].to_graph(), rng);
      CHECK((canonical_form(a) == canonical_form(b)) == oracle::isomorphic(n, to_pairs(a), to_pairs(b)));
    }
  }
}

TEST_CASE("round trips") {
  for (const auto& [g, kind] : family_instances()) {
    const Classification c = classify(g);
    REQUIRE(c.recognized());
    CHECK(c.family->kind == kind);
    CHECK(isomorphic(generate(*c.family), g));
  }
  CHECK(to_json(*classify(gen_cycle(14)).family).dump() == R"({"kind":"Cycle","n":14})");
  CHECK(to_json(*classify(gen_prism(10)).family).dump() == R"({"k":10,"kind":"Prism"})");

  int ladders = 0;
  for (int core = 1; core <= 10; ++core) {
    const int forms = static_cast<int>(end_form_catalog().size());
    for (int l = 0; l < forms; ++l) {
      for (int r = 0; r < forms; ++r) {
        for (bool twisted : {false, true}) {
          const QuasiLadderSpec spec{core, l, r, twisted};
          if (normalized(spec) != spec) continue;
          std::optional<Graph> built;
          try {
            built = gen_quasi_ladder(spec);
          } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::SelfValidationFailed);
            CHECK(core == 1);
            continue;
          }
          const Graph& g = *built;
          if (!membership_G(g).in_G) continue;
          CAPTURE(core);
          CAPTURE(l);
          CAPTURE(r);
          const Classification c = classify(g);
          REQUIRE(c.recognized());
          if (spec == QuasiLadderSpec{1, 6, 6, false}) {
            CHECK(c.family->kind == FamilyKind::Particular);
          } else {
            CHECK(c.family->kind == FamilyKind::QuasiLadder);
          }
          CHECK(isomorphic(generate(*c.family), g));
          ++ladders;
        }
      }
    }
  }
  CHECK(ladders > 300);
}

TEST_CASE("label invariance") {
  std::mt19937 rng(17);
  std::vector<Graph> graphs{gen_particular(), gen_quasi_ladder({5, 1, 1, true}), gen_quasi_ladder({6, 4, 6}),
                            gen_prism(11), gen_mobius(12), gen_cycle(13), gen_path(9)};
  for (const Graph& g : graphs) {
    const auto want = classify(g).family;
    for (int trial = 0; trial < 3; ++trial) CHECK(classify(shuffled(g, rng)).family == want);
  }
}

TEST_CASE("Ollivier variant") {
  const Graph ok = gen_quasi_ladder({8, 1, 3}, WeightScheme::Normalized);
  const Classification c = classify_ollivier(ok);
  REQUIRE(c.recognized());
  CHECK(c.family->kind == FamilyKind::QuasiLadder);
  CHECK(code_of([] { classify_ollivier(gen_quasi_ladder({8, 1, 3})); }) == ErrorCode::WrongScheme);

  // kappa >= 0 but kappa^O < 0 somewhere: in the class, outside the Ollivier list
  const Graph pent = gen_quasi_ladder({8, 5, 0});
  CHECK(classify(pent).family->kind == FamilyKind::QuasiLadder);
  const Graph pent_n = pent.with_scheme(WeightScheme::Normalized);
  Rational lo = 1;
  for (const auto& ec : edge_curvatures(pent_n, Engine::Ollivier)) lo = std::min(lo, ec.curvature.value);
  CHECK(lo < 0);
  CHECK(code_of([&] { classify_ollivier(pent_n); }) == ErrorCode::NotInClassG);

  const Graph c12 = gen_cycle(12, WeightScheme::Normalized);
  for (const Edge& e : c12.edges()) CHECK(kappa_ollivier(c12, e.u, e.v) >= 0);
  CHECK(classify_ollivier(c12).family->kind == FamilyKind::Cycle);
}

TEST_CASE("gap graph outside the families") {
  // subdivided triangular prism with two pendants: in the class, matches no family
  const Graph g = parse_graph6("K??GhGWIA@oW");
  const auto m = membership_G(g);
  CHECK(m.in_G);
  CHECK(m.min_curvature == 0);
  CHECK(m.diameter == 6);
  for (const Edge& e : g.edges()) CHECK(kappa_transport(g, e.u, e.v).value == kappa_lly(g, e.u, e.v).value);
  CHECK_FALSE(classify(g).recognized());
  for (const auto& p : all_diameter_paths(g)) CHECK(forbidden_pair_check(g, p).ok());
}

TEST_CASE("local structure") {
  const Graph p9 = gen_path(8);
  const auto r = forbidden_pair_check(p9, diameter_path(p9));
  CHECK(r.ok());
  for (const auto& pr : r.pairs) {
    CHECK(pr.first == State::Two);
    CHECK(pr.second == State::Two);
    CHECK(pr.matched == std::vector<std::string>{"a"});
  }
  CHECK(r.pairs.size() == 6);

  // (3-zero, 3-zero) pairs on a triangle-capped quasi-ladder use u1 ~ u2
  const Graph ql = gen_quasi_ladder({8, 3, 3});
  int level_pairs = 0;
  for (const auto& p : all_diameter_paths(ql)) {
    const auto rep = forbidden_pair_check(ql, p);
    CHECK(rep.ok());
    for (const auto& pr : rep.pairs) {
      if (pr.first != State::ThreeZero || pr.second != State::ThreeZero) continue;
      ++level_pairs;
      CHECK(std::count(pr.matched.begin(), pr.matched.end(), "a") == 1);
    }
  }
  CHECK(level_pairs > 0);

  // negative control: a (2, 3+) pair needs a negatively curved edge
  const Graph bad = make(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}});
  CHECK(min_curvature(bad) < 0);
  const GeodesicPath path{{0, 1, 2, 3, 4}};
  const auto rep = forbidden_pair_check(bad, path);
  CHECK_FALSE(rep.ok());
  CHECK(rep.pairs[0].status == PairStatus::ForbiddenPair);
  CHECK_FALSE(propagation_check(bad, path));
  CHECK(code_of([&] { propagation_check(bad, GeodesicPath{{0, 1, 2}}); }) == ErrorCode::BadParam);

  const Graph pendant = gen_quasi_ladder({8, 1, 0});
  for (const auto& p : all_diameter_paths(pendant)) CHECK(propagation_check(pendant, p));

  const auto& lib = local_patterns();
  CHECK(lib.is_impossible(State::Two, State::ThreePlus));
  CHECK(lib.is_impossible(State::ThreeMinus, State::Two));
  CHECK(lib.find(State::ThreePlus, State::ThreeMinus)->patterns.size() == 7);
  CHECK(lib.cases.size() + lib.impossible.size() == 16);
}

TEST_CASE("local structure on families") {
  for (const auto& [g, kind] : family_instances()) {
    for (const auto& p : all_diameter_paths(g)) {
      CHECK(forbidden_pair_check(g, p).ok());
      if (p.length() >= 4) CHECK(propagation_check(g, p));
    }
  }
}

TEST_CASE("geodesic cycles") {
  const auto c12 = geodesic_cycles(gen_cycle(12), 8);
  REQUIRE(c12.size() == 1);
  CHECK(c12[0].size() == 12);

  // prism(10) is in the class and its rims are geodesic 10-cycles, so a
  // geodesic cycle of length >= 8 need not have length >= 11 here
  const Graph p10 = gen_prism(10);
  CHECK(membership_G(p10).in_G);
  const auto cycles = geodesic_cycles(p10, 8);
  std::vector<std::size_t> lengths;
  for (const auto& c : cycles) lengths.push_back(c.size());
  CHECK(std::count(lengths.begin(), lengths.end(), 10u) == 2);
  CHECK(*std::min_element(lengths.begin(), lengths.end()) == 10);

  for (int k : {11, 12}) {
    for (const Graph& g : {gen_prism(k), gen_mobius(k)}) {
      if (!membership_G(g).in_G) continue;
      for (const auto& c : geodesic_cycles(g, 8)) CHECK(c.size() >= 11);
    }
  }

  // partition of C_12 into two arcs joined at 0 and 6
  VertexPartition part;
  part.c1 = {0};
  part.c2 = {6};
  for (int i = 1; i <= 5; ++i) part.a.push_back(i);
  for (int i = 7; i <= 11; ++i) part.b.push_back(i);
  const PartitionCycle pc = find_geodesic_cycle(gen_cycle(12), part);
  CHECK(pc.cycle.size() == 12);
  CHECK(pc.bound == 12);
  CHECK(pc.geodesic);
  part.b.pop_back();
  CHECK(code_of([&] { find_geodesic_cycle(gen_cycle(12), part); }) == ErrorCode::BadParam);
}

}  // TEST_SUITE
