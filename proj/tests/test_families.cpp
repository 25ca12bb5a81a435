#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "ricci/canonical.hpp"
#include "ricci/classify.hpp"
#include "ricci/curvature.hpp"
#include "ricci/families.hpp"
#include "ricci/graph_io.hpp"

using namespace ricci;

namespace {

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

void check_subcubic(const Graph& g) {
  CHECK(g.max_degree() <= 3);
  for (Vertex v = 0; v < g.order(); ++v) CHECK(g.degree(v) >= 1);
}

std::vector<QuasiLadderSpec> all_pairs(int core) {
  std::vector<QuasiLadderSpec> out;
  const int forms = static_cast<int>(end_form_catalog().size());
  for (int l = 0; l < forms; ++l)
    for (int r = 0; r < forms; ++r) {
      out.push_back({core, l, r, false});
      if (!end_form(l).root_symmetric && !end_form(r).root_symmetric) out.push_back({core, l, r, true});
    }
  return out;
}

}  // namespace

TEST_SUITE("families") {

TEST_CASE("paths and cycles") {
  const Graph p = gen_path(6);
  CHECK(p.order() == 7);
  CHECK(diameter(p) == 6);
  const Graph c = gen_cycle(12);
  CHECK(diameter(c) == 6);
  CHECK(min_curvature(c) == 0);
  for (const Edge& e : c.edges()) CHECK(oracle::kappa_formula(12, to_pairs(c), e.u, e.v) == 0);
  CHECK(code_of([] { gen_cycle(2); }) == ErrorCode::BadParam);
  CHECK(code_of([] { gen_path(-1); }) == ErrorCode::BadParam);
}

TEST_CASE("prisms and Moebius ladders") {
  const Graph p3 = gen_prism(3);
  CHECK(p3.order() == 6);
  CHECK(p3.size() == 9);
  for (Vertex v = 0; v < 6; ++v) CHECK(p3.degree(v) == 3);

  const Graph p10 = gen_prism(10);
  CHECK(diameter(p10) == 6);
  CHECK(min_curvature(p10) >= 0);

  const Graph m12 = gen_mobius(12);
  CHECK(m12.order() == 24);
  CHECK(diameter(m12) >= 6);
  CHECK(min_curvature(m12) >= 0);

  // Moebius(3) is K_{3,3}: no triangles, unlike prism(3)
  CHECK_FALSE(isomorphic(gen_prism(3), gen_mobius(3)));
  CHECK(oracle::isomorphic(6, to_pairs(gen_mobius(3)), {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}}));

  for (int k = 3; k <= 12; ++k) {
    for (const Graph& g : {gen_prism(k), gen_mobius(k)}) {
      std::set<Rational> values;
      for (const auto& ec : edge_curvatures(g)) values.insert(ec.curvature.value);
      CHECK(values.size() <= 2);
      check_subcubic(g);
    }
  }
  CHECK(code_of([] { gen_prism(2); }) == ErrorCode::BadParam);
  CHECK(code_of([] { gen_mobius(2); }) == ErrorCode::BadParam);
}

TEST_CASE("particular graph") {
  const Graph g = gen_particular();
  CHECK(g.order() == 10);
  CHECK(diameter(g) == 6);
  CHECK(min_curvature(g) >= 0);
  CHECK(isomorphic(g, parse_graph6("I???hTKk?")));

  const Graph alt = gen_particular(ParticularVariant::LemmaText);
  CHECK(alt.order() == 12);
  CHECK(diameter(alt) == 6);
  CHECK(min_curvature(alt) >= 0);
  CHECK(isomorphic(alt, parse_graph6("K???WghKaWU?")));

  // the 10-vertex graph is also the one-rung quasi-ladder with hexagon-pendant ends
  CHECK(isomorphic(g, gen_quasi_ladder({1, 6, 6})));
}

TEST_CASE("end-form catalog") {
  const auto& catalog = end_form_catalog();
  REQUIRE(catalog.size() == 7);
  CHECK(catalog[0].name == "bare");
  CHECK(catalog[0].vertices == 2);
  bool pendant = false;
  for (const EndForm& f : catalog) {
    for (int v = 2; v < f.vertices; ++v) {
      int deg = 0;
      for (const Edge& e : f.edges) deg += (e.u == v) + (e.v == v);
      pendant = pendant || deg == 1;
    }
  }
  CHECK(pendant);
  std::set<CanonicalForm> forms;
  for (const EndForm& f : catalog) forms.insert(f.rooted);
  CHECK(forms.size() == catalog.size());

  int ollivier = 0;
  for (const EndForm& f : catalog) ollivier += f.ollivier;
  CHECK(ollivier == 5);

  CHECK(parse_form_id("L3") == 3);
  CHECK(parse_form_id("R6") == 6);
  CHECK(parse_form_id("2") == 2);
  CHECK(code_of([] { parse_form_id("X1"); }) == ErrorCode::BadParam);
}

TEST_CASE("quasi-ladders self-validate") {
  const Graph simple = gen_quasi_ladder({6, 0, 0});
  check_subcubic(simple);
  CHECK(min_curvature(simple) >= 0);
  for (const auto& spec : all_pairs(8)) {
    CAPTURE(spec.left_form);
    CAPTURE(spec.right_form);
    const Graph g = gen_quasi_ladder(spec);
    check_subcubic(g);
    CHECK(min_curvature(g) >= 0);
    CHECK(diameter(g) >= 6);
  }
  CHECK(code_of([] { gen_quasi_ladder({6, 0, 9}); }) == ErrorCode::BadParam);
  CHECK(code_of([] { gen_quasi_ladder({1, 1, 2}); }) == ErrorCode::SelfValidationFailed);
}

TEST_CASE("twisted pendant ladders differ") {
  CHECK_FALSE(isomorphic(gen_quasi_ladder({7, 1, 1, false}), gen_quasi_ladder({7, 1, 1, true})));
  CHECK(isomorphic(gen_quasi_ladder({7, 1, 3, false}), gen_quasi_ladder({7, 1, 3, true})));
  CHECK_FALSE(normalized({7, 1, 3, true}).twisted);
  CHECK(normalized({7, 1, 1, true}).twisted);
}

TEST_CASE("infinite windows") {
  const InfiniteWindow line = gen_infinite_window('a', 20);
  CHECK(line.graph.order() == 20);
  CHECK(isomorphic(line.graph, gen_path(19)));
  for (std::size_t i = 0; i < line.interior.size(); ++i) {
    if (!line.interior[i]) continue;
    const Edge e = line.graph.edges()[i];
    CHECK(kappa_transport(line.graph, e.u, e.v).value == 0);
  }
  const InfiniteWindow ladder = gen_infinite_window('c', 12);
  CHECK(ladder.graph.order() == 24);
  for (char kind = 'a'; kind <= 'j'; ++kind) {
    const InfiniteWindow w = gen_infinite_window(kind, 20);
    check_subcubic(w.graph);
    const auto table = edge_curvatures(w.graph);
    int interior = 0;
    for (std::size_t i = 0; i < table.size(); ++i) {
      if (!w.interior[i]) continue;
      ++interior;
      CHECK(table[i].curvature.value >= 0);
    }
    CHECK(interior > 0);
  }
  CHECK(ollivier_window_kind('h'));
  CHECK_FALSE(ollivier_window_kind('i'));
  CHECK(code_of([] { gen_infinite_window('c', 4); }) == ErrorCode::BadParam);
  CHECK(code_of([] { gen_infinite_window('z', 20); }) == ErrorCode::BadParam);
}

TEST_CASE("descriptors") {
  FamilyDescriptor d{FamilyKind::Prism, 10, std::nullopt, 0};
  CHECK(to_json(d).dump() == R"({"k":10,"kind":"Prism"})");
  CHECK(isomorphic(generate(d), gen_prism(10)));
  FamilyDescriptor q{FamilyKind::QuasiLadder, 0, QuasiLadderSpec{8, 1, 3, false}, 0};
  CHECK(to_json(q)["left"] == "L1");
  CHECK(isomorphic(generate(q), gen_quasi_ladder({8, 1, 3})));
}

}  // TEST_SUITE
