#include "ricci/families.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <set>

#include "ricci/curvature.hpp"
#include "ricci/data.hpp"
#include "ricci/error.hpp"

namespace ricci {

std::string_view to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::Path: return "Path";
    case FamilyKind::Cycle: return "Cycle";
    case FamilyKind::Prism: return "Prism";
    case FamilyKind::MobiusLadder: return "MobiusLadder";
    case FamilyKind::Particular: return "Particular";
    case FamilyKind::QuasiLadder: return "QuasiLadder";
    case FamilyKind::InfiniteWindow: return "InfiniteWindow";
  }
  return "?";
}

nlohmann::json to_json(const FamilyDescriptor& d) {
  nlohmann::json j;
  j["kind"] = std::string(to_string(d.kind));
  switch (d.kind) {
    case FamilyKind::Path: j["length"] = d.size; break;
    case FamilyKind::Cycle: j["n"] = d.size; break;
    case FamilyKind::Prism:
    case FamilyKind::MobiusLadder: j["k"] = d.size; break;
    case FamilyKind::Particular:
      j["n"] = d.size;
      j["variant"] = d.size == 10 ? "reconstruction" : "lemma-text";
      break;
    case FamilyKind::QuasiLadder:
      if (d.quasi_ladder) {
        j["core"] = d.quasi_ladder->core_rungs;
        j["left"] = "L" + std::to_string(d.quasi_ladder->left_form);
        j["right"] = "R" + std::to_string(d.quasi_ladder->right_form);
        j["twisted"] = d.quasi_ladder->twisted;
      }
      break;
    case FamilyKind::InfiniteWindow:
      j["family"] = std::string(1, d.infinite_kind);
      j["width"] = d.size;
      break;
  }
  return j;
}

namespace {

Graph make(int n, std::vector<Edge> edges, WeightScheme scheme) {
  for (Edge& e : edges) {
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  return Graph::from_edges(n, edges, scheme, 3);
}

std::vector<Edge> ladder_edges(int rungs) {
  std::vector<Edge> edges;
  for (int i = 0; i < rungs; ++i) {
    edges.push_back(Edge{2 * i, 2 * i + 1});
    if (i > 0) {
      edges.push_back(Edge{2 * i - 2, 2 * i});
      edges.push_back(Edge{2 * i - 1, 2 * i + 1});
    }
  }
  return edges;
}

// Glues `form` onto roots (a, b); fresh vertices are numbered from n upward.
void glue(const EndForm& form, int a, int b, int& n, std::vector<Edge>& edges) {
  std::vector<int> map(static_cast<std::size_t>(form.vertices));
  map[0] = a;
  map[1] = b;
  for (int j = 2; j < form.vertices; ++j) map[j] = n++;
  for (const Edge& e : form.edges) edges.push_back(Edge{map[e.u], map[e.v]});
}

std::vector<int> template_degrees(int n, const std::vector<Edge>& edges) {
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  for (const Edge& e : edges) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

std::vector<EndForm> load_catalog() {
  const nlohmann::json doc = load_data_json("end_forms.json");
  std::vector<EndForm> out;
  try {
    if (doc.at("version").get<int>() != 1) throw Error(ErrorCode::DataFile, "end_forms.json: unsupported version");
    for (const auto& item : doc.at("forms")) {
      EndForm f;
      f.id = item.at("id").get<int>();
      f.name = item.at("name").get<std::string>();
      f.vertices = item.at("vertices").get<int>();
      f.ollivier = item.at("ollivier").get<bool>();
      if (item.at("attach") != nlohmann::json::array({0, 1}))
        throw Error(ErrorCode::DataFile, "form " + f.name + ": roots must be [0, 1]");
      if (f.id != static_cast<int>(out.size())) throw Error(ErrorCode::DataFile, "form ids must be 0, 1, 2, ...");
      if (f.vertices < 2) throw Error(ErrorCode::DataFile, "form " + f.name + ": too few vertices");
      std::set<Edge> seen;
      for (const auto& e : item.at("edges")) {
        int u = e.at(0).get<int>();
        int v = e.at(1).get<int>();
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= f.vertices || u == v || (u == 0 && v == 1) || !seen.insert(Edge{u, v}).second)
          throw Error(ErrorCode::DataFile, "form " + f.name + ": bad edge");
        f.edges.push_back(Edge{u, v});
      }
      out.push_back(std::move(f));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::DataFile, std::string("end_forms.json: ") + e.what());
  }

  std::set<CanonicalForm> forms;
  for (EndForm& f : out) {
    const auto deg = template_degrees(f.vertices, f.edges);
    for (int v = 0; v < f.vertices; ++v) {
      if (deg[v] > (v < 2 ? 1 : 3)) throw Error(ErrorCode::DataFile, "form " + f.name + ": degree budget exceeded");
    }
    // Every extra vertex must hang off a root.
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(f.vertices));
    for (const Edge& e : f.edges) {
      adj[e.u].push_back(e.v);
      adj[e.v].push_back(e.u);
    }
    std::vector<bool> reached(static_cast<std::size_t>(f.vertices), false);
    std::deque<int> queue{0, 1};
    reached[0] = reached[1] = true;
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (int w : adj[v]) {
        if (!reached[w]) {
          reached[w] = true;
          queue.push_back(w);
        }
      }
    }
    if (std::find(reached.begin(), reached.end(), false) != reached.end())
      throw Error(ErrorCode::DataFile, "form " + f.name + ": vertex not attached to the roots");

    // A form whose root neighbours are adjacent would just be one more rung.
    for (int a : adj[0]) {
      for (int b : adj[1]) {
        if (std::find(adj[a].begin(), adj[a].end(), b) != adj[a].end())
          throw Error(ErrorCode::DataFile, "form " + f.name + " extends the ladder by a rung");
      }
    }

    std::vector<int> colors(static_cast<std::size_t>(f.vertices), 0);
    colors[0] = colors[1] = 1;
    f.rooted = canonical_form(f.vertices, f.edges, colors);
    colors[0] = 1;
    colors[1] = 2;
    const CanonicalForm ordered = canonical_form(f.vertices, f.edges, colors);
    std::swap(colors[0], colors[1]);
    f.root_symmetric = ordered == canonical_form(f.vertices, f.edges, colors);
    if (!forms.insert(f.rooted).second) throw Error(ErrorCode::DataFile, "form " + f.name + " duplicates another entry");
  }
  if (out.empty()) throw Error(ErrorCode::DataFile, "end_forms.json: empty catalog");
  return out;
}

}  // namespace

const std::vector<EndForm>& end_form_catalog() {
  static const std::vector<EndForm> catalog = load_catalog();
  return catalog;
}

const EndForm& end_form(int id) {
  const auto& catalog = end_form_catalog();
  if (id < 0 || id >= static_cast<int>(catalog.size()))
    throw Error(ErrorCode::BadParam, "unknown end form " + std::to_string(id));
  return catalog[static_cast<std::size_t>(id)];
}

int parse_form_id(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == 'L' || digits.front() == 'R' || digits.front() == 'l' || digits.front() == 'r'))
    digits.remove_prefix(1);
  int id = -1;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), id);
  if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size())
    throw Error(ErrorCode::BadParam, "bad end-form id '" + std::string(text) + "'");
  end_form(id);
  return id;
}

Graph gen_path(int length, WeightScheme scheme) {
  if (length < 0) throw Error(ErrorCode::BadParam, "negative path length");
  std::vector<Edge> edges;
  for (int i = 0; i < length; ++i) edges.push_back(Edge{i, i + 1});
  return make(length + 1, edges, scheme);
}

Graph gen_cycle(int n, WeightScheme scheme) {
  if (n < 3) throw Error(ErrorCode::BadParam, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back(Edge{i, (i + 1) % n});
  return make(n, edges, scheme);
}

Graph gen_prism(int k, WeightScheme scheme) {
  if (k < 3) throw Error(ErrorCode::BadParam, "prism needs k >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i) {
    edges.push_back(Edge{i, (i + 1) % k});
    edges.push_back(Edge{k + i, k + (i + 1) % k});
    edges.push_back(Edge{i, k + i});
  }
  return make(2 * k, edges, scheme);
}

Graph gen_mobius(int k, WeightScheme scheme) {
  if (k < 3) throw Error(ErrorCode::BadParam, "Moebius ladder needs k >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < 2 * k; ++i) edges.push_back(Edge{i, (i + 1) % (2 * k)});
  for (int i = 0; i < k; ++i) edges.push_back(Edge{i, i + k});
  return make(2 * k, edges, scheme);
}

namespace {

// v_i = i for 0 <= i <= 6. Reconstruction: u1, u3, u5 = 7, 8, 9. LemmaText: u_i = 6 + i.
std::vector<Edge> particular_edges(ParticularVariant variant, bool close_u1_u5) {
  std::vector<Edge> edges;
  for (int i = 0; i < 6; ++i) edges.push_back(Edge{i, i + 1});
  auto u = [variant](int i) { return variant == ParticularVariant::Reconstruction ? 7 + i / 2 : 6 + i; };
  if (variant == ParticularVariant::Reconstruction) {
    for (int i : {1, 3, 5}) edges.push_back(Edge{i, u(i)});
    edges.push_back(Edge{u(1), u(3)});
    edges.push_back(Edge{u(3), u(5)});
    if (close_u1_u5) edges.push_back(Edge{u(1), u(5)});
  } else {
    for (int i = 1; i <= 5; ++i) edges.push_back(Edge{i, u(i)});
    edges.push_back(Edge{u(1), u(2)});
    edges.push_back(Edge{u(2), u(4)});
    edges.push_back(Edge{u(4), u(5)});
    edges.push_back(Edge{u(5), u(3)});
    edges.push_back(Edge{u(3), u(1)});
  }
  return edges;
}

bool particular_ok(const Graph& g) {
  return g.max_degree() <= 3 && diameter(g) == 6 && has_nonnegative_curvature(g);
}

}  // namespace

Graph gen_particular(ParticularVariant variant, WeightScheme scheme) {
  const int n = variant == ParticularVariant::Reconstruction ? 10 : 12;
  std::string failures;
  for (bool alternative : {false, true}) {
    if (alternative && variant != ParticularVariant::Reconstruction) break;
    const auto edges = particular_edges(variant, alternative);
    try {
      Graph g = make(n, edges, WeightScheme::Combinatorial);
      if (particular_ok(g)) return g.with_scheme(scheme);
      failures += alternative ? " u1~u5 variant fails too;" : " reconstruction fails diameter/degree/curvature;";
    } catch (const Error& e) {
      failures += std::string(" ") + e.what() + ";";
    }
  }
  throw Error(ErrorCode::SelfValidationFailed, "particular graph:" + failures);
}

QuasiLadderSpec normalized(QuasiLadderSpec spec) {
  if (end_form(spec.left_form).root_symmetric || end_form(spec.right_form).root_symmetric) spec.twisted = false;
  return spec;
}

Graph assemble_quasi_ladder(const QuasiLadderSpec& spec, WeightScheme scheme) {
  if (spec.core_rungs < 1) throw Error(ErrorCode::BadParam, "quasi-ladder needs at least one rung");
  const EndForm& left = end_form(spec.left_form);
  const EndForm& right = end_form(spec.right_form);
  const int k = spec.core_rungs;
  std::vector<Edge> edges = ladder_edges(k);
  int n = 2 * k;
  glue(left, 0, 1, n, edges);
  if (spec.twisted) {
    glue(right, 2 * k - 1, 2 * k - 2, n, edges);
  } else {
    glue(right, 2 * k - 2, 2 * k - 1, n, edges);
  }
  for (Edge& e : edges) {
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::vector<Edge> sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error(ErrorCode::SelfValidationFailed, "end forms collide on a one-rung core");
  const auto deg = template_degrees(n, edges);
  if (*std::max_element(deg.begin(), deg.end()) > 3)
    throw Error(ErrorCode::SelfValidationFailed, "end forms overload a root (max degree > 3)");
  return Graph::from_edges(n, edges, scheme, 3);
}

Graph gen_quasi_ladder(const QuasiLadderSpec& spec, WeightScheme scheme) {
  Graph g = assemble_quasi_ladder(spec, WeightScheme::Combinatorial);
  // Sign of the curvature is scheme independent for subcubic graphs.
  if (!has_nonnegative_curvature(g))
    throw Error(ErrorCode::SelfValidationFailed,
                "quasi-ladder core=" + std::to_string(spec.core_rungs) + " L" + std::to_string(spec.left_form) + " R" +
                    std::to_string(spec.right_form) + " has a negatively curved edge");
  return g.with_scheme(scheme);
}

bool ollivier_window_kind(char kind) {
  if (kind >= 'a' && kind <= 'c') return true;
  if (kind < 'd' || kind > 'j') return false;
  return end_form(kind - 'd').ollivier;
}

InfiniteWindow gen_infinite_window(char kind, int width, WeightScheme scheme) {
  if (kind < 'a' || kind > 'j') throw Error(ErrorCode::BadParam, std::string("unknown infinite family '") + kind + "'");
  if (width < 8) throw Error(ErrorCode::BadParam, "window width must be >= 8");
  std::vector<Edge> edges;
  std::vector<int> cut;
  int n = 0;
  if (kind == 'a' || kind == 'b') {
    n = width;
    for (int i = 0; i + 1 < width; ++i) edges.push_back(Edge{i, i + 1});
    cut.push_back(width - 1);
    if (kind == 'a') cut.push_back(0);
  } else {
    n = 2 * width;
    edges = ladder_edges(width);
    cut = {2 * width - 2, 2 * width - 1};
    if (kind == 'c') {
      cut.push_back(0);
      cut.push_back(1);
    } else {
      glue(end_form(kind - 'd'), 0, 1, n, edges);
    }
  }
  InfiniteWindow w{kind, width, make(n, edges, scheme), {}};
  std::vector<int> hops(static_cast<std::size_t>(n), n);
  for (int c : cut) {
    for (int v = 0; v < n; ++v) hops[v] = std::min(hops[v], w.graph.distance(c, v));
  }
  for (const Edge& e : w.graph.edges()) w.interior.push_back(std::min(hops[e.u], hops[e.v]) > 3);
  return w;
}

Graph generate(const FamilyDescriptor& d, WeightScheme scheme) {
  switch (d.kind) {
    case FamilyKind::Path: return gen_path(d.size, scheme);
    case FamilyKind::Cycle: return gen_cycle(d.size, scheme);
    case FamilyKind::Prism: return gen_prism(d.size, scheme);
    case FamilyKind::MobiusLadder: return gen_mobius(d.size, scheme);
    case FamilyKind::Particular:
      return gen_particular(d.size == 12 ? ParticularVariant::LemmaText : ParticularVariant::Reconstruction, scheme);
    case FamilyKind::QuasiLadder:
      if (!d.quasi_ladder) throw Error(ErrorCode::BadParam, "quasi-ladder descriptor without parameters");
      return gen_quasi_ladder(*d.quasi_ladder, scheme);
    case FamilyKind::InfiniteWindow: return gen_infinite_window(d.infinite_kind, d.size, scheme).graph;
  }
  throw Error(ErrorCode::BadParam, "unknown family");
}

}  // namespace ricci
