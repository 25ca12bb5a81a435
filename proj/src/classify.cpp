#include "ricci/classify.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "ricci/canonical.hpp"
#include "ricci/curvature.hpp"
#include "ricci/error.hpp"

namespace ricci {

ClassGMembership membership_G(const Graph& g) {
  ClassGMembership m;
  m.max_degree_ok = g.max_degree() <= 3;
  m.diameter = diameter(g);
  m.min_curvature = min_curvature(g);
  m.in_G = m.max_degree_ok && m.min_curvature >= 0 && m.diameter >= 6;
  return m;
}

namespace {

using Rung = std::pair<Vertex, Vertex>;  // (x_i, y_i)

Classification found(FamilyKind kind, int size) { return Classification{FamilyDescriptor{kind, size, {}, 0}, {}}; }

Classification unrecognized(std::string note) { return Classification{std::nullopt, std::move(note)}; }

const CanonicalForm& particular_form(ParticularVariant variant) {
  static const CanonicalForm a = canonical_form(gen_particular(ParticularVariant::Reconstruction));
  static const CanonicalForm b = canonical_form(gen_particular(ParticularVariant::LemmaText));
  return variant == ParticularVariant::Reconstruction ? a : b;
}

const std::map<CanonicalForm, int>& rooted_catalog() {
  static const std::map<CanonicalForm, int> index = [] {
    std::map<CanonicalForm, int> out;
    for (const EndForm& f : end_form_catalog()) out.emplace(f.rooted, f.id);
    return out;
  }();
  return index;
}

// Extends a rung sequence forward; records the sequence when it cannot grow.
void extend_ladder(const Graph& g, std::vector<Rung>& seq, std::vector<bool>& used,
                   std::vector<std::vector<Rung>>& out) {
  const auto [x, y] = seq.back();
  const Vertex px = seq.size() > 1 ? seq[seq.size() - 2].first : -1;
  const Vertex py = seq.size() > 1 ? seq[seq.size() - 2].second : -1;
  bool grew = false;
  for (Vertex nx : g.neighbors(x)) {
    if (nx == y || nx == px || used[nx]) continue;
    for (Vertex ny : g.neighbors(y)) {
      if (ny == x || ny == py || ny == nx || used[ny] || !g.adjacent(nx, ny)) continue;
      grew = true;
      used[nx] = used[ny] = true;
      seq.emplace_back(nx, ny);
      extend_ladder(g, seq, used, out);
      seq.pop_back();
      used[nx] = used[ny] = false;
    }
  }
  if (!grew) out.push_back(seq);
}

bool extendable_backward(const Graph& g, const std::vector<Rung>& seq) {
  std::set<Vertex> core;
  for (const auto& [x, y] : seq) {
    core.insert(x);
    core.insert(y);
  }
  const auto [x, y] = seq.front();
  for (Vertex nx : g.neighbors(x)) {
    if (core.count(nx)) continue;
    for (Vertex ny : g.neighbors(y)) {
      if (!core.count(ny) && ny != nx && g.adjacent(nx, ny)) return true;
    }
  }
  return false;
}

// Maximal rung sequences, one per unordered reading (reversal and rail swap identified).
std::vector<std::vector<Rung>> maximal_ladders(const Graph& g) {
  std::vector<std::vector<Rung>> raw;
  std::vector<bool> used(static_cast<std::size_t>(g.order()), false);
  for (const Edge& e : g.edges()) {
    for (auto [x, y] : {Rung{e.u, e.v}, Rung{e.v, e.u}}) {
      std::vector<Rung> seq{{x, y}};
      used[x] = used[y] = true;
      extend_ladder(g, seq, used, raw);
      used[x] = used[y] = false;
    }
  }
  std::set<std::vector<Rung>> seen;
  std::vector<std::vector<Rung>> out;
  for (auto& seq : raw) {
    if (extendable_backward(g, seq)) continue;
    std::vector<std::vector<Rung>> variants{seq};
    variants.emplace_back(seq.rbegin(), seq.rend());
    for (int i = 0; i < 2; ++i) {
      auto swapped = variants[i];
      for (auto& r : swapped) std::swap(r.first, r.second);
      variants.push_back(swapped);
    }
    if (seen.insert(*std::min_element(variants.begin(), variants.end())).second) out.push_back(std::move(seq));
  }
  return out;
}

// Catalog id of the rooted piece made of roots (a, b) and `side` vertices, or -1.
int match_end_form(const Graph& g, Vertex a, Vertex b, const std::vector<Vertex>& side) {
  std::vector<Vertex> verts{a, b};
  verts.insert(verts.end(), side.begin(), side.end());
  std::map<Vertex, int> local;
  for (std::size_t i = 0; i < verts.size(); ++i) local[verts[i]] = static_cast<int>(i);
  std::vector<Edge> edges;
  int root_degree[2] = {0, 0};
  for (const Edge& e : g.edges()) {
    auto iu = local.find(e.u);
    auto iv = local.find(e.v);
    if (iu == local.end() || iv == local.end()) continue;
    if (iu->second < 2 && iv->second < 2) continue;  // the rung itself
    if (iu->second < 2) ++root_degree[iu->second];
    if (iv->second < 2) ++root_degree[iv->second];
    edges.push_back(Edge{iu->second, iv->second});
  }
  if (root_degree[0] > 1 || root_degree[1] > 1) return -1;
  std::vector<int> colors(verts.size(), 0);
  colors[0] = colors[1] = 1;
  const auto& index = rooted_catalog();
  auto it = index.find(canonical_form(static_cast<int>(verts.size()), edges, colors));
  return it == index.end() ? -1 : it->second;
}

QuasiLadderSpec mirrored(const QuasiLadderSpec& s) { return QuasiLadderSpec{s.core_rungs, s.right_form, s.left_form, s.twisted}; }

std::optional<QuasiLadderSpec> recognize_quasi_ladder(const Graph& g, const CanonicalForm& target) {
  const int n = g.order();
  std::set<QuasiLadderSpec> tried;
  std::optional<QuasiLadderSpec> best;
  auto consider = [&](int k, int left, int right) {
    for (bool twisted : {false, true}) {
      const QuasiLadderSpec spec = normalized(QuasiLadderSpec{k, left, right, twisted});
      if (!tried.insert(spec).second) continue;
      try {
        if (canonical_form(assemble_quasi_ladder(spec)) != target) continue;
      } catch (const Error&) {
        continue;
      }
      const QuasiLadderSpec key = std::min(spec, normalized(mirrored(spec)));
      if (!best || key < *best) best = key;
    }
  };

  for (const auto& seq : maximal_ladders(g)) {
    const int k = static_cast<int>(seq.size());
    std::vector<int> role(static_cast<std::size_t>(n), -1);  // rung index for core vertices
    for (int i = 0; i < k; ++i) role[seq[i].first] = role[seq[i].second] = i;

    // Components of the remnant with their end (0 left, 1 right, 2 either).
    std::vector<std::vector<Vertex>> comps;
    std::vector<int> comp_end;
    std::vector<bool> done(static_cast<std::size_t>(n), false);
    bool ok = true;
    for (Vertex s = 0; s < n && ok; ++s) {
      if (role[s] >= 0 || done[s]) continue;
      std::vector<Vertex> comp;
      std::set<int> touched;
      std::deque<Vertex> queue{s};
      done[s] = true;
      while (!queue.empty()) {
        const Vertex v = queue.front();
        queue.pop_front();
        comp.push_back(v);
        for (Vertex w : g.neighbors(v)) {
          if (role[w] >= 0) {
            touched.insert(role[w]);
          } else if (!done[w]) {
            done[w] = true;
            queue.push_back(w);
          }
        }
      }
      if (touched.size() != 1 || (*touched.begin() != 0 && *touched.begin() != k - 1)) {
        ok = false;
        break;
      }
      comps.push_back(std::move(comp));
      comp_end.push_back(k == 1 ? 2 : (*touched.begin() == 0 ? 0 : 1));
    }
    if (!ok) continue;

    const std::size_t free_count =
        static_cast<std::size_t>(std::count(comp_end.begin(), comp_end.end(), 2));
    if (free_count > 4) continue;
    for (unsigned mask = 0; mask < (1u << free_count); ++mask) {
      std::vector<Vertex> left, right;
      std::size_t bit = 0;
      for (std::size_t c = 0; c < comps.size(); ++c) {
        const bool to_right = comp_end[c] == 1 || (comp_end[c] == 2 && ((mask >> bit++) & 1u));
        auto& side = to_right ? right : left;
        side.insert(side.end(), comps[c].begin(), comps[c].end());
      }
      const int lf = match_end_form(g, seq.front().first, seq.front().second, left);
      const int rf = match_end_form(g, seq.back().first, seq.back().second, right);
      if (lf >= 0 && rf >= 0) consider(k, lf, rf);
    }
  }
  return best;
}

}  // namespace

Classification classify_structure(const Graph& g) {
  const int n = g.order();
  const auto m = static_cast<int>(g.size());
  const int max_deg = g.max_degree();
  if (max_deg <= 2) {
    if (m == n - 1) return found(FamilyKind::Path, n - 1);
    return found(FamilyKind::Cycle, n);
  }
  if (max_deg > 3) return unrecognized("maximum degree above 3");

  const CanonicalForm form = canonical_form(g);
  bool cubic = true;
  for (Vertex v = 0; v < n; ++v) cubic = cubic && g.degree(v) == 3;
  if (cubic && n % 2 == 0 && n >= 6) {
    if (form == canonical_form(gen_prism(n / 2))) return found(FamilyKind::Prism, n / 2);
    if (form == canonical_form(gen_mobius(n / 2))) return found(FamilyKind::MobiusLadder, n / 2);
  }
  if (n == 10 && form == particular_form(ParticularVariant::Reconstruction)) return found(FamilyKind::Particular, 10);
  if (n == 12 && form == particular_form(ParticularVariant::LemmaText)) return found(FamilyKind::Particular, 12);

  if (auto spec = recognize_quasi_ladder(g, form)) {
    return Classification{FamilyDescriptor{FamilyKind::QuasiLadder, n, spec, 0}, {}};
  }
  return unrecognized(cubic ? "cubic but neither prism nor Moebius ladder"
                            : "no rung decomposition matches the end-form catalog");
}

Classification classify(const Graph& g) {
  const ClassGMembership m = membership_G(g);
  if (!m.in_G) {
    throw Error(ErrorCode::NotInClassG, "max degree ok = " + std::string(m.max_degree_ok ? "yes" : "no") +
                                            ", min curvature = " + to_string(m.min_curvature) +
                                            ", diameter = " + std::to_string(m.diameter));
  }
  return classify_structure(g);
}

Classification classify_ollivier(const Graph& g) {
  if (g.scheme() != WeightScheme::Normalized)
    throw Error(ErrorCode::WrongScheme, "Ollivier classification needs the normalized scheme");
  if (g.max_degree() > 3) throw Error(ErrorCode::NotInClassG, "maximum degree above 3");
  if (diameter(g) < 6) throw Error(ErrorCode::NotInClassG, "diameter below 6");
  const Rational kappa = min_curvature(g, Engine::Ollivier);
  if (kappa < 0) throw Error(ErrorCode::NotInClassG, "Ollivier curvature " + to_string(kappa) + " < 0");

  Classification c = classify_structure(g);
  if (!c.family) return c;
  switch (c.family->kind) {
    case FamilyKind::Path:
    case FamilyKind::Cycle:
    case FamilyKind::Prism:
    case FamilyKind::MobiusLadder: return c;
    case FamilyKind::QuasiLadder: {
      const auto& q = *c.family->quasi_ladder;
      if (end_form(q.left_form).ollivier && end_form(q.right_form).ollivier) return c;
      return unrecognized("quasi-ladder whose end forms are outside the Ollivier list");
    }
    default: return unrecognized(std::string(to_string(c.family->kind)) + " is outside the Ollivier list");
  }
}

namespace {

// DFS over simple paths from `path.front()` that can still lie on a geodesic
// cycle: d(p_i, p_j) >= min(j - i, len + 1 - (j - i)) for the current length.
void cycle_dfs(const Graph& g, int min_length, std::vector<Vertex>& path, std::vector<bool>& on_path,
               std::vector<std::vector<Vertex>>& out) {
  const Vertex s = path.front();
  const Vertex last = path.back();
  const int len = static_cast<int>(path.size()) - 1;
  if (len >= 2 && static_cast<int>(path.size()) >= min_length && g.adjacent(last, s) && path[1] < last &&
      is_geodesic_cycle(g, path)) {
    out.push_back(path);
  }
  for (Vertex w : g.neighbors(last)) {
    if (w <= s || on_path[w]) continue;
    const int next_len = len + 1;
    bool ok = true;
    path.push_back(w);
    for (int i = 0; i < next_len && ok; ++i) {
      for (int j = i + 1; j <= next_len && ok; ++j) {
        ok = g.distance(path[i], path[j]) >= std::min(j - i, next_len + 1 - (j - i));
      }
    }
    if (ok) {
      on_path[w] = true;
      cycle_dfs(g, min_length, path, on_path, out);
      on_path[w] = false;
    }
    path.pop_back();
  }
}

}  // namespace

std::vector<std::vector<Vertex>> geodesic_cycles(const Graph& g, int min_length) {
  std::vector<std::vector<Vertex>> out;
  std::vector<bool> on_path(static_cast<std::size_t>(g.order()), false);
  for (Vertex s = 0; s < g.order(); ++s) {
    std::vector<Vertex> path{s};
    on_path[s] = true;
    cycle_dfs(g, std::max(3, min_length), path, on_path, out);
    on_path[s] = false;
  }
  return out;
}

namespace {

// Shortest s-t path whose inner vertices all carry label `via`; empty if none.
std::vector<Vertex> path_through(const Graph& g, const std::vector<int>& part, Vertex s, Vertex t, int via) {
  std::vector<Vertex> parent(static_cast<std::size_t>(g.order()), -2);
  std::deque<Vertex> queue{s};
  parent[s] = -1;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(v)) {
      if (parent[w] != -2) continue;
      if (w == t && v != s) {
        std::vector<Vertex> out{t};
        for (Vertex x = v; x >= 0; x = parent[x]) out.push_back(x);
        std::reverse(out.begin(), out.end());
        return out;
      }
      if (part[w] != via) continue;
      parent[w] = v;
      queue.push_back(w);
    }
  }
  return {};
}

}  // namespace

PartitionCycle find_geodesic_cycle(const Graph& g, const VertexPartition& p) {
  enum { A, B, C1, C2 };
  const int n = g.order();
  std::vector<int> part(static_cast<std::size_t>(n), -1);
  auto assign = [&](const std::vector<Vertex>& vs, int label) {
    for (Vertex v : vs) {
      if (v < 0 || v >= n || part[v] != -1) throw Error(ErrorCode::BadParam, "partition is not a partition of V");
      part[v] = label;
    }
  };
  assign(p.a, A);
  assign(p.b, B);
  assign(p.c1, C1);
  assign(p.c2, C2);
  if (std::count(part.begin(), part.end(), -1) != 0) throw Error(ErrorCode::BadParam, "partition misses vertices");
  if (p.c1.empty() || p.c2.empty()) throw Error(ErrorCode::BadParam, "C1 and C2 must be non-empty");
  for (const Edge& e : g.edges()) {
    const int a = part[e.u], b = part[e.v];
    if ((a == A && b == B) || (a == B && b == A)) throw Error(ErrorCode::BadParam, "edge between A and B");
    if ((a == C1 && b == C2) || (a == C2 && b == C1)) throw Error(ErrorCode::BadParam, "edge between C1 and C2");
  }
  for (const auto* c : {&p.c1, &p.c2}) {
    for (Vertex u : *c) {
      for (Vertex v : *c) {
        if (u != v && !g.adjacent(u, v)) throw Error(ErrorCode::BadParam, "C1 or C2 is not a clique");
      }
    }
  }

  // Closed walk s -A-> t, t ~ t2 inside C2, t2 -B-> s2, s2 ~ s inside C1.
  std::map<std::pair<Vertex, Vertex>, std::vector<Vertex>> via_a, via_b;
  int dga = -1, dgb = -1;
  for (Vertex s : p.c1) {
    for (Vertex t : p.c2) {
      auto pa = path_through(g, part, s, t, A);
      auto pb = path_through(g, part, t, s, B);
      if (!pa.empty()) {
        const int d = static_cast<int>(pa.size()) - 1;
        if (dga < 0 || d < dga) dga = d;
        via_a[{s, t}] = std::move(pa);
      }
      if (!pb.empty()) {
        const int d = static_cast<int>(pb.size()) - 1;
        if (dgb < 0 || d < dgb) dgb = d;
        via_b[{t, s}] = std::move(pb);
      }
    }
  }
  if (dga < 0 || dgb < 0) throw Error(ErrorCode::BadParam, "G_A or G_B does not connect C1 to C2");

  std::vector<Vertex> best;
  int best_len = -1;
  for (const auto& [st, pa] : via_a) {
    for (const auto& [ts, pb] : via_b) {
      const int len = static_cast<int>(pa.size() + pb.size()) - 2 + (st.second != ts.first) + (ts.second != st.first);
      if (best_len >= 0 && len >= best_len) continue;
      best_len = len;
      best = pa;
      best.insert(best.end(), pb.begin() + (st.second == ts.first ? 1 : 0), pb.end());
      if (ts.second == st.first) best.pop_back();
    }
  }
  PartitionCycle out{best, dga + dgb, false};
  std::set<Vertex> distinct(best.begin(), best.end());
  out.geodesic = distinct.size() == best.size() && best.size() >= 3 && is_geodesic_cycle(g, best);
  return out;
}

}  // namespace ricci
