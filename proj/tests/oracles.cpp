#include "oracles.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

namespace oracle {

std::vector<std::vector<int>> bfs_distances(int n, const EdgeList& edges) {
  std::vector<std::vector<int>> adj(n);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<std::vector<int>> d(n, std::vector<int>(n, -1));
  for (int s = 0; s < n; ++s) {
    std::queue<int> q;
    q.push(s);
    d[s][s] = 0;
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (int y : adj[x]) {
        if (d[s][y] < 0) {
          d[s][y] = d[s][x] + 1;
          q.push(y);
        }
      }
    }
  }
  return d;
}

namespace {

struct Tableau {
  std::vector<std::vector<Q>> t;  // rows x (cols + 1), last column is the rhs
  std::vector<int> basis;
  int cols = 0;

  void pivot(int r, int c) {
    const Q p = t[r][c];
    for (auto& x : t[r]) x /= p;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (static_cast<int>(i) == r || t[i][c] == 0) continue;
      const Q f = t[i][c];
      for (int j = 0; j <= cols; ++j) t[i][j] -= f * t[r][j];
    }
    basis[r] = c;
  }

  // Minimizes cost . x over columns [0, allowed).
  void run(const std::vector<Q>& cost, int allowed) {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < allowed && enter < 0; ++j) {
        Q reduced = cost[j];
        for (std::size_t r = 0; r < t.size(); ++r) reduced -= cost[basis[r]] * t[r][j];
        if (reduced < 0) enter = j;
      }
      if (enter < 0) return;
      int leave = -1;
      Q best;
      for (std::size_t r = 0; r < t.size(); ++r) {
        if (t[r][enter] <= 0) continue;
        const Q ratio = t[r][cols] / t[r][enter];
        if (leave < 0 || ratio < best || (ratio == best && basis[r] < basis[leave])) {
          leave = static_cast<int>(r);
          best = ratio;
        }
      }
      if (leave < 0) throw std::runtime_error("unbounded transport LP");
      pivot(leave, enter);
    }
  }
};

}  // namespace

Q transport_lp(const std::vector<std::vector<int>>& d, const std::vector<Q>& a, const std::vector<Q>& b) {
  const int m = static_cast<int>(a.size());
  const int k = static_cast<int>(b.size());
  if (std::accumulate(a.begin(), a.end(), Q(0)) != std::accumulate(b.begin(), b.end(), Q(0)))
    throw std::runtime_error("mass mismatch");
  const int vars = m * k;
  const int rows = m + k - 1;  // the last column constraint is implied
  Tableau tab;
  tab.cols = vars + rows;
  tab.t.assign(rows, std::vector<Q>(tab.cols + 1, Q(0)));
  tab.basis.resize(rows);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < k; ++j) tab.t[i][i * k + j] = 1;
    tab.t[i][tab.cols] = a[i];
  }
  for (int j = 0; j + 1 < k; ++j) {
    for (int i = 0; i < m; ++i) tab.t[m + j][i * k + j] = 1;
    tab.t[m + j][tab.cols] = b[j];
  }
  for (int r = 0; r < rows; ++r) {
    tab.t[r][vars + r] = 1;
    tab.basis[r] = vars + r;
  }
  std::vector<Q> phase1(tab.cols, Q(0));
  for (int r = 0; r < rows; ++r) phase1[vars + r] = 1;
  tab.run(phase1, tab.cols);
  for (int r = 0; r < rows; ++r) {
    if (tab.basis[r] < vars) continue;
    if (tab.t[r][tab.cols] != 0) throw std::runtime_error("infeasible transport LP");
    for (int j = 0; j < vars; ++j) {
      if (tab.t[r][j] != 0) {
        tab.pivot(r, j);
        break;
      }
    }
  }
  std::vector<Q> cost(tab.cols, Q(0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < k; ++j) cost[i * k + j] = d[i][j];
  tab.run(cost, vars);
  Q total = 0;
  for (int r = 0; r < rows; ++r) total += cost[tab.basis[r]] * tab.t[r][tab.cols];
  return total;
}

std::vector<Q> lazy_measure(int n, const EdgeList& edges, int u, const Q& eps, bool normalized) {
  std::vector<int> deg(n, 0);
  for (auto [x, y] : edges) {
    ++deg[x];
    ++deg[y];
  }
  std::vector<Q> mu(n, Q(0));
  const Q per = normalized ? Q(eps / deg[u]) : eps;
  for (auto [x, y] : edges) {
    if (x == u) mu[y] += per;
    if (y == u) mu[x] += per;
  }
  mu[u] = 1 - per * deg[u];
  return mu;
}

Q kappa_eps(int n, const EdgeList& edges, int u, int v, const Q& eps, bool normalized) {
  const auto d = bfs_distances(n, edges);
  const auto mu = lazy_measure(n, edges, u, eps, normalized);
  const auto nu = lazy_measure(n, edges, v, eps, normalized);
  std::vector<int> src, dst;
  for (int x = 0; x < n; ++x) {
    if (mu[x] != 0) src.push_back(x);
    if (nu[x] != 0) dst.push_back(x);
  }
  std::vector<std::vector<int>> sub(src.size(), std::vector<int>(dst.size()));
  std::vector<Q> a, b;
  for (std::size_t i = 0; i < src.size(); ++i) {
    a.push_back(mu[src[i]]);
    for (std::size_t j = 0; j < dst.size(); ++j) sub[i][j] = d[src[i]][dst[j]];
  }
  for (int y : dst) b.push_back(nu[y]);
  return 1 - transport_lp(sub, a, b) / d[u][v];
}

Q kappa_limit(int n, const EdgeList& edges, int u, int v, bool normalized) {
  std::vector<int> deg(n, 0);
  for (auto [x, y] : edges) {
    ++deg[x];
    ++deg[y];
  }
  const int big = normalized ? 1 : std::max(deg[u], deg[v]);
  const Q eps(1, 4 * (big + 1));
  const Q s1 = kappa_eps(n, edges, u, v, eps, normalized) / eps;
  const Q half = eps / 2;
  const Q s2 = kappa_eps(n, edges, u, v, half, normalized) / half;
  if (s1 != s2) throw std::runtime_error("kappa_eps not linear near 0");
  return s1;
}

int kappa_formula(int n, const EdgeList& edges, int u, int v) {
  const auto d = bfs_distances(n, edges);
  auto ball = [&](int x) {
    std::set<int> s;
    for (int y = 0; y < n; ++y)
      if (d[x][y] >= 0 && d[x][y] <= 1) s.insert(y);
    return s;
  };
  const auto bu = ball(u), bv = ball(v);
  int common = 0;
  std::vector<int> only_u, only_v;
  for (int x : bu) {
    if (bv.count(x)) {
      ++common;
    } else {
      only_u.push_back(x);
    }
  }
  for (int x : bv)
    if (!bu.count(x)) only_v.push_back(x);
  int best = 1 << 30;
  std::vector<bool> used(only_v.size(), false);
  std::function<void(std::size_t, int, int)> rec = [&](std::size_t i, int cost, int matched) {
    if (i == only_u.size()) {
      const int unmatched_v = static_cast<int>(only_v.size()) - matched;
      best = std::min(best, cost + unmatched_v);
      return;
    }
    rec(i + 1, cost + 1, matched);  // left out of D(phi)
    for (std::size_t j = 0; j < only_v.size(); ++j) {
      if (used[j]) continue;
      used[j] = true;
      rec(i + 1, cost + d[only_u[i]][only_v[j]] - 1, matched + 1);
      used[j] = false;
    }
  };
  rec(0, 0, 0);
  return common - best;
}

EdgeList decode_graph6(const std::string& s, int& n) {
  if (s.empty() || s[0] < 63 || s[0] > 125) throw std::runtime_error("bad graph6 size byte");
  n = s[0] - 63;
  std::vector<int> bits;
  for (std::size_t i = 1; i < s.size(); ++i) {
    const int x = s[i] - 63;
    for (int b = 5; b >= 0; --b) bits.push_back((x >> b) & 1);
  }
  EdgeList edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if (k >= bits.size()) throw std::runtime_error("graph6 too short");
      if (bits[k]) edges.emplace_back(i, j);
    }
  }
  return edges;
}

namespace {

std::vector<std::vector<bool>> matrix(int n, const EdgeList& edges) {
  std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
  for (auto [u, v] : edges) m[u][v] = m[v][u] = true;
  return m;
}

}  // namespace

bool isomorphic(int n, const EdgeList& a, const EdgeList& b) {
  if (a.size() != b.size()) return false;
  const auto ma = matrix(n, a), mb = matrix(n, b);
  std::vector<int> da(n, 0), db(n, 0);
  for (auto [u, v] : a) ++da[u], ++da[v];
  for (auto [u, v] : b) ++db[u], ++db[v];
  std::vector<int> map(n, -1);
  std::vector<bool> taken(n, false);
  std::function<bool(int)> rec = [&](int x) {
    if (x == n) return true;
    for (int y = 0; y < n; ++y) {
      if (taken[y] || da[x] != db[y]) continue;
      bool ok = true;
      for (int p = 0; p < x && ok; ++p) ok = ma[x][p] == mb[y][map[p]];
      if (!ok) continue;
      map[x] = y;
      taken[y] = true;
      if (rec(x + 1)) return true;
      taken[y] = false;
    }
    return false;
  };
  return rec(0);
}

long count_connected_subcubic(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
  std::set<std::uint64_t> seen;
  std::vector<int> deg(n, 0);
  std::vector<int> chosen;

  auto connected = [&]() {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (int e : chosen) parent[find(pairs[e].first)] = find(pairs[e].second);
    for (int x = 0; x < n; ++x)
      if (find(x) != find(0)) return false;
    return true;
  };
  // Smallest adjacency code over relabelings that sort vertices by degree.
  auto canonical = [&]() {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) { return deg[x] > deg[y] || (deg[x] == deg[y] && x < y); });
    const auto m = [&] {
      std::vector<std::vector<bool>> a(n, std::vector<bool>(n, false));
      for (int e : chosen) a[pairs[e].first][pairs[e].second] = a[pairs[e].second][pairs[e].first] = true;
      return a;
    }();
    std::uint64_t best = ~0ull;
    // Permute within blocks of equal degree.
    std::vector<int> perm = order;
    std::function<void(int)> blocks = [&](int start) {
      if (start == n) {
        std::uint64_t code = 0;
        for (int j = 1; j < n; ++j)
          for (int i = 0; i < j; ++i) code = (code << 1) | (m[perm[i]][perm[j]] ? 1u : 0u);
        best = std::min(best, code);
        return;
      }
      int end = start;
      while (end < n && deg[perm[end]] == deg[perm[start]]) ++end;
      std::sort(perm.begin() + start, perm.begin() + end);
      do {
        blocks(end);
      } while (std::next_permutation(perm.begin() + start, perm.begin() + end));
    };
    blocks(0);
    return best;
  };
  std::function<void(std::size_t)> rec = [&](std::size_t e) {
    if (e == pairs.size()) {
      if (connected()) seen.insert(canonical());
      return;
    }
    rec(e + 1);
    auto [u, v] = pairs[e];
    if (deg[u] < 3 && deg[v] < 3) {
      ++deg[u], ++deg[v];
      chosen.push_back(static_cast<int>(e));
      rec(e + 1);
      chosen.pop_back();
      --deg[u], --deg[v];
    }
  };
  rec(0);
  return static_cast<long>(seen.size());
}

}  // namespace oracle
