#include "ricci/transport.hpp"

#include <limits>
#include <optional>

#include "ricci/error.hpp"

namespace ricci {

namespace {

struct Arc {
  int to;
  int rev;
  Integer cap;
  long cost;
  bool infinite;
};

class FlowNetwork {
 public:
  explicit FlowNetwork(int n) : arcs_(static_cast<std::size_t>(n)) {}

  void add_arc(int from, int to, const Integer& cap, long cost, bool infinite = false) {
    arcs_[from].push_back(Arc{to, static_cast<int>(arcs_[to].size()), cap, cost, infinite});
    arcs_[to].push_back(Arc{from, static_cast<int>(arcs_[from].size()) - 1, Integer(0), -cost, false});
  }

  bool has_residual(const Arc& a) const { return a.infinite || a.cap > 0; }

  // Returns the total cost of a maximum flow from s to t of minimum cost.
  Integer min_cost_max_flow(int s, int t) {
    const int n = static_cast<int>(arcs_.size());
    Integer total = 0;
    constexpr long kInf = std::numeric_limits<long>::max() / 4;
    while (true) {
      std::vector<long> dist(static_cast<std::size_t>(n), kInf);
      std::vector<int> prev_node(static_cast<std::size_t>(n), -1);
      std::vector<int> prev_arc(static_cast<std::size_t>(n), -1);
      dist[s] = 0;
      // Bellman-Ford; residual graphs of SSP never contain negative cycles.
      for (int round = 0; round < n; ++round) {
        bool changed = false;
        for (int x = 0; x < n; ++x) {
          if (dist[x] == kInf) continue;
          for (int k = 0; k < static_cast<int>(arcs_[x].size()); ++k) {
            const Arc& a = arcs_[x][k];
            if (!has_residual(a)) continue;
            if (dist[x] + a.cost < dist[a.to]) {
              dist[a.to] = dist[x] + a.cost;
              prev_node[a.to] = x;
              prev_arc[a.to] = k;
              changed = true;
            }
          }
        }
        if (!changed) break;
      }
      if (dist[t] == kInf) break;

      std::optional<Integer> push;
      for (int v = t; v != s; v = prev_node[v]) {
        const Arc& a = arcs_[prev_node[v]][prev_arc[v]];
        if (!a.infinite && (!push || a.cap < *push)) push = a.cap;
      }
      // Source and sink arcs are finite, so a bottleneck always exists.
      for (int v = t; v != s; v = prev_node[v]) {
        Arc& a = arcs_[prev_node[v]][prev_arc[v]];
        if (!a.infinite) a.cap -= *push;
        arcs_[v][a.rev].cap += *push;
      }
      total += *push * dist[t];
    }
    return total;
  }

  const std::vector<Arc>& arcs(int x) const { return arcs_[x]; }

 private:
  std::vector<std::vector<Arc>> arcs_;
};

}  // namespace

TransportationSolution solve_transportation(const TransportationProblem& problem) {
  const int rows = static_cast<int>(problem.supply.size());
  const int cols = static_cast<int>(problem.demand.size());
  Integer total_supply = 0;
  Integer total_demand = 0;
  for (const auto& s : problem.supply) {
    if (s < 0) throw Error(ErrorCode::MassMismatch, "negative supply");
    total_supply += s;
  }
  for (const auto& d : problem.demand) {
    if (d < 0) throw Error(ErrorCode::MassMismatch, "negative demand");
    total_demand += d;
  }
  if (total_supply != total_demand) throw Error(ErrorCode::MassMismatch, "supply and demand differ");

  // Nodes: 0 = source, 1..rows, rows+1..rows+cols, rows+cols+1 = sink.
  const int s = 0;
  const int t = rows + cols + 1;
  FlowNetwork net(rows + cols + 2);
  for (int i = 0; i < rows; ++i) net.add_arc(s, 1 + i, problem.supply[i], 0);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) net.add_arc(1 + i, 1 + rows + j, Integer(0), problem.cost[i][j], true);
  }
  for (int j = 0; j < cols; ++j) net.add_arc(1 + rows + j, t, problem.demand[j], 0);

  TransportationSolution out;
  out.total_cost = net.min_cost_max_flow(s, t);
  out.flow.assign(static_cast<std::size_t>(rows), std::vector<Integer>(static_cast<std::size_t>(cols), 0));
  for (int i = 0; i < rows; ++i) {
    for (const Arc& a : net.arcs(1 + i)) {
      const int j = a.to - 1 - rows;
      if (j < 0 || j >= cols || a.cost < 0) continue;
      // The flow on a forward arc equals the capacity of its reverse arc.
      out.flow[i][j] = net.arcs(a.to)[a.rev].cap;
    }
  }
  return out;
}

}  // namespace ricci
