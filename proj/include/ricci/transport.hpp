#pragma once

#include <vector>

#include "ricci/rational.hpp"

namespace ricci {

/// Balanced transportation problem on integer supplies/demands.
/// cost[i][j] is the unit cost from source i to sink j.
struct TransportationProblem {
  std::vector<Integer> supply;
  std::vector<Integer> demand;
  std::vector<std::vector<long>> cost;
};

struct TransportationSolution {
  Integer total_cost;
  std::vector<std::vector<Integer>> flow;  // flow[i][j]
};

/// Successive shortest augmenting paths with Bellman-Ford on the residual
/// network. Exact: all quantities are big integers. Requires sum(supply) ==
/// sum(demand) and non-negative entries.
TransportationSolution solve_transportation(const TransportationProblem& problem);

}  // namespace ricci
