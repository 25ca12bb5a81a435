#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ricci/canonical.hpp"
#include "ricci/graph.hpp"

namespace ricci {

/// Canonically labelled connected graph produced by the generator.
struct GeneratedGraph {
  int n = 0;
  std::vector<Edge> edges;
  CanonicalForm form;

  Graph to_graph(WeightScheme scheme = WeightScheme::Combinatorial) const;
};

/// Exactly one representative per isomorphism class of connected simple
/// graphs on n vertices with maximum degree <= max_degree, sorted by
/// canonical form. Canonical augmentation: a child G + x is kept iff
/// removing the canonical deletion vertex of the child (a non-cut vertex,
/// chosen by a degree invariant and then by canonical position) yields a
/// graph isomorphic to the parent; siblings are deduplicated by canonical form.
std::vector<GeneratedGraph> enumerate_connected(int n, int max_degree = 3, int jobs = 1);

/// All levels 1..n_max at once (levels[k - 1] holds order k).
std::vector<std::vector<GeneratedGraph>> enumerate_levels(int n_max, int max_degree = 3, int jobs = 1);

/// Subcubic shorthand.
std::vector<Graph> enumerate_subcubic(int n, int jobs = 1);

}  // namespace ricci
