#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "ricci/graph.hpp"

namespace ricci {

/// Isomorphism-complete label-free encoding: the graph6 string of the
/// canonically relabelled graph, prefixed by the vertex colour sequence when
/// colours are used.
struct CanonicalForm {
  std::string bytes;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalLabeling {
  std::vector<int> position;  // position[v] = canonical index of vertex v
  CanonicalForm form;
};

/// Works on any simple graph (connected or not). `colors`, when non-empty,
/// gives one non-negative colour per vertex; only colour-preserving
/// isomorphisms are considered.
CanonicalLabeling canonical_labeling(int n, std::span<const Edge> edges, std::span<const int> colors = {});

CanonicalForm canonical_form(int n, std::span<const Edge> edges, std::span<const int> colors = {});
CanonicalForm canonical_form(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

/// Graph with vertex v renamed to position[v].
std::vector<Edge> relabel(std::span<const Edge> edges, std::span<const int> position);

}  // namespace ricci
