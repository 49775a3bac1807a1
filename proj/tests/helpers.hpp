#pragma once

#include <utility>
#include <vector>

#include "pcog/graph.hpp"

namespace testutil {

// Vertices 0-based, labels one bitstring per vertex ("" list means k = 0).
inline pcog::LabeledGraph make_graph(
    int n, int k, const std::vector<std::pair<int, int>>& edges,
    const std::vector<const char*>& labels = {}) {
  pcog::LabeledGraph g(n, k);
  for (std::size_t v = 0; v < labels.size(); ++v)
    g.labels[v] = pcog::Label::from_string(labels[v]);
  for (const auto& [u, v] : edges) g.set_edge(u, v);
  return g;
}

inline pcog::LabeledGraph path(int n) {
  pcog::LabeledGraph g(n, 0);
  for (int v = 0; v + 1 < n; ++v) g.set_edge(v, v + 1);
  return g;
}

inline pcog::LabeledGraph cycle(int n) {
  pcog::LabeledGraph g = path(n);
  if (n > 2) g.set_edge(0, n - 1);
  return g;
}

// The running example: a-b-c-d with a,d probed into the same set.
inline pcog::LabeledGraph p4_labeled() {
  return make_graph(4, 1, {{0, 1}, {1, 2}, {2, 3}}, {"1", "0", "0", "1"});
}

inline pcog::LabeledGraph p4_zero() { return path(4); }

}  // namespace testutil
