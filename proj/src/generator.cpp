#include "pcog/generator.hpp"

#include <cmath>

namespace pcog {

std::uint64_t SplitMix64::next() {
  state_ += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  if (bound == 0) throw Error("below: bound must be positive");
  return next() % bound;
}

double SplitMix64::next_unit() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

namespace {

void check_prob(double p, const char* name) {
  if (std::isnan(p) || p < 0.0 || p > 1.0)
    throw Error(std::string(name) + " must lie in [0, 1]");
}

std::vector<Label> draw_labels(SplitMix64& rng, int n, int k,
                               double membership_prob) {
  std::vector<Label> labels(n, Label(k));
  for (int v = 0; v < n; ++v)
    for (int i = 0; i < k; ++i)
      if (rng.next_unit() < membership_prob) labels[v].set(i);
  return labels;
}

}  // namespace

GeneratedInstance generate(int n, int k, double membership_prob,
                           double join_prob, std::uint64_t seed) {
  if (n < 1) throw Error("generate: n must be at least 1");
  if (k < 0) throw Error("generate: k must be nonnegative");
  check_prob(membership_prob, "membership_prob");
  check_prob(join_prob, "join_prob");

  SplitMix64 rng(seed);
  Cotree witness;

  // Same draw order as the direct recursion: split size, node kind, left
  // subtree, right subtree. Leaves are numbered left to right.
  struct Frame {
    int m;
    int stage = 0;
    int left_size = 0;
    NodeKind kind = NodeKind::Union;
    int left = -1;
  };
  std::vector<Frame> stack;
  stack.push_back({n, 0, 0, NodeKind::Union, -1});
  int next_leaf = 0;
  int ret = -1;
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.m == 1) {
      ret = witness.add_leaf(next_leaf++);
      stack.pop_back();
      continue;
    }
    if (f.stage == 0) {
      f.left_size = 1 + static_cast<int>(rng.below(f.m - 1));
      f.kind = rng.next_unit() < join_prob ? NodeKind::Join : NodeKind::Union;
      f.stage = 1;
      stack.push_back({f.left_size, 0, 0, NodeKind::Union, -1});
      continue;
    }
    if (f.stage == 1) {
      f.left = ret;
      f.stage = 2;
      stack.push_back({f.m - f.left_size, 0, 0, NodeKind::Union, -1});
      continue;
    }
    ret = witness.add_internal(f.kind, f.left, ret);
    stack.pop_back();
  }
  witness.set_root(ret);

  LabeledGraph h = realize(witness, n);
  h.k = k;
  h.labels = draw_labels(rng, n, k, membership_prob);
  return {probe_reduce(h), std::move(witness)};
}

LabeledGraph generate_random_labeled(int n, int k, double edge_prob,
                                     double membership_prob,
                                     std::uint64_t seed) {
  if (n < 1) throw Error("generate_random_labeled: n must be at least 1");
  if (k < 0) throw Error("generate_random_labeled: k must be nonnegative");
  check_prob(edge_prob, "edge_prob");
  check_prob(membership_prob, "membership_prob");

  SplitMix64 rng(seed);
  LabeledGraph g(n, k);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.next_unit() < edge_prob) g.set_edge(u, v);
  g.labels = draw_labels(rng, n, k, membership_prob);
  return probe_reduce(g);
}

}  // namespace pcog
