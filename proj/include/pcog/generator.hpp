#pragma once

#include <cstdint>

#include "pcog/cotree.hpp"
#include "pcog/graph.hpp"

namespace pcog {

/// SplitMix64, fixed here so seeded output is stable across platforms and
/// standard-library versions. Update rule per step:
///   state += 0x9E3779B97F4A7C15
///   z = state
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   output = z ^ (z >> 31)
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();

  /// Uniform in [0, bound) up to modulo bias; bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform in [0, 1) with 53 random bits.
  double next_unit();

 private:
  std::uint64_t state_;
};

struct GeneratedInstance {
  LabeledGraph graph;
  Cotree witness;
};

/// Random labeled instance with a known certificate: samples a binary tree
/// shape by recursive uniform splits, tags each internal node Join with
/// probability join_prob (else Union), assigns each vertex to each set
/// independently with membership_prob, and probe-reduces the realized
/// cograph under those labels. The witness always embeds the graph. Throws
/// Error on n < 1, k < 0, or probabilities outside [0, 1].
GeneratedInstance generate(int n, int k, double membership_prob,
                           double join_prob, std::uint64_t seed);

/// Random graph with random labels, with every edge between non-orthogonal
/// endpoints deleted so the result always validates. No acceptance guarantee;
/// meant as differential-test input.
LabeledGraph generate_random_labeled(int n, int k, double edge_prob,
                                     double membership_prob,
                                     std::uint64_t seed);

}  // namespace pcog
