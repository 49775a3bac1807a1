#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pcog/cotree.hpp"
#include "pcog/graph.hpp"

namespace pcog {

enum class TwinKind : std::uint8_t { Union, Join };

/// Work counters accumulated by recognize: twin_tests counts twin-pair
/// evaluations, pair_probes adjacency lookups, orth_tests orthogonality
/// checks.
struct RecognitionCounters {
  std::uint64_t twin_tests = 0;
  std::uint64_t pair_probes = 0;
  std::uint64_t orth_tests = 0;
};

enum class RecognitionStatus : std::uint8_t { Accepted, Rejected };

/// On acceptance `cotree` holds the certificate (empty for the 0-vertex
/// graph). On rejection `remaining` holds the surviving vertex sets, which
/// partition V and contain no twin pair relative to the input graph plus
/// `fills`; no minimality is claimed. `fills` lists the edges recognize added
/// to its working copy, in insertion order, smaller endpoint first. On
/// acceptance the realized cotree's edge set equals the input edges plus
/// `fills` exactly.
struct RecognitionResult {
  RecognitionStatus status = RecognitionStatus::Rejected;
  Cotree cotree;
  std::vector<std::vector<Vertex>> remaining;
  std::vector<std::pair<Vertex, Vertex>> fills;
  RecognitionCounters counters;

  bool accepted() const { return status == RecognitionStatus::Accepted; }
};

/// Label-aware module test: true iff every vertex z outside `xs` either has
/// no neighbor in `xs` or is adjacent to every x in `xs` whose label is
/// orthogonal to z's. Throws Error when `xs` is empty, out of range, or has
/// duplicates.
bool is_module(const LabeledGraph& g, const std::vector<Vertex>& xs);

/// Twin test for two disjoint vertex sets: Union when there is no cross edge,
/// Join when every orthogonal cross pair is an edge and at least one cross
/// edge exists; in either case the merged set must also pass is_module.
/// Throws Error when the sets are empty or overlap.
std::optional<TwinKind> are_twins(const LabeledGraph& g,
                                  const std::vector<Vertex>& xs,
                                  const std::vector<Vertex>& ys);

/// Greedy twin-merging recognition over a working copy of the input graph.
/// Starts from singleton subtrees in ascending vertex order, repeatedly scans
/// ordered position pairs (i,j), i<j, lexicographically, and merges the first
/// twin pair found (entry i keeps the merged set, entry j is deleted). After
/// each merge, every outside vertex with at least one neighbor in the merged
/// set is made adjacent to all of it in the working copy; the added edges are
/// recorded in `fills` and seen by all later twin tests, so each surviving
/// subtree keeps all-or-none adjacency from every vertex outside it. A twin
/// pair is only merged while the surviving subtrees remain completable to a
/// single cotree (checked by recursively splitting them into components of
/// required cross edges, else components of excluded cross pairs); pairs
/// whose merge would strand the rest are skipped. The scan restarts after
/// every merge. Accepts when one subtree remains, rejects when a full scan
/// finds no mergeable twin. Fully deterministic. Throws Error when
/// validate(g) fails.
RecognitionResult recognize(const LabeledGraph& g);

}  // namespace pcog
