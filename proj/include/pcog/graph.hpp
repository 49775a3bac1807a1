#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pcog/error.hpp"

namespace pcog {

using Vertex = int;

/// Membership vector of one vertex over the k designated independent sets:
/// bit i (0-based) set means the vertex belongs to set N_{i+1}. Bits are
/// packed into 64-bit words so an orthogonality test costs O(k/64).
class Label {
 public:
  Label() = default;
  explicit Label(int length);

  /// Builds a label from a string over {0,1}; "101" sets bits 0 and 2.
  static Label from_string(const std::string& bits);

  int length() const { return length_; }
  bool test(int i) const;
  void set(int i, bool value = true);
  std::string to_string() const;

  const std::vector<std::uint64_t>& words() const { return words_; }

  bool operator==(const Label&) const = default;

 private:
  int length_ = 0;
  std::vector<std::uint64_t> words_;
};

/// True iff a and b share no 1-position; the all-zero label is orthogonal to
/// every other label. Throws Error when the lengths differ.
bool orthogonal(const Label& a, const Label& b);

/// Simple undirected graph with a per-vertex label. Vertices are dense ids
/// 0..n-1 internally; file formats and diagnostics use 1..n.
struct LabeledGraph {
  int n = 0;
  int k = 0;
  std::vector<Label> labels;
  std::vector<std::uint8_t> adj;  // n*n row-major, symmetric, zero diagonal

  LabeledGraph() = default;
  LabeledGraph(int n, int k);

  bool adjacent(Vertex u, Vertex v) const {
    return adj[static_cast<std::size_t>(u) * n + v] != 0;
  }
  void set_edge(Vertex u, Vertex v, bool present = true);

  int edge_count() const;
  std::vector<std::pair<Vertex, Vertex>> edges() const;  // u < v, ascending

  bool operator==(const LabeledGraph&) const = default;
};

/// First problem found, if any. `u`, `v` are 0-based vertices and `set_index`
/// the 1-based independent set, filled in when they apply.
struct ValidationReport {
  bool ok = true;
  std::string message;
  Vertex u = -1;
  Vertex v = -1;
  int set_index = 0;
};

/// Checks structural sanity (label lengths, symmetry, no self-loops) and that
/// every N_i is an independent set.
ValidationReport validate(const LabeledGraph& g);

/// Copy of h with every edge between non-orthogonal endpoints deleted; this
/// is exactly the edge deletion that defines the probe construction. Labels
/// are unchanged. Idempotent; the result always passes validate.
LabeledGraph probe_reduce(const LabeledGraph& h);

}  // namespace pcog
