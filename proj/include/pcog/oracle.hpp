#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "pcog/cotree.hpp"
#include "pcog/graph.hpp"

namespace pcog {

/// Quartic scan for an induced path on four vertices. Labels are ignored.
/// The witness (a,b,c,d) has edges ab, bc, cd and non-edges ac, ad, bd.
std::optional<std::array<Vertex, 4>> find_induced_p4(const LabeledGraph& g);

enum class MismatchKind : std::uint8_t { MissingEdge, IllegalFill };

/// First discrepancy between g and probe_reduce(realize(t)), scanning pairs
/// u<v in row-major order. MissingEdge: g has the edge, the reduced realized
/// graph does not. IllegalFill: the reduced realized graph has an edge g
/// lacks.
struct EmbeddingMismatch {
  MismatchKind kind;
  Vertex u;
  Vertex v;
};

/// nullopt iff t embeds g: realize(t) restricted by probe reduction under g's
/// labels reproduces g exactly. Throws Error on a malformed certificate
/// (wrong leaf count or leaf set), which is distinct from a mismatch.
std::optional<EmbeddingMismatch> embedding_mismatch(const LabeledGraph& g,
                                                    const Cotree& t);

bool verify_embedding(const LabeledGraph& g, const Cotree& t);

/// All non-adjacent pairs with non-orthogonal labels, u<v, ascending. These
/// are the only edges an embedding may add.
std::vector<std::pair<Vertex, Vertex>> fill_candidates(const LabeledGraph& g);

inline constexpr int kDefaultMaxFill = 20;

enum class OracleStatus : std::uint8_t { Accepted, Rejected, BudgetExceeded };

struct OracleResult {
  OracleStatus status = OracleStatus::Rejected;
  /// Accepted only: the first fill set found, ordered u<v ascending. May be
  /// empty (the graph is already a cograph).
  std::vector<std::pair<Vertex, Vertex>> fill;
  /// Number of fill candidates, reported for all outcomes.
  std::size_t candidate_count = 0;
};

/// Brute-force ground truth: enumerates subsets of the fill candidates by
/// increasing cardinality, lexicographic within a cardinality, and accepts at
/// the first subset whose addition leaves the graph P4-free. More than
/// max_fill candidates is BudgetExceeded, a distinct outcome. Throws Error on
/// invalid graphs or negative max_fill.
///
/// The search is partitioned across OpenMP workers by subset rank; the result
/// is identical to the serial reference regardless of scheduling.
OracleResult oracle_is_kprobe(const LabeledGraph& g,
                              int max_fill = kDefaultMaxFill);

/// Single-threaded reference enumeration, kept as the comparison baseline.
OracleResult oracle_is_kprobe_serial(const LabeledGraph& g,
                                     int max_fill = kDefaultMaxFill);

}  // namespace pcog
