#include "pcog/oracle.hpp"

#include <algorithm>
#include <cstddef>
#include <numeric>

namespace pcog {

namespace {

std::optional<std::array<Vertex, 4>> find_p4_raw(const std::uint8_t* adj,
                                                 int n) {
  auto at = [&](int u, int v) {
    return adj[static_cast<std::size_t>(u) * n + v] != 0;
  };
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const int eab = at(a, b);
      for (int c = b + 1; c < n; ++c) {
        const int eac = at(a, c);
        const int ebc = at(b, c);
        for (int d = c + 1; d < n; ++d) {
          const int ead = at(a, d);
          const int ebd = at(b, d);
          const int ecd = at(c, d);
          if (eab + eac + ead + ebc + ebd + ecd != 3) continue;
          const int deg[4] = {eab + eac + ead, eab + ebc + ebd,
                              eac + ebc + ecd, ead + ebd + ecd};
          // 3 edges with every degree in {1,2} pins down a path.
          bool path = true;
          for (int i = 0; i < 4; ++i)
            if (deg[i] == 0 || deg[i] == 3) {
              path = false;
              break;
            }
          if (!path) continue;
          const Vertex verts[4] = {a, b, c, d};
          const int e[4][4] = {{0, eab, eac, ead},
                               {eab, 0, ebc, ebd},
                               {eac, ebc, 0, ecd},
                               {ead, ebd, ecd, 0}};
          int p = 0;
          while (deg[p] != 1) ++p;  // smallest-id endpoint
          int q = 0;
          while (!e[p][q]) ++q;
          int r = 0;
          while (r == p || !e[q][r]) ++r;
          const int s = 6 - p - q - r;
          return std::array<Vertex, 4>{verts[p], verts[q], verts[r], verts[s]};
        }
      }
    }
  }
  return std::nullopt;
}

constexpr std::uint64_t kNoRank = ~std::uint64_t{0};

// Saturates at 2^64-1; callers only trust exact values for m <= 62.
std::uint64_t binom_capped(int m, int f) {
  if (f < 0 || f > m) return 0;
  if (f > m - f) f = m - f;
  unsigned __int128 c = 1;
  for (int i = 1; i <= f; ++i) {
    c = c * static_cast<unsigned>(m - f + i) / static_cast<unsigned>(i);
    if (c >= kNoRank) return kNoRank;
  }
  return static_cast<std::uint64_t>(c);
}

// Lexicographic combination of size f from {0..m-1} at the given rank.
void unrank_combination(std::uint64_t rank, int m, int f,
                        std::vector<int>& comb) {
  comb.resize(f);
  int v = 0;
  for (int p = 0; p < f; ++p) {
    for (;; ++v) {
      const std::uint64_t cnt = binom_capped(m - 1 - v, f - 1 - p);
      if (rank < cnt) break;
      rank -= cnt;
    }
    comb[p] = v++;
  }
}

bool next_combination(std::vector<int>& comb, int m) {
  const int f = static_cast<int>(comb.size());
  for (int i = f - 1; i >= 0; --i) {
    if (comb[i] < m - f + i) {
      ++comb[i];
      for (int j = i + 1; j < f; ++j) comb[j] = comb[j - 1] + 1;
      return true;
    }
  }
  return false;
}

bool p4_free_with(std::vector<std::uint8_t>& adj, int n,
                  const std::vector<std::pair<Vertex, Vertex>>& fstar,
                  const std::vector<int>& comb) {
  for (int idx : comb) {
    const auto [u, v] = fstar[idx];
    adj[static_cast<std::size_t>(u) * n + v] = 1;
    adj[static_cast<std::size_t>(v) * n + u] = 1;
  }
  const bool ok = !find_p4_raw(adj.data(), n).has_value();
  for (int idx : comb) {
    const auto [u, v] = fstar[idx];
    adj[static_cast<std::size_t>(u) * n + v] = 0;
    adj[static_cast<std::size_t>(v) * n + u] = 0;
  }
  return ok;
}

std::vector<std::pair<Vertex, Vertex>> pairs_of(
    const std::vector<std::pair<Vertex, Vertex>>& fstar,
    const std::vector<int>& comb) {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(comb.size());
  for (int idx : comb) out.push_back(fstar[idx]);
  return out;
}

// Shared prologue; returns true when the outcome is already decided.
bool oracle_setup(const LabeledGraph& g, int max_fill,
                  std::vector<std::pair<Vertex, Vertex>>& fstar,
                  OracleResult& res) {
  if (max_fill < 0) throw Error("max_fill must be nonnegative");
  const ValidationReport rep = validate(g);
  if (!rep.ok) throw Error(rep.message);
  fstar = fill_candidates(g);
  res.candidate_count = fstar.size();
  if (fstar.size() > static_cast<std::size_t>(max_fill)) {
    res.status = OracleStatus::BudgetExceeded;
    return true;
  }
  return false;
}

void search_serial(const LabeledGraph& g,
                   const std::vector<std::pair<Vertex, Vertex>>& fstar,
                   OracleResult& res) {
  const int m = static_cast<int>(fstar.size());
  std::vector<std::uint8_t> adj = g.adj;
  std::vector<int> comb;
  for (int f = 0; f <= m; ++f) {
    comb.resize(f);
    std::iota(comb.begin(), comb.end(), 0);
    while (true) {
      if (p4_free_with(adj, g.n, fstar, comb)) {
        res.status = OracleStatus::Accepted;
        res.fill = pairs_of(fstar, comb);
        return;
      }
      if (!next_combination(comb, m)) break;
    }
  }
  res.status = OracleStatus::Rejected;
}

}  // namespace

std::optional<std::array<Vertex, 4>> find_induced_p4(const LabeledGraph& g) {
  return find_p4_raw(g.adj.data(), g.n);
}

std::optional<EmbeddingMismatch> embedding_mismatch(const LabeledGraph& g,
                                                    const Cotree& t) {
  if (g.labels.size() != static_cast<std::size_t>(g.n) ||
      g.adj.size() != static_cast<std::size_t>(g.n) * g.n)
    throw Error("graph is internally inconsistent");
  LabeledGraph h = realize(t, g.n);
  h.k = g.k;
  h.labels = g.labels;
  const LabeledGraph r = probe_reduce(h);
  for (Vertex u = 0; u < g.n; ++u) {
    for (Vertex v = u + 1; v < g.n; ++v) {
      const bool want = g.adjacent(u, v);
      const bool got = r.adjacent(u, v);
      if (want == got) continue;
      return EmbeddingMismatch{
          want ? MismatchKind::MissingEdge : MismatchKind::IllegalFill, u, v};
    }
  }
  return std::nullopt;
}

bool verify_embedding(const LabeledGraph& g, const Cotree& t) {
  return !embedding_mismatch(g, t).has_value();
}

std::vector<std::pair<Vertex, Vertex>> fill_candidates(const LabeledGraph& g) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < g.n; ++u)
    for (Vertex v = u + 1; v < g.n; ++v)
      if (!g.adjacent(u, v) && !orthogonal(g.labels[u], g.labels[v]))
        out.emplace_back(u, v);
  return out;
}

OracleResult oracle_is_kprobe_serial(const LabeledGraph& g, int max_fill) {
  std::vector<std::pair<Vertex, Vertex>> fstar;
  OracleResult res;
  if (oracle_setup(g, max_fill, fstar, res)) return res;
  search_serial(g, fstar, res);
  return res;
}

OracleResult oracle_is_kprobe(const LabeledGraph& g, int max_fill) {
#ifndef _OPENMP
  return oracle_is_kprobe_serial(g, max_fill);
#else
  std::vector<std::pair<Vertex, Vertex>> fstar;
  OracleResult res;
  if (oracle_setup(g, max_fill, fstar, res)) return res;

  const int m = static_cast<int>(fstar.size());
  if (m > 62) {
    // Rank arithmetic would saturate; such searches are infeasible anyway.
    search_serial(g, fstar, res);
    return res;
  }

  constexpr std::uint64_t kBlock = 4096;
  for (int f = 0; f <= m; ++f) {
    const std::uint64_t total = binom_capped(m, f);
    for (std::uint64_t start = 0; start < total; start += kBlock) {
      const std::uint64_t end = std::min(total, start + kBlock);
      std::uint64_t found = kNoRank;
#pragma omp parallel
      {
        std::vector<std::uint8_t> adj = g.adj;
        std::vector<int> comb;
        std::uint64_t local = kNoRank;
        // static schedule gives each thread an ascending contiguous chunk,
        // so its first hit is its minimum
#pragma omp for schedule(static) nowait
        for (long long r = static_cast<long long>(start);
             r < static_cast<long long>(end); ++r) {
          if (local != kNoRank) continue;
          unrank_combination(static_cast<std::uint64_t>(r), m, f, comb);
          if (p4_free_with(adj, g.n, fstar, comb))
            local = static_cast<std::uint64_t>(r);
        }
#pragma omp critical
        found = std::min(found, local);
      }
      if (found != kNoRank) {
        std::vector<int> comb;
        unrank_combination(found, m, f, comb);
        res.status = OracleStatus::Accepted;
        res.fill = pairs_of(fstar, comb);
        return res;
      }
    }
  }
  res.status = OracleStatus::Rejected;
  return res;
#endif
}

}  // namespace pcog
