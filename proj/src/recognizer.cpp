#include "pcog/recognizer.hpp"

#include <algorithm>
#include <cstddef>

namespace pcog {

namespace {

// Shared scan state. Labels are flattened into one contiguous word array so
// the inner orthogonality loop touches no per-vertex vector headers.
struct Ctx {
  const LabeledGraph& g;
  RecognitionCounters& c;
  int wpl;
  std::vector<std::uint64_t> flat;
  std::vector<std::uint8_t> in_set;

  Ctx(const LabeledGraph& graph, RecognitionCounters& counters)
      : g(graph), c(counters), wpl((graph.k + 63) / 64) {
    flat.resize(static_cast<std::size_t>(g.n) * wpl, 0);
    for (Vertex v = 0; v < g.n; ++v) {
      const auto& w = g.labels[v].words();
      std::copy(w.begin(), w.end(), flat.begin() + static_cast<std::size_t>(v) * wpl);
    }
    in_set.assign(g.n, 0);
  }

  bool adjacent(Vertex u, Vertex v) {
    ++c.pair_probes;
    return g.adjacent(u, v);
  }

  bool orth(Vertex u, Vertex v) {
    ++c.orth_tests;
    const std::uint64_t* a = flat.data() + static_cast<std::size_t>(u) * wpl;
    const std::uint64_t* b = flat.data() + static_cast<std::size_t>(v) * wpl;
    for (int w = 0; w < wpl; ++w)
      if (a[w] & b[w]) return false;
    return true;
  }
};

// Expects in_set to mark exactly the members of xs.
bool module_test(Ctx& ctx, const std::vector<Vertex>& xs) {
  for (Vertex z = 0; z < ctx.g.n; ++z) {
    if (ctx.in_set[z]) continue;
    bool any_adj = false;
    bool any_orth_nonadj = false;
    for (Vertex x : xs) {
      if (ctx.adjacent(z, x))
        any_adj = true;
      else if (ctx.orth(z, x))
        any_orth_nonadj = true;
      if (any_adj && any_orth_nonadj) return false;
    }
  }
  return true;
}

bool module_test_marked(Ctx& ctx, const std::vector<Vertex>& xs) {
  for (Vertex v : xs) ctx.in_set[v] = 1;
  bool ok = module_test(ctx, xs);
  for (Vertex v : xs) ctx.in_set[v] = 0;
  return ok;
}

std::optional<TwinKind> twin_test(Ctx& ctx, const std::vector<Vertex>& xs,
                                  const std::vector<Vertex>& ys) {
  ++ctx.c.twin_tests;
  bool any_edge = false;
  bool join_ok = true;
  for (Vertex x : xs) {
    for (Vertex y : ys) {
      if (ctx.adjacent(x, y))
        any_edge = true;
      else if (ctx.orth(x, y))
        join_ok = false;
      if (any_edge && !join_ok) return std::nullopt;
    }
  }
  std::vector<Vertex> merged(xs.size() + ys.size());
  std::merge(xs.begin(), xs.end(), ys.begin(), ys.end(), merged.begin());
  if (!module_test_marked(ctx, merged)) return std::nullopt;
  return any_edge ? TwinKind::Join : TwinKind::Union;
}

// Pairwise cross-relations between surviving subtrees: complete[a][b] means
// every a-b cross pair is a working-copy edge, orth_pair[a][b] that some
// cross pair has orthogonal labels. Indices track the entry list.
struct CrossState {
  std::vector<std::vector<std::uint8_t>> complete;
  std::vector<std::vector<std::uint8_t>> orth_pair;
};

// Groups `items` into connected components of the symmetric relation.
template <typename F>
std::vector<std::vector<int>> connected_groups(const std::vector<int>& items,
                                               F&& linked) {
  std::vector<std::vector<int>> groups;
  std::vector<std::uint8_t> seen(items.size(), 0);
  for (std::size_t s = 0; s < items.size(); ++s) {
    if (seen[s]) continue;
    seen[s] = 1;
    std::vector<int> group{items[s]};
    std::vector<std::size_t> stack{s};
    while (!stack.empty()) {
      const std::size_t cur = stack.back();
      stack.pop_back();
      for (std::size_t t = 0; t < items.size(); ++t) {
        if (seen[t] || !linked(items[cur], items[t])) continue;
        seen[t] = 1;
        group.push_back(items[t]);
        stack.push_back(t);
      }
    }
    groups.push_back(std::move(group));
  }
  return groups;
}

// Whether the surviving subtrees can still be completed to one cotree: split
// by components of required cross edges, else by components of excluded cross
// pairs, and recurse into every part. A part of size >1 admitting neither
// split cannot be embedded.
bool embeddable(const CrossState& cs, std::vector<int> live) {
  std::vector<std::vector<int>> work;
  work.push_back(std::move(live));
  while (!work.empty()) {
    std::vector<int> s = std::move(work.back());
    work.pop_back();
    if (s.size() <= 1) continue;
    auto parts = connected_groups(
        s, [&](int a, int b) { return cs.complete[a][b] != 0; });
    if (parts.size() == 1) {
      parts = connected_groups(s, [&](int a, int b) {
        return cs.complete[a][b] == 0 && cs.orth_pair[a][b] != 0;
      });
      if (parts.size() == 1) return false;
    }
    for (auto& p : parts) work.push_back(std::move(p));
  }
  return true;
}

// Folds entry j into entry i and drops row/column j.
void contract(CrossState& cs, std::size_t i, std::size_t j) {
  const std::size_t q = cs.complete.size();
  for (std::size_t t = 0; t < q; ++t) {
    if (t == i || t == j) continue;
    cs.complete[i][t] = cs.complete[t][i] =
        static_cast<std::uint8_t>(cs.complete[i][t] | cs.complete[j][t]);
    cs.orth_pair[i][t] = cs.orth_pair[t][i] =
        static_cast<std::uint8_t>(cs.orth_pair[i][t] | cs.orth_pair[j][t]);
  }
  cs.complete.erase(cs.complete.begin() + static_cast<std::ptrdiff_t>(j));
  cs.orth_pair.erase(cs.orth_pair.begin() + static_cast<std::ptrdiff_t>(j));
  for (auto& row : cs.complete) row.erase(row.begin() + static_cast<std::ptrdiff_t>(j));
  for (auto& row : cs.orth_pair) row.erase(row.begin() + static_cast<std::ptrdiff_t>(j));
}

std::vector<int> all_indices(std::size_t q) {
  std::vector<int> idx(q);
  for (std::size_t t = 0; t < q; ++t) idx[t] = static_cast<int>(t);
  return idx;
}

// Completes all-or-none adjacency toward a freshly merged set: any outside
// vertex with a neighbor in `verts` becomes adjacent to every member.
void apply_fills(Ctx& ctx, LabeledGraph& work, const std::vector<Vertex>& verts,
                 std::vector<std::pair<Vertex, Vertex>>& fills) {
  for (Vertex v : verts) ctx.in_set[v] = 1;
  for (Vertex z = 0; z < work.n; ++z) {
    if (ctx.in_set[z]) continue;
    bool any_adj = false;
    for (Vertex x : verts) {
      if (ctx.adjacent(z, x)) {
        any_adj = true;
        break;
      }
    }
    if (!any_adj) continue;
    for (Vertex x : verts) {
      if (ctx.adjacent(z, x)) continue;
      work.set_edge(z, x, true);
      fills.emplace_back(std::min(z, x), std::max(z, x));
    }
  }
  for (Vertex v : verts) ctx.in_set[v] = 0;
}

std::vector<Vertex> checked_sorted(const LabeledGraph& g,
                                   const std::vector<Vertex>& xs,
                                   const char* who) {
  if (xs.empty()) throw Error(std::string(who) + ": vertex set must be nonempty");
  std::vector<Vertex> s = xs;
  std::sort(s.begin(), s.end());
  if (s.front() < 0 || s.back() >= g.n)
    throw Error(std::string(who) + ": vertex id out of range");
  if (std::adjacent_find(s.begin(), s.end()) != s.end())
    throw Error(std::string(who) + ": duplicate vertex in set");
  return s;
}

}  // namespace

bool is_module(const LabeledGraph& g, const std::vector<Vertex>& xs) {
  std::vector<Vertex> s = checked_sorted(g, xs, "is_module");
  RecognitionCounters c;
  Ctx ctx(g, c);
  return module_test_marked(ctx, s);
}

std::optional<TwinKind> are_twins(const LabeledGraph& g,
                                  const std::vector<Vertex>& xs,
                                  const std::vector<Vertex>& ys) {
  std::vector<Vertex> sx = checked_sorted(g, xs, "are_twins");
  std::vector<Vertex> sy = checked_sorted(g, ys, "are_twins");
  std::vector<Vertex> both;
  std::set_intersection(sx.begin(), sx.end(), sy.begin(), sy.end(),
                        std::back_inserter(both));
  if (!both.empty()) throw Error("are_twins: the two sets must be disjoint");
  RecognitionCounters c;
  Ctx ctx(g, c);
  return twin_test(ctx, sx, sy);
}

RecognitionResult recognize(const LabeledGraph& g) {
  ValidationReport rep = validate(g);
  if (!rep.ok) throw Error(rep.message);

  RecognitionResult res;
  if (g.n == 0) {
    res.status = RecognitionStatus::Accepted;
    return res;
  }

  LabeledGraph work = g;
  Ctx ctx(work, res.counters);

  struct Entry {
    std::vector<Vertex> verts;
    int fragment;
  };
  std::vector<Entry> entries;
  entries.reserve(g.n);
  for (Vertex v = 0; v < g.n; ++v)
    entries.push_back({{v}, res.cotree.add_leaf(v)});

  CrossState cs;
  cs.complete.assign(g.n, std::vector<std::uint8_t>(g.n, 0));
  cs.orth_pair.assign(g.n, std::vector<std::uint8_t>(g.n, 0));
  for (Vertex u = 0; u < g.n; ++u)
    for (Vertex v = u + 1; v < g.n; ++v) {
      cs.complete[u][v] = cs.complete[v][u] = ctx.adjacent(u, v) ? 1 : 0;
      cs.orth_pair[u][v] = cs.orth_pair[v][u] = ctx.orth(u, v) ? 1 : 0;
    }

  // With the guard down the loop degrades to plain first-found merging,
  // which always halts in a twin-free state and never falsely accepts.
  bool guard = embeddable(cs, all_indices(entries.size()));

  while (entries.size() > 1) {
    std::size_t mi = 0;
    std::size_t mj = 0;
    TwinKind mk = TwinKind::Union;
    bool found = false;
    for (std::size_t i = 0; i < entries.size() && !found; ++i) {
      for (std::size_t j = i + 1; j < entries.size() && !found; ++j) {
        std::optional<TwinKind> kind =
            twin_test(ctx, entries[i].verts, entries[j].verts);
        if (!kind) continue;
        if (guard) {
          CrossState probe = cs;
          contract(probe, i, j);
          if (!embeddable(probe, all_indices(entries.size() - 1))) continue;
        }
        mi = i;
        mj = j;
        mk = *kind;
        found = true;
      }
    }
    if (!found) {
      if (guard) {
        guard = false;
        continue;
      }
      res.status = RecognitionStatus::Rejected;
      res.cotree = Cotree{};
      for (Entry& e : entries) res.remaining.push_back(std::move(e.verts));
      return res;
    }
    int node = res.cotree.add_internal(
        mk == TwinKind::Join ? NodeKind::Join : NodeKind::Union,
        entries[mi].fragment, entries[mj].fragment);
    std::vector<Vertex> m(entries[mi].verts.size() + entries[mj].verts.size());
    std::merge(entries[mi].verts.begin(), entries[mi].verts.end(),
               entries[mj].verts.begin(), entries[mj].verts.end(), m.begin());
    entries[mi].verts = std::move(m);
    entries[mi].fragment = node;
    entries.erase(entries.begin() + static_cast<std::ptrdiff_t>(mj));
    contract(cs, mi, mj);
    apply_fills(ctx, work, entries[mi].verts, res.fills);
  }

  res.cotree.set_root(entries.front().fragment);
  res.status = RecognitionStatus::Accepted;
  return res;
}

}  // namespace pcog
