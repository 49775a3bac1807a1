#include "pcog/graph.hpp"

#include <bit>
#include <sstream>

namespace pcog {

Label::Label(int length) : length_(length), words_((length + 63) / 64, 0) {
  if (length < 0) throw Error("label length must be nonnegative");
}

Label Label::from_string(const std::string& bits) {
  Label l(static_cast<int>(bits.size()));
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1')
      l.set(static_cast<int>(i));
    else if (bits[i] != '0')
      throw Error("label bitstring may contain only '0' and '1'");
  }
  return l;
}

bool Label::test(int i) const {
  if (i < 0 || i >= length_) throw Error("label bit index out of range");
  return (words_[i >> 6] >> (i & 63)) & 1u;
}

void Label::set(int i, bool value) {
  if (i < 0 || i >= length_) throw Error("label bit index out of range");
  if (value)
    words_[i >> 6] |= std::uint64_t{1} << (i & 63);
  else
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
}

std::string Label::to_string() const {
  std::string s(length_, '0');
  for (int i = 0; i < length_; ++i)
    if (test(i)) s[i] = '1';
  return s;
}

bool orthogonal(const Label& a, const Label& b) {
  if (a.length() != b.length())
    throw Error("orthogonal: label lengths differ (" +
                std::to_string(a.length()) + " vs " +
                std::to_string(b.length()) + ")");
  const auto& aw = a.words();
  const auto& bw = b.words();
  for (std::size_t i = 0; i < aw.size(); ++i)
    if (aw[i] & bw[i]) return false;
  return true;
}

LabeledGraph::LabeledGraph(int n, int k)
    : n(n), k(k), labels(n, Label(k)), adj(static_cast<std::size_t>(n) * n, 0) {
  if (n < 0) throw Error("vertex count must be nonnegative");
}

void LabeledGraph::set_edge(Vertex u, Vertex v, bool present) {
  if (u < 0 || u >= n || v < 0 || v >= n)
    throw Error("edge endpoint out of range");
  if (u == v) throw Error("self-loops are not allowed");
  adj[static_cast<std::size_t>(u) * n + v] = present ? 1 : 0;
  adj[static_cast<std::size_t>(v) * n + u] = present ? 1 : 0;
}

int LabeledGraph::edge_count() const {
  int m = 0;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (adjacent(u, v)) ++m;
  return m;
}

std::vector<std::pair<Vertex, Vertex>> LabeledGraph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

namespace {

// Lowest common 1-position of two labels of equal length; -1 when orthogonal.
int first_shared_bit(const Label& a, const Label& b) {
  const auto& aw = a.words();
  const auto& bw = b.words();
  for (std::size_t i = 0; i < aw.size(); ++i) {
    std::uint64_t common = aw[i] & bw[i];
    if (common)
      return static_cast<int>(i * 64 + std::countr_zero(common));
  }
  return -1;
}

}  // namespace

ValidationReport validate(const LabeledGraph& g) {
  ValidationReport rep;
  auto fail = [&rep](std::string msg) {
    rep.ok = false;
    rep.message = std::move(msg);
    return rep;
  };

  if (static_cast<int>(g.labels.size()) != g.n)
    return fail("label array has " + std::to_string(g.labels.size()) +
                " entries, expected " + std::to_string(g.n));
  if (g.adj.size() != static_cast<std::size_t>(g.n) * g.n)
    return fail("adjacency matrix has wrong size");
  for (Vertex v = 0; v < g.n; ++v)
    if (g.labels[v].length() != g.k)
      return fail("label of vertex " + std::to_string(v + 1) + " has length " +
                  std::to_string(g.labels[v].length()) + ", expected " +
                  std::to_string(g.k));
  for (Vertex v = 0; v < g.n; ++v)
    if (g.adj[static_cast<std::size_t>(v) * g.n + v])
      return fail("self-loop at vertex " + std::to_string(v + 1));
  for (Vertex u = 0; u < g.n; ++u)
    for (Vertex v = u + 1; v < g.n; ++v)
      if (g.adj[static_cast<std::size_t>(u) * g.n + v] !=
          g.adj[static_cast<std::size_t>(v) * g.n + u])
        return fail("adjacency not symmetric at {" + std::to_string(u + 1) +
                    "," + std::to_string(v + 1) + "}");

  // N_i independent for every i: equivalently, adjacent vertices always have
  // orthogonal labels.
  for (Vertex u = 0; u < g.n; ++u)
    for (Vertex v = u + 1; v < g.n; ++v) {
      if (!g.adjacent(u, v)) continue;
      int i = first_shared_bit(g.labels[u], g.labels[v]);
      if (i >= 0) {
        rep.u = u;
        rep.v = v;
        rep.set_index = i + 1;
        return fail("edge {" + std::to_string(u + 1) + "," +
                    std::to_string(v + 1) + "} lies inside independent set N_" +
                    std::to_string(i + 1));
      }
    }
  return rep;
}

LabeledGraph probe_reduce(const LabeledGraph& h) {
  LabeledGraph g = h;
  for (Vertex u = 0; u < g.n; ++u)
    for (Vertex v = u + 1; v < g.n; ++v)
      if (g.adjacent(u, v) && !orthogonal(g.labels[u], g.labels[v]))
        g.set_edge(u, v, false);
  return g;
}

}  // namespace pcog
