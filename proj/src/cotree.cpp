#include "pcog/cotree.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

namespace pcog {

int Cotree::add_leaf(Vertex v) {
  if (v < 0) throw Error("leaf vertex id must be nonnegative");
  nodes_.push_back(CotreeNode{NodeKind::Leaf, v, -1, -1});
  return static_cast<int>(nodes_.size()) - 1;
}

int Cotree::add_internal(NodeKind kind, int left, int right) {
  if (kind == NodeKind::Leaf) throw Error("internal node cannot be a leaf");
  if (left < 0 || left >= node_count() || right < 0 || right >= node_count() ||
      left == right)
    throw Error("internal node children must be two distinct existing nodes");
  nodes_.push_back(CotreeNode{kind, -1, left, right});
  return static_cast<int>(nodes_.size()) - 1;
}

void Cotree::set_root(int id) {
  if (id < 0 || id >= node_count()) throw Error("root id out of range");
  root_ = id;
}

const CotreeNode& Cotree::node(int id) const {
  if (id < 0 || id >= node_count()) throw Error("cotree node id out of range");
  return nodes_[id];
}

void Cotree::collect_leaves(int id, std::vector<Vertex>& out) const {
  std::vector<int> stack{id};
  while (!stack.empty()) {
    const CotreeNode& nd = node(stack.back());
    stack.pop_back();
    if (nd.kind == NodeKind::Leaf) {
      out.push_back(nd.vertex);
    } else {
      stack.push_back(nd.right);
      stack.push_back(nd.left);
    }
  }
}

std::vector<Vertex> Cotree::leaves() const {
  std::vector<Vertex> out;
  if (!empty()) collect_leaves(root_, out);
  return out;
}

LabeledGraph realize(const Cotree& t, int n) {
  if (n < 0) throw Error("vertex count must be nonnegative");
  std::vector<Vertex> lv = t.leaves();
  if (static_cast<int>(lv.size()) != n)
    throw Error("malformed certificate: tree has " +
                std::to_string(lv.size()) + " leaves, expected " +
                std::to_string(n));
  std::vector<std::uint8_t> seen(n, 0);
  for (Vertex v : lv) {
    if (v < 0 || v >= n)
      throw Error("malformed certificate: leaf id " + std::to_string(v + 1) +
                  " out of range 1.." + std::to_string(n));
    if (seen[v])
      throw Error("malformed certificate: duplicate leaf id " +
                  std::to_string(v + 1));
    seen[v] = 1;
  }

  LabeledGraph g(n, 0);
  if (t.empty()) return g;

  // Post-order sweep accumulating leaf sets; Join nodes contribute all cross
  // pairs of their two subtrees.
  struct Frame {
    int id;
    int stage = 0;
    std::vector<Vertex> left;
  };
  std::vector<Frame> stack;
  std::vector<Vertex> ret;
  stack.push_back({t.root(), 0, {}});
  while (!stack.empty()) {
    Frame& f = stack.back();
    const CotreeNode& nd = t.node(f.id);
    if (nd.kind == NodeKind::Leaf) {
      ret = {nd.vertex};
      stack.pop_back();
      continue;
    }
    if (f.stage == 0) {
      f.stage = 1;
      stack.push_back({nd.left, 0, {}});
      continue;
    }
    if (f.stage == 1) {
      f.left = std::move(ret);
      f.stage = 2;
      stack.push_back({nd.right, 0, {}});
      continue;
    }
    if (nd.kind == NodeKind::Join)
      for (Vertex a : f.left)
        for (Vertex b : ret) g.set_edge(a, b);
    std::vector<Vertex> all = std::move(f.left);
    all.insert(all.end(), ret.begin(), ret.end());
    ret = std::move(all);
    stack.pop_back();
  }
  return g;
}

std::vector<int> tree_edges(const Cotree& t) {
  std::vector<int> out;
  if (t.empty()) return out;
  std::vector<int> stack{t.root()};
  while (!stack.empty()) {
    int id = stack.back();
    stack.pop_back();
    if (id != t.root()) out.push_back(id);
    const CotreeNode& nd = t.node(id);
    if (nd.kind != NodeKind::Leaf) {
      stack.push_back(nd.right);
      stack.push_back(nd.left);
    }
  }
  return out;
}

std::pair<std::vector<Vertex>, std::vector<Vertex>> leaf_partition(
    const Cotree& t, int below_node) {
  if (t.empty() || below_node < 0 || below_node >= t.node_count())
    throw Error("leaf_partition: invalid edge id");
  if (below_node == t.root())
    throw Error("leaf_partition: the root has no parent edge");
  std::vector<Vertex> below;
  t.collect_leaves(below_node, below);
  std::sort(below.begin(), below.end());
  std::vector<Vertex> all = t.leaves();
  std::sort(all.begin(), all.end());
  std::vector<Vertex> rest;
  std::set_difference(all.begin(), all.end(), below.begin(), below.end(),
                      std::back_inserter(rest));
  return {std::move(below), std::move(rest)};
}

std::string to_sexp(const Cotree& t) {
  if (t.empty()) return "()";
  std::string out;
  struct Tok {
    int id;
    const char* lit;
  };
  std::vector<Tok> stack{{t.root(), nullptr}};
  while (!stack.empty()) {
    Tok tok = stack.back();
    stack.pop_back();
    if (tok.lit) {
      out += tok.lit;
      continue;
    }
    const CotreeNode& nd = t.node(tok.id);
    if (nd.kind == NodeKind::Leaf) {
      out += std::to_string(nd.vertex + 1);
      continue;
    }
    out += nd.kind == NodeKind::Join ? "(join " : "(union ";
    stack.push_back({-1, ")"});
    stack.push_back({nd.right, nullptr});
    stack.push_back({-1, " "});
    stack.push_back({nd.left, nullptr});
  }
  return out;
}

std::string to_dot(const Cotree& t, bool ascii) {
  // U+2297 circled times and U+2295 circled plus.
  const char* join_glyph = ascii ? "x" : "\xE2\x8A\x97";
  const char* union_glyph = ascii ? "u" : "\xE2\x8A\x95";

  std::string out = "digraph cotree {\n";
  if (!t.empty()) {
    std::vector<int> order;  // preorder
    std::vector<int> stack{t.root()};
    while (!stack.empty()) {
      int id = stack.back();
      stack.pop_back();
      order.push_back(id);
      const CotreeNode& nd = t.node(id);
      if (nd.kind != NodeKind::Leaf) {
        stack.push_back(nd.right);
        stack.push_back(nd.left);
      }
    }
    std::vector<int> name(t.node_count(), -1);
    for (std::size_t i = 0; i < order.size(); ++i) name[order[i]] = static_cast<int>(i);
    for (int id : order) {
      const CotreeNode& nd = t.node(id);
      out += "  n" + std::to_string(name[id]);
      switch (nd.kind) {
        case NodeKind::Join:
          out += " [shape=circle, label=\"" + std::string(join_glyph) + "\"];\n";
          break;
        case NodeKind::Union:
          out += " [shape=diamond, label=\"" + std::string(union_glyph) + "\"];\n";
          break;
        case NodeKind::Leaf:
          out += " [shape=box, label=\"" + std::to_string(nd.vertex + 1) + "\"];\n";
          break;
      }
    }
    for (int id : order) {
      const CotreeNode& nd = t.node(id);
      if (nd.kind == NodeKind::Leaf) continue;
      out += "  n" + std::to_string(name[id]) + " -> n" +
             std::to_string(name[nd.left]) + ";\n";
      out += "  n" + std::to_string(name[id]) + " -> n" +
             std::to_string(name[nd.right]) + ";\n";
    }
  }
  out += "}\n";
  return out;
}

namespace {

std::string at(std::size_t offset) { return "byte " + std::to_string(offset) + ": "; }

}  // namespace

Cotree parse_cotree(std::string_view text) {
  std::size_t begin = 0, end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  if (text.substr(begin, end - begin) == "()") return Cotree{};

  Cotree t;
  struct Frame {
    NodeKind kind;
    int child[2];
    int count;
  };
  std::vector<Frame> stack;
  std::unordered_set<long long> used_ids;
  long long max_id = 0;
  int result = -1;
  bool have_result = false;

  auto attach = [&](int node, std::size_t offset) {
    if (stack.empty()) {
      if (have_result)
        throw ParseError(offset, at(offset) + "trailing content after certificate");
      result = node;
      have_result = true;
    } else {
      Frame& f = stack.back();
      if (f.count == 2)
        throw ParseError(offset,
                         at(offset) + "expected ')': internal nodes take exactly two children");
      f.child[f.count++] = node;
    }
  };

  std::size_t i = 0;
  const std::size_t size = text.size();
  while (true) {
    while (i < size && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i == size) break;
    char c = text[i];
    if (c == '(') {
      std::size_t open_at = i;
      if (have_result && stack.empty())
        throw ParseError(open_at, at(open_at) + "trailing content after certificate");
      ++i;
      while (i < size && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
      std::size_t kw_at = i;
      std::string kw;
      while (i < size && std::isalpha(static_cast<unsigned char>(text[i])))
        kw += text[i++];
      NodeKind kind;
      if (kw == "join")
        kind = NodeKind::Join;
      else if (kw == "union")
        kind = NodeKind::Union;
      else
        throw ParseError(kw_at, at(kw_at) + "expected 'join' or 'union'");
      stack.push_back({kind, {-1, -1}, 0});
    } else if (c == ')') {
      if (stack.empty()) throw ParseError(i, at(i) + "unmatched ')'");
      Frame f = stack.back();
      if (f.count != 2)
        throw ParseError(i, at(i) + "internal node needs exactly two children, got " +
                                std::to_string(f.count));
      stack.pop_back();
      int node = t.add_internal(f.kind, f.child[0], f.child[1]);
      std::size_t close_at = i;
      ++i;
      attach(node, close_at);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t id_at = i;
      if (have_result && stack.empty())
        throw ParseError(id_at, at(id_at) + "trailing content after certificate");
      long long id = 0;
      while (i < size && std::isdigit(static_cast<unsigned char>(text[i]))) {
        id = id * 10 + (text[i] - '0');
        if (id > 1000000000LL)
          throw ParseError(id_at, at(id_at) + "leaf id too large");
        ++i;
      }
      if (id < 1)
        throw ParseError(id_at, at(id_at) + "leaf ids are 1-based");
      if (!used_ids.insert(id).second)
        throw ParseError(id_at, at(id_at) + "duplicate leaf id " + std::to_string(id));
      max_id = std::max(max_id, id);
      int node = t.add_leaf(static_cast<Vertex>(id - 1));
      attach(node, id_at);
    } else {
      throw ParseError(i, at(i) + "unexpected character '" + std::string(1, c) + "'");
    }
  }
  if (!stack.empty())
    throw ParseError(size, at(size) + "unexpected end of input: unclosed '('");
  if (!have_result) throw ParseError(0, at(0) + "empty certificate");
  if (max_id != static_cast<long long>(used_ids.size())) {
    long long missing = 1;
    while (used_ids.count(missing)) ++missing;
    throw ParseError(size, at(size) + "certificate has " +
                             std::to_string(used_ids.size()) +
                             " leaves but is missing leaf id " +
                             std::to_string(missing));
  }
  t.set_root(result);
  return t;
}

bool structurally_equal(const Cotree& a, const Cotree& b) {
  if (a.empty() || b.empty()) return a.empty() == b.empty();
  std::vector<std::pair<int, int>> stack{{a.root(), b.root()}};
  while (!stack.empty()) {
    auto [ia, ib] = stack.back();
    stack.pop_back();
    const CotreeNode& na = a.node(ia);
    const CotreeNode& nb = b.node(ib);
    if (na.kind != nb.kind) return false;
    if (na.kind == NodeKind::Leaf) {
      if (na.vertex != nb.vertex) return false;
    } else {
      stack.push_back({na.left, nb.left});
      stack.push_back({na.right, nb.right});
    }
  }
  return true;
}

Cotree canonicalized(const Cotree& t) {
  Cotree out;
  if (t.empty()) return out;
  struct Frame {
    int id;
    int stage = 0;
    int left_id = -1;
    Vertex left_min = -1;
  };
  struct Result {
    int id;
    Vertex min_leaf;
  };
  std::vector<Frame> stack;
  Result ret{-1, -1};
  stack.push_back({t.root(), 0, -1, -1});
  while (!stack.empty()) {
    Frame& f = stack.back();
    const CotreeNode& nd = t.node(f.id);
    if (nd.kind == NodeKind::Leaf) {
      ret = {out.add_leaf(nd.vertex), nd.vertex};
      stack.pop_back();
      continue;
    }
    if (f.stage == 0) {
      f.stage = 1;
      stack.push_back({nd.left, 0, -1, -1});
      continue;
    }
    if (f.stage == 1) {
      f.left_id = ret.id;
      f.left_min = ret.min_leaf;
      f.stage = 2;
      stack.push_back({nd.right, 0, -1, -1});
      continue;
    }
    int l = f.left_id, r = ret.id;
    Vertex lmin = f.left_min, rmin = ret.min_leaf;
    if (rmin < lmin) {
      std::swap(l, r);
      std::swap(lmin, rmin);
    }
    ret = {out.add_internal(nd.kind, l, r), lmin};
    stack.pop_back();
  }
  out.set_root(ret.id);
  return out;
}

}  // namespace pcog
