#include "pcog/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace pcog {

namespace {

constexpr int kMaxVertices = 10000;
constexpr int kMaxSets = 512;

ParseError err(std::size_t line_no, const std::string& message) {
  return ParseError(line_no, "line " + std::to_string(line_no) + ": " + message);
}

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> toks;
  std::istringstream in(line);
  std::string t;
  while (in >> t) toks.push_back(t);
  return toks;
}

long long parse_int(const std::string& tok, long long lo, long long hi,
                    const char* what, std::size_t line_no) {
  long long value = 0;
  const char* begin = tok.data();
  const char* end = begin + tok.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end)
    throw err(line_no, std::string("malformed ") + what + " '" + tok + "'");
  if (value < lo || value > hi)
    throw err(line_no, std::string(what) + " " + tok + " out of range " +
                           std::to_string(lo) + ".." + std::to_string(hi));
  return value;
}

// Pulls the next record line, skipping comments and blanks.
bool next_record(std::istringstream& in, std::string& line,
                 std::size_t& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t i = 0;
    while (i < line.size() &&
           (line[i] == ' ' || line[i] == '\t'))
      ++i;
    if (i == line.size()) continue;
    if (line[i] == '#') continue;
    return true;
  }
  return false;
}

}  // namespace

LabeledGraph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;

  if (!next_record(in, line, line_no))
    throw err(line_no + 1, "missing header 'p kprobe <n> <k> <m>'");
  std::vector<std::string> toks = tokenize(line);
  if (toks.size() != 5 || toks[0] != "p" || toks[1] != "kprobe")
    throw err(line_no, "expected header 'p kprobe <n> <k> <m>'");
  const int n =
      static_cast<int>(parse_int(toks[2], 0, kMaxVertices, "vertex count", line_no));
  const int k =
      static_cast<int>(parse_int(toks[3], 0, kMaxSets, "set count", line_no));
  const long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
  const int m = static_cast<int>(
      parse_int(toks[4], 0, max_edges, "edge count", line_no));

  LabeledGraph g(n, k);

  for (int i = 1; i <= n; ++i) {
    if (!next_record(in, line, line_no))
      throw err(line_no + 1, "unexpected end of file: expected label line 'l " +
                                 std::to_string(i) + " ...'");
    toks = tokenize(line);
    if (toks.size() != 3 || toks[0] != "l")
      throw err(line_no, "expected label line 'l <vertex-id> <bitstring>'");
    const int vid =
        static_cast<int>(parse_int(toks[1], 1, n, "vertex id", line_no));
    if (vid != i)
      throw err(line_no, "vertex ids must ascend 1..n: expected " +
                             std::to_string(i) + ", got " + std::to_string(vid));
    const std::string& bits = toks[2];
    if (k == 0) {
      if (bits != "-")
        throw err(line_no, "with k = 0 the label field must be '-'");
    } else {
      if (bits.size() != static_cast<std::size_t>(k))
        throw err(line_no, "label must have exactly " + std::to_string(k) +
                               " bits, got " + std::to_string(bits.size()));
      for (char c : bits)
        if (c != '0' && c != '1')
          throw err(line_no, std::string("label may contain only 0 and 1, got '") +
                                 c + "'");
      g.labels[i - 1] = Label::from_string(bits);
    }
  }

  for (int i = 0; i < m; ++i) {
    if (!next_record(in, line, line_no))
      throw err(line_no + 1, "unexpected end of file: expected " +
                                 std::to_string(m - i) + " more edge line(s)");
    toks = tokenize(line);
    if (toks.size() != 3 || toks[0] != "e")
      throw err(line_no, "expected edge line 'e <u> <v>'");
    const int u = static_cast<int>(parse_int(toks[1], 1, n, "vertex id", line_no));
    const int v = static_cast<int>(parse_int(toks[2], 1, n, "vertex id", line_no));
    if (u == v) throw err(line_no, "self-loop at vertex " + std::to_string(u));
    if (u > v)
      throw err(line_no, "edge endpoints must satisfy u < v, got " +
                             std::to_string(u) + " > " + std::to_string(v));
    if (g.adjacent(u - 1, v - 1))
      throw err(line_no, "duplicate edge {" + std::to_string(u) + "," +
                             std::to_string(v) + "}");
    g.set_edge(u - 1, v - 1);
  }

  if (next_record(in, line, line_no))
    throw err(line_no, "trailing content after the last edge line");

  return g;
}

LabeledGraph read_graph(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

std::string write_graph(const LabeledGraph& g) {
  std::string out = "p kprobe " + std::to_string(g.n) + " " +
                    std::to_string(g.k) + " " + std::to_string(g.edge_count()) +
                    "\n";
  for (Vertex v = 0; v < g.n; ++v) {
    out += "l " + std::to_string(v + 1) + " ";
    out += g.k == 0 ? "-" : g.labels[v].to_string();
    out += "\n";
  }
  for (const auto& [u, v] : g.edges())
    out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
  return out;
}

}  // namespace pcog
