// End-to-end acceptance gate. Each criterion prints one PASS/FAIL line with
// the counts it measured; the process exits nonzero when any line fails.
// Failing differential checks emit a minimized counterexample on stderr.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pcog/cotree.hpp"
#include "pcog/generator.hpp"
#include "pcog/graph.hpp"
#include "pcog/graph_io.hpp"
#include "pcog/oracle.hpp"
#include "pcog/recognizer.hpp"

namespace {

using namespace pcog;
using clock_type = std::chrono::steady_clock;

int failures = 0;

void report(int index, const char* name, bool pass, const std::string& detail) {
  std::printf("%s  %d %-26s %s\n", pass ? "PASS" : "FAIL", index, name,
              detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

// n=7 has at most 21 fill candidates, so this budget never trips.
constexpr int kOracleBudget = 21;

LabeledGraph drop_vertex(const LabeledGraph& g, Vertex del) {
  LabeledGraph h(g.n - 1, g.k);
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.n; ++v)
    if (v != del) keep.push_back(v);
  for (std::size_t i = 0; i < keep.size(); ++i) h.labels[i] = g.labels[keep[i]];
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = i + 1; j < keep.size(); ++j)
      if (g.adjacent(keep[i], keep[j]))
        h.set_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return h;
}

template <typename Pred>
LabeledGraph minimize(LabeledGraph g, Pred&& still_bad) {
  bool shrunk = true;
  while (shrunk && g.n > 1) {
    shrunk = false;
    for (Vertex v = 0; v < g.n; ++v) {
      LabeledGraph h = drop_vertex(g, v);
      if (still_bad(h)) {
        g = std::move(h);
        shrunk = true;
        break;
      }
    }
  }
  return g;
}

template <typename Pred>
void dump_counterexample(const LabeledGraph& g, Pred&& still_bad) {
  const LabeledGraph m = minimize(g, still_bad);
  std::fprintf(stderr, "minimized counterexample (n=%d, k=%d):\n%s", m.n, m.k,
               write_graph(m).c_str());
}

bool oracle_disagrees(const LabeledGraph& g) {
  const bool rec = recognize(g).accepted();
  const OracleResult o = oracle_is_kprobe(g, kOracleBudget);
  if (o.status == OracleStatus::BudgetExceeded) return false;
  return rec != (o.status == OracleStatus::Accepted);
}

void criterion_oracle_equivalence() {
  std::size_t exhaustive = 0;
  std::size_t randoms = 0;
  std::optional<LabeledGraph> bad;

  for (int n = 1; n <= 5 && !bad; ++n) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    for (int k = 0; k <= 1 && !bad; ++k) {
      const std::uint32_t label_masks = k == 0 ? 1 : (1u << n);
      for (std::uint32_t lm = 0; lm < label_masks && !bad; ++lm) {
        LabeledGraph base(n, k);
        if (k == 1)
          for (int v = 0; v < n; ++v)
            base.labels[v].set(0, (lm >> v & 1) != 0);
        const std::uint32_t edge_masks = 1u << pairs.size();
        for (std::uint32_t em = 0; em < edge_masks && !bad; ++em) {
          LabeledGraph g = base;
          bool valid = true;
          for (std::size_t i = 0; i < pairs.size() && valid; ++i) {
            if (!(em >> i & 1)) continue;
            const auto [u, v] = pairs[i];
            if (!orthogonal(g.labels[u], g.labels[v]))
              valid = false;
            else
              g.set_edge(u, v);
          }
          if (!valid) continue;
          ++exhaustive;
          if (oracle_disagrees(g)) bad = g;
        }
      }
    }
  }

  SplitMix64 rng(20260815);
  for (int it = 0; it < 10000 && !bad; ++it) {
    const int n = 1 + static_cast<int>(rng.below(7));
    const int k = static_cast<int>(rng.below(3));
    const LabeledGraph g = generate_random_labeled(
        n, k, 0.05 + 0.9 * rng.next_unit(), 0.7 * rng.next_unit(), rng.next());
    ++randoms;
    if (oracle_disagrees(g)) bad = g;
  }

  if (bad) dump_counterexample(*bad, oracle_disagrees);
  char detail[160];
  std::snprintf(detail, sizeof detail,
                "%zu exhaustive (n<=5, k<=1) + %zu random (n<=7, k<=2) "
                "instances, %d disagreements",
                exhaustive, randoms, bad ? 1 : 0);
  report(1, "oracle equivalence:", !bad, detail);
}

void criterion_soundness() {
  SplitMix64 rng(7321);
  std::size_t accepted = 0;
  std::size_t bad_certs = 0;
  for (int it = 0; it < 10000; ++it) {
    const int n = 1 + static_cast<int>(rng.below(60));
    const int k = static_cast<int>(rng.below(7));
    const LabeledGraph g =
        it % 2 == 0
            ? generate(n, k, 0.5 * rng.next_unit(), rng.next_unit(), rng.next())
                  .graph
            : generate_random_labeled(n, k, 0.05 + 0.9 * rng.next_unit(),
                                      0.5 * rng.next_unit(), rng.next());
    const RecognitionResult res = recognize(g);
    if (!res.accepted()) continue;
    ++accepted;
    if (!verify_embedding(g, res.cotree)) ++bad_certs;
  }
  char detail[160];
  std::snprintf(detail, sizeof detail,
                "10000 mixed instances (n<=60), %zu accepted, %zu certificate "
                "failures",
                accepted, bad_certs);
  report(2, "acceptance soundness:", bad_certs == 0, detail);
}

void criterion_generator_completeness() {
  SplitMix64 rng(4242);
  std::size_t at_max = 0;
  std::size_t rejections = 0;
  std::size_t bad_witness = 0;
  for (int it = 0; it < 10000; ++it) {
    const int n =
        it % 100 == 99 ? 100 : 1 + static_cast<int>(rng.below(100));
    const int k = static_cast<int>(rng.below(9));
    if (n == 100) ++at_max;
    const GeneratedInstance inst =
        generate(n, k, 0.6 * rng.next_unit(), rng.next_unit(), rng.next());
    const RecognitionResult res = recognize(inst.graph);
    if (!res.accepted()) {
      ++rejections;
      continue;
    }
    if (!verify_embedding(inst.graph, inst.witness) ||
        !verify_embedding(inst.graph, res.cotree))
      ++bad_witness;
  }
  char detail[160];
  std::snprintf(detail, sizeof detail,
                "10000 generated instances (n<=100, k<=8, %zu at n=100), %zu "
                "rejections, %zu witness failures",
                at_max, rejections, bad_witness);
  report(3, "generator completeness:", rejections == 0 && bad_witness == 0,
         detail);
}

bool p4_scan_disagrees(const LabeledGraph& g) {
  return recognize(g).accepted() != !find_induced_p4(g).has_value();
}

void criterion_cograph_degeneration() {
  std::size_t exhaustive = 0;
  std::size_t randoms = 0;
  std::optional<LabeledGraph> bad;

  for (int n = 1; n <= 6 && !bad; ++n) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    const std::uint32_t edge_masks = 1u << pairs.size();
    for (std::uint32_t em = 0; em < edge_masks && !bad; ++em) {
      LabeledGraph g(n, 0);
      for (std::size_t i = 0; i < pairs.size(); ++i)
        if (em >> i & 1) g.set_edge(pairs[i].first, pairs[i].second);
      ++exhaustive;
      if (p4_scan_disagrees(g)) bad = g;
    }
  }

  SplitMix64 rng(606060);
  for (int it = 0; it < 10000 && !bad; ++it) {
    const LabeledGraph g =
        generate_random_labeled(7, 0, rng.next_unit(), 0.0, rng.next());
    ++randoms;
    if (p4_scan_disagrees(g)) bad = g;
  }

  if (bad) dump_counterexample(*bad, p4_scan_disagrees);
  char detail[160];
  std::snprintf(detail, sizeof detail,
                "%zu exhaustive (n<=6) + %zu random (n=7) unlabeled graphs, "
                "%d disagreements with the P4 scan",
                exhaustive, randoms, bad ? 1 : 0);
  report(4, "k=0 degeneration:", !bad, detail);
}

struct CliRun {
  int exit_code = -1;
  std::string out;
};

CliRun run_cli(const std::string& args) {
  const std::string cmd = std::string(PCOG_CLI_PATH) + " " + args +
                          " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {};
  CliRun run;
  char buf[4096];
  std::size_t got = 0;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0)
    run.out.append(buf, got);
  const int status = pclose(pipe);
  run.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return run;
}

std::string temp_file(const char* name, const std::string& content) {
  const std::string path =
      (std::filesystem::temp_directory_path() / name).string();
  std::ofstream f(path, std::ios::binary);
  f << content;
  return path;
}

void criterion_worked_example() {
  const std::string probed = temp_file(
      "pcog_accept_p4_probed.g",
      "p kprobe 4 1 3\nl 1 1\nl 2 0\nl 3 0\nl 4 1\ne 1 2\ne 2 3\ne 3 4\n");
  const std::string zeros = temp_file(
      "pcog_accept_p4_zeros.g",
      "p kprobe 4 1 3\nl 1 0\nl 2 0\nl 3 0\nl 4 0\ne 1 2\ne 2 3\ne 3 4\n");

  const CliRun a = run_cli("recognize " + probed);
  const CliRun b = run_cli("recognize " + zeros);
  std::filesystem::remove(probed);
  std::filesystem::remove(zeros);

  const bool cert_ok =
      a.exit_code == 0 && a.out == "(join (union 1 3) (union 2 4))\n";
  const bool reject_ok = b.exit_code == 1;
  char detail[200];
  std::snprintf(detail, sizeof detail,
                "probed P4 exit %d with %s certificate, all-zero P4 exit %d",
                a.exit_code, cert_ok ? "byte-exact" : "WRONG", b.exit_code);
  report(5, "worked example (CLI):", cert_ok && reject_ok, detail);
}

void criterion_complexity() {
  const CliRun bench =
      run_cli("bench --n-list 25,50,100,200 --k 4 --seed 11 --reps 5");
  double slope = std::nan("");
  const std::size_t pos = bench.out.rfind("slope=");
  if (pos != std::string::npos)
    slope = std::strtod(bench.out.c_str() + pos + 6, nullptr);

  const GeneratedInstance big = generate(200, 4, 0.3, 0.5, 99);
  const auto t0 = clock_type::now();
  const RecognitionResult res = recognize(big.graph);
  const double secs =
      std::chrono::duration<double>(clock_type::now() - t0).count();

  const bool ok = bench.exit_code == 0 && !std::isnan(slope) && slope <= 5.5 &&
                  res.accepted() && secs < 60.0;
  char detail[160];
  std::snprintf(detail, sizeof detail,
                "log-log slope %.2f over n in {25,50,100,200} (bound 5.5), "
                "n=200 recognized in %.2f s (bound 60)",
                slope, secs);
  report(6, "complexity scaling:", ok, detail);
}

void criterion_cut_structure() {
  SplitMix64 rng(5150);
  std::size_t trees = 0;
  std::size_t cuts = 0;
  std::size_t split_failures = 0;
  for (int it = 0; it < 1000; ++it) {
    const int n = 1 + static_cast<int>(rng.below(40));
    const Cotree t = generate(n, 0, 0.0, rng.next_unit(), rng.next()).witness;
    const LabeledGraph h = realize(t, n);
    ++trees;
    for (const int e : tree_edges(t)) {
      const auto [inside, outside] = leaf_partition(t, e);
      ++cuts;
      for (const Vertex z : outside) {
        const bool first = h.adjacent(inside[0], z);
        for (const Vertex x : inside)
          if (h.adjacent(x, z) != first) ++split_failures;
      }
    }
  }

  std::size_t accepted = 0;
  std::size_t label_cut_failures = 0;
  for (int it = 0; it < 1000; ++it) {
    const int n = 1 + static_cast<int>(rng.below(40));
    const int k = static_cast<int>(rng.below(5));
    const LabeledGraph g =
        it % 2 == 0
            ? generate(n, k, 0.5 * rng.next_unit(), rng.next_unit(), rng.next())
                  .graph
            : generate_random_labeled(n, k, 0.05 + 0.9 * rng.next_unit(),
                                      0.5 * rng.next_unit(), rng.next());
    const RecognitionResult res = recognize(g);
    if (!res.accepted()) continue;
    ++accepted;
    for (const int e : tree_edges(res.cotree)) {
      const auto [inside, outside] = leaf_partition(res.cotree, e);
      std::map<std::string, Vertex> leader;
      for (const Vertex x : inside) {
        const auto [at, fresh] = leader.emplace(g.labels[x].to_string(), x);
        if (fresh) continue;
        for (const Vertex z : outside)
          if (g.adjacent(x, z) != g.adjacent(at->second, z))
            ++label_cut_failures;
      }
    }
  }

  char detail[200];
  std::snprintf(detail, sizeof detail,
                "%zu cuts over %zu realized cotrees, %zu split violations; "
                "%zu accepted instances, %zu equal-label cut violations",
                cuts, trees, split_failures, accepted, label_cut_failures);
  report(7, "tree-edge cut structure:", split_failures == 0 &&
         label_cut_failures == 0, detail);
}

void criterion_round_trips() {
  SplitMix64 rng(8888);
  std::size_t tree_trips = 0;
  std::size_t graph_trips = 0;
  std::size_t tree_failures = 0;
  std::size_t graph_failures = 0;

  {
    const Cotree empty;
    if (to_sexp(parse_cotree(to_sexp(empty))) != "()") ++tree_failures;
    ++tree_trips;
  }
  for (int it = 1; it < 1000; ++it) {
    const int n = 1 + static_cast<int>(rng.below(40));
    const Cotree t = generate(n, 0, 0.0, rng.next_unit(), rng.next()).witness;
    const std::string s = to_sexp(t);
    const Cotree back = parse_cotree(s);
    if (to_sexp(back) != s || !structurally_equal(t, back)) ++tree_failures;
    ++tree_trips;
  }

  for (int it = 0; it < 1000; ++it) {
    const int n = 1 + static_cast<int>(rng.below(50));
    const int k = static_cast<int>(rng.below(9));
    const LabeledGraph g = generate_random_labeled(
        n, k, rng.next_unit(), rng.next_unit(), rng.next());
    const std::string s = write_graph(g);
    const LabeledGraph back = parse_graph(s);
    if (write_graph(back) != s || !(back == g)) ++graph_failures;
    ++graph_trips;
  }

  char detail[160];
  std::snprintf(detail, sizeof detail,
                "%zu certificate + %zu graph-file round trips, %zu failures",
                tree_trips, graph_trips, tree_failures + graph_failures);
  report(8, "round trips:", tree_failures == 0 && graph_failures == 0, detail);
}

}  // namespace

int main() {
  criterion_oracle_equivalence();
  criterion_soundness();
  criterion_generator_completeness();
  criterion_cograph_degeneration();
  criterion_worked_example();
  criterion_complexity();
  criterion_cut_structure();
  criterion_round_trips();
  return failures == 0 ? 0 : 1;
}
