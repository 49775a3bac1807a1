#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pcog/generator.hpp"
#include "pcog/graph_io.hpp"
#include "pcog/oracle.hpp"
#include "pcog/recognizer.hpp"

namespace {

void diag(const std::string& msg) {
  const bool color = ::isatty(2) && std::getenv("NO_COLOR") == nullptr;
  if (color)
    std::cerr << "\x1b[31merror:\x1b[0m " << msg << "\n";
  else
    std::cerr << "error: " << msg << "\n";
}

pcog::LabeledGraph load_graph(const std::string& path) {
  try {
    return pcog::read_graph(path);
  } catch (const pcog::ParseError& e) {
    throw pcog::Error(path + ": " + e.what());
  }
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw pcog::Error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string pair_1based(pcog::Vertex u, pcog::Vertex v) {
  return "{" + std::to_string(u + 1) + "," + std::to_string(v + 1) + "}";
}

void print_counters(const pcog::RecognitionCounters& c) {
  std::cerr << "twin_tests=" << c.twin_tests << " pair_probes=" << c.pair_probes
            << " orth_tests=" << c.orth_tests << "\n";
}

int run_recognize(const std::string& path, const std::string& format,
                  bool ascii, bool counters) {
  const pcog::LabeledGraph g = load_graph(path);
  const pcog::RecognitionResult res = pcog::recognize(g);
  if (counters) print_counters(res.counters);
  if (res.accepted()) {
    if (format == "dot")
      std::cout << pcog::to_dot(res.cotree, ascii);
    else
      std::cout << pcog::to_sexp(res.cotree) << "\n";
    return 0;
  }
  std::cout << "rejected";
  for (const auto& set : res.remaining) {
    std::cout << " {";
    for (std::size_t i = 0; i < set.size(); ++i) {
      if (i) std::cout << ",";
      std::cout << set[i] + 1;
    }
    std::cout << "}";
  }
  std::cout << "\n";
  return 1;
}

int run_verify(const std::string& graph_path, const std::string& cert_path) {
  const pcog::LabeledGraph g = load_graph(graph_path);
  pcog::Cotree t;
  try {
    t = pcog::parse_cotree(read_text(cert_path));
  } catch (const pcog::ParseError& e) {
    throw pcog::Error(cert_path + ": " + e.what());
  }
  const auto mismatch = pcog::embedding_mismatch(g, t);
  if (!mismatch) {
    std::cout << "ok\n";
    return 0;
  }
  const char* what = mismatch->kind == pcog::MismatchKind::MissingEdge
                         ? "missing edge "
                         : "illegal fill ";
  std::cout << "mismatch: " << what << pair_1based(mismatch->u, mismatch->v)
            << "\n";
  return 1;
}

int run_oracle(const std::string& path, int max_fill, bool serial) {
  const pcog::LabeledGraph g = load_graph(path);
  const pcog::OracleResult res = serial
                                     ? pcog::oracle_is_kprobe_serial(g, max_fill)
                                     : pcog::oracle_is_kprobe(g, max_fill);
  switch (res.status) {
    case pcog::OracleStatus::Accepted:
      std::cout << "fill:";
      for (const auto& [u, v] : res.fill) std::cout << " " << pair_1based(u, v);
      std::cout << "\n";
      return 0;
    case pcog::OracleStatus::Rejected:
      std::cout << "rejected\n";
      return 1;
    case pcog::OracleStatus::BudgetExceeded:
      std::cout << "budget-exceeded\n";
      diag(std::to_string(res.candidate_count) +
           " fill candidates exceed the budget of " + std::to_string(max_fill));
      return 3;
  }
  return 2;
}

int run_generate(int n, int k, double membership_prob, double join_prob,
                 std::uint64_t seed, const std::string& out,
                 bool with_witness, const std::string& witness_out) {
  const bool want_witness = with_witness || !witness_out.empty();
  std::string witness_path = witness_out;
  if (want_witness && witness_path.empty()) {
    if (out.empty())
      throw pcog::Error("writing the witness needs --out or --witness-out");
    witness_path = out + ".cert";
  }

  const pcog::GeneratedInstance inst =
      pcog::generate(n, k, membership_prob, join_prob, seed);
  const std::string text = pcog::write_graph(inst.graph);
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out, std::ios::binary);
    if (!f) throw pcog::Error("cannot write file: " + out);
    f << text;
  }
  if (want_witness) {
    std::ofstream f(witness_path, std::ios::binary);
    if (!f) throw pcog::Error("cannot write file: " + witness_path);
    f << pcog::to_sexp(inst.witness) << "\n";
  }
  return 0;
}

int run_bench(const std::vector<int>& n_list, int k, std::uint64_t seed,
              int reps) {
  std::cout << "n,k,rep,millis,twin_tests,pair_probes,orth_tests\n";
  std::vector<double> log_n;
  std::vector<double> log_t;
  for (int n : n_list) {
    std::vector<double> times;
    for (int rep = 1; rep <= reps; ++rep) {
      pcog::SplitMix64 mix(seed ^
                           static_cast<std::uint64_t>(n) * 0x9E3779B97F4A7C15ULL ^
                           static_cast<std::uint64_t>(rep) * 0xBF58476D1CE4E5B9ULL);
      const pcog::GeneratedInstance inst =
          pcog::generate(n, k, 0.3, 0.5, mix.next());
      const auto t0 = std::chrono::steady_clock::now();
      const pcog::RecognitionResult res = pcog::recognize(inst.graph);
      const auto t1 = std::chrono::steady_clock::now();
      if (!res.accepted()) throw pcog::Error("generated instance was rejected");
      const double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
      times.push_back(ms);
      std::cout << n << "," << k << "," << rep << "," << ms << ","
                << res.counters.twin_tests << "," << res.counters.pair_probes
                << "," << res.counters.orth_tests << "\n";
    }
    std::sort(times.begin(), times.end());
    const double median = times[times.size() / 2];
    log_n.push_back(std::log(static_cast<double>(n)));
    log_t.push_back(std::log(std::max(median, 1e-6)));
  }

  double slope = std::nan("");
  const std::size_t pts = log_n.size();
  if (pts >= 2) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < pts; ++i) {
      sx += log_n[i];
      sy += log_t[i];
      sxx += log_n[i] * log_n[i];
      sxy += log_n[i] * log_t[i];
    }
    const double denom = pts * sxx - sx * sx;
    if (denom != 0.0) slope = (pts * sxy - sx * sy) / denom;
  }
  std::cout << "slope=" << slope << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"labeled k-probe cograph toolkit"};
  app.require_subcommand(1);

  std::string graph_path, cert_path, format = "sexp", out, witness_out;
  bool ascii = false, counters = false, serial = false, with_witness = false;
  int max_fill = pcog::kDefaultMaxFill;
  int gen_n = 0, gen_k = 0, reps = 3, bench_k = 4;
  double membership_prob = 0.3, join_prob = 0.5;
  std::uint64_t seed = 1;
  std::vector<int> n_list;

  CLI::App* rec = app.add_subcommand("recognize", "run the twin-merge recognizer");
  rec->add_option("graph", graph_path, "input graph file")->required();
  rec->add_option("--format", format, "certificate format")
      ->check(CLI::IsMember({"sexp", "dot"}));
  rec->add_flag("--ascii", ascii, "ASCII operator glyphs in dot output");
  rec->add_flag("--counters", counters, "print work counters to stderr");

  CLI::App* ver = app.add_subcommand("verify", "check a certificate against a graph");
  ver->add_option("graph", graph_path, "input graph file")->required();
  ver->add_option("certificate", cert_path, "certificate file")->required();

  CLI::App* ora = app.add_subcommand("oracle", "brute-force fill search");
  ora->add_option("graph", graph_path, "input graph file")->required();
  ora->add_option("--max-fill", max_fill, "candidate budget")
      ->check(CLI::NonNegativeNumber);
  ora->add_flag("--serial", serial, "use the single-threaded reference search");

  CLI::App* gen = app.add_subcommand("generate", "emit a random instance");
  gen->add_option("--n", gen_n, "vertex count")->required()->check(CLI::Range(1, 10000));
  gen->add_option("--k", gen_k, "independent set count")->check(CLI::NonNegativeNumber);
  gen->add_option("--membership-prob", membership_prob, "per-set membership probability")
      ->check(CLI::Range(0.0, 1.0));
  gen->add_option("--join-prob", join_prob, "join probability per internal node")
      ->check(CLI::Range(0.0, 1.0));
  gen->add_option("--seed", seed, "PRNG seed");
  gen->add_option("--out", out, "output file (default stdout)");
  gen->add_flag("--with-witness", with_witness, "also write the witness certificate");
  gen->add_option("--witness-out", witness_out, "witness file path");

  CLI::App* ben = app.add_subcommand("bench", "recognizer scaling on generated instances");
  ben->add_option("--n-list", n_list, "comma-separated vertex counts")
      ->required()
      ->delimiter(',')
      ->check(CLI::Range(1, 10000));
  ben->add_option("--k", bench_k, "independent set count")->check(CLI::NonNegativeNumber);
  ben->add_option("--seed", seed, "PRNG seed");
  ben->add_option("--reps", reps, "instances per size")->check(CLI::Range(1, 1000000));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::stringstream msg;
    const int code = app.exit(e, msg, msg);
    (void)code;
    std::string m = msg.str();
    while (!m.empty() && m.back() == '\n') m.pop_back();
    diag(m);
    return 2;
  }

  try {
    if (rec->parsed()) return run_recognize(graph_path, format, ascii, counters);
    if (ver->parsed()) return run_verify(graph_path, cert_path);
    if (ora->parsed()) return run_oracle(graph_path, max_fill, serial);
    if (gen->parsed())
      return run_generate(gen_n, gen_k, membership_prob, join_prob, seed, out,
                          with_witness, witness_out);
    if (ben->parsed()) return run_bench(n_list, bench_k, seed, reps);
  } catch (const pcog::Error& e) {
    diag(e.what());
    return 2;
  } catch (const std::exception& e) {
    diag(e.what());
    return 2;
  }
  return 2;
}
