// Compares the parallel oracle fill search against the serial reference on
// random labeled instances, checking that both return identical results.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "pcog/generator.hpp"
#include "pcog/oracle.hpp"

namespace {

const char* status_name(pcog::OracleStatus s) {
  switch (s) {
    case pcog::OracleStatus::Accepted:
      return "accepted";
    case pcog::OracleStatus::Rejected:
      return "rejected";
    case pcog::OracleStatus::BudgetExceeded:
      return "budget-exceeded";
  }
  return "?";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial vs parallel oracle fill search"};
  int n = 7, k = 2, instances = 20, max_fill = pcog::kDefaultMaxFill;
  double edge_prob = 0.35, membership_prob = 0.5;
  std::uint64_t seed = 1;
  app.add_option("--n", n, "vertices per instance")->check(CLI::Range(1, 10000));
  app.add_option("--k", k, "independent set count")->check(CLI::NonNegativeNumber);
  app.add_option("--instances", instances, "instance count")->check(CLI::Range(1, 1000000));
  app.add_option("--max-fill", max_fill, "candidate budget")->check(CLI::NonNegativeNumber);
  app.add_option("--edge-prob", edge_prob, "edge probability")->check(CLI::Range(0.0, 1.0));
  app.add_option("--membership-prob", membership_prob, "per-set membership probability")
      ->check(CLI::Range(0.0, 1.0));
  app.add_option("--seed", seed, "PRNG seed");
  CLI11_PARSE(app, argc, argv);

  std::cout << "instance,candidates,status,fill_size,serial_ms,parallel_ms\n";
  double serial_total = 0, parallel_total = 0;
  pcog::SplitMix64 seeds(seed);
  for (int i = 1; i <= instances; ++i) {
    const pcog::LabeledGraph g = pcog::generate_random_labeled(
        n, k, edge_prob, membership_prob, seeds.next());

    const auto t0 = std::chrono::steady_clock::now();
    const pcog::OracleResult a = pcog::oracle_is_kprobe_serial(g, max_fill);
    const auto t1 = std::chrono::steady_clock::now();
    const pcog::OracleResult b = pcog::oracle_is_kprobe(g, max_fill);
    const auto t2 = std::chrono::steady_clock::now();

    if (a.status != b.status || a.fill != b.fill ||
        a.candidate_count != b.candidate_count) {
      std::cerr << "error: serial and parallel results differ on instance " << i
                << " (" << status_name(a.status) << " vs "
                << status_name(b.status) << ")\n";
      return 1;
    }

    const double serial_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    const double parallel_ms = std::chrono::duration<double, std::milli>(t2 - t1).count();
    serial_total += serial_ms;
    parallel_total += parallel_ms;
    std::cout << i << "," << a.candidate_count << "," << status_name(a.status)
              << "," << a.fill.size() << "," << serial_ms << "," << parallel_ms
              << "\n";
  }
  std::cout << "total,,," << "," << serial_total << "," << parallel_total << "\n";
  return 0;
}
