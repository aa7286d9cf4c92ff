// Serial against OpenMP scanning over a fixed set of critical graphs.
// Usage: bench_scan [jobs] [repeats]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "critcheck/graph6.hpp"
#include "critcheck/report_io.hpp"
#include "critcheck/scan.hpp"

using namespace critcheck;

namespace {

std::vector<std::pair<std::size_t, std::string>> workload(int repeats) {
  // Critical graphs, so every check does real work.
  std::vector<Graph> base{graphs::cycle(5), graphs::cycle(7), graphs::complete(5).without_edge(0, 1),
                          split_vertex(graphs::complete(4), 0, {{1}, {2, 3}})};
  for (const auto& p : neighborhood_bipartitions(graphs::octahedron(), 0)) {
    base.push_back(split_vertex(graphs::octahedron(), 0, p));
  }
  std::vector<std::pair<std::size_t, std::string>> lines;
  for (int r = 0; r < repeats; ++r) {
    for (const Graph& g : base) lines.emplace_back(lines.size() + 1, encode_graph6(g));
  }
  return lines;
}

double millis_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  const int jobs = argc > 1 ? std::atoi(argv[1]) : 4;
  const int repeats = argc > 2 ? std::atoi(argv[2]) : 50;
  ScanConfig config{check_ids(), {}};
  config.options.budget = 1000;
  const auto lines = workload(repeats);

  auto t0 = std::chrono::steady_clock::now();
  const auto serial = scan_serial(lines, config);
  const double serial_ms = millis_since(t0);

  t0 = std::chrono::steady_clock::now();
  const auto parallel = scan_parallel(lines, config, jobs);
  const double parallel_ms = millis_since(t0);

  bool same = serial.size() == parallel.size();
  for (std::size_t i = 0; same && i < serial.size(); ++i) same = to_csv(serial[i], false) == to_csv(parallel[i], false);

  std::printf("graphs=%zu checks=%zu\n", lines.size(), config.checks.size());
  std::printf("serial   %10.1f ms\n", serial_ms);
  std::printf("parallel %10.1f ms (jobs=%d, speedup %.2fx)\n", parallel_ms, jobs, serial_ms / parallel_ms);
  std::printf("rows identical: %s\n", same ? "yes" : "no");
  return same ? 0 : 1;
}
