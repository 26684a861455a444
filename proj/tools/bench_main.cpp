// Times the OpenMP kernels against their serial reference implementations
// and checks that both produce identical results.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "ccent/condorcet.hpp"
#include "ccent/graph.hpp"
#include "ccent/random_walk.hpp"

namespace {

using namespace ccent;
using Clock = std::chrono::steady_clock;

double time_ms(const std::function<void()>& fn, int iters) {
  fn();  // warm-up
  auto start = Clock::now();
  for (int i = 0; i < iters; ++i) fn();
  auto stop = Clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count() / iters;
}

void report(const char* kernel, double serial_ms, double parallel_ms, bool equal) {
  std::printf("%-22s serial %9.2f ms   parallel %9.2f ms   speedup %5.2fx   %s\n",
              kernel, serial_ms, parallel_ms, serial_ms / parallel_ms,
              equal ? "results equal" : "RESULTS DIFFER");
}

bool matrices_equal(const DistanceMatrix& a, const DistanceMatrix& b) {
  if (a.node_count() != b.node_count()) return false;
  for (int u = 0; u < a.node_count(); ++u)
    for (int v = 0; v < a.node_count(); ++v)
      if (!(a.at(u, v) == b.at(u, v))) return false;
  return true;
}

bool matrices_equal(const PreferenceMatrix& a, const PreferenceMatrix& b) {
  if (a.node_count() != b.node_count()) return false;
  for (int u = 0; u < a.node_count(); ++u)
    for (int v = 0; v < a.node_count(); ++v)
      if (a.at(u, v) != b.at(u, v)) return false;
  return true;
}

bool matrices_equal(const HittingMatrix& a, const HittingMatrix& b) {
  if (a.node_count() != b.node_count()) return false;
  for (int u = 0; u < a.node_count(); ++u)
    for (int v = 0; v < a.node_count(); ++v)
      if (a.at(u, v) != b.at(u, v)) return false;
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  int apsp_n = 1500;
  int pref_n = 500;
  int hit_n = 60;
  int iters = 3;
  for (int i = 1; i + 1 < argc; i += 2) {
    std::string flag = argv[i];
    int value = std::atoi(argv[i + 1]);
    if (flag == "--apsp-n") apsp_n = value;
    else if (flag == "--pref-n") pref_n = value;
    else if (flag == "--hit-n") hit_n = value;
    else if (flag == "--iters") iters = value;
  }

  {
    Graph g = random_connected_graph(apsp_n, 4.0 / apsp_n, 7);
    DistanceMatrix serial, parallel;
    double ts = time_ms([&] { serial = all_pairs_distances_serial(g); }, iters);
    double tp = time_ms([&] { parallel = all_pairs_distances(g); }, iters);
    report("all-pairs distances", ts, tp, matrices_equal(serial, parallel));
  }
  {
    Graph g = random_connected_graph(pref_n, 0.05, 7);
    PreferenceMatrix serial, parallel;
    double ts = time_ms([&] { serial = preference_matrix_serial(g); }, iters);
    double tp = time_ms([&] { parallel = preference_matrix(g); }, iters);
    report("preference matrix", ts, tp, matrices_equal(serial, parallel));
  }
  {
    Graph g = random_connected_graph(hit_n, 0.2, 7);
    HittingMatrix serial, parallel;
    double ts = time_ms([&] { serial = hitting_times_serial(g); }, iters);
    double tp = time_ms([&] { parallel = hitting_times(g); }, iters);
    report("hitting times", ts, tp, matrices_equal(serial, parallel));
  }
  return 0;
}
