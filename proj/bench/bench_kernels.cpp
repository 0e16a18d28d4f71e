// Serial reference versus OpenMP path for the heavy kernels. Each benchmark
// first checks that both paths give identical results.
#include <benchmark/benchmark.h>

#include <cstdlib>
#include <iostream>

#include "arrkh/suites.hpp"

using namespace arrkh;

namespace {

Exec exec_of(const benchmark::State& s) { return s.range(0) ? Exec::parallel : Exec::serial; }

// Six generic vectors in Q^3.
VectorArrangement sample() {
  return VectorArrangement::standard(3, {{1, 0, 2}, {0, 1, -1}, {1, 1, 1}, {2, -1, 0}, {1, 2, 3}, {0, 3, 1}});
}

// Signed K4; graphical cubes always admit edge scalars.
SignedArrangement signed_sample() {
  Graph g{4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 3}, {2, 4}}, {}, true};
  g.signs = {Sign::plus, Sign::minus, Sign::plus, Sign::plus, Sign::minus, Sign::minus};
  return from_signed_graph(g);
}

PlanarDiagram sample_diagram() {
  PlanarDiagram d = parse_pd("X 4 2 5 1\nX 8 6 1 5\nX 6 3 7 4\nX 2 7 3 8");
  for (long arc : {1, 3, 5, 7}) d = add_kink(d, arc, 1);
  return d;
}

template <class F>
void require_equal(const char* what, F f) {
  if (!(f(Exec::serial) == f(Exec::parallel))) {
    std::cerr << what << ": serial and parallel results differ\n";
    std::exit(1);
  }
}

void BM_SubsetRanks(benchmark::State& s) {
  const VectorArrangement a = sample();
  for (auto _ : s) benchmark::DoNotOptimize(subset_ranks(a, exec_of(s)));
}

void BM_TutteHomology(benchmark::State& s) {
  const VectorArrangement a = sample();
  for (auto _ : s) benchmark::DoNotOptimize(theory_homology(a, Theory::tutte_d, exec_of(s)));
}

void BM_Khovanov(benchmark::State& s) {
  const SignedArrangement a = signed_sample();
  for (auto _ : s) benchmark::DoNotOptimize(kh_homology(a, exec_of(s)));
}

void BM_SmoothingCircles(benchmark::State& s) {
  const PlanarDiagram d = sample_diagram();
  for (auto _ : s) benchmark::DoNotOptimize(all_smoothing_circles(d, exec_of(s)));
}

}  // namespace

BENCHMARK(BM_SubsetRanks)->Arg(0)->Arg(1)->ArgName("parallel");
BENCHMARK(BM_TutteHomology)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Khovanov)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SmoothingCircles)->Arg(0)->Arg(1)->ArgName("parallel");

int main(int argc, char** argv) {
  require_equal("subset ranks", [](Exec e) { return subset_ranks(sample(), e); });
  require_equal("tutte-d homology", [](Exec e) { return theory_homology(sample(), Theory::tutte_d, e); });
  require_equal("kh homology", [](Exec e) { return kh_homology(signed_sample(), e); });
  require_equal("smoothing circles", [](Exec e) { return all_smoothing_circles(sample_diagram(), e); });
  std::cout << "serial and parallel results identical\n";
  benchmark::Initialize(&argc, argv);
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
