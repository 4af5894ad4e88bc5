// Serial reference kernels against their OpenMP versions.
#include <benchmark/benchmark.h>

#include "artin/equivariant.hpp"
#include "artin/flag_complex.hpp"
#include "artin/forest.hpp"

namespace {

using namespace artin;

// Complete graph, all labels 2, weights 1..n. Every clique is spherical,
// so the flag complex is a full simplex.
struct Input {
  LabeledGraph g;
  Character c;
};

Input complete(int n) {
  Input in;
  for (int i = 0; i < n; ++i) in.g.add_vertex("v" + std::to_string(i));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) in.g.add_edge(i, j, 2);
  std::vector<long> m;
  for (int i = 0; i < n; ++i) m.push_back(i + 1);
  in.c = Character(in.g, m);
  return in;
}

const FieldSpec Q = FieldSpec::rationals();

template <bool Parallel>
void forest_gcd(benchmark::State& st) {
  Input in = complete(static_cast<int>(st.range(0)));
  auto forests = spanning_forests(in.g, 10000000);
  for (auto _ : st) {
    auto r = Parallel ? fitting_gcds_parallel(in.g, in.c, Q, forests)
                      : fitting_gcds_serial(in.g, in.c, Q, forests);
    benchmark::DoNotOptimize(r);
  }
  st.counters["forests"] = static_cast<double>(forests.size());
}

template <bool Parallel>
void boundary_product(benchmark::State& st) {
  Input in = complete(static_cast<int>(st.range(0)));
  FlagComplex fc(in.g);
  PolyMatrix a = twisted_boundary(fc, in.c, Q, 1);
  PolyMatrix b = twisted_boundary(fc, in.c, Q, 2);
  for (auto _ : st) {
    PolyMatrix r = Parallel ? multiply(a, b) : multiply_serial(a, b);
    benchmark::DoNotOptimize(r);
  }
  st.counters["rows"] = static_cast<double>(a.rows());
}

}  // namespace

BENCHMARK(forest_gcd<false>)->DenseRange(3, 5)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(forest_gcd<true>)->DenseRange(3, 5)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(boundary_product<false>)->DenseRange(5, 8)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(boundary_product<true>)->DenseRange(5, 8)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
