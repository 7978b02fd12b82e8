// Microbenchmarks for the hot paths: exact quaternion products, short-vector
// enumeration, the zeta evaluator and full lattice sums over random lifts.
#include <benchmark/benchmark.h>

#include "hurwitz/bounds.hpp"
#include "hurwitz/constructions.hpp"
#include "hurwitz/enumeration.hpp"
#include "hurwitz/lattice.hpp"
#include "hurwitz/quaternion.hpp"
#include "hurwitz/rng.hpp"

namespace {

using namespace hurwitz;

void BM_HurwitzProduct(benchmark::State& state) {
  const HurwitzInteger a = HurwitzInteger::from_coords(3, -2, 5, 7);
  const HurwitzInteger b = HurwitzInteger::from_coords(-1, 4, 2, -3);
  for (auto _ : state) {
    HurwitzInteger c = a * b;
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_HurwitzProduct);

void BM_ShortVectorsRank2(benchmark::State& state) {
  set_precision_bits(128);
  const HurwitzLattice lattice = HurwitzLattice::standard(2);
  const Real radius = sqrt(Real(state.range(0)));
  for (auto _ : state) {
    auto vecs = short_vectors(lattice, radius);
    benchmark::DoNotOptimize(vecs);
  }
  state.counters["vectors"] = static_cast<double>(
      short_vectors(lattice, radius).size());
}
BENCHMARK(BM_ShortVectorsRank2)->Arg(2)->Arg(4)->Arg(6);

void BM_Zeta(benchmark::State& state) {
  set_precision_bits(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) {
    Real z = zeta(Real(8));
    benchmark::DoNotOptimize(z);
  }
  set_precision_bits(128);
}
BENCHMARK(BM_Zeta)->Arg(128)->Arg(256);

void BM_LiftLatticeSum(benchmark::State& state) {
  set_precision_bits(128);
  const int m = 2;
  const AveragingSetup setup = make_averaging_setup(m, Rational(1, 2));
  const TestFunction f =
      TestFunction::ball(pow(Real(20) / ball_volume(4 * m).value(),
                             Real(1) / (4 * m)));
  SampleRng rng(7, 0);
  std::vector<Quaternion> w(m - 1);
  for (auto& q : w)
    q = Quaternion{rng.next_unit_fraction(), rng.next_unit_fraction(),
                   rng.next_unit_fraction(), Rational(0)} +
        rng.next_unit_fraction() * Quaternion::omega();
  const HurwitzLattice lifted = lift(setup.base, w, setup.height).result;
  EnumerationOptions opts;
  for (auto _ : state) {
    Real s = lattice_sum(lifted, f, false, opts);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_LiftLatticeSum);

}  // namespace

BENCHMARK_MAIN();
