#include <benchmark/benchmark.h>

#include "m2coh/cohomology.hpp"
#include "m2coh/extensions.hpp"
#include "m2coh/random.hpp"

using namespace m2coh;

static void BM_rref_d2star(benchmark::State& state) {
  const auto p = static_cast<std::uint64_t>(state.range(0));
  Field f(p);
  RestrictedLieAlgebra A = make_m2(f, zero_vec(f, p));
  Matrix m = d2_star_matrix(A);
  for (auto _ : state) {
    auto r = rref(m);
    benchmark::DoNotOptimize(r.rank);
  }
}
BENCHMARK(BM_rref_d2star)->Arg(5)->Arg(7)->Arg(11)->Arg(13);

static void BM_eval_omega(benchmark::State& state) {
  const auto p = static_cast<std::uint64_t>(state.range(0));
  Field f(p);
  RestrictedLieAlgebra A = make_m2(f, zero_vec(f, p));
  OmegaMap w = OmegaMap::tilde(f, phi_k(f, p, static_cast<int>(p) + 1));
  Rng rng(1);
  Vec g = rng.vec(f, p);
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval_omega(A, w, g));
  }
}
BENCHMARK(BM_eval_omega)->Arg(5)->Arg(7)->Arg(11)->Arg(13);

static void BM_h2_star(benchmark::State& state) {
  const auto p = static_cast<std::uint64_t>(state.range(0));
  Field f(p);
  Rng rng(2);
  RestrictedLieAlgebra A = make_m2(f, rng.vec(f, p));
  for (auto _ : state) {
    CohomologyResult H = h2_star(A);
    benchmark::DoNotOptimize(H.dimension);
  }
}
BENCHMARK(BM_h2_star)->Arg(5)->Arg(7)->Arg(11)->Arg(13);

static void BM_verify_extension(benchmark::State& state) {
  const auto p = static_cast<std::uint64_t>(state.range(0));
  Field f(p);
  RestrictedLieAlgebra A = make_m2(f, zero_vec(f, p));
  Cochain2 top = phi_k(f, p, static_cast<int>(p) + 1);
  CentralExtension E = extend(A, RestrictedCochain2(top, OmegaMap::tilde(f, top)));
  for (auto _ : state) {
    VerifyReport rep = verify_restricted(E.total, {4, 9});
    benchmark::DoNotOptimize(rep.all_passed());
  }
}
BENCHMARK(BM_verify_extension)->Arg(5)->Arg(7)->Arg(11)->Arg(13);

BENCHMARK_MAIN();
