#include <benchmark/benchmark.h>

#include "sumrules/frames.hpp"
#include "sumrules/riesz.hpp"
#include "sumrules/spectrum.hpp"
#include "sumrules/sumrule.hpp"
#include "sumrules/torus.hpp"

namespace {

using namespace sumrules;

void bm_torus_enumeration(benchmark::State& state) {
  const TorusModuli mod = make_torus(Rational(1, 3), Rational(5, 7));
  const Rational nu_max(state.range(0));
  for (auto _ : state) {
    const TorusSpectrum ts = torus_spectrum(mod, nu_max);
    benchmark::DoNotOptimize(ts.spectrum.levels.size());
  }
}
BENCHMARK(bm_torus_enumeration)->Arg(64)->Arg(256)->Arg(1024);

void bm_identity_large_n(benchmark::State& state) {
  const CrossSpace sp = make_cross(CrossFamily::sphere, 2);
  const unsigned long l = static_cast<unsigned long>(state.range(0));
  const Spectrum s = cross_spectrum(sp, l + 1);
  const Integer n = cross_counting(sp, l);
  for (auto _ : state) {
    const CheckReport r = check_identity(s, 2, n);
    benchmark::DoNotOptimize(r.holds);
  }
}
BENCHMARK(bm_identity_large_n)->Arg(50)->Arg(200)->Arg(800);

void bm_recurrence(benchmark::State& state) {
  const CrossSpace sp = make_cross(CrossFamily::quaternionic_projective, 8);
  const CrossParameters par = cross_parameters(sp);
  std::vector<Rational> levels;
  for (long l = 0; l <= state.range(0); ++l) {
    levels.push_back(cross_eigenvalue(sp, static_cast<unsigned long>(l)));
  }
  for (auto _ : state) {
    const RecurrenceResult rr = recurrence_counts(levels, par.a, par.h, Rational(1));
    benchmark::DoNotOptimize(rr.all_integer);
  }
}
BENCHMARK(bm_recurrence)->Arg(100)->Arg(400);

void bm_riesz_grid(benchmark::State& state) {
  const Spectrum s =
      torus_spectrum(make_torus(Rational(0), Rational(1)), Rational(state.range(0))).spectrum;
  const Rational z_max = Rational(state.range(0)) - 2;
  const auto grid = default_z_grid(s, z_max);
  for (auto _ : state) {
    const RieszReport r = weyl_bound_check(s, 2, {}, PiScaled{Rational(1), 0}, grid);
    benchmark::DoNotOptimize(r.holds);
  }
}
BENCHMARK(bm_riesz_grid)->Arg(32)->Arg(128);

void bm_frame_shells(benchmark::State& state) {
  const TorusModuli mod = make_torus(Rational(0), Rational(1));
  const TorusSpectrum ts = torus_spectrum(mod, Rational(state.range(0)));
  for (auto _ : state) {
    for (std::size_t i = 1; i < ts.spectrum.levels.size(); ++i) {
      const FrameReport r = frame_check(mod, ts.spectrum.levels[i].value);
      benchmark::DoNotOptimize(r.tight);
    }
  }
}
BENCHMARK(bm_frame_shells)->Arg(50);

void bm_commutator_identity(benchmark::State& state) {
  const TorusModuli mod = make_torus(Rational(1, 2), Rational(3, 4));
  const unsigned long levels = static_cast<unsigned long>(state.range(0));
  for (auto _ : state) {
    const CheckReport r =
        verify_sum_rule_identity(mod, DualVector{1, 0}, levels, Rational(200));
    benchmark::DoNotOptimize(r.holds);
  }
}
BENCHMARK(bm_commutator_identity)->Arg(2)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
