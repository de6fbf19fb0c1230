#include <benchmark/benchmark.h>

#include "padic/diffsys.hpp"
#include "padic/norms.hpp"

using namespace padic;

namespace {

PSeries dense_poly(int deg) {
    PSeries f(1);
    for (int a = 0; a <= deg; ++a)
        f.add_term(MultiIndex({std::vector<uint32_t>{(uint32_t)a}}), Rat(a * 7 + 1, a + 2));
    return f;
}

void bm_taylor_shift(benchmark::State& state) {
    PSeries f = dense_poly(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(f.taylor_shift({Rat(3, 5)}));
    }
}
BENCHMARK(bm_taylor_shift)->Arg(16)->Arg(64)->Arg(256);

void bm_gauss_norm(benchmark::State& state) {
    PSeries f = dense_poly(static_cast<int>(state.range(0)));
    GenericPoint xi = GenericPoint::disk_boundary(Rat(1, 3), Rat(-2));
    for (auto _ : state) {
        benchmark::DoNotOptimize(gauss_norm(f, xi, 2));
    }
}
BENCHMARK(bm_gauss_norm)->Arg(16)->Arg(64)->Arg(256);

void bm_iterate(benchmark::State& state) {
    DiffSystem sys;
    sys.p = 2;
    sys.d = 1;
    sys.mu = 2;
    PSeries zero(1);
    PSeries x = PSeries::variable(1, 0);
    sys.G = {{{RatFunc::poly(x), RatFunc::poly(PSeries::constant(1, Rat(1)))},
              {RatFunc::poly(PSeries::constant(1, Rat(1, 3))), RatFunc::poly(zero)}}};
    sys.domain = LaurentSpec::polydisk(1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(iterate(sys, static_cast<uint32_t>(state.range(0))));
    }
}
BENCHMARK(bm_iterate)->Arg(16)->Arg(64);

void bm_radius_estimate(benchmark::State& state) {
    DiffSystem sys;
    sys.p = 2;
    sys.d = 1;
    sys.mu = 1;
    sys.G = {{{RatFunc{PSeries::constant(1, Rat(1, 4)), PSeries::variable(1, 0)}}}};
    sys.domain = LaurentSpec::annulus(Rat(-3), Rat(0));
    Strata st = iterate(sys, static_cast<uint32_t>(state.range(0)));
    GenericPoint xi = GenericPoint::disk_boundary(Rat(0), Rat(-1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            radius_estimate(sys, st, xi, static_cast<uint32_t>(state.range(0) / 2)));
    }
}
BENCHMARK(bm_radius_estimate)->Arg(32)->Arg(128);

}  // namespace

BENCHMARK_MAIN();
