#include <benchmark/benchmark.h>

#include <random>

#include "tnlb/alexander.hpp"
#include "tnlb/bounds.hpp"
#include "tnlb/dt.hpp"
#include "tnlb/snf.hpp"

namespace {

using namespace tnlb;

const std::vector<long> kTrefoil{4, 6, 2};
const std::vector<long> kSeven{8, 10, 12, 14, 2, 4, 6};

void bm_smith_normal_form(benchmark::State& state) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> d(-9, 9);
    IntMat a(6, 6);
    for (auto& x : a.a) x = d(rng);
    for (auto _ : state) {
        SmithForm s = smith_normal_form(a);
        benchmark::DoNotOptimize(s.d);
    }
}
BENCHMARK(bm_smith_normal_form);

void bm_wirtinger_decode(benchmark::State& state) {
    for (auto _ : state) {
        GroupPresentation p = wirtinger_from_dt(kSeven);
        benchmark::DoNotOptimize(p.relators);
    }
}
BENCHMARK(bm_wirtinger_decode);

void bm_delta_trefoil(benchmark::State& state) {
    GroupPresentation p = wirtinger_from_dt(kTrefoil);
    AbelianizationData ab = abelianize(p);
    Character one = Character::trivial(ab);
    for (auto _ : state) {
        LaurentPoly d = delta_sigma(p, ab, one);
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(bm_delta_trefoil);

void bm_bound_pipeline(benchmark::State& state) {
    GroupPresentation p = wirtinger_from_dt(kSeven);
    CohomologyClass psi{{mpz_class(1)}};
    CoefficientConfig cfg;
    cfg.sigma = Character::trivial(abelianize(p));
    for (auto _ : state) {
        BoundReport r = compute_bound(p, psi, cfg, SpaceMode::manifold, 1);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(bm_bound_pipeline);

void bm_laurent_gcd_bivariate(benchmark::State& state) {
    LaurentPoly x = LaurentPoly::monomial(2, {1, 0}, Cyclotomic(1));
    LaurentPoly y = LaurentPoly::monomial(2, {0, 1}, Cyclotomic(1));
    LaurentPoly one = LaurentPoly::constant(2, Cyclotomic(1));
    LaurentPoly common = x * y + one;
    LaurentPoly f = common * (x - one) * (x + y);
    LaurentPoly g = common * (y - one) * (y - one);
    for (auto _ : state) {
        LaurentPoly d = laurent_gcd(f, g);
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(bm_laurent_gcd_bivariate);

}  // namespace

BENCHMARK_MAIN();
