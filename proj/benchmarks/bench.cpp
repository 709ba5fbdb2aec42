#include <benchmark/benchmark.h>

#include <random>

#include "minsurf/builder.hpp"
#include "minsurf/catalog.hpp"
#include "minsurf/nevanlinna.hpp"

using namespace minsurf;

namespace {

Polynomial random_float_poly(std::mt19937_64& rng, int deg) {
    std::normal_distribution<double> n(0.0, 1.0);
    std::vector<Complex> c(deg + 1);
    for (auto& x : c) x = Complex{n(rng), n(rng)};
    if (std::abs(c.back()) < 0.1) c.back() = {1.0, 0.0};
    return Polynomial(std::move(c));
}

void BM_PolyRoots(benchmark::State& state) {
    std::mt19937_64 rng(1);
    std::vector<Polynomial> polys;
    for (int i = 0; i < 64; ++i) polys.push_back(random_float_poly(rng, state.range(0)));
    size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(poly_roots(polys[i++ % polys.size()]));
    }
}
BENCHMARK(BM_PolyRoots)->Arg(8)->Arg(16)->Arg(24);

void BM_MultipleRootCluster(benchmark::State& state) {
    // (z-1)^5 (z+2), expanded in floating point.
    Polynomial p(std::vector<Complex>{{2.0, 0.0}, {1.0, 0.0}});
    const Polynomial lin(std::vector<Complex>{{-1.0, 0.0}, {1.0, 0.0}});
    for (int i = 0; i < 5; ++i) p = p * lin;
    for (auto _ : state) benchmark::DoNotOptimize(poly_roots(p));
}
BENCHMARK(BM_MultipleRootCluster);

void BM_ExactFiber(benchmark::State& state) {
    const auto S = make_miyaoka_sato(-1.0, 0.0);
    const auto& g = S.sphere_data().g.base;
    const SpherePoint b = SpherePoint::finite_exact({Rational(1), Rational(2)});
    for (auto _ : state) benchmark::DoNotOptimize(fiber(g, b));
}
BENCHMARK(BM_ExactFiber);

void BM_WpEval(benchmark::State& state) {
    const SquareTorus T = SquareTorus::unit();
    Complex z{0.31, 0.17};
    for (auto _ : state) {
        benchmark::DoNotOptimize(T.wp(z));
        z += Complex{1e-6, 2e-6}; // defeat caching patterns
    }
}
BENCHMARK(BM_WpEval);

void BM_EdgeQuadrature(benchmark::State& state) {
    const auto phi = PhiTriple::from_surface(make_catenoid());
    for (auto _ : state) {
        const Complex a{1.0, 0.0}, b{1.0, 0.1};
        benchmark::DoNotOptimize(integrate_gk(
            [&](double t) {
                Vec3c v = phi.eval(a + t * (b - a));
                for (auto& c : v) c *= (b - a);
                return v;
            },
            0.0, 1.0, 1e-10));
    }
}
BENCHMARK(BM_EdgeQuadrature);

void BM_AnalyzeSharpSurface(benchmark::State& state) {
    const auto S = make_miyaoka_sato(-1.0, 0.0);
    AnalyzeOptions opt;
    opt.ray_witness = false;
    for (auto _ : state) benchmark::DoNotOptimize(analyze(S, opt));
}
BENCHMARK(BM_AnalyzeSharpSurface);

void BM_AnalyzeTorusFamily(benchmark::State& state) {
    const auto S = make_costa_type(1, 2, {1.0, 0.0});
    AnalyzeOptions opt;
    opt.ray_witness = false;
    for (auto _ : state) benchmark::DoNotOptimize(analyze(S, opt));
}
BENCHMARK(BM_AnalyzeTorusFamily);

void BM_ModularLambda(benchmark::State& state) {
    Complex tau{0.3, 0.08};
    for (auto _ : state) {
        benchmark::DoNotOptimize(modular_lambda(tau));
        tau += Complex{1e-7, 0.0};
    }
}
BENCHMARK(BM_ModularLambda);

} // namespace

BENCHMARK_MAIN();
