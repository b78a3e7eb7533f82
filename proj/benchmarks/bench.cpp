#include <benchmark/benchmark.h>

#include "ecq/scan.hpp"

using namespace ecq;

namespace {

const Curve& ref_curve() {
    static Curve c(0, -2);
    return c;
}
Point ref_point() { return Point::affine(Rat(3), Rat(5)); }

void bm_scalar_mul(benchmark::State& state) {
    const Curve& c = ref_curve();
    Point g = ref_point();
    Int n(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(scalar_mul(c, n, g));
}
BENCHMARK(bm_scalar_mul)->Arg(8)->Arg(32)->Arg(128);

void bm_reduce(benchmark::State& state) {
    Discriminant delta(Int(state.range(0)));
    // a deliberately unreduced translate of the principal form
    QuadForm p = principal_form(delta);
    Int b = p.b + 20 * p.a;
    QuadForm f{p.a, b, (b * b - delta.value()) / (4 * p.a)};
    for (auto _ : state) benchmark::DoNotOptimize(reduce(f, delta));
}
BENCHMARK(bm_reduce)->Arg(492)->Arg(99997)->Arg(3999997);

void bm_compose(benchmark::State& state) {
    Discriminant delta(Int(state.range(0)));
    QuadForm f = rho(principal_form(delta), delta);
    for (auto _ : state) benchmark::DoNotOptimize(compose(f, f, delta));
}
BENCHMARK(bm_compose)->Arg(492)->Arg(99997)->Arg(3999997);

void bm_class_number(benchmark::State& state) {
    Discriminant delta(Int(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(class_number(delta));
}
BENCHMARK(bm_class_number)->Arg(492)->Arg(99997)->Arg(3999997)->Unit(benchmark::kMicrosecond);

void bm_specialize(benchmark::State& state) {
    const Curve& c = ref_curve();
    CanonicalPoint cp = canonicalize(c, ref_point());
    Int p(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(specialize_point(c, cp, p));
}
BENCHMARK(bm_specialize)->Arg(13)->Arg(199)->Arg(997)->Unit(benchmark::kMicrosecond);

void bm_scan(benchmark::State& state) {
    const Curve& c = ref_curve();
    Point g = ref_point();
    ScanOptions opt;
    for (auto _ : state) benchmark::DoNotOptimize(scan(c, g, Int(state.range(0)), opt));
}
BENCHMARK(bm_scan)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
