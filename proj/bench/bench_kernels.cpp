// Serial reference vs OpenMP kernels: polynomial products in D and the
// integer-preserving elimination behind the membership solver.

#include "ncalg/catalog.hpp"
#include "ncalg/membership.hpp"

#include <benchmark/benchmark.h>

using namespace ncalg;

namespace {

const AlgebraPresentation &dpres() { return catalog(AlgebraId::D).pres; }

NcPolynomial theta_element() { return catalog(AlgebraId::D).elements.theta; }

NcPolynomial wide_operand() {
    // theta * s: a few hundred term pairs per product.
    const auto &e = catalog(AlgebraId::D);
    return multiply_serial(e.elements.theta, e.elements.s, e.pres);
}

void bm_multiply_serial(benchmark::State &state) {
    NcPolynomial a = wide_operand(), b = theta_element();
    for (auto _ : state)
        benchmark::DoNotOptimize(multiply_serial(a, b, dpres()));
}

void bm_multiply_parallel(benchmark::State &state) {
    NcPolynomial a = wide_operand(), b = theta_element();
    for (auto _ : state)
        benchmark::DoNotOptimize(multiply_parallel(a, b, dpres()));
}

MembershipSystem one_in_p0_system(int bound) {
    const auto &e = catalog(AlgebraId::D);
    MembershipProblem p;
    p.target = NcPolynomial::one();
    p.generators = {e.elements.q, e.elements.s};
    p.generator_is_normal = {true, true};
    p.bound = bound;
    return membership_system(p, e.pres);
}

void bm_eliminate_serial(benchmark::State &state) {
    MembershipSystem sys = one_in_p0_system(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(eliminate_serial(sys.rows, sys.columns.size()));
}

void bm_eliminate_parallel(benchmark::State &state) {
    MembershipSystem sys = one_in_p0_system(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(eliminate_parallel(sys.rows, sys.columns.size()));
}

} // namespace

BENCHMARK(bm_multiply_serial);
BENCHMARK(bm_multiply_parallel);
BENCHMARK(bm_eliminate_serial)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_eliminate_parallel)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
