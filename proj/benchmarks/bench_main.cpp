#include <benchmark/benchmark.h>

#include <cstdint>

#include "rgate/abelian.hpp"
#include "rgate/cobordism.hpp"
#include "rgate/groupcoh.hpp"
#include "rgate/repvar.hpp"
#include "rgate/seifert.hpp"

using namespace rgate;

namespace {

abelian::IntMatrix random_matrix(std::uint64_t seed, int n) {
    std::uint64_t state = seed;
    const auto next = [&] {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        return z ^ (z >> 31);
    };
    abelian::IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = to_int(static_cast<long long>(next() % 19) - 9);
    return m;
}

void BM_SmithNormalForm(benchmark::State& state) {
    const auto m = random_matrix(7, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(abelian::smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(6)->Arg(10);

void BM_EnumerateRotationData(benchmark::State& state) {
    const auto s = seifert::from_fibers({2, 3, 5, 7});
    for (auto _ : state) benchmark::DoNotOptimize(repvar::enumerate_rotation_data(s));
}
BENCHMARK(BM_EnumerateRotationData);

void BM_SynthesizeWitness(benchmark::State& state) {
    const auto s = seifert::from_fibers({2, 3, 5});
    const auto tuples = repvar::enumerate_rotation_data(s);
    for (auto _ : state) benchmark::DoNotOptimize(repvar::synthesize_witness(s, tuples[0]));
}
BENCHMARK(BM_SynthesizeWitness);

void BM_FoxMatrix(benchmark::State& state) {
    const auto s = seifert::from_fibers({2, 3, 5, 7});
    const auto w = repvar::synthesize_witness(s, repvar::enumerate_rotation_data(s).front());
    for (auto _ : state)
        benchmark::DoNotOptimize(groupcoh::fox_matrix(w.representation.presentation, w.representation));
}
BENCHMARK(BM_FoxMatrix);

void BM_ExtendRepresentation(benchmark::State& state) {
    cobordism::RibbonHandleData h;
    h.base.generators = {"x"};
    h.new_generators = {"b1"};
    h.attaching_words = {Word{2, 2, 1, 1}};
    GroupPresentation base;
    base.generators = {"x"};
    const auto rho = groupcoh::make_representation(base, {su2::exp_i(1.0471975511965976)});
    for (auto _ : state) benchmark::DoNotOptimize(cobordism::extend_representation(h, rho));
}
BENCHMARK(BM_ExtendRepresentation);

}  // namespace

BENCHMARK_MAIN();
