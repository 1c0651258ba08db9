#include <benchmark/benchmark.h>

#include "qordkit/genfun.hpp"
#include "qordkit/partitions.hpp"
#include "qordkit/segre.hpp"
#include "qordkit/wordposet.hpp"
#include "qordkit/wreath.hpp"

using namespace qordkit;

static void BM_PrincipalIdealDfa(benchmark::State& state)
{
    PosetContext ctx(2, AbelianGroup({2}));
    WeightedWord x;
    for (int i = 0; i < state.range(0); ++i) {
        x.letters.push_back(i % 2);
        x.weights.push_back(1);
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(compile_quasi_ordered(principal_ideal_language(ctx, x)));
    }
}
BENCHMARK(BM_PrincipalIdealDfa)->DenseRange(1, 3);

static void BM_ExpandRational(benchmark::State& state)
{
    Alphabet ab({"a", "b"});
    QuasiOrderedExpr q{ab, LanguageExpr::star({0, 1}), CongruenceSpec{AbelianGroup({3}), {1, 2}, {0}}};
    const FactoredRational f = quasi_ordered_genfun(q, Norm::identity(2));
    const int d = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(expand_rational(f, {d, d}));
    }
}
BENCHMARK(BM_ExpandRational)->Arg(8)->Arg(16);

static void BM_SeriesFromDfa(benchmark::State& state)
{
    Alphabet ab({"a", "b"});
    Dfa d = compile_congruence(ab, CongruenceSpec{AbelianGroup({5}), {1, 2}, {0}});
    const int b = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(series_from_dfa(d, Norm::identity(2), {b, b}));
    }
}
BENCHMARK(BM_SeriesFromDfa)->Arg(16)->Arg(32);

static void BM_MurnaghanNakayama(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const auto ps = partitions(n);
    for (auto _ : state) {
        Integer acc = 0;
        for (const auto& lambda : ps) {
            acc += sn_character(lambda, {n});
            acc += sn_character(lambda, Partition(static_cast<std::size_t>(n), 1));
        }
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_MurnaghanNakayama)->Arg(10)->Arg(14);

static void BM_WreathCharacter(benchmark::State& state)
{
    const CharacterTable g = cyclic_character_table(2);
    const int n = static_cast<int>(state.range(0));
    const PartitionValuedFunction lambda{{n - 1}, {1}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(wreath_irreducible_character(g, lambda));
    }
}
BENCHMARK(BM_WreathCharacter)->Arg(4)->Arg(6);

static void BM_SegreHomology(benchmark::State& state)
{
    const auto x = SimplicialComplex::from_facets({"0", "1", "2"}, {{0, 1}, {1, 2}, {0, 2}});
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(homology_ranks(segre_power(x, n), 1));
    }
}
BENCHMARK(BM_SegreHomology)->Arg(2)->Arg(3);
BENCHMARK_MAIN();
