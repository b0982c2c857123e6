#include <benchmark/benchmark.h>

#include "qloop/dl.hpp"
#include "qloop/eliminate.hpp"
#include "qloop/loopspace.hpp"
#include "qloop/nishida.hpp"
#include "qloop/steenrod.hpp"

namespace {

void BM_AdemNormalForm(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state) {
        qloop::SqAdem adem;  // fresh memo so the work is real
        qloop::SqElem e = adem.normal_form(qloop::SqWord{{m, m / 2, m / 4}});
        benchmark::DoNotOptimize(e);
    }
}
BENCHMARK(BM_AdemNormalForm)->Arg(32)->Arg(64)->Arg(128);

void BM_WordNormalForm(benchmark::State& state) {
    const long long n = state.range(0);
    const std::vector<int> upper = qloop::lower_to_upper({1, 2, 3, 4, 5, 6, 7}, n);
    for (auto _ : state) {
        qloop::DlEngine dl(n);
        qloop::Element e = dl.word_normal_form(upper);
        benchmark::DoNotOptimize(e);
    }
}
BENCHMARK(BM_WordNormalForm)->Arg(1)->Arg(4)->Arg(16);

void BM_SqDualSweep(benchmark::State& state) {
    const long long n = state.range(0);
    const std::vector<int> upper = qloop::lower_to_upper({3, 4, 5, 6}, n);
    for (auto _ : state) {
        qloop::DlEngine dl(n);
        qloop::SqDual sq(dl);
        qloop::AnnihilationWitness wit;
        bool ann = sq.is_A_annihilated(
            qloop::Element::single(qloop::Product{qloop::Word{upper}}), &wit);
        benchmark::DoNotOptimize(ann);
    }
}
BENCHMARK(BM_SqDualSweep)->Arg(2)->Arg(8)->Arg(16);

void BM_BasisCensus(benchmark::State& state) {
    const long long max_dim = state.range(0);
    for (auto _ : state) {
        std::vector<long long> census = qloop::basis_census(8, 2, max_dim);
        benchmark::DoNotOptimize(census);
    }
}
BENCHMARK(BM_BasisCensus)->Arg(20)->Arg(30)->Arg(40);

void BM_EliminateSweep(benchmark::State& state) {
    const long long n_to = state.range(0);
    const qloop::FactsTable facts = qloop::default_facts();
    for (auto _ : state) {
        qloop::EliminationReport rep = qloop::run_elimination(8, 1, n_to, facts);
        benchmark::DoNotOptimize(rep);
    }
}
BENCHMARK(BM_EliminateSweep)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
