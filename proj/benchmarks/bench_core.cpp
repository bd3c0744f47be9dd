#include <benchmark/benchmark.h>

#include "subcyc/corpus.hpp"
#include "subcyc/invariants.hpp"
#include "subcyc/koszul.hpp"

using namespace subcyc;

namespace {
const FieldSpec kQ = FieldSpec::rationals();
}

static void BM_PosetFromIdeal(benchmark::State& state) {
    const auto corpus = random_squarefree_ideals(static_cast<int>(state.range(0)), 8, 99);
    for (auto _ : state) {
        for (const auto& ideal : corpus) {
            benchmark::DoNotOptimize(IntersectionPoset::from_ideal(ideal));
        }
    }
}
BENCHMARK(BM_PosetFromIdeal)->Arg(4)->Arg(6)->Arg(8);

static void BM_Multiplicities(benchmark::State& state) {
    const auto poset = IntersectionPoset::from_ideal(
        random_squarefree_ideals(static_cast<int>(state.range(0)), 1, 7).front());
    for (auto _ : state) {
        benchmark::DoNotOptimize(multiplicities(poset, kQ));
    }
}
BENCHMARK(BM_Multiplicities)->Arg(5)->Arg(6);

static void BM_CechFiberScan(benchmark::State& state) {
    const auto ideal = random_squarefree_ideals(6, 1, 11).front();
    for (auto _ : state) {
        for (int r = 0; r <= 6; ++r) {
            for (const auto& alpha : all_sign_vectors(6)) {
                benchmark::DoNotOptimize(graded_lc_dim(ideal, r, alpha.to_multidegree(), kQ));
            }
        }
    }
}
BENCHMARK(BM_CechFiberScan);

static void BM_GradedBetti(benchmark::State& state) {
    const auto dual = random_squarefree_ideals(6, 1, 13).front().alexander_dual();
    for (auto _ : state) {
        benchmark::DoNotOptimize(graded_betti(dual, kQ));
    }
}
BENCHMARK(BM_GradedBetti);

static void BM_CrossValidateCorpus3(benchmark::State& state) {
    const auto corpus = all_squarefree_ideals(3);
    for (auto _ : state) {
        for (const auto& ideal : corpus) {
            benchmark::DoNotOptimize(cross_validate(ideal, kQ));
        }
    }
}
BENCHMARK(BM_CrossValidateCorpus3);

static void BM_RankBoundaryMatrix(benchmark::State& state) {
    // Largest order complex of the Boolean pattern on n = 6.
    const auto poset = IntersectionPoset::from_ideal(
        parse_ideal("x1*x2*x3*x4*x5*x6", 6));
    std::size_t origin = 0;
    for (const auto& node : poset.nodes()) {
        if (node.height == 6) origin = node.id;
    }
    const auto complex = poset.strict_upset_complex(origin);
    const Matrix boundary = boundary_matrix(complex, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(rank(boundary, kQ));
    }
}
BENCHMARK(BM_RankBoundaryMatrix);

BENCHMARK_MAIN();
