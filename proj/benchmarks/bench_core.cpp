#include "particover/constructions.hpp"
#include "particover/formulas.hpp"
#include "particover/group.hpp"
#include "particover/groupspec.hpp"
#include "particover/lattice.hpp"
#include "particover/resultio.hpp"
#include "particover/solver.hpp"

#include <benchmark/benchmark.h>

#include <vector>

using namespace particover;

namespace {

SearchBudget wide_budget() {
    SearchBudget b;
    b.max_seconds = 600.0;
    return b;
}

void BM_BuildMultiplicationTable_PSL27(benchmark::State& state) {
    for (auto _ : state) {
        Group g = psl2(7);
        benchmark::DoNotOptimize(g.order());
    }
}
BENCHMARK(BM_BuildMultiplicationTable_PSL27);

void BM_SubgroupLattice_S4(benchmark::State& state) {
    Group g = symmetric(4);
    for (auto _ : state) {
        auto all = all_subgroups(g);
        benchmark::DoNotOptimize(all.size());
    }
}
BENCHMARK(BM_SubgroupLattice_S4);

void BM_SubgroupLattice_PSL27(benchmark::State& state) {
    Group g = psl2(7);
    for (auto _ : state) {
        auto all = all_subgroups(g);
        benchmark::DoNotOptimize(all.size());
    }
}
BENCHMARK(BM_SubgroupLattice_PSL27);

void BM_MinimalCover_S4(benchmark::State& state) {
    Group g = symmetric(4);
    auto all = all_subgroups(g);
    for (auto _ : state) {
        SigmaResult r = sigma(g, all, wide_budget());
        benchmark::DoNotOptimize(r.value);
    }
}
BENCHMARK(BM_MinimalCover_S4);

void BM_MinimalCover_PSL24(benchmark::State& state) {
    Group g = psl2(4);
    auto all = all_subgroups(g);
    for (auto _ : state) {
        SigmaResult r = sigma(g, all, wide_budget());
        benchmark::DoNotOptimize(r.value);
    }
}
BENCHMARK(BM_MinimalCover_PSL24);

void BM_MinimalPartition_S4(benchmark::State& state) {
    Group g = symmetric(4);
    auto all = all_subgroups(g);
    for (auto _ : state) {
        RhoResult r = rho(g, all, wide_budget());
        benchmark::DoNotOptimize(r.value);
    }
}
BENCHMARK(BM_MinimalPartition_S4);

void BM_MinimalPartition_PSL24(benchmark::State& state) {
    Group g = psl2(4);
    auto all = all_subgroups(g);
    for (auto _ : state) {
        RhoResult r = rho(g, all, wide_budget());
        benchmark::DoNotOptimize(r.value);
    }
}
BENCHMARK(BM_MinimalPartition_PSL24);

void BM_MinimalPartitionSeeded_PSL27(benchmark::State& state) {
    Group g = psl2(7);
    auto all = all_subgroups(g);
    PartitionCertificate seed = exceptional_partition(ExceptionalGroup::PSL2_7);
    for (auto _ : state) {
        RhoResult r = rho(g, all, wide_budget(), &seed);
        benchmark::DoNotOptimize(r.value);
    }
}
BENCHMARK(BM_MinimalPartitionSeeded_PSL27);

void BM_ChiefSeriesCover_D30(benchmark::State& state) {
    Group g = dihedral(30);
    for (auto _ : state) {
        long long v = tomkinson_sigma(g);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_ChiefSeriesCover_D30);

void BM_ChiefSeriesCover_AGL1_49_2(benchmark::State& state) {
    Group g = parse_spec("AGL1(49,2)").build();
    for (auto _ : state) {
        long long v = tomkinson_sigma(g);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_ChiefSeriesCover_AGL1_49_2);

void BM_SpecParsePrint(benchmark::State& state) {
    const std::string text = "C2^2 x D8 x AGL1(9,2)";
    for (auto _ : state) {
        GroupSpec s = parse_spec(text);
        benchmark::DoNotOptimize(s.to_string());
    }
}
BENCHMARK(BM_SpecParsePrint);

void BM_CertificateDigest(benchmark::State& state) {
    Group g = psl2(7);
    auto all = all_subgroups(g);
    PartitionCertificate cert = exceptional_partition(ExceptionalGroup::PSL2_7);
    std::vector<std::vector<int>> parts;
    for (int idx : cert.members) parts.push_back(all[size_t(idx)].bits.to_vector());
    for (auto _ : state) {
        benchmark::DoNotOptimize(certificate_digest(parts));
    }
}
BENCHMARK(BM_CertificateDigest);

} // namespace

BENCHMARK_MAIN();
