#include <benchmark/benchmark.h>

#include "eqc/builder.hpp"
#include "eqc/catalogs.hpp"
#include "eqc/character.hpp"
#include "eqc/collection.hpp"
#include "eqc/cyc.hpp"
#include "eqc/group.hpp"
#include "eqc/pic_lattice.hpp"

namespace {

using namespace eqc;

GroupPtr symmetric_group(int n) {
    std::vector<Perm> gens;
    Perm t(n);
    for (int i = 0; i < n; ++i) t[i] = i;
    std::swap(t[0], t[1]);
    gens.push_back(t);
    Perm c(n);
    for (int i = 0; i < n; ++i) c[i] = (i + 1) % n;
    gens.push_back(c);
    return group_from_generators(gens, n).group;
}

void BM_CharacterTableS4(benchmark::State& state) {
    GroupPtr g = symmetric_group(4);
    for (auto _ : state) {
        CharacterTable t = character_table(g);
        benchmark::DoNotOptimize(t.rows.size());
    }
}
BENCHMARK(BM_CharacterTableS4);

void BM_GramDelPezzo4(benchmark::State& state) {
    ExcCollection c = catalog_delpezzo("eooo4");
    std::vector<KClass> ks;
    for (const auto& o : c.objects) ks.push_back(*o.kclass);
    for (auto _ : state) {
        auto gram = gram_matrix(*c.lat, ks);
        benchmark::DoNotOptimize(gram.size());
    }
}
BENCHMARK(BM_GramDelPezzo4);

void BM_BuildPlaneS3(benchmark::State& state) {
    GeneratedGroup gg = group_from_generators(
        {parse_cycles("(0 1)", 3), parse_cycles("(0 1 2)", 3)}, 3);
    GroupPtr g = gg.group;
    std::vector<std::vector<int>> zero(g->order(), std::vector<int>(g->order(), 0));
    CentralExtPtr ext = central_extension(g, 1, zero);
    ClassesPtr cls = conjugacy_classes(ext->bar);
    // Fixed points of the permutation representation on 3 points.
    std::vector<Cyc> fixed;
    for (int rep : cls->reps) {
        const Perm& p = gg.elements[ext->proj(rep)];
        long cnt = 0;
        for (int i = 0; i < 3; ++i)
            if (p[i] == i) ++cnt;
        fixed.push_back(Cyc(cnt));
    }
    Character perm_char{cls, fixed, 0};
    ExcCollection c = catalog_projective(3, ext, perm_char);
    GroupAction a = trivial_action(c, g);
    for (auto _ : state) {
        EqCollection e = build_equivariant(c, a);
        benchmark::DoNotOptimize(e.objects.size());
    }
}
BENCHMARK(BM_BuildPlaneS3);

void BM_CycMultiply12(benchmark::State& state) {
    Cyc a = Cyc::zeta(12, 1) + Cyc::zeta(12, 5) * Rational(3, 7);
    Cyc b = Cyc::zeta(12, 7) + Cyc(Rational(2, 5));
    for (auto _ : state) {
        Cyc p = a * b;
        benchmark::DoNotOptimize(p.conductor());
    }
}
BENCHMARK(BM_CycMultiply12);

}  // namespace

int main(int argc, char** argv) {
    benchmark::Initialize(&argc, argv);
    if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
    benchmark::RunSpecifiedBenchmarks();
    return 0;
}
