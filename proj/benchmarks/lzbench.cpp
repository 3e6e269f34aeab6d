#include "lz/identities.hpp"
#include "lz/lfactor.hpp"
#include "lz/matgroups.hpp"
#include "lz/rootchar.hpp"
#include "lz/zeta.hpp"

#include <benchmark/benchmark.h>

using namespace lz;

static void BM_WeylCharacterGL(benchmark::State& state)
{
    const int n = int(state.range(0));
    const GroupType g = GroupType::gl(n);
    const SatakePoint p = random_satake(g, {}, 1);
    const auto ws = dominant_weights_up_to(g, 6);
    for (auto _ : state)
        for (const auto& w : ws) benchmark::DoNotOptimize(weyl_character_ratio(w, p));
    state.counters["weights"] = double(ws.size());
}
BENCHMARK(BM_WeylCharacterGL)->DenseRange(2, 5)->Unit(benchmark::kMicrosecond);

static void BM_CharTableSpin10(benchmark::State& state)
{
    const GroupType g = GroupType::gspin_d(5);
    const SatakePoint p = random_satake(g, {}, 2);
    for (auto _ : state) {
        CharTable t(p);
        for (int k = 0; k <= int(state.range(0)); ++k)
            benchmark::DoNotOptimize(t.chi(HighestWeight{g, {0, 0, 0, 0, k}, 0}));
    }
}
BENCHMARK(BM_CharTableSpin10)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_LFactorTensor(benchmark::State& state)
{
    const auto pts = random_satake_joint({GroupType::gsp(2), GroupType::gl(4)}, {}, 3);
    const auto r = rep::tensor(rep::standard(0, GroupType::gsp(2), 2), rep::standard(1, GroupType::gl(4), 2));
    const Box b{int(state.range(0)), 0};
    for (auto _ : state) benchmark::DoNotOptimize(l_factor(r, pts, Var::x, b));
}
BENCHMARK(BM_LFactorTensor)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_Cauchy(benchmark::State& state)
{
    const auto c = static_cast<CauchyCase>(state.range(0));
    const Box b = c == CauchyCase::d ? Box{8, 8} : Box{10, 0};
    const int rank = c == CauchyCase::b ? 4 : c == CauchyCase::d ? 4 : c == CauchyCase::e ? 5 : 2;
    for (auto _ : state) benchmark::DoNotOptimize(check_cauchy(c, rank, b, 1, 1));
}
BENCHMARK(BM_Cauchy)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

static void BM_Zeta(benchmark::State& state)
{
    const auto k = static_cast<ZetaKind>(state.range(0));
    const ZetaCase c = make_zeta_case(k);
    const LatticeSpec s = lattice_spec(c);
    const auto pts = random_satake_joint(zeta_groups(c), zeta_constraints(c), 1);
    const Box b{8, k == ZetaKind::gspin_gl_2n || k == ZetaKind::gspin_gl_m3 || k == ZetaKind::gspin_gl_m2 ||
                           k == ZetaKind::d5
                       ? 0
                       : 8};
    for (auto _ : state) benchmark::DoNotOptimize(evaluate_zeta(s, pts, b));
    state.SetLabel(c.id());
}
BENCHMARK(BM_Zeta)->DenseRange(0, 9)->Unit(benchmark::kMillisecond);

static void BM_LatticePoints(benchmark::State& state)
{
    const LatticeSpec s = lattice_spec(make_zeta_case(ZetaKind::glue_gl_gl, 2, 3));
    const Box b{int(state.range(0)), int(state.range(0))};
    for (auto _ : state) benchmark::DoNotOptimize(lattice_points(s, b));
}
BENCHMARK(BM_LatticePoints)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_MapExt2(benchmark::State& state)
{
    Sampler s(state.range(0), 5);
    const auto in = s.source(MapName::ext2);
    for (auto _ : state) benchmark::DoNotOptimize(apply_map(MapName::ext2, in));
}
BENCHMARK(BM_MapExt2)->Arg(0)->Arg(101)->Unit(benchmark::kMicrosecond);

static void BM_Orbits(benchmark::State& state)
{
    const auto a = static_cast<OrbitAction>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_orbits(a, 3));
}
BENCHMARK(BM_Orbits)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
