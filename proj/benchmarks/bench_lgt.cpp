#include <benchmark/benchmark.h>

#include "lgt/hexpotts.hpp"
#include "lgt/identities.hpp"

namespace {

using namespace lgt;

void BM_OctonionProduct(benchmark::State& state) {
    Rng rng = substream(1, 0);
    const auto x = haar_sample(AlgebraKind::octonion, rng);
    auto y = haar_sample(AlgebraKind::octonion, rng);
    for (auto _ : state) {
        y = x * y;
        benchmark::DoNotOptimize(y);
    }
}
BENCHMARK(BM_OctonionProduct);

void BM_HexagonPartitionQuadrature(benchmark::State& state) {
    const auto polygon = build_hexagon_example();
    const U1Model model(polygon, hexagon_example_sigma(polygon));
    QuadratureOptions o;
    o.grid = static_cast<int>(state.range(0));
    for (auto _ : state) {
        const auto z = integrate_u1([&](const U1Point& p) { return model.weight_linearized(p, 0.7); },
                                    model.n_edges(), o);
        benchmark::DoNotOptimize(z.value);
    }
}
BENCHMARK(BM_HexagonPartitionQuadrature)->Arg(5)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_SU2LinearizedWeight(benchmark::State& state) {
    const auto polygon = build_hexagon_example();
    HiggsH h = sqrt_of(hexagon_example_sigma(polygon));
    h.kind = AlgebraKind::quaternion;
    GaugeField U(polygon, h);
    Rng rng = substream(2, 0);
    for (auto _ : state) {
        sample_links(polygon, U, LinkSampler::haar, rng);
        benchmark::DoNotOptimize(weight_linearized(polygon, U, h, 0.5));
    }
}
BENCHMARK(BM_SU2LinearizedWeight);

void BM_Prop1SU2(benchmark::State& state) {
    const auto polygon = build_hexagon_example();
    HiggsH h = sqrt_of(hexagon_example_sigma(polygon));
    h.kind = AlgebraKind::quaternion;
    MonteCarloOptions o;
    o.samples = static_cast<std::uint64_t>(state.range(0));
    const auto g = field_product_re2(polygon);
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_prop1_su2(polygon, h, g, 0.5, o).abs_diff);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Prop1SU2)->Arg(1 << 16)->Unit(benchmark::kMillisecond);

void BM_PottsCrossing(benchmark::State& state) {
    const HexDomain d = build_hex_domain(1, static_cast<int>(state.range(0)));
    CrossingSolver solver(d);
    Rng rng = substream(3, 0);
    HexColoring c;
    for (auto _ : state) {
        sample_coloring(d, rng, c);
        benchmark::DoNotOptimize(solver.event(c, 1) && solver.event(c, 2) && solver.event(c, 3));
    }
    state.SetItemsProcessed(state.iterations() * d.size());
}
BENCHMARK(BM_PottsCrossing)->Arg(1)->Arg(8)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
