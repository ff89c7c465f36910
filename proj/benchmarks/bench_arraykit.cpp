#include "arraykit/beamforming.hpp"
#include "arraykit/complex_matrix.hpp"
#include "arraykit/network.hpp"

#include <benchmark/benchmark.h>

#include <random>
#include <sstream>

using namespace arraykit;

namespace {

const Frequency f28 = Frequency::ghz(28);

void bm_pattern_trace(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto cfg = LinearArrayConfig::uniform(n, wavelength(f28) / 2.0);
    for (auto _ : state) {
        const auto trace = pattern_trace(cfg, f28, ElementPatternModel::cosine(1.0), 0.1);
        benchmark::DoNotOptimize(trace.magnitudes_db.data());
    }
}
BENCHMARK(bm_pattern_trace)->Arg(4)->Arg(8)->Arg(16);

void bm_pattern_metrics(benchmark::State& state) {
    const auto cfg = LinearArrayConfig::uniform(8, wavelength(f28) / 2.0);
    const auto trace = pattern_trace(cfg, f28, ElementPatternModel::isotropic(), 0.1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(main_lobe_direction(trace).axis_deg());
        benchmark::DoNotOptimize(half_power_beamwidth(trace));
        benchmark::DoNotOptimize(sidelobe_level(trace));
        benchmark::DoNotOptimize(directivity_dbi(trace));
    }
}
BENCHMARK(bm_pattern_metrics);

void bm_determinant(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::mt19937 rng(1);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = Complex{u(rng), u(rng)};
    for (std::size_t i = 0; i < n; ++i) m(i, i) += Complex{4.0, 0.0};
    for (auto _ : state) benchmark::DoNotOptimize(determinant(m));
}
BENCHMARK(bm_determinant)->Arg(4)->Arg(8)->Arg(16);

std::string make_touchstone(std::size_t points) {
    SParameterSet s;
    s.n_ports = 2;
    std::mt19937 rng(2);
    std::uniform_real_distribution<double> u(-0.5, 0.5);
    for (std::size_t k = 0; k < points; ++k) {
        s.frequencies_hz.push_back(26e9 + 1e6 * static_cast<double>(k));
        ComplexMatrix m(2, 2);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) m(i, j) = Complex{u(rng), u(rng)};
        s.data.push_back(m);
    }
    return write_touchstone(s, TouchstoneFormat::MA);
}

void bm_parse_touchstone(benchmark::State& state) {
    const std::string text = make_touchstone(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(parse_touchstone(text, 2));
    state.SetBytesProcessed(static_cast<int64_t>(state.iterations() * text.size()));
}
BENCHMARK(bm_parse_touchstone)->Arg(100)->Arg(1000);

} // namespace

BENCHMARK_MAIN();
