#include <benchmark/benchmark.h>

#include <random>

#include "quivis/catalog.hpp"
#include "quivis/report.hpp"

using namespace quivis;

namespace {

SpectralObservable basis_split_observable(int dim, int blocks, const Matrix& frame) {
    std::vector<Matrix> projectors(static_cast<size_t>(blocks), Matrix::Zero(dim, dim));
    for (int i = 0; i < dim; ++i) {
        projectors[static_cast<size_t>(i % blocks)] += frame.col(i) * frame.col(i).adjoint();
    }
    std::vector<double> values;
    for (int k = 0; k < blocks; ++k) values.push_back(static_cast<double>(k + 1));
    return SpectralObservable(std::move(values), std::move(projectors));
}

Experiment random_instance(int dim, std::mt19937_64& rng) {
    Matrix u = random_unitary(dim, rng);
    SpectralObservable a = basis_split_observable(dim, std::min(3, dim), random_unitary(dim, rng));
    SpectralObservable b = basis_split_observable(dim, 2, random_unitary(dim, rng));
    return Experiment(DensityOperator(random_density_matrix(dim, rng)),
                      Timeline({"t_i", "t_f"}, {u}), a,
                      {{"B", "t_i", b, true, std::nullopt, std::nullopt}});
}

void BM_SpectralDecompose(benchmark::State& state) {
    const int dim = static_cast<int>(state.range(0));
    std::mt19937_64 rng(1);
    std::normal_distribution<double> gauss;
    Matrix g(dim, dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) g(r, c) = Complex(gauss(rng), gauss(rng));
    Matrix h = 0.5 * (g + g.adjoint());
    for (auto _ : state) {
        benchmark::DoNotOptimize(SpectralObservable::decompose(h));
    }
}
BENCHMARK(BM_SpectralDecompose)->Arg(4)->Arg(16)->Arg(64);

void BM_ClassifyRandomInstance(benchmark::State& state) {
    const int dim = static_cast<int>(state.range(0));
    std::mt19937_64 rng(2);
    Experiment exp = random_instance(dim, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(classify(exp.candidate("B"), exp));
    }
}
BENCHMARK(BM_ClassifyRandomInstance)->Arg(2)->Arg(6)->Arg(16);

void BM_ClassifyUpgradedMachZehnder(benchmark::State& state) {
    Experiment exp = catalog::upgraded_mach_zehnder(true);
    for (auto _ : state) {
        benchmark::DoNotOptimize(classify_all(exp));
    }
}
BENCHMARK(BM_ClassifyUpgradedMachZehnder);

void BM_FullReport(benchmark::State& state) {
    Experiment exp = catalog::upgraded_mach_zehnder(false);
    for (auto _ : state) {
        Report report = build_report(exp, "umz-whichway");
        benchmark::DoNotOptimize(report_to_json(report));
    }
}
BENCHMARK(BM_FullReport);

void BM_TwoSlitWitness(benchmark::State& state) {
    const int bins = static_cast<int>(state.range(0));
    Experiment exp = catalog::two_slit(bins, true);
    const Candidate& c = exp.candidate("B");
    for (auto _ : state) {
        benchmark::DoNotOptimize(construct_witness(c.observable, c.moment, exp, exp.measured()));
    }
}
BENCHMARK(BM_TwoSlitWitness)->Arg(8)->Arg(32)->Arg(64);

} // namespace

BENCHMARK_MAIN();
