#include "random_instances.hpp"

#include <algorithm>
#include <numeric>

namespace quivis::testing {

namespace {

/// Splits `count` items into `groups` non-empty groups, randomly.
std::vector<int> random_group_assignment(int count, int groups, std::mt19937_64& rng) {
    std::vector<int> assignment(static_cast<size_t>(count));
    std::iota(assignment.begin(), assignment.end(), 0);
    std::shuffle(assignment.begin(), assignment.end(), rng);
    // The first `groups` items seed the groups; the rest land anywhere.
    std::vector<int> group_of(static_cast<size_t>(count));
    std::uniform_int_distribution<int> any_group(0, groups - 1);
    for (int i = 0; i < count; ++i) {
        group_of[static_cast<size_t>(assignment[static_cast<size_t>(i)])] =
            (i < groups) ? i : any_group(rng);
    }
    return group_of;
}

} // namespace

SpectralObservable random_observable(int dim, int blocks, std::mt19937_64& rng,
                                     const Tolerances& tol) {
    blocks = std::min(blocks, dim);
    const Matrix v = random_unitary(dim, rng);
    std::vector<int> group_of = random_group_assignment(dim, blocks, rng);
    std::vector<Matrix> projectors(static_cast<size_t>(blocks), Matrix::Zero(dim, dim));
    for (int i = 0; i < dim; ++i) {
        projectors[static_cast<size_t>(group_of[static_cast<size_t>(i)])] +=
            v.col(i) * v.col(i).adjoint();
    }
    std::vector<double> values(static_cast<size_t>(blocks));
    std::iota(values.begin(), values.end(), 1.0);
    return SpectralObservable(std::move(values), std::move(projectors), {}, tol);
}

SpectralObservable random_commuting_observable(const SpectralObservable& a, int blocks,
                                               std::mt19937_64& rng, const Tolerances& tol) {
    const int dim = a.dim();
    blocks = std::min(blocks, dim);
    // Random orthonormal basis adapted to a's eigen-spaces.
    std::vector<Vector> basis;
    for (int n = 0; n < a.size(); ++n) {
        Eigen::SelfAdjointEigenSolver<Matrix> solver(a.projector(n));
        std::vector<Vector> range;
        for (int i = 0; i < dim; ++i) {
            if (solver.eigenvalues()(i) > 0.5) range.push_back(solver.eigenvectors().col(i));
        }
        const Matrix mix = random_unitary(static_cast<int>(range.size()), rng);
        for (size_t c = 0; c < range.size(); ++c) {
            Vector v = Vector::Zero(dim);
            for (size_t r = 0; r < range.size(); ++r) {
                v += mix(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) * range[r];
            }
            basis.push_back(std::move(v));
        }
    }
    std::vector<int> group_of = random_group_assignment(dim, blocks, rng);
    std::vector<Matrix> projectors(static_cast<size_t>(blocks), Matrix::Zero(dim, dim));
    for (int i = 0; i < dim; ++i) {
        projectors[static_cast<size_t>(group_of[static_cast<size_t>(i)])] +=
            basis[static_cast<size_t>(i)] * basis[static_cast<size_t>(i)].adjoint();
    }
    std::vector<double> values(static_cast<size_t>(blocks));
    std::iota(values.begin(), values.end(), 1.0);
    return SpectralObservable(std::move(values), std::move(projectors), {}, tol);
}

Experiment random_experiment(std::mt19937_64& rng, const RandomExperimentOptions& options,
                             const Tolerances& tol) {
    std::uniform_int_distribution<int> dim_dist(options.min_dim, options.max_dim);
    std::uniform_int_distribution<int> step_dist(options.min_steps, options.max_steps);
    std::uniform_int_distribution<int> block_dist(options.min_blocks, options.max_blocks);
    const int dim = dim_dist(rng);
    const int steps = step_dist(rng);

    std::vector<std::string> moments{"t_i"};
    for (int j = 1; j < steps; ++j) moments.push_back("t_" + std::to_string(j));
    moments.push_back("t_f");
    std::vector<Matrix> unitaries;
    for (int j = 0; j < steps; ++j) unitaries.push_back(random_unitary(dim, rng));

    DensityOperator initial(random_density_matrix(dim, rng), tol);
    SpectralObservable measured = random_observable(dim, block_dist(rng), rng, tol);
    return Experiment(std::move(initial), Timeline(std::move(moments), std::move(unitaries), tol),
                      std::move(measured), {}, tol);
}

} // namespace quivis::testing
