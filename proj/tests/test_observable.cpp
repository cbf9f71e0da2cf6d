#include <catch2/catch_amalgamated.hpp>

#include "quivis/observable.hpp"

using namespace quivis;

namespace {

Matrix diag_projector(int dim, std::initializer_list<int> modes) {
    Matrix p = Matrix::Zero(dim, dim);
    for (int m : modes) p(m, m) = 1.0;
    return p;
}

} // namespace

TEST_CASE("SpectralObservable validates its spectral form", "[observable]") {
    SECTION("valid two-event observable") {
        SpectralObservable obs({1.0, 2.0}, {diag_projector(2, {0}), diag_projector(2, {1})});
        CHECK(obs.dim() == 2);
        CHECK(obs.size() == 2);
        CHECK((obs.matrix() - (Matrix(2, 2) << 1, 0, 0, 2).finished()).norm() < 1e-15);
    }
    SECTION("rejects duplicate eigenvalues") {
        REQUIRE_THROWS_AS(
            SpectralObservable({1.0, 1.0}, {diag_projector(2, {0}), diag_projector(2, {1})}),
            DuplicateValues);
    }
    SECTION("rejects non-projectors") {
        Matrix bad = Matrix::Zero(2, 2);
        bad(0, 0) = 0.5;
        REQUIRE_THROWS_AS(SpectralObservable({1.0, 2.0}, {bad, diag_projector(2, {1})}),
                          NotProjector);
    }
    SECTION("rejects non-orthogonal projectors") {
        REQUIRE_THROWS_AS(
            SpectralObservable({1.0, 2.0}, {diag_projector(2, {0}), diag_projector(2, {0, 1})}),
            NotProjector);
    }
    SECTION("rejects incomplete families") {
        REQUIRE_THROWS_AS(SpectralObservable({1.0}, {diag_projector(2, {0})}), Error);
    }
    SECTION("rejects label count mismatch") {
        REQUIRE_THROWS_AS(SpectralObservable({1.0, 2.0},
                                             {diag_projector(2, {0}), diag_projector(2, {1})},
                                             {"only-one"}),
                          DimensionMismatch);
    }
}

TEST_CASE("decompose merges degenerate eigenvalues", "[observable]") {
    Matrix h = Matrix::Zero(3, 3);
    h.diagonal() << 1, 1, 2;
    SpectralObservable obs = SpectralObservable::decompose(h);
    REQUIRE(obs.size() == 2);
    CHECK((obs.projector(0) - diag_projector(3, {0, 1})).norm() < 1e-12);
    CHECK((obs.projector(1) - diag_projector(3, {2})).norm() < 1e-12);

    REQUIRE_THROWS_AS(SpectralObservable::decompose(h, {}, {"a", "b", "c"}), DimensionMismatch);
}

TEST_CASE("coarsen", "[observable]") {
    SpectralObservable b0({1.0, 2.0, 3.0},
                          {diag_projector(3, {0}), diag_projector(3, {1}), diag_projector(3, {2})},
                          {"Q_lh", "Q_uh", "Q_v"});

    SECTION("singleton partition relabels only") {
        SpectralObservable relabeled = b0.coarsen({{0}, {1}, {2}}, {10.0, 20.0, 30.0});
        REQUIRE(relabeled.size() == 3);
        for (int k = 0; k < 3; ++k) {
            CHECK((relabeled.projector(k) - b0.projector(k)).norm() < 1e-15);
        }
        CHECK(relabeled.eigenvalue(0) == 10.0);
    }

    SECTION("merging every group gives the trivial observable") {
        SpectralObservable trivial = b0.coarsen({{0, 1, 2}}, {1.0});
        REQUIRE(trivial.size() == 1);
        CHECK((trivial.projector(0) - Matrix::Identity(3, 3)).norm() < 1e-15);
    }

    SECTION("the {lh}/{uh,v} coarsening keeps Q_lh and merges the rest") {
        SpectralObservable coarse = b0.coarsen({{0}, {1, 2}}, {1.0, 2.0});
        REQUIRE(coarse.size() == 2);
        CHECK((coarse.projector(0) - diag_projector(3, {0})).norm() < 1e-15);
        CHECK((coarse.projector(1) - diag_projector(3, {1, 2})).norm() < 1e-15);
        CHECK(coarse.label(0) == "Q_lh");
        CHECK(coarse.label(1) == "Q_uh+Q_v");
    }

    SECTION("invalid partitions") {
        REQUIRE_THROWS_AS(b0.coarsen({{0}, {1}}, {1.0, 2.0}), InvalidPartition);         // missing 2
        REQUIRE_THROWS_AS(b0.coarsen({{0, 0}, {1, 2}}, {1.0, 2.0}), InvalidPartition);   // repeated
        REQUIRE_THROWS_AS(b0.coarsen({{0}, {}, {1, 2}}, {1., 2., 3.}), InvalidPartition); // empty
        REQUIRE_THROWS_AS(b0.coarsen({{0}, {1, 5}}, {1.0, 2.0}), InvalidPartition);      // range
        REQUIRE_THROWS_AS(b0.coarsen({{0}, {1, 2}}, {1.0}), InvalidPartition);           // counts
        REQUIRE_THROWS_AS(b0.coarsen({{0}, {1, 2}}, {7.0, 7.0}), DuplicateValues);
    }
}

TEST_CASE("projector_bijection matches families up to order", "[observable]") {
    SpectralObservable a({1.0, 2.0}, {diag_projector(2, {0}), diag_projector(2, {1})});
    SpectralObservable swapped({5.0, 6.0}, {diag_projector(2, {1}), diag_projector(2, {0})});
    auto match = projector_bijection(a, swapped);
    REQUIRE(match.has_value());
    CHECK((*match)[0] == 1);
    CHECK((*match)[1] == 0);

    Matrix plus = Matrix::Constant(2, 2, 0.5);
    SpectralObservable rotated({1.0, 2.0}, {plus, Matrix::Identity(2, 2) - plus});
    CHECK_FALSE(projector_bijection(a, rotated).has_value());

    SpectralObservable trivial = SpectralObservable::trivial(2);
    CHECK_FALSE(projector_bijection(a, trivial).has_value());
}
