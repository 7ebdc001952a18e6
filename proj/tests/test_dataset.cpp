#include <doctest.h>

#include <cmath>
#include <random>

#include "bp/dataset.hpp"
#include "bp/errors.hpp"
#include "bp/rng.hpp"

using namespace bp;

TEST_CASE("validate accepts well-formed input") {
    Eigen::MatrixXd m(2, 2);
    m << 0, 1, 1, 0;
    const DataMatrix X = validate(m);
    CHECK(X.n() == 2);
    CHECK(X.p() == 2);
}

TEST_CASE("validate rejects NaN with its coordinates") {
    Eigen::MatrixXd m(2, 2);
    m << 0, std::nan(""), 1, 0;
    try {
        validate(m);
        FAIL("expected NonFiniteEntry");
    } catch (const NonFiniteEntry& e) {
        CHECK(e.row == 0);
        CHECK(e.col == 1);
    }
}

TEST_CASE("validate rejects empty matrices") {
    CHECK_THROWS_AS(validate(Eigen::MatrixXd(0, 0)), EmptyMatrix);
    CHECK_THROWS_AS(validate(Eigen::MatrixXd(3, 0)), EmptyMatrix);
}

TEST_CASE("validate rejects infinities") {
    Eigen::MatrixXd m(1, 2);
    m << 1.0, INFINITY;
    CHECK_THROWS_AS(validate(m), NonFiniteEntry);
}

TEST_CASE("standardize divides by the sample standard deviation") {
    Eigen::MatrixXd m(3, 1);
    m << 2, 4, 6;
    const DataMatrix out = standardize(validate(m));
    CHECK(out.values(0, 0) == doctest::Approx(1.0));
    CHECK(out.values(1, 0) == doctest::Approx(2.0));
    CHECK(out.values(2, 0) == doctest::Approx(3.0));
}

TEST_CASE("zero-variance columns pass through") {
    Eigen::MatrixXd m(3, 2);
    m << 5, 1, 5, 2, 5, 3;
    const DataMatrix out = standardize(validate(m));
    CHECK(out.values(0, 0) == 5.0);
    CHECK(out.values(1, 0) == 5.0);
    CHECK(out.values(2, 0) == 5.0);
}

TEST_CASE("standardize properties over random matrices") {
    for (int trial = 0; trial < 200; ++trial) {
        std::mt19937_64 rng = make_rng(100, trial);
        std::uniform_int_distribution<int> dim(2, 12);
        std::normal_distribution<double> normal(0.0, 3.0);
        const int n = dim(rng), p = dim(rng);
        Eigen::MatrixXd m(n, p);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < p; ++j) m(i, j) = normal(rng);
        const DataMatrix once = standardize(validate(m));
        const DataMatrix twice = standardize(once);

        // idempotence
        CHECK((once.values - twice.values).cwiseAbs().maxCoeff() < 1e-12);

        // unit sample std of non-constant columns
        for (int j = 0; j < p; ++j) {
            const double mean = once.values.col(j).mean();
            const double sd = std::sqrt(
                (once.values.col(j).array() - mean).square().sum() / (n - 1));
            CHECK(std::abs(sd - 1.0) < 1e-12);
        }
    }
}
