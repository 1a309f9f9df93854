#include <doctest.h>

#include "ore/bench.hpp"
#include "ore/svd.hpp"

using ore::Mat;

namespace {

Mat random_matrix(ore::Rng& rng, int rows, int cols) {
    Mat m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = rng.next_symmetric();
    return m;
}

}  // namespace

TEST_CASE("svd contract on random matrices") {
    ore::Rng rng(67);
    for (int iter = 0; iter < 12; ++iter) {
        int rows = rng.next_int(1, 24), cols = rng.next_int(1, 24);
        Mat m = random_matrix(rng, rows, cols);
        ore::SvdFactors f = ore::compute_svd(m);
        REQUIRE(f.p.rows() == rows);
        REQUIRE(f.p.cols() == rows);
        REQUIRE(f.q.rows() == cols);
        REQUIRE(f.q.cols() == cols);
        REQUIRE(f.sigma.size() == std::min(rows, cols));
        CHECK((f.p.transpose() * f.p - Mat::Identity(rows, rows)).norm() <= 1e-10 * rows);
        CHECK((f.q.transpose() * f.q - Mat::Identity(cols, cols)).norm() <= 1e-10 * cols);
        Mat sig = Mat::Zero(rows, cols);
        for (int i = 0; i < f.sigma.size(); ++i) sig(i, i) = f.sigma(i);
        CHECK((f.p * sig * f.q - m).norm() <= 1e-10 * std::max(1.0, m.norm()));
        for (int i = 1; i < f.sigma.size(); ++i) CHECK(f.sigma(i) <= f.sigma(i - 1));
        for (int i = 0; i < f.sigma.size(); ++i) CHECK(f.sigma(i) >= 0.0);
    }
}

TEST_CASE("svd of structured matrices") {
    Mat zero = Mat::Zero(4, 7);
    auto z = ore::compute_svd(zero);
    for (int i = 0; i < z.sigma.size(); ++i) CHECK(z.sigma(i) == 0.0);

    Mat scaled = 3.25 * Mat::Identity(5, 5);
    auto s = ore::compute_svd(scaled);
    for (int i = 0; i < 5; ++i) CHECK(s.sigma(i) == doctest::Approx(3.25).epsilon(1e-14));
}

TEST_CASE("thin factors and plain values agree with the full factorization") {
    ore::Rng rng(71);
    Mat m = random_matrix(rng, 18, 11);
    auto full = ore::compute_svd(m);
    auto thin = ore::compute_svd_thin(m);
    auto vals = ore::singular_values(m);
    REQUIRE(thin.p.cols() == 11);
    REQUIRE(thin.q.rows() == 11);
    Mat recon = thin.p * thin.sigma.asDiagonal() * thin.q;
    CHECK((recon - m).norm() <= 1e-10 * m.norm());
    for (int i = 0; i < 11; ++i) {
        CHECK(full.sigma(i) == doctest::Approx(thin.sigma(i)).epsilon(1e-12));
        CHECK(full.sigma(i) == doctest::Approx(vals(i)).epsilon(1e-12));
    }
}
