#include <doctest.h>

#include "ore/bench.hpp"
#include "ore/matrix.hpp"

using ore::Grid;
using ore::Poly;
using ore::Rational;

TEST_CASE("modular rank matches rational elimination") {
    ore::Rng rng(61);
    for (int iter = 0; iter < 30; ++iter) {
        int rows = rng.next_int(2, 6), cols = rng.next_int(2, 6), inner = rng.next_int(1, 3);
        // random rank-deficient product A = B * C
        Grid<Rational> b(rows, inner), c(inner, cols), a(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < inner; ++j) b(i, j) = Rational(rng.next_int(-5, 5), rng.next_int(1, 3));
        for (int i = 0; i < inner; ++i)
            for (int j = 0; j < cols; ++j) c(i, j) = Rational(rng.next_int(-5, 5), rng.next_int(1, 3));
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) {
                Rational s;
                for (int k = 0; k < inner; ++k) s += b(i, k) * c(k, j);
                a(i, j) = s;
            }
        int rank = ore::rank_rational(a);
        CHECK(rank <= inner);
        auto basis = ore::left_nullspace(a);
        CHECK(static_cast<int>(basis.size()) == rows - rank);
        for (const auto& w : basis)
            for (int j = 0; j < cols; ++j) {
                Rational s;
                for (int i = 0; i < rows; ++i) s += w[static_cast<size_t>(i)] * a(i, j);
                CHECK(s.is_zero());
            }
    }
}

TEST_CASE("bareiss rank over polynomial entries") {
    using P = Poly<Rational>;
    P t = P::variable();
    Grid<P> m(3, 3);
    // rows 0 and 2 proportional by t
    m(0, 0) = P(Rational(1));
    m(0, 1) = t;
    m(0, 2) = t * t;
    m(1, 0) = t;
    m(1, 1) = P(Rational(2));
    m(1, 2) = P();
    m(2, 0) = t;
    m(2, 1) = t * t;
    m(2, 2) = t * t * t;
    CHECK(ore::rank_bareiss(m) == 2);

    Grid<P> id(4, 4);
    for (int i = 0; i < 4; ++i) id(i, i) = P(Rational(1));
    CHECK(ore::rank_bareiss(id) == 4);

    Grid<P> zero(2, 5);
    CHECK(ore::rank_bareiss(zero) == 0);
}
