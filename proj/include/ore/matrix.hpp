#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "ore/poly.hpp"

namespace ore {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;

// Minimal dense matrix for exact scalar types.
template <class S>
class Grid {
  public:
    Grid() = default;
    Grid(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    S& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const S& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<S> a_;
};

// Rank of a rational matrix modulo a prime; a lower bound on the rank over Q,
// equal to it for all but finitely many primes.
inline int rank_mod_prime(const Grid<Rational>& m, uint64_t p) {
    int rows = m.rows(), cols = m.cols();
    std::vector<std::vector<uint64_t>> a(rows, std::vector<uint64_t>(cols));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) a[i][j] = m(i, j).mod_u64(p);
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int i = rank; i < rows; ++i)
            if (a[i][col] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[rank], a[pivot]);
        uint64_t inv = Rational::invmod(a[rank][col], p);
        for (int i = rank + 1; i < rows; ++i) {
            if (a[i][col] == 0) continue;
            uint64_t factor = Rational::mulmod(a[i][col], inv, p);
            for (int j = col; j < cols; ++j) {
                uint64_t sub = Rational::mulmod(factor, a[rank][j], p);
                a[i][j] = (a[i][j] + p - sub) % p;
            }
        }
        ++rank;
    }
    return rank;
}

// Rank over Q via two independent primes; throws if they disagree.
inline int rank_rational(const Grid<Rational>& m) {
    constexpr uint64_t kP1 = 2305843009213693951ull;  // 2^61 - 1
    constexpr uint64_t kP2 = 998244353ull;
    int r1 = rank_mod_prime(m, kP1);
    int r2 = rank_mod_prime(m, kP2);
    if (r1 != r2) throw std::runtime_error("rank_rational: modular ranks disagree");
    return r1;
}

// Basis of the left nullspace {w : w M = 0} over Q, by exact elimination on
// the transpose. Intended for small matrices.
inline std::vector<std::vector<Rational>> left_nullspace(const Grid<Rational>& m) {
    int rows = m.cols(), cols = m.rows();  // transpose, solve M^T x = 0
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) a[i][j] = m(j, i);

    std::vector<int> pivot_col;
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int i = rank; i < rows; ++i)
            if (!a[i][col].is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[rank], a[pivot]);
        Rational inv = Rational(1) / a[rank][col];
        for (int j = col; j < cols; ++j) a[rank][j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == rank || a[i][col].is_zero()) continue;
            Rational f = a[i][col];
            for (int j = col; j < cols; ++j) a[i][j] -= f * a[rank][j];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (int col = 0; col < cols; ++col) {
        if (is_pivot[col]) continue;
        std::vector<Rational> v(cols);
        v[col] = Rational(1);
        for (int r = 0; r < rank; ++r) v[pivot_col[r]] = -a[r][col];
        basis.push_back(std::move(v));
    }
    return basis;
}

// Rank of a polynomial matrix over Q(t) by fraction-free (Bareiss)
// elimination; divisions are exact in Q[t].
inline int rank_bareiss(Grid<Poly<Rational>> m) {
    int rows = m.rows(), cols = m.cols();
    Poly<Rational> prev(Rational(1));
    int rank = 0;
    for (int step = 0; rank < rows && rank < cols; ++step) {
        int pi = -1, pj = -1;
        for (int i = rank; i < rows && pi < 0; ++i)
            for (int j = rank; j < cols; ++j)
                if (!m(i, j).is_zero()) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi < 0) break;
        for (int j = 0; j < cols; ++j) std::swap(m(rank, j), m(pi, j));
        if (pj != rank)
            for (int i = 0; i < rows; ++i) std::swap(m(i, rank), m(i, pj));
        const Poly<Rational> pivot = m(rank, rank);
        for (int i = rank + 1; i < rows; ++i) {
            for (int j = rank + 1; j < cols; ++j)
                m(i, j) = divide_exact(pivot * m(i, j) - m(i, rank) * m(rank, j), prev);
            m(i, rank) = Poly<Rational>();
        }
        prev = pivot;
        ++rank;
    }
    return rank;
}

}  // namespace ore
