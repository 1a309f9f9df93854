#pragma once

#include "ore/diff_poly.hpp"
#include "ore/matrix.hpp"

namespace ore {

// Psi_ell: coefficient vector (f_0, ..., f_m, 0, ..., 0) of length ell.
template <class S>
std::vector<Poly<S>> psi(const OreOp<Poly<S>>& f, int ell) {
    if (ell <= f.deg()) throw std::invalid_argument("psi: length must exceed the operator degree");
    std::vector<Poly<S>> r(static_cast<size_t>(ell));
    for (int i = 0; i <= f.deg(); ++i) r[static_cast<size_t>(i)] = f.coeff(i);
    return r;
}

// Differential Sylvester matrix of f and g: an (m+n) x (m+n) grid over the
// coefficient polynomials, rows Psi(d^i f) for i < n followed by
// Psi(d^j g) for j < m, with m = deg_d f and n = deg_d g.
template <class S>
struct SylvesterMatrix {
    int m = 0, n = 0, d = 0, mu = 0;
    std::vector<std::vector<Poly<S>>> rows;

    int size() const { return m + n; }
};

template <class S>
SylvesterMatrix<S> build_sylvester(const OreOp<Poly<S>>& f, const OreOp<Poly<S>>& g) {
    if (f.is_zero() || g.is_zero()) throw std::invalid_argument("build_sylvester: zero operator");
    SylvesterMatrix<S> v;
    v.m = f.deg();
    v.n = g.deg();
    v.d = std::max(std::max(deg_t(f), deg_t(g)), 0);
    v.mu = 2 * (v.m + v.n) * v.d;
    int size = v.m + v.n;
    OreOp<Poly<S>> cur = f;
    for (int i = 0; i < v.n; ++i) {
        v.rows.push_back(psi(cur, size));
        cur = OreOp<Poly<S>>::d_shift(cur);
    }
    cur = g;
    for (int j = 0; j < v.m; ++j) {
        v.rows.push_back(psi(cur, size));
        cur = OreOp<Poly<S>>::d_shift(cur);
    }
    return v;
}

// Gamma(a): the (mu+1) x (mu+d+1) left-multiplier matrix of a, row k holding
// the coefficients of t^k * a.
template <class S>
Grid<S> gamma_grid(const Poly<S>& a, int mu, int d) {
    if (a.degree() > d) throw std::invalid_argument("gamma: polynomial degree exceeds d");
    Grid<S> g(mu + 1, mu + d + 1);
    for (int k = 0; k <= mu; ++k)
        for (int j = 0; j <= std::max(a.degree(), -1); ++j) g(k, k + j) = a.coeff(j);
    return g;
}

Mat gamma(const Poly<double>& a, int mu, int d);

// Inflated differential Sylvester matrix: Gamma applied entrywise. The block
// at (I, J) occupies rows I(mu+1).. and columns J(mu+d+1)..
struct InflatedMatrix {
    Mat data;
    int m = 0, n = 0, d = 0, mu = 0;
    SylvesterMatrix<double> source;

    int block_rows() const { return mu + 1; }
    int block_cols() const { return mu + d + 1; }
};

InflatedMatrix inflate(const SylvesterMatrix<double>& v);
Grid<Rational> inflate_exact(const SylvesterMatrix<Rational>& v);

double frobenius_norm(const SylvesterMatrix<double>& v);
inline double frobenius_norm(const InflatedMatrix& v) { return v.data.norm(); }
double two_norm(const InflatedMatrix& v);  // largest singular value

// Row-major whitespace-separated dump, one matrix row per line.
std::string to_text(const Mat& m);

}  // namespace ore
