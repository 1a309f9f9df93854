#include "ore/sylvester.hpp"

#include <Eigen/SVD>
#include <cstdio>
#include <string>

namespace ore {

Mat gamma(const Poly<double>& a, int mu, int d) {
    if (a.degree() > d) throw std::invalid_argument("gamma: polynomial degree exceeds d");
    Mat g = Mat::Zero(mu + 1, mu + d + 1);
    for (int k = 0; k <= mu; ++k)
        for (int j = 0; j <= std::max(a.degree(), -1); ++j) g(k, k + j) = a.coeff(j);
    return g;
}

InflatedMatrix inflate(const SylvesterMatrix<double>& v) {
    InflatedMatrix out;
    out.m = v.m;
    out.n = v.n;
    out.d = v.d;
    out.mu = v.mu;
    out.source = v;
    int size = v.size();
    int br = v.mu + 1, bc = v.mu + v.d + 1;
    out.data = Mat::Zero(size * br, size * bc);
    for (int bi = 0; bi < size; ++bi)
        for (int bj = 0; bj < size; ++bj) {
            const Poly<double>& p = v.rows[bi][bj];
            for (int k = 0; k <= v.mu; ++k)
                for (int j = 0; j <= std::max(p.degree(), -1); ++j) out.data(bi * br + k, bj * bc + k + j) = p.coeff(j);
        }
    return out;
}

Grid<Rational> inflate_exact(const SylvesterMatrix<Rational>& v) {
    int size = v.size();
    int br = v.mu + 1, bc = v.mu + v.d + 1;
    Grid<Rational> out(size * br, size * bc);
    for (int bi = 0; bi < size; ++bi)
        for (int bj = 0; bj < size; ++bj) {
            const Poly<Rational>& p = v.rows[bi][bj];
            for (int k = 0; k <= v.mu; ++k)
                for (int j = 0; j <= std::max(p.degree(), -1); ++j) out(bi * br + k, bj * bc + k + j) = p.coeff(j);
        }
    return out;
}

double two_norm(const InflatedMatrix& v) {
    if (v.data.size() == 0) return 0.0;
    return Eigen::BDCSVD<Mat>(v.data).singularValues()(0);
}

double frobenius_norm(const SylvesterMatrix<double>& v) {
    double s = 0;
    for (const auto& row : v.rows)
        for (const auto& p : row) {
            double n = norm2(p);
            s += n * n;
        }
    return std::sqrt(s);
}

std::string to_text(const Mat& m) {
    std::string out;
    char buf[64];
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            std::snprintf(buf, sizeof(buf), "%.17g", m(i, j));
            if (j) out += ' ';
            out += buf;
        }
        out += '\n';
    }
    return out;
}

}  // namespace ore
