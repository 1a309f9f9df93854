#include "ore/fft.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace ore {
namespace {

// In-place iterative radix-2 transform: x[j] <- sum_k x[k] w^(jk),
// w = exp(sign * 2*pi*i/n). n must be a power of two.
void transform(std::vector<std::complex<double>>& x, int sign) {
    const size_t n = x.size();
    for (size_t i = 1, j = 0; i < n; ++i) {
        size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(x[i], x[j]);
    }
    for (size_t len = 2; len <= n; len <<= 1) {
        double ang = sign * 2.0 * std::numbers::pi / static_cast<double>(len);
        std::complex<double> wl(std::cos(ang), std::sin(ang));
        for (size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0);
            for (size_t k = 0; k < len / 2; ++k) {
                std::complex<double> u = x[i + k], v = x[i + k + len / 2] * w;
                x[i + k] = u + v;
                x[i + k + len / 2] = u - v;
                w *= wl;
            }
        }
    }
}

Poly<double> inverse_to_poly(std::vector<std::complex<double>> vals, bool check_imag) {
    transform(vals, -1);
    const double inv = 1.0 / static_cast<double>(vals.size());
    double norm = 0, max_imag = 0;
    std::vector<double> coeffs(vals.size());
    for (size_t i = 0; i < vals.size(); ++i) {
        vals[i] *= inv;
        coeffs[i] = vals[i].real();
        norm += std::norm(vals[i]);
        max_imag = std::max(max_imag, std::abs(vals[i].imag()));
    }
    if (check_imag && max_imag > 1e-10 * std::sqrt(norm) && max_imag > 1e-300)
        throw InterpolationInconsistency("fft_interpolate: values are not samples of a real polynomial");
    return Poly<double>(std::move(coeffs));
}

}  // namespace

std::vector<std::complex<double>> fft_eval(const Poly<double>& p, size_t points) {
    size_t need = std::max<size_t>(points, p.is_zero() ? 1 : static_cast<size_t>(p.degree()) + 1);
    size_t n = next_pow2(std::max<size_t>(need, 1));
    std::vector<std::complex<double>> x(n, 0.0);
    for (int i = 0; i <= (p.is_zero() ? -1 : p.degree()); ++i) x[static_cast<size_t>(i)] = p.coeff(i);
    transform(x, +1);
    return x;
}

Poly<double> fft_interpolate(const std::vector<std::complex<double>>& values) {
    if (values.empty() || (values.size() & (values.size() - 1)) != 0)
        throw std::invalid_argument("fft_interpolate: length must be a power of two");
    return inverse_to_poly(values, true);
}

namespace {

// Pointwise quotient on the grid twist * w^j; twist = 1 is the plain grid.
// Returns false when the divisor gets within threshold of zero on the grid.
bool divide_on_grid(const Poly<double>& a, const Poly<double>& b, size_t n, std::complex<double> twist,
                    double threshold, Poly<double>& quotient) {
    auto scaled = [&](const Poly<double>& p) {
        std::vector<std::complex<double>> x(n, 0.0);
        std::complex<double> pw = 1.0;
        for (int i = 0; i <= p.degree(); ++i, pw *= twist) x[static_cast<size_t>(i)] = p.coeff(i) * pw;
        transform(x, +1);
        return x;
    };
    auto va = scaled(a);
    auto vb = scaled(b);
    std::vector<std::complex<double>> vq(n);
    for (size_t i = 0; i < n; ++i) {
        if (std::abs(vb[i]) <= threshold) return false;
        vq[i] = va[i] / vb[i];
    }
    transform(vq, -1);
    std::vector<double> c(n);
    std::complex<double> inv_pw = 1.0, inv_twist = 1.0 / twist;
    for (size_t i = 0; i < n; ++i, inv_pw *= inv_twist) c[i] = (vq[i] * inv_pw).real() / static_cast<double>(n);
    quotient = Poly<double>(std::move(c));
    return true;
}

}  // namespace

namespace {

// Shared core: full pointwise quotient, then truncation to each candidate
// degree; fills the outcome with the preferred candidate.
ApproxDivision divide_and_truncate(const Poly<double>& numer, const Poly<double>& denom, double cleanup_threshold,
                                   int max_degree, bool residual_scan) {
    if (denom.is_zero()) throw DivisionInstability("approx_divide: zero divisor");
    if (numer.is_zero()) return {Poly<double>(), 0.0, false};

    auto clean = [&](const Poly<double>& p) {
        std::vector<double> c(p.coeffs());
        for (auto& v : c)
            if (std::abs(v) < cleanup_threshold) v = 0.0;
        return Poly<double>(std::move(c));
    };
    Poly<double> a = clean(numer), b = clean(denom);
    if (a.is_zero() || b.is_zero()) throw DivisionInstability("approx_divide: operand vanished under cleanup");

    size_t n = next_pow2(static_cast<size_t>(a.degree()) + 1);
    Poly<double> q;
    if (!divide_on_grid(a, b, n, 1.0, cleanup_threshold, q)) {
        // divisor root on the unit grid; rotate the grid half a step
        double ang = std::numbers::pi / static_cast<double>(n);
        if (!divide_on_grid(a, b, n, {std::cos(ang), std::sin(ang)}, cleanup_threshold, q))
            throw DivisionInstability("approx_divide: divisor vanishes near an evaluation point");
    }

    const double numer_norm = norm2(numer);
    auto truncated = [&](int deg) {
        std::vector<double> qc(static_cast<size_t>(deg) + 1, 0.0);
        for (int i = 0; i <= deg; ++i) {
            double v = q.coeff(i);
            qc[static_cast<size_t>(i)] = std::abs(v) < cleanup_threshold ? 0.0 : v;
        }
        return Poly<double>(std::move(qc));
    };
    ApproxDivision out;
    if (!residual_scan) {
        out.quotient = truncated(max_degree);
        out.relative_residual = norm2(numer - out.quotient * denom) / numer_norm;
    } else {
        // prefer the lowest degree whose residual is essentially optimal
        std::vector<double> residuals;
        double best = std::numeric_limits<double>::infinity();
        for (int deg = 0; deg <= max_degree; ++deg) {
            double r = norm2(numer - truncated(deg) * denom) / numer_norm;
            residuals.push_back(r);
            best = std::min(best, r);
        }
        int pick = max_degree;
        for (int deg = 0; deg <= max_degree; ++deg)
            if (residuals[static_cast<size_t>(deg)] <= best * 1.05 + 1e-300) {
                pick = deg;
                break;
            }
        out.quotient = truncated(pick);
        out.relative_residual = residuals[static_cast<size_t>(pick)];
    }
    out.inexact = out.relative_residual > 0.1;
    return out;
}

}  // namespace

ApproxDivision approx_divide(const Poly<double>& numer, const Poly<double>& denom, double cleanup_threshold) {
    if (!numer.is_zero() && !denom.is_zero() && numer.degree() < denom.degree())
        throw std::invalid_argument("approx_divide: numerator degree below denominator degree");
    int cap = numer.is_zero() || denom.is_zero() ? 0 : numer.degree() - denom.degree();
    return divide_and_truncate(numer, denom, cleanup_threshold, cap, false);
}

ApproxDivision approx_divide_auto(const Poly<double>& numer, const Poly<double>& denom, double cleanup_threshold,
                                  int max_degree) {
    if (max_degree < 0) throw std::invalid_argument("approx_divide_auto: negative degree cap");
    return divide_and_truncate(numer, denom, cleanup_threshold, max_degree, true);
}

}  // namespace ore
