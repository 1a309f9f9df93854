#pragma once

#include <complex>
#include <vector>

#include "ore/poly.hpp"

namespace ore {

struct DivisionInstability : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InterpolationInconsistency : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline size_t next_pow2(size_t n) {
    size_t k = 1;
    while (k < n) k <<= 1;
    return k;
}

// Values of p at the k-th roots of unity w^j, w = exp(2*pi*i/k), j = 0..k-1.
// k is padded up to the next power of two >= max(requested, deg p + 1); the
// returned vector's size is the transform size actually used.
std::vector<std::complex<double>> fft_eval(const Poly<double>& p, size_t points);

// Inverse of fft_eval. The input length must be a power of two. Imaginary
// residue below 1e-10 * ||values|| is discarded; anything larger throws
// InterpolationInconsistency.
Poly<double> fft_interpolate(const std::vector<std::complex<double>>& values);

struct ApproxDivision {
    Poly<double> quotient;
    double relative_residual = 0.0;  // ||numer - q*denom|| / ||numer||
    bool inexact = false;            // relative_residual > 0.1
};

// Approximate polynomial division by pointwise division of FFT values.
// Coefficients of the quotient below cleanup_threshold are zeroed, as are
// positions beyond deg(numer) - deg(denom). Throws DivisionInstability when
// the denominator gets within cleanup_threshold of zero at an evaluation
// point.
ApproxDivision approx_divide(const Poly<double>& numer, const Poly<double>& denom, double cleanup_threshold);

// Variant for noisy operands whose formal degrees are unreliable: the
// quotient is truncated to the lowest degree (at most max_degree) whose
// division residual comes within 5% of the best achievable one.
ApproxDivision approx_divide_auto(const Poly<double>& numer, const Poly<double>& denom, double cleanup_threshold,
                                  int max_degree);

}  // namespace ore
