#pragma once

#include <cmath>
#include <complex>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <vector>

#include "ore/rational.hpp"

namespace ore {

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
    static double zero() { return 0.0; }
    static double one() { return 1.0; }
    static bool is_zero(double v) { return v == 0.0; }
    static double from_int(long long v) { return static_cast<double>(v); }
};

template <>
struct ScalarTraits<Rational> {
    static Rational zero() { return Rational(); }
    static Rational one() { return Rational(1); }
    static bool is_zero(const Rational& v) { return v.is_zero(); }
    static Rational from_int(long long v) { return Rational(v); }
};

// Degree sentinel for the zero polynomial. Distinguished so it can never be
// mistaken for a coefficient index.
inline constexpr int kZeroPolyDegree = std::numeric_limits<int>::min() / 2;

// Dense univariate polynomial in t over one scalar mode (double or Rational).
// Coefficients are kept trimmed: the vector is empty or ends in a nonzero.
template <class S>
class Poly {
  public:
    using Traits = ScalarTraits<S>;

    Poly() = default;
    explicit Poly(S c) {
        if (!Traits::is_zero(c)) coeffs_.push_back(std::move(c));
    }
    explicit Poly(std::vector<S> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Poly variable() { return monomial(Traits::one(), 1); }
    static Poly monomial(S c, int power) {
        Poly p;
        if (!Traits::is_zero(c)) {
            p.coeffs_.assign(power + 1, Traits::zero());
            p.coeffs_.back() = std::move(c);
        }
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return coeffs_.empty() ? kZeroPolyDegree : static_cast<int>(coeffs_.size()) - 1; }
    size_t size() const { return coeffs_.size(); }

    S coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Traits::zero();
        return coeffs_[i];
    }
    const std::vector<S>& coeffs() const { return coeffs_; }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r;
        r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), Traits::zero());
        for (size_t i = 0; i < a.coeffs_.size(); ++i) r.coeffs_[i] = a.coeffs_[i];
        for (size_t i = 0; i < b.coeffs_.size(); ++i) r.coeffs_[i] += b.coeffs_[i];
        r.trim();
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    Poly operator-() const {
        Poly r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        Poly r;
        r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Traits::zero());
        for (size_t i = 0; i < a.coeffs_.size(); ++i)
            for (size_t j = 0; j < b.coeffs_.size(); ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        r.trim();
        return r;
    }
    friend Poly operator*(const S& s, const Poly& p) { return Poly(S(s)) * p; }
    friend Poly operator*(const Poly& p, const S& s) { return Poly(S(s)) * p; }
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) = default;

    S leading() const {
        if (is_zero()) throw std::domain_error("Poly: zero polynomial has no leading coefficient");
        return coeffs_.back();
    }

    S evaluate(const S& x) const {
        S r = Traits::zero();
        for (size_t i = coeffs_.size(); i-- > 0;) r = r * x + coeffs_[i];
        return r;
    }

    // t^k * p
    Poly shifted(int k) const {
        if (is_zero()) return Poly();
        Poly r;
        r.coeffs_.assign(coeffs_.size() + k, Traits::zero());
        for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i + k] = coeffs_[i];
        return r;
    }

  private:
    std::vector<S> coeffs_;

    void trim() {
        while (!coeffs_.empty() && Traits::is_zero(coeffs_.back())) coeffs_.pop_back();
    }
};

template <class S>
Poly<S> derivative(const Poly<S>& p) {
    std::vector<S> c;
    for (int i = 1; i <= p.degree(); ++i) c.push_back(ScalarTraits<S>::from_int(i) * p.coeff(i));
    return Poly<S>(std::move(c));
}

inline double norm2(const Poly<double>& p) {
    double s = 0;
    for (double c : p.coeffs()) s += c * c;
    return std::sqrt(s);
}

template <class S>
S norm2_squared(const Poly<S>& p) {
    S s = ScalarTraits<S>::zero();
    for (const auto& c : p.coeffs()) s += c * c;
    return s;
}

inline std::complex<double> evaluate_at(const Poly<double>& p, std::complex<double> x) {
    std::complex<double> r = 0;
    for (size_t i = p.size(); i-- > 0;) r = r * x + p.coeff(static_cast<int>(i));
    return r;
}

// ---- exact-mode helpers over Q[t] ----

// Long division over the field Q; returns {quotient, remainder}.
inline std::pair<Poly<Rational>, Poly<Rational>> poly_divmod(const Poly<Rational>& a, const Poly<Rational>& b) {
    if (b.is_zero()) throw std::domain_error("poly_divmod: division by zero polynomial");
    Poly<Rational> q, r = a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int k = r.degree() - b.degree();
        Rational c = r.leading() / b.leading();
        Poly<Rational> term = Poly<Rational>::monomial(c, k);
        q += term;
        r -= term * b;
    }
    return {q, r};
}

// Exact division; throws if b does not divide a.
inline Poly<Rational> divide_exact(const Poly<Rational>& a, const Poly<Rational>& b) {
    auto [q, r] = poly_divmod(a, b);
    if (!r.is_zero()) throw std::domain_error("divide_exact: inexact polynomial division");
    return q;
}

// Rational content: the signed rational c such that p/c has coprime integer
// coefficients and positive leading coefficient. content(0) = 0.
inline Rational rational_content(const Poly<Rational>& p) {
    if (p.is_zero()) return Rational();
    Rational g;
    for (const auto& c : p.coeffs()) g = gcd(g, c);
    if (p.leading().signum() < 0) g = -g;
    return g;
}

// Integer-primitive form with positive leading coefficient.
inline Poly<Rational> primitive_scaled(const Poly<Rational>& p) {
    if (p.is_zero()) return p;
    Rational c = rational_content(p);
    std::vector<Rational> out;
    for (const auto& v : p.coeffs()) out.push_back(v / c);
    return Poly<Rational>(std::move(out));
}

// GCD over Q[t], returned integer-primitive with positive leading coefficient.
inline Poly<Rational> poly_gcd(Poly<Rational> a, Poly<Rational> b) {
    if (a.is_zero()) return primitive_scaled(b);
    if (b.is_zero()) return primitive_scaled(a);
    a = primitive_scaled(a);
    b = primitive_scaled(b);
    while (!b.is_zero()) {
        auto [q, r] = poly_divmod(a, b);
        (void)q;
        a = std::move(b);
        b = r.is_zero() ? Poly<Rational>() : primitive_scaled(r);
    }
    return primitive_scaled(a);
}

inline Poly<double> to_double(const Poly<Rational>& p) {
    std::vector<double> c;
    c.reserve(p.size());
    for (const auto& v : p.coeffs()) c.push_back(v.to_double());
    return Poly<double>(std::move(c));
}

}  // namespace ore
