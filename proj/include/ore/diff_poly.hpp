#pragma once

#include <optional>
#include <utility>

#include "ore/poly.hpp"
#include "ore/rat_func.hpp"

namespace ore {

// Differential operator sum_i c_i * d^i with coefficients written on the
// left, over a coefficient ring C that supports +, -, * and derivative().
// C is Poly<double> or Poly<Rational> in the two scalar modes; Q(t)
// coefficients (RatFunc) are used internally by the exact Euclidean path.
template <class C>
class OreOp {
  public:
    OreOp() = default;
    explicit OreOp(C constant) {
        if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
    }
    explicit OreOp(std::vector<C> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static OreOp d() { return monomial(C(ScalarTraits<typename ScalarType<C>::type>::one()), 1); }
    static OreOp identity() { return OreOp(C(ScalarTraits<typename ScalarType<C>::type>::one())); }
    static OreOp monomial(C c, int power) {
        OreOp r;
        if (!c.is_zero()) {
            r.coeffs_.assign(power + 1, C());
            r.coeffs_.back() = std::move(c);
        }
        return r;
    }

    bool is_zero() const { return coeffs_.empty(); }
    int deg() const { return coeffs_.empty() ? kZeroPolyDegree : static_cast<int>(coeffs_.size()) - 1; }
    C coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(coeffs_.size())) return C();
        return coeffs_[i];
    }
    const std::vector<C>& coeffs() const { return coeffs_; }
    const C& leading() const {
        if (is_zero()) throw std::domain_error("OreOp: zero operator has no leading coefficient");
        return coeffs_.back();
    }

    friend OreOp operator+(const OreOp& a, const OreOp& b) {
        OreOp r;
        r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), C());
        for (size_t i = 0; i < a.coeffs_.size(); ++i) r.coeffs_[i] = a.coeffs_[i];
        for (size_t i = 0; i < b.coeffs_.size(); ++i) r.coeffs_[i] += b.coeffs_[i];
        r.trim();
        return r;
    }
    friend OreOp operator-(const OreOp& a, const OreOp& b) { return a + (-b); }
    OreOp operator-() const {
        OreOp r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    // Non-commutative product under d*c = c*d + c'.
    friend OreOp operator*(const OreOp& a, const OreOp& b) {
        OreOp r;
        OreOp cur = b;  // d^i applied to b
        for (size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (i > 0) cur = d_shift(cur);
            if (!a.coeffs_[i].is_zero()) r += left_scaled(a.coeffs_[i], cur);
        }
        return r;
    }
    OreOp& operator+=(const OreOp& o) { return *this = *this + o; }
    OreOp& operator-=(const OreOp& o) { return *this = *this - o; }
    OreOp& operator*=(const OreOp& o) { return *this = *this * o; }

    friend bool operator==(const OreOp& a, const OreOp& b) = default;

    // d composed on the left: d*f.
    static OreOp d_shift(const OreOp& f) {
        OreOp r;
        r.coeffs_.assign(f.coeffs_.size() + 1, C());
        for (size_t i = 0; i < f.coeffs_.size(); ++i) {
            r.coeffs_[i + 1] += f.coeffs_[i];
            r.coeffs_[i] += derivative(f.coeffs_[i]);
        }
        r.trim();
        return r;
    }
    // c*f for a coefficient c (a degree-0 left factor).
    static OreOp left_scaled(const C& c, const OreOp& f) {
        OreOp r;
        r.coeffs_.reserve(f.coeffs_.size());
        for (const auto& fc : f.coeffs_) r.coeffs_.push_back(c * fc);
        r.trim();
        return r;
    }

  private:
    template <class T>
    struct ScalarType {
        using type = double;
    };
    template <class S>
    struct ScalarType<Poly<S>> {
        using type = S;
    };
    template <class T>
    friend class OreOp;

    std::vector<C> coeffs_;

    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }
};

template <>
inline OreOp<RatFunc> OreOp<RatFunc>::d() {
    return monomial(RatFunc(Rational(1)), 1);
}
template <>
inline OreOp<RatFunc> OreOp<RatFunc>::identity() {
    return OreOp(RatFunc(Rational(1)));
}

using DiffPoly = OreOp<Poly<double>>;
using RatDiffPoly = OreOp<Poly<Rational>>;

template <class C>
OreOp<C> ore_pow(const OreOp<C>& a, int e) {
    OreOp<C> r = OreOp<C>::identity();
    for (int i = 0; i < e; ++i) r *= a;
    return r;
}

// Action on a polynomial: sum_i f_i(t) * y^(i)(t).
template <class S>
Poly<S> apply(const OreOp<Poly<S>>& f, const Poly<S>& y) {
    Poly<S> r, dk = y;
    for (int i = 0; i <= f.deg(); ++i) {
        if (i > 0) dk = derivative(dk);
        r += f.coeff(i) * dk;
    }
    return r;
}

template <class S>
int deg_t(const OreOp<Poly<S>>& f) {
    int d = kZeroPolyDegree;
    for (const auto& c : f.coeffs()) d = std::max(d, c.degree());
    return d;
}

inline double diff_norm(const DiffPoly& f) {
    double s = 0;
    for (const auto& c : f.coeffs()) {
        double n = norm2(c);
        s += n * n;
    }
    return std::sqrt(s);
}

inline Rational diff_norm_squared(const RatDiffPoly& f) {
    Rational s;
    for (const auto& c : f.coeffs()) s += norm2_squared(c);
    return s;
}

inline DiffPoly scale(const DiffPoly& f, double s) {
    std::vector<Poly<double>> out;
    out.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) out.push_back(c * s);
    return DiffPoly(std::move(out));
}

inline DiffPoly normalize(const DiffPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("normalize: zero operator");
    return scale(f, 1.0 / diff_norm(f));
}

// ---- exact mode: content, primitivity, Euclidean GCRD ----

// Content of an operator over Q[t]: the polynomial GCD of the coefficients,
// scaled so the primitive part has coprime integer coefficients and a
// positive leading scalar in its leading coefficient.
inline Poly<Rational> content(const RatDiffPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("content: zero operator");
    Poly<Rational> g;
    for (const auto& c : f.coeffs()) g = poly_gcd(g, c);
    Rational scalar;
    for (const auto& c : f.coeffs()) scalar = gcd(scalar, rational_content(divide_exact(c, g)));
    if (divide_exact(f.leading(), g).leading().signum() < 0) scalar = -scalar;
    std::vector<Rational> gc;
    for (const auto& v : g.coeffs()) gc.push_back(v * scalar);
    return Poly<Rational>(std::move(gc));
}

inline RatDiffPoly primitive_part(const RatDiffPoly& f) {
    Poly<Rational> c = content(f);
    std::vector<Poly<Rational>> out;
    out.reserve(f.coeffs().size());
    for (const auto& v : f.coeffs()) out.push_back(divide_exact(v, c));
    return RatDiffPoly(std::move(out));
}

template <class C>
struct DivisionResult {
    OreOp<C> quotient;
    OreOp<C> remainder;
};

// Right division over a coefficient field: f = q*g + r, deg r < deg g.
inline DivisionResult<RatFunc> right_divide_field(const OreOp<RatFunc>& f, const OreOp<RatFunc>& g) {
    if (g.is_zero()) throw std::domain_error("right division by zero operator");
    OreOp<RatFunc> q, r = f;
    while (!r.is_zero() && r.deg() >= g.deg()) {
        int k = r.deg() - g.deg();
        RatFunc c = r.leading() / g.leading();
        OreOp<RatFunc> mono = OreOp<RatFunc>::monomial(c, k);
        q += mono;
        r -= mono * g;
    }
    return {q, r};
}

inline OreOp<RatFunc> lift_to_field(const RatDiffPoly& f) {
    std::vector<RatFunc> out;
    out.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) out.emplace_back(c);
    return OreOp<RatFunc>(std::move(out));
}

inline std::optional<RatDiffPoly> to_polynomial(const OreOp<RatFunc>& f) {
    std::vector<Poly<Rational>> out;
    for (const auto& c : f.coeffs()) {
        if (!c.is_polynomial()) return std::nullopt;
        Rational lead = c.den().leading();
        std::vector<Rational> cc;
        for (const auto& v : c.num().coeffs()) cc.push_back(v / lead);
        out.emplace_back(std::move(cc));
    }
    return RatDiffPoly(std::move(out));
}

// f = q*g + r over Q(t), lifted from polynomial coefficients.
inline DivisionResult<RatFunc> right_divide(const RatDiffPoly& f, const RatDiffPoly& g) {
    return right_divide_field(lift_to_field(f), lift_to_field(g));
}

// Pseudo-remainder of right division, staying in Q[t] coefficients.
inline RatDiffPoly right_pseudo_remainder(const RatDiffPoly& f, const RatDiffPoly& g) {
    if (g.is_zero()) throw std::domain_error("right division by zero operator");
    RatDiffPoly r = f;
    const Poly<Rational>& glead = g.leading();
    while (!r.is_zero() && r.deg() >= g.deg()) {
        int k = r.deg() - g.deg();
        RatDiffPoly shifted = g;
        for (int i = 0; i < k; ++i) shifted = RatDiffPoly::d_shift(shifted);
        r = RatDiffPoly::left_scaled(glead, r) - RatDiffPoly::left_scaled(r.leading(), shifted);
    }
    return r;
}

// Primitive GCRD by the Euclidean remainder sequence over Q(t), with content
// removed after every step. Canonical representative: coprime integer
// coefficients, positive leading scalar of the leading coefficient.
inline RatDiffPoly exact_gcrd(const RatDiffPoly& f, const RatDiffPoly& g) {
    if (f.is_zero() && g.is_zero()) throw std::invalid_argument("exact_gcrd: both operators zero");
    if (f.is_zero()) return primitive_part(g);
    if (g.is_zero()) return primitive_part(f);
    RatDiffPoly a = primitive_part(f), b = primitive_part(g);
    if (a.deg() < b.deg()) std::swap(a, b);
    while (!b.is_zero()) {
        RatDiffPoly r = right_pseudo_remainder(a, b);
        a = std::move(b);
        b = r.is_zero() ? RatDiffPoly() : primitive_part(r);
    }
    return primitive_part(a);
}

inline DiffPoly to_double(const RatDiffPoly& f) {
    std::vector<Poly<double>> out;
    out.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) out.push_back(to_double(c));
    return DiffPoly(std::move(out));
}

inline Poly<Rational> to_rational_exact(const Poly<double>& p);

inline RatDiffPoly to_rational_exact(const DiffPoly& f) {
    std::vector<Poly<Rational>> out;
    out.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) out.push_back(to_rational_exact(c));
    return RatDiffPoly(std::move(out));
}

// Exact dyadic value of each double coefficient.
inline Poly<Rational> to_rational_exact(const Poly<double>& p) {
    std::vector<Rational> out;
    for (double v : p.coeffs()) {
        if (!std::isfinite(v)) throw std::invalid_argument("to_rational_exact: non-finite coefficient");
        int e = 0;
        double m = std::frexp(v, &e);  // v = m * 2^e, |m| in [0.5, 1)
        long long mi = static_cast<long long>(std::ldexp(m, 53));
        e -= 53;
        BigInt num(mi), den(1);
        if (e >= 0)
            num = num.shl(static_cast<size_t>(e));
        else
            den = den.shl(static_cast<size_t>(-e));
        out.emplace_back(std::move(num), std::move(den));
    }
    return Poly<Rational>(std::move(out));
}

}  // namespace ore
