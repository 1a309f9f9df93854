#pragma once

#include "ore/poly.hpp"

namespace ore {

// Element of Q(t): numerator over a monic denominator, reduced.
class RatFunc {
  public:
    RatFunc() = default;
    RatFunc(Poly<Rational> num) : num_(std::move(num)) {}
    RatFunc(Poly<Rational> num, Poly<Rational> den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }
    RatFunc(const Rational& r) : num_(Poly<Rational>(r)) {}

    const Poly<Rational>& num() const { return num_; }
    const Poly<Rational>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) { return RatFunc(a.num_ * b.num_, a.den_ * b.den_); }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw std::domain_error("RatFunc: division by zero");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) = default;

  private:
    Poly<Rational> num_;
    Poly<Rational> den_ = Poly<Rational>(Rational(1));

    void reduce() {
        if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
        if (num_.is_zero()) {
            den_ = Poly<Rational>(Rational(1));
            return;
        }
        Poly<Rational> g = poly_gcd(num_, den_);
        num_ = divide_exact(num_, g);
        den_ = divide_exact(den_, g);
        Rational lead = den_.leading();
        if (!(lead == Rational(1))) {
            std::vector<Rational> nc, dc;
            for (const auto& c : num_.coeffs()) nc.push_back(c / lead);
            for (const auto& c : den_.coeffs()) dc.push_back(c / lead);
            num_ = Poly<Rational>(std::move(nc));
            den_ = Poly<Rational>(std::move(dc));
        }
    }
};

inline RatFunc derivative(const RatFunc& f) {
    // quotient rule
    return RatFunc(derivative(f.num()) * f.den() - f.num() * derivative(f.den()), f.den() * f.den());
}

}  // namespace ore
