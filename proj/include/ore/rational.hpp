#pragma once

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ore {

// Arbitrary-precision signed integer, sign-magnitude with base-2^32 limbs.
class BigInt {
  public:
    BigInt() = default;
    BigInt(long long v) {
        if (v < 0) {
            negative_ = true;
            // avoid overflow on LLONG_MIN
            unsigned long long u = ~static_cast<unsigned long long>(v) + 1ULL;
            assign_u64(u);
        } else {
            assign_u64(static_cast<unsigned long long>(v));
        }
    }
    BigInt(int v) : BigInt(static_cast<long long>(v)) {}

    static BigInt from_string(std::string_view s) {
        BigInt r;
        size_t i = 0;
        bool neg = false;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            neg = (s[i] == '-');
            ++i;
        }
        if (i == s.size()) throw std::invalid_argument("BigInt: empty digit string");
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("BigInt: bad digit");
            r.mul_small(10);
            r.add_small(static_cast<uint32_t>(s[i] - '0'));
        }
        r.negative_ = neg && !r.is_zero();
        return r;
    }

    bool is_zero() const { return limbs_.empty(); }
    bool is_negative() const { return negative_; }
    int signum() const { return is_zero() ? 0 : (negative_ ? -1 : 1); }

    BigInt operator-() const {
        BigInt r = *this;
        if (!r.is_zero()) r.negative_ = !r.negative_;
        return r;
    }
    BigInt abs() const {
        BigInt r = *this;
        r.negative_ = false;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        BigInt r;
        if (a.negative_ == b.negative_) {
            r.limbs_ = add_mag(a.limbs_, b.limbs_);
            r.negative_ = a.negative_;
        } else {
            int c = cmp_mag(a.limbs_, b.limbs_);
            if (c == 0) return BigInt();
            if (c > 0) {
                r.limbs_ = sub_mag(a.limbs_, b.limbs_);
                r.negative_ = a.negative_;
            } else {
                r.limbs_ = sub_mag(b.limbs_, a.limbs_);
                r.negative_ = b.negative_;
            }
        }
        r.normalize();
        return r;
    }
    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.is_zero() || b.is_zero()) return BigInt();
        BigInt r;
        r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
        for (size_t i = 0; i < a.limbs_.size(); ++i) {
            uint64_t carry = 0;
            uint64_t ai = a.limbs_[i];
            for (size_t j = 0; j < b.limbs_.size(); ++j) {
                uint64_t cur = r.limbs_[i + j] + ai * b.limbs_[j] + carry;
                r.limbs_[i + j] = static_cast<uint32_t>(cur);
                carry = cur >> 32;
            }
            size_t k = i + b.limbs_.size();
            while (carry) {
                uint64_t cur = r.limbs_[k] + carry;
                r.limbs_[k] = static_cast<uint32_t>(cur);
                carry = cur >> 32;
                ++k;
            }
        }
        r.negative_ = a.negative_ != b.negative_;
        r.normalize();
        return r;
    }

    // Truncated division (quotient rounds toward zero, like C++ integers).
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
        if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
        int c = cmp_mag(a.limbs_, b.limbs_);
        if (c < 0) {
            q = BigInt();
            r = a;
            return;
        }
        if (b.limbs_.size() == 1) {
            uint32_t rem = 0;
            q.limbs_ = divmod_small(a.limbs_, b.limbs_[0], rem);
            r = BigInt();
            r.assign_u64(rem);
        } else {
            divmod_knuth(a.limbs_, b.limbs_, q.limbs_, r.limbs_);
        }
        q.negative_ = a.negative_ != b.negative_;
        r.negative_ = a.negative_;
        q.normalize();
        r.normalize();
    }
    friend BigInt operator/(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return q;
    }
    friend BigInt operator%(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return r;
    }

    static BigInt gcd(BigInt a, BigInt b) {
        a.negative_ = false;
        b.negative_ = false;
        while (!b.is_zero()) {
            BigInt q, r;
            divmod(a, b, q, r);
            a = std::move(b);
            b = std::move(r);
        }
        return a;
    }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.negative_ == b.negative_ && a.limbs_ == b.limbs_;
    }
    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
        if (a.negative_ != b.negative_) return a.negative_ ? std::strong_ordering::less : std::strong_ordering::greater;
        int c = cmp_mag(a.limbs_, b.limbs_);
        if (a.negative_) c = -c;
        return c <=> 0;
    }

    size_t bit_length() const {
        if (limbs_.empty()) return 0;
        uint32_t top = limbs_.back();
        size_t bits = 32 * (limbs_.size() - 1);
        while (top) {
            ++bits;
            top >>= 1;
        }
        return bits;
    }

    // Shift left by k bits.
    BigInt shl(size_t k) const {
        if (is_zero() || k == 0) return *this;
        BigInt r;
        size_t words = k / 32, bits = k % 32;
        r.limbs_.assign(limbs_.size() + words + 1, 0);
        for (size_t i = 0; i < limbs_.size(); ++i) {
            uint64_t v = static_cast<uint64_t>(limbs_[i]) << bits;
            r.limbs_[i + words] |= static_cast<uint32_t>(v);
            r.limbs_[i + words + 1] |= static_cast<uint32_t>(v >> 32);
        }
        r.negative_ = negative_;
        r.normalize();
        return r;
    }

    double to_double() const {
        if (is_zero()) return 0.0;
        // take the top 64 bits of the magnitude, then scale
        size_t bits = bit_length();
        double v = 0.0;
        size_t start = limbs_.size() >= 3 ? limbs_.size() - 3 : 0;
        for (size_t i = limbs_.size(); i-- > start;) v = v * 4294967296.0 + limbs_[i];
        v = std::ldexp(v, static_cast<int>(32 * start));
        (void)bits;
        return negative_ ? -v : v;
    }

    uint64_t mod_u64(uint64_t p) const {
        unsigned __int128 r = 0;
        for (size_t i = limbs_.size(); i-- > 0;) r = (r << 32 | limbs_[i]) % p;
        return static_cast<uint64_t>(r);
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::vector<uint32_t> tmp = limbs_;
        std::string digits;
        while (!tmp.empty()) {
            uint32_t rem = 0;
            tmp = divmod_small(tmp, 1000000000u, rem);
            for (int k = 0; k < 9; ++k) {
                digits.push_back(static_cast<char>('0' + rem % 10));
                rem /= 10;
            }
        }
        while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
        if (negative_) digits.push_back('-');
        std::reverse(digits.begin(), digits.end());
        return digits;
    }

    // 10^k
    static BigInt pow10(size_t k) {
        BigInt r(1);
        for (size_t i = 0; i < k; ++i) r.mul_small(10);
        return r;
    }

  private:
    bool negative_ = false;
    std::vector<uint32_t> limbs_;  // little-endian, no trailing zero limbs

    void assign_u64(unsigned long long u) {
        limbs_.clear();
        while (u) {
            limbs_.push_back(static_cast<uint32_t>(u));
            u >>= 32;
        }
    }
    void normalize() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
        if (limbs_.empty()) negative_ = false;
    }
    void mul_small(uint32_t m) {
        uint64_t carry = 0;
        for (auto& l : limbs_) {
            uint64_t cur = static_cast<uint64_t>(l) * m + carry;
            l = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) limbs_.push_back(static_cast<uint32_t>(carry));
    }
    void add_small(uint32_t v) {
        uint64_t carry = v;
        for (size_t i = 0; carry && i < limbs_.size(); ++i) {
            uint64_t cur = limbs_[i] + carry;
            limbs_[i] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) limbs_.push_back(static_cast<uint32_t>(carry));
    }

    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        const auto& big = a.size() >= b.size() ? a : b;
        const auto& small = a.size() >= b.size() ? b : a;
        std::vector<uint32_t> r(big.size() + 1, 0);
        uint64_t carry = 0;
        for (size_t i = 0; i < big.size(); ++i) {
            uint64_t cur = static_cast<uint64_t>(big[i]) + (i < small.size() ? small[i] : 0) + carry;
            r[i] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        r[big.size()] = static_cast<uint32_t>(carry);
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }
    // requires |a| >= |b|
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        std::vector<uint32_t> r(a.size(), 0);
        int64_t borrow = 0;
        for (size_t i = 0; i < a.size(); ++i) {
            int64_t cur = static_cast<int64_t>(a[i]) - (i < b.size() ? b[i] : 0) - borrow;
            if (cur < 0) {
                cur += int64_t(1) << 32;
                borrow = 1;
            } else {
                borrow = 0;
            }
            r[i] = static_cast<uint32_t>(cur);
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }
    static std::vector<uint32_t> divmod_small(const std::vector<uint32_t>& a, uint32_t d, uint32_t& rem) {
        std::vector<uint32_t> q(a.size(), 0);
        uint64_t r = 0;
        for (size_t i = a.size(); i-- > 0;) {
            uint64_t cur = (r << 32) | a[i];
            q[i] = static_cast<uint32_t>(cur / d);
            r = cur % d;
        }
        rem = static_cast<uint32_t>(r);
        while (!q.empty() && q.back() == 0) q.pop_back();
        return q;
    }

    // Knuth algorithm D on magnitudes; requires |a| >= |b|, b at least 2 limbs.
    static void divmod_knuth(std::vector<uint32_t> a, std::vector<uint32_t> b, std::vector<uint32_t>& q,
                             std::vector<uint32_t>& r) {
        // normalize so the top limb of b has its high bit set
        int shift = 0;
        for (uint32_t top = b.back(); !(top & 0x80000000u); top <<= 1) ++shift;
        a = shl_mag(a, shift);
        b = shl_mag(b, shift);
        size_t n = b.size(), m = a.size() - n;
        a.resize(a.size() + 1, 0);
        q.assign(m + 1, 0);
        uint64_t btop = b[n - 1], bsecond = b[n - 2];
        for (size_t j = m + 1; j-- > 0;) {
            uint64_t num = (static_cast<uint64_t>(a[j + n]) << 32) | a[j + n - 1];
            uint64_t qhat = num / btop, rhat = num % btop;
            if (qhat > 0xFFFFFFFFull) {
                qhat = 0xFFFFFFFFull;
                rhat = num - qhat * btop;
            }
            while (rhat <= 0xFFFFFFFFull && qhat * bsecond > ((rhat << 32) | a[j + n - 2])) {
                --qhat;
                rhat += btop;
            }
            // multiply-subtract
            int64_t borrow = 0;
            uint64_t carry = 0;
            for (size_t i = 0; i < n; ++i) {
                uint64_t p = qhat * b[i] + carry;
                carry = p >> 32;
                int64_t cur = static_cast<int64_t>(a[i + j]) - static_cast<int64_t>(p & 0xFFFFFFFFull) - borrow;
                if (cur < 0) {
                    cur += int64_t(1) << 32;
                    borrow = 1;
                } else {
                    borrow = 0;
                }
                a[i + j] = static_cast<uint32_t>(cur);
            }
            int64_t cur = static_cast<int64_t>(a[j + n]) - static_cast<int64_t>(carry) - borrow;
            if (cur < 0) {
                // qhat was one too large: add back
                cur += int64_t(1) << 32;
                a[j + n] = static_cast<uint32_t>(cur);
                --qhat;
                uint64_t c2 = 0;
                for (size_t i = 0; i < n; ++i) {
                    uint64_t s = static_cast<uint64_t>(a[i + j]) + b[i] + c2;
                    a[i + j] = static_cast<uint32_t>(s);
                    c2 = s >> 32;
                }
                a[j + n] = static_cast<uint32_t>(a[j + n] + c2);
            } else {
                a[j + n] = static_cast<uint32_t>(cur);
            }
            q[j] = static_cast<uint32_t>(qhat);
        }
        a.resize(n);
        r = shr_mag(a, shift);
        while (!q.empty() && q.back() == 0) q.pop_back();
        while (!r.empty() && r.back() == 0) r.pop_back();
    }
    static std::vector<uint32_t> shl_mag(const std::vector<uint32_t>& a, int bits) {
        if (bits == 0) return a;
        std::vector<uint32_t> r(a.size() + 1, 0);
        for (size_t i = 0; i < a.size(); ++i) {
            uint64_t v = static_cast<uint64_t>(a[i]) << bits;
            r[i] |= static_cast<uint32_t>(v);
            r[i + 1] |= static_cast<uint32_t>(v >> 32);
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }
    static std::vector<uint32_t> shr_mag(const std::vector<uint32_t>& a, int bits) {
        if (bits == 0) return a;
        std::vector<uint32_t> r(a.size(), 0);
        for (size_t i = 0; i < a.size(); ++i) {
            uint64_t v = (static_cast<uint64_t>(a[i]) << 32) >> bits;
            r[i] |= static_cast<uint32_t>(v >> 32);
            if (i > 0) r[i - 1] |= static_cast<uint32_t>(v);
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }
};

// Exact rational number, always in lowest terms with positive denominator.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {}
    Rational(int v) : num_(v), den_(1) {}
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }
    Rational(long long n, long long d) : num_(n), den_(d) { reduce(); }

    // Exact value of a decimal literal, e.g. "0.06" -> 3/50, "-1.5e-2" -> -3/200.
    static Rational from_decimal(std::string_view s) {
        size_t i = 0;
        bool neg = false;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            neg = (s[i] == '-');
            ++i;
        }
        std::string digits;
        size_t frac_digits = 0;
        bool seen_dot = false, seen_digit = false;
        long long exp10 = 0;
        for (; i < s.size(); ++i) {
            char c = s[i];
            if (c >= '0' && c <= '9') {
                digits.push_back(c);
                seen_digit = true;
                if (seen_dot) ++frac_digits;
            } else if (c == '.' && !seen_dot) {
                seen_dot = true;
            } else if ((c == 'e' || c == 'E') && seen_digit) {
                exp10 = std::stoll(std::string(s.substr(i + 1)));
                break;
            } else {
                throw std::invalid_argument("Rational: bad decimal literal");
            }
        }
        if (!seen_digit) throw std::invalid_argument("Rational: bad decimal literal");
        BigInt n = BigInt::from_string(digits.empty() ? "0" : digits);
        long long net = exp10 - static_cast<long long>(frac_digits);
        BigInt d(1);
        if (net >= 0)
            n = n * BigInt::pow10(static_cast<size_t>(net));
        else
            d = BigInt::pow10(static_cast<size_t>(-net));
        if (neg) n = -n;
        return Rational(std::move(n), std::move(d));
    }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    int signum() const { return num_.signum(); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    Rational operator-() const {
        Rational r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        BigInt g1 = BigInt::gcd(a.num_, b.den_), g2 = BigInt::gcd(b.num_, a.den_);
        Rational r;
        r.num_ = (a.num_ / g1) * (b.num_ / g2);
        r.den_ = (a.den_ / g2) * (b.den_ / g1);
        return r;
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return (a.num_ * b.den_) <=> (b.num_ * a.den_);
    }

    Rational abs() const { return signum() < 0 ? -*this : *this; }

    double to_double() const {
        if (is_zero()) return 0.0;
        // scale the quotient into a ~62-bit integer, then undo the scaling
        long long k = 62 - (static_cast<long long>(num_.bit_length()) - static_cast<long long>(den_.bit_length()));
        BigInt scaled = k >= 0 ? num_.shl(static_cast<size_t>(k)) / den_ : num_ / den_.shl(static_cast<size_t>(-k));
        return std::ldexp(scaled.to_double(), static_cast<int>(-k));
    }

    uint64_t mod_u64(uint64_t p) const {
        uint64_t n = num_.abs().mod_u64(p);
        uint64_t d = den_.mod_u64(p);
        if (d == 0) throw std::domain_error("Rational: denominator vanishes mod p");
        uint64_t v = mulmod(n, invmod(d, p), p);
        if (num_.is_negative() && v != 0) v = p - v;
        return v;
    }

    std::string to_string() const {
        if (den_ == BigInt(1)) return num_.to_string();
        return num_.to_string() + "/" + den_.to_string();
    }

    static uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
        return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % p);
    }
    static uint64_t invmod(uint64_t a, uint64_t p) {
        // Fermat: p prime
        uint64_t r = 1, base = a % p, e = p - 2;
        while (e) {
            if (e & 1) r = mulmod(r, base, p);
            base = mulmod(base, base, p);
            e >>= 1;
        }
        return r;
    }

  private:
    BigInt num_, den_;

    void reduce() {
        if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
        if (num_.is_zero()) {
            den_ = BigInt(1);
            return;
        }
        if (den_.is_negative()) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = BigInt::gcd(num_, den_);
        num_ = num_ / g;
        den_ = den_ / g;
    }
};

inline Rational gcd(const Rational& a, const Rational& b) {
    // gcd of rationals: gcd of numerators over lcm of denominators (nonnegative)
    if (a.is_zero()) return b.abs();
    if (b.is_zero()) return a.abs();
    BigInt gn = BigInt::gcd(a.num(), b.num());
    BigInt gd = BigInt::gcd(a.den(), b.den());
    return Rational(gn, (a.den() / gd) * b.den());
}

}  // namespace ore
