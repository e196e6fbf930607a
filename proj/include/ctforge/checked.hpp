#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "ctforge/errors.hpp"

namespace ctforge {

using Int = std::int64_t;

// Overflow-checked machine arithmetic. Every quantity in this library is an
// integer; overflow would silently corrupt a classification, so it throws.
namespace checked {

inline Int add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw InternalError("integer overflow in addition");
    return r;
}

inline Int sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw InternalError("integer overflow in subtraction");
    return r;
}

inline Int mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw InternalError("integer overflow in multiplication");
    return r;
}

/// Floor-style modulus: result in [0, m) for m > 0.
inline Int mod(Int a, Int m) {
    Int r = a % m;
    return r < 0 ? r + m : r;
}

} // namespace checked

/// Exact rational number over checked 64-bit integers, always normalized
/// (gcd(num, den) = 1, den > 0).
class Rational {
public:
    constexpr Rational() = default;
    Rational(Int n) : num_(n), den_(1) {}  // NOLINT: implicit by intent
    Rational(Int n, Int d) : num_(n), den_(d) {
        if (d == 0) throw ValidationError("rational with zero denominator");
        normalize();
    }

    Int num() const { return num_; }
    Int den() const { return den_; }
    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        Int g = std::gcd(a.den_, b.den_);
        Int l = checked::mul(a.den_ / g, b.den_);
        Int n = checked::add(checked::mul(a.num_, l / a.den_), checked::mul(b.num_, l / b.den_));
        return Rational(n, l);
    }
    friend Rational operator-(const Rational& a) { return Rational(checked::sub(0, a.num_), a.den_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        Int g1 = std::gcd(a.num_, b.den_);
        Int g2 = std::gcd(b.num_, a.den_);
        if (g1 == 0) g1 = 1;
        if (g2 == 0) g2 = 1;
        return Rational(checked::mul(a.num_ / g1, b.num_ / g2), checked::mul(a.den_ / g2, b.den_ / g1));
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw InternalError("rational division by zero");
        return a * Rational(b.den_, b.num_);
    }
    friend bool operator==(const Rational& a, const Rational& b) = default;

    std::string str() const {
        return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    void normalize() {
        if (den_ < 0) {
            num_ = checked::sub(0, num_);
            den_ = checked::sub(0, den_);
        }
        Int g = std::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    Int num_ = 0;
    Int den_ = 1;
};

} // namespace ctforge
