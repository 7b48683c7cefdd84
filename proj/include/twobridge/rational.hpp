// Exact rational numbers over BigInt.
//
// Always canonical: denominator > 0 and gcd(|num|, den) == 1, so equality is
// structural. Every statistic in this library is carried as a Rational and
// compared exactly; floating point appears nowhere.

#pragma once

#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

#include "twobridge/bigint.hpp"

namespace twobridge {

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {}
    Rational(BigInt v) : num_(std::move(v)), den_(1) {}

    Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
        canonicalize();
    }

    Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_negative() const { return num_.is_negative(); }

    Rational abs() const { return Rational(num_.abs(), den_); }

    friend Rational operator-(const Rational& a) { return Rational(-a.num_, a.den_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }

    // canonical form makes structural equality exact equality
    friend bool operator==(const Rational& a, const Rational& b) = default;

    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        // denominators are positive, so cross-multiplication preserves order
        return a.num_ * b.den_ <=> b.num_ * a.den_;
    }

    // serialized as "num/den", e.g. "3/2", "-1/12", "0/1"
    std::string to_string() const { return num_.to_string() + "/" + den_.to_string(); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& v) {
        return os << v.to_string();
    }

private:
    BigInt num_;
    BigInt den_;  // > 0

    void canonicalize() {
        if (num_.is_zero()) {
            den_ = BigInt(1);
            return;
        }
        if (den_.is_negative()) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = BigInt::gcd(num_, den_);
        if (!(g == BigInt(1))) {
            num_ = exact_div(num_, g, "gcd reduction");
            den_ = exact_div(den_, g, "gcd reduction");
        }
    }
};

}  // namespace twobridge
