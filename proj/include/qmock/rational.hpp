#pragma once

/// Exact rational arithmetic over arbitrary-precision integers.
///
/// Invariants: denominator > 0, gcd(|num|, den) = 1, zero is 0/1.
/// Equality is therefore plain member comparison.

#include <qmock/errors.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>

namespace qmock {

using BigInt = boost::multiprecision::cpp_int;

class Rational {
    BigInt num_;
    BigInt den_; // always > 0

    void canonicalize() {
        if (den_ == 0)
            throw DivisionByZero("rational with zero denominator");
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = boost::multiprecision::gcd(boost::multiprecision::abs(num_), den_);
        if (g != 1) {
            num_ /= g;
            den_ /= g;
        }
    }

public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {} // NOLINT: implicit by design
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { canonicalize(); }
    Rational(long long n, long long d) : num_(n), den_(d) { canonicalize(); }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

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
        if (b.num_ == 0)
            throw DivisionByZero("rational division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }

    Rational inverse() const {
        if (num_ == 0)
            throw DivisionByZero("inverse of zero");
        return Rational(den_, num_);
    }

    Rational abs() const { return num_ < 0 ? -*this : *this; }

    /// Integer power; negative exponents require a nonzero base.
    Rational pow(long long e) const {
        if (e == 0)
            return Rational(1);
        Rational base = e > 0 ? *this : inverse();
        unsigned long long k = e > 0 ? static_cast<unsigned long long>(e)
                                     : static_cast<unsigned long long>(-e);
        Rational acc(1);
        while (k) {
            if (k & 1ULL)
                acc *= base;
            base *= base;
            k >>= 1ULL;
        }
        return acc;
    }

    std::string to_string() const {
        std::string s = num_.str();
        if (den_ != 1)
            s += "/" + den_.str();
        return s;
    }

    /// Parses "p", "-p", "p/q".
    static Rational parse(const std::string& text) {
        auto slash = text.find('/');
        try {
            if (slash == std::string::npos)
                return Rational(BigInt(text));
            return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
        } catch (const std::exception&) {
            throw UnknownName("cannot parse rational: '" + text + "'");
        }
    }
};

inline Rational frac(long long n, long long d) { return Rational(n, d); }

} // namespace qmock
