#pragma once

/// The coefficient field: rational functions of the symbolic parameter w.
///
/// Canonical form, so that equality of values is equality of representation:
///   - numerator and denominator are ordinary polynomials (min exponent 0
///     for the pair, no common w power),
///   - coprime as polynomials over Q,
///   - jointly integer-primitive,
///   - the denominator's lowest-exponent coefficient is positive,
///   - zero is 0/1.

#include <qmock/errors.hpp>
#include <qmock/laurent.hpp>
#include <qmock/rational.hpp>

#include <string>
#include <utility>

namespace qmock {

class RationalFunction {
    LaurentPoly num_;
    LaurentPoly den_; // canonical, never zero

    RationalFunction(LaurentPoly n, LaurentPoly d, bool /*already_canonical*/)
        : num_(std::move(n)), den_(std::move(d)) {}

public:
    RationalFunction() : num_(), den_(LaurentPoly::one()) {}
    RationalFunction(const Rational& c) // NOLINT: implicit by design
        : num_(LaurentPoly(Rational(c.num()))), den_(LaurentPoly(Rational(c.den()))) {}
    RationalFunction(long long c) : RationalFunction(Rational(c)) {}

    /// Canonicalizing constructor from an arbitrary Laurent fraction.
    static RationalFunction normalized(const LaurentPoly& num, const LaurentPoly& den) {
        if (den.is_zero())
            throw DivisionByZero("rational function with zero denominator");
        if (num.is_zero())
            return RationalFunction();

        // Shift the pair so both are ordinary polynomials sharing no w factor.
        int shift = -std::min(num.min_exp(), den.min_exp());
        LaurentPoly n = num.shifted(shift);
        LaurentPoly d = den.shifted(shift);
        int strip = std::min(n.min_exp(), d.min_exp());
        if (strip > 0) {
            n = n.shifted(-strip);
            d = d.shifted(-strip);
        }

        LaurentPoly g = LaurentPoly::gcd(n, d);
        if (!g.is_constant()) {
            n = LaurentPoly::div_exact(n, g);
            d = LaurentPoly::div_exact(d, g);
        }

        // Joint integer-primitive scaling with positive denominator lead.
        Rational cn = n.content();
        Rational cd = d.content();
        BigInt gn = boost::multiprecision::gcd(cn.num(), cd.num());
        BigInt dl = cn.den() / boost::multiprecision::gcd(cn.den(), cd.den()) * cd.den();
        Rational joint(gn, dl);
        n = n.scaled(joint.inverse());
        d = d.scaled(joint.inverse());
        if (d.trailing_coeff().sign() < 0) {
            n = -n;
            d = -d;
        }
        return RationalFunction(std::move(n), std::move(d), true);
    }

    static RationalFunction from_laurent(const LaurentPoly& p) {
        return normalized(p, LaurentPoly::one());
    }
    static RationalFunction w_power(int e) {
        return normalized(LaurentPoly::monomial(Rational(1), e), LaurentPoly::one());
    }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == LaurentPoly::one() && den_ == LaurentPoly::one(); }
    bool is_rational() const { return num_.is_constant() && den_.is_constant(); }

    /// Constant value if the function is a plain rational, throws otherwise.
    Rational as_rational() const {
        if (!is_rational())
            throw PoleError("rational function is not constant: " + to_string());
        return num_.coeff(0) / den_.coeff(0);
    }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        if (a.den_ == b.den_)
            return normalized(a.num_ + b.num_, a.den_);
        return normalized(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        if (a.den_ == b.den_)
            return normalized(a.num_ - b.num_, a.den_);
        return normalized(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a) {
        return RationalFunction(-a.num_, a.den_, true);
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return normalized(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero())
            throw DivisionByZero("rational function division by zero");
        return normalized(a.num_ * b.den_, a.den_ * b.num_);
    }

    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    RationalFunction inverse() const {
        if (is_zero())
            throw DivisionByZero("inverse of zero rational function");
        return normalized(den_, num_);
    }

    RationalFunction pow(int e) const {
        if (e == 0)
            return RationalFunction(Rational(1));
        RationalFunction base = e > 0 ? *this : inverse();
        int k = e > 0 ? e : -e;
        RationalFunction acc(Rational(1));
        while (k) {
            if (k & 1)
                acc *= base;
            base *= base;
            k >>= 1;
        }
        return acc;
    }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
        return !(a == b);
    }

    /// Exact evaluation at w = x; throws PoleError on denominator roots
    /// (the "w must avoid q^l" style exclusions at the series level).
    Rational eval(const Rational& x) const {
        Rational d = den_.eval(x);
        if (d.is_zero())
            throw PoleError("pole of rational function at w = " + x.to_string());
        return num_.eval(x) / d;
    }

    /// w -> c * w^k, c nonzero.
    RationalFunction substituted(const Rational& c, int k) const {
        if (c.is_zero())
            throw DivisionByZero("substituting w = 0 into a rational function");
        return normalized(num_.substituted(c, k), den_.substituted(c, k));
    }

    std::string to_string() const {
        if (is_rational())
            return as_rational().to_string();
        if (den_ == LaurentPoly::one())
            return num_.to_string();
        return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
    }
};

} // namespace qmock
