#pragma once

/// Sparse Laurent polynomials in the symbolic parameter w with Rational
/// coefficients.  Exponents may be negative; the zero polynomial is the
/// empty map.  These carry the w-monomials and rank polynomials coming out
/// of series expansions, and serve as numerators/denominators of
/// RationalFunction after an exponent shift.

#include <qmock/errors.hpp>
#include <qmock/rational.hpp>

#include <map>
#include <string>
#include <vector>

namespace qmock {

class LaurentPoly {
    std::map<int, Rational> terms_; // exponent -> nonzero coefficient

    void set(int e, Rational c) {
        if (c.is_zero())
            terms_.erase(e);
        else
            terms_[e] = std::move(c);
    }

public:
    LaurentPoly() = default;
    explicit LaurentPoly(const Rational& c) {
        if (!c.is_zero())
            terms_[0] = c;
    }

    static LaurentPoly monomial(const Rational& c, int e) {
        LaurentPoly p;
        if (!c.is_zero())
            p.terms_[e] = c;
        return p;
    }
    static LaurentPoly one() { return LaurentPoly(Rational(1)); }

    const std::map<int, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
    }

    Rational coeff(int e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    int min_exp() const { return terms_.empty() ? 0 : terms_.begin()->first; }
    int max_exp() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

    const Rational& leading_coeff() const {
        static const Rational zero(0);
        return terms_.empty() ? zero : terms_.rbegin()->second;
    }

    /// Coefficient of the lowest-exponent term (the first one rendered).
    const Rational& trailing_coeff() const {
        static const Rational zero(0);
        return terms_.empty() ? zero : terms_.begin()->second;
    }

    LaurentPoly shifted(int k) const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_)
            r.terms_[e + k] = c;
        return r;
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r = a;
        for (const auto& [e, c] : b.terms_)
            r.set(e, r.coeff(e) + c);
        return r;
    }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r = a;
        for (const auto& [e, c] : b.terms_)
            r.set(e, r.coeff(e) - c);
        return r;
    }
    friend LaurentPoly operator-(const LaurentPoly& a) {
        LaurentPoly r;
        for (const auto& [e, c] : a.terms_)
            r.terms_[e] = -c;
        return r;
    }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [e1, c1] : a.terms_)
            for (const auto& [e2, c2] : b.terms_)
                r.set(e1 + e2, r.coeff(e1 + e2) + c1 * c2);
        return r;
    }

    LaurentPoly scaled(const Rational& c) const {
        LaurentPoly r;
        if (c.is_zero())
            return r;
        for (const auto& [e, k] : terms_)
            r.terms_[e] = k * c;
        return r;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    /// w -> c * w^k applied termwise.
    LaurentPoly substituted(const Rational& c, int k) const {
        LaurentPoly r;
        for (const auto& [e, co] : terms_)
            r.set(k * e, r.coeff(k * e) + co * c.pow(e));
        return r;
    }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (const auto& [e, c] : terms_) {
            if (e < 0 && x.is_zero())
                throw PoleError("evaluating negative power at 0");
            acc += c * x.pow(e);
        }
        return acc;
    }

    /// Rational content: the positive rational g with (*this)/g integral and
    /// primitive.  Zero polynomial has content 1.
    Rational content() const {
        if (terms_.empty())
            return Rational(1);
        BigInt num_gcd = 0, den_lcm = 1;
        for (const auto& [e, c] : terms_) {
            num_gcd = boost::multiprecision::gcd(num_gcd, boost::multiprecision::abs(c.num()));
            den_lcm = den_lcm / boost::multiprecision::gcd(den_lcm, c.den()) * c.den();
        }
        return Rational(num_gcd, den_lcm);
    }

    // --- ordinary-polynomial helpers (exponents assumed >= 0) -------------

    /// Dense integer coefficient vector of the primitive part, degree order.
    /// Requires min_exp() >= 0.
    std::vector<BigInt> primitive_int_coeffs() const {
        std::vector<BigInt> v(static_cast<size_t>(max_exp()) + 1, BigInt(0));
        Rational cont = content();
        for (const auto& [e, c] : terms_) {
            Rational t = c / cont;
            v[static_cast<size_t>(e)] = t.num(); // t integral after content division
        }
        return v;
    }

    static LaurentPoly from_int_coeffs(const std::vector<BigInt>& v) {
        LaurentPoly p;
        for (size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0)
                p.terms_[static_cast<int>(i)] = Rational(v[i]);
        return p;
    }

    /// Exact division (throws if the remainder is nonzero).  Both operands
    /// ordinary polynomials, divisor nonzero.
    static LaurentPoly div_exact(const LaurentPoly& a, const LaurentPoly& b) {
        if (b.is_zero())
            throw DivisionByZero("polynomial division by zero");
        LaurentPoly rem = a, quot;
        int db = b.max_exp();
        const Rational& lb = b.leading_coeff();
        while (!rem.is_zero() && rem.max_exp() >= db) {
            int e = rem.max_exp() - db;
            Rational c = rem.leading_coeff() / lb;
            quot.set(e, quot.coeff(e) + c);
            rem = rem - b.shifted(e).scaled(c);
        }
        if (!rem.is_zero())
            throw DivisionByZero("polynomial division is not exact");
        return quot;
    }

    /// Monic-free gcd of two ordinary polynomials, computed over the
    /// integers with a primitive PRS.  Result is integer-primitive with
    /// positive leading coefficient (1 for coprime inputs).
    static LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

    std::string to_string() const;
};

namespace detail {

inline int int_deg(const std::vector<BigInt>& v) {
    for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i)
        if (v[static_cast<size_t>(i)] != 0)
            return i;
    return -1;
}

inline void int_make_primitive(std::vector<BigInt>& v) {
    BigInt g = 0;
    for (const auto& c : v)
        g = boost::multiprecision::gcd(g, boost::multiprecision::abs(c));
    if (g > 1)
        for (auto& c : v)
            c /= g;
    int d = int_deg(v);
    if (d >= 0 && v[static_cast<size_t>(d)] < 0)
        for (auto& c : v)
            c = -c;
}

/// Pseudo-remainder of a by b (b nonzero), in place on a copy.
inline std::vector<BigInt> int_prem(std::vector<BigInt> a, const std::vector<BigInt>& b) {
    int db = int_deg(b);
    const BigInt& lb = b[static_cast<size_t>(db)];
    int da = int_deg(a);
    while (da >= db) {
        BigInt la = a[static_cast<size_t>(da)];
        for (auto& c : a)
            c *= lb;
        for (int i = 0; i <= db; ++i)
            a[static_cast<size_t>(da - db + i)] -= la * b[static_cast<size_t>(i)];
        int nd = int_deg(a);
        if (nd == da) // cancellation must reduce the degree
            a[static_cast<size_t>(da)] = 0;
        da = int_deg(a);
    }
    return a;
}

} // namespace detail

inline LaurentPoly LaurentPoly::gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() && b.is_zero())
        return LaurentPoly();
    if (a.is_zero())
        return from_int_coeffs([&] { auto v = b.primitive_int_coeffs(); detail::int_make_primitive(v); return v; }());
    if (b.is_zero())
        return from_int_coeffs([&] { auto v = a.primitive_int_coeffs(); detail::int_make_primitive(v); return v; }());

    std::vector<BigInt> A = a.primitive_int_coeffs();
    std::vector<BigInt> B = b.primitive_int_coeffs();
    if (detail::int_deg(A) < detail::int_deg(B))
        std::swap(A, B);
    while (detail::int_deg(B) >= 0) {
        std::vector<BigInt> R = detail::int_prem(A, B);
        detail::int_make_primitive(R);
        A = std::move(B);
        B = std::move(R);
    }
    detail::int_make_primitive(A);
    return from_int_coeffs(A);
}

inline std::string LaurentPoly::to_string() const {
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational mag = c.abs();
        bool neg = c.sign() < 0;
        if (first) {
            if (neg)
                out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        std::string coeff_str = mag.to_string();
        if (e == 0) {
            out += coeff_str;
        } else {
            if (!mag.is_one())
                out += coeff_str + "*";
            out += "w";
            if (e != 1)
                out += "^" + std::to_string(e);
        }
    }
    return out;
}

} // namespace qmock
