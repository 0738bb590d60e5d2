#pragma once

/// Truncated Laurent series in q over RationalFunction coefficients.
///
/// `order` is the guarantee: every coefficient of q^k with k <= order is
/// exact (zeros are simply not stored).  `min_order` is kept tight: it is
/// the smallest stored exponent, or order+1 for a series that is zero as
/// far as it is known.  Multiplication propagates validity with
///     order(a*b) = min(a.order + b.min_order, b.order + a.min_order)
/// so shifted factors never silently claim unverified coefficients.

#include <qmock/errors.hpp>
#include <qmock/rational_function.hpp>

#include <map>
#include <optional>
#include <string>

namespace qmock {

class QSeries {
    std::map<int, RationalFunction> c_;
    int order_ = 0;
    int min_order_ = 1;

    void normalize() {
        for (auto it = c_.begin(); it != c_.end();) {
            if (it->first > order_ || it->second.is_zero())
                it = c_.erase(it);
            else
                ++it;
        }
        min_order_ = c_.empty() ? order_ + 1 : c_.begin()->first;
    }

public:
    explicit QSeries(int order = 0) : order_(order), min_order_(order + 1) {}

    static QSeries zero(int order) { return QSeries(order); }

    static QSeries constant(const RationalFunction& v, int order) {
        return monomial(v, 0, order);
    }

    static QSeries monomial(const RationalFunction& v, int k, int order) {
        QSeries s(order);
        if (!v.is_zero() && k <= order)
            s.c_[k] = v;
        s.normalize();
        return s;
    }

    int order() const { return order_; }
    int min_order() const { return min_order_; }
    const std::map<int, RationalFunction>& coeffs() const { return c_; }
    bool known_zero() const { return c_.empty(); }

    /// Exact coefficient of q^k; beyond the tracked order it is unknown.
    RationalFunction coeff(int k) const {
        if (k > order_)
            throw BeyondTruncation("coefficient of q^" + std::to_string(k) +
                                   " beyond tracked order " + std::to_string(order_));
        auto it = c_.find(k);
        return it == c_.end() ? RationalFunction() : it->second;
    }

    void set_coeff(int k, const RationalFunction& v) {
        if (k > order_)
            return;
        if (v.is_zero())
            c_.erase(k);
        else
            c_[k] = v;
        normalize();
    }

    friend QSeries operator+(const QSeries& a, const QSeries& b) {
        QSeries r(std::min(a.order_, b.order_));
        r.c_ = a.c_;
        for (const auto& [k, v] : b.c_) {
            auto it = r.c_.find(k);
            if (it == r.c_.end())
                r.c_[k] = v;
            else
                it->second += v;
        }
        r.normalize();
        return r;
    }

    friend QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }

    friend QSeries operator-(const QSeries& a) {
        QSeries r(a.order_);
        for (const auto& [k, v] : a.c_)
            r.c_[k] = -v;
        r.normalize();
        return r;
    }

    friend QSeries operator*(const QSeries& a, const QSeries& b) {
        long long oa = static_cast<long long>(a.order_) + b.min_order_;
        long long ob = static_cast<long long>(b.order_) + a.min_order_;
        int order = static_cast<int>(std::min(oa, ob));
        QSeries r(order);
        for (const auto& [k1, v1] : a.c_) {
            for (const auto& [k2, v2] : b.c_) {
                if (k1 + k2 > order)
                    break; // inner map is ordered
                auto it = r.c_.find(k1 + k2);
                if (it == r.c_.end())
                    r.c_[k1 + k2] = v1 * v2;
                else
                    it->second += v1 * v2;
            }
        }
        r.normalize();
        return r;
    }

    QSeries scaled(const RationalFunction& v) const {
        QSeries r(order_);
        if (!v.is_zero())
            for (const auto& [k, c] : c_)
                r.c_[k] = c * v;
        r.normalize();
        return r;
    }

    QSeries shifted(int k) const {
        QSeries r(order_ + k);
        for (const auto& [e, c] : c_)
            r.c_[e + k] = c;
        r.normalize();
        return r;
    }

    /// Multiplicative inverse of a unit Laurent series: the coefficient at
    /// min_order must be nonzero.  The result is exact up to
    /// order - 2*min_order.
    QSeries inverted() const {
        if (c_.empty())
            throw NotInvertible("inverting a series that is zero to its tracked order");
        int m = min_order_;
        const RationalFunction lead = c_.begin()->second;
        int rel_order = order_ - m; // valid relative orders of the unit part
        QSeries inv_unit(rel_order);
        RationalFunction lead_inv = lead.inverse();
        inv_unit.c_[0] = lead_inv;
        for (int k = 1; k <= rel_order; ++k) {
            RationalFunction acc;
            for (const auto& [j, v] : c_) {
                int rel = j - m;
                if (rel == 0)
                    continue;
                if (rel > k)
                    break;
                auto it = inv_unit.c_.find(k - rel);
                if (it != inv_unit.c_.end())
                    acc += v * it->second;
            }
            if (!acc.is_zero())
                inv_unit.c_[k] = -(lead_inv * acc);
        }
        inv_unit.normalize();
        return inv_unit.shifted(-m);
    }

    /// q -> -q: flips the sign of odd-exponent coefficients.
    QSeries negated_q() const {
        QSeries r(order_);
        for (const auto& [k, v] : c_)
            r.c_[k] = (k % 2 != 0) ? -v : v;
        r.normalize();
        return r;
    }

    /// q -> q^m (m >= 1).  Exponent k maps to m*k; the result is valid up
    /// to m*order + (m-1) because skipped residues are identically zero.
    QSeries q_power(int m) const {
        if (m < 1)
            throw UnknownName("q -> q^m requires m >= 1");
        QSeries r(order_ * m + (m - 1));
        for (const auto& [k, v] : c_)
            r.c_[k * m] = v;
        r.normalize();
        return r;
    }

    /// Restricts the guarantee to exactly N (requires order >= N).
    QSeries truncated(int n) const {
        if (order_ < n)
            throw BeyondTruncation("series valid only to order " + std::to_string(order_) +
                                   ", requested " + std::to_string(n));
        QSeries r(n);
        for (const auto& [k, v] : c_) {
            if (k > n)
                break;
            r.c_[k] = v;
        }
        r.normalize();
        return r;
    }

    struct Mismatch {
        int q_power;
        RationalFunction lhs, rhs;
    };

    /// First differing coefficient with exponent <= upto, if any.
    static std::optional<Mismatch> first_mismatch(const QSeries& a, const QSeries& b, int upto) {
        if (a.order_ < upto || b.order_ < upto)
            throw BeyondTruncation("comparison beyond tracked order");
        int lo = std::min(a.min_order_, b.min_order_);
        for (int k = lo; k <= upto; ++k) {
            RationalFunction ca = a.coeff(k);
            RationalFunction cb = b.coeff(k);
            if (ca != cb)
                return Mismatch{k, ca, cb};
        }
        return std::nullopt;
    }

    std::string to_string() const {
        if (c_.empty())
            return "0";
        std::string out;
        bool first = true;
        for (const auto& [k, v] : c_) {
            std::string coeff_part;
            bool neg = false;
            if (v.is_rational()) {
                Rational r = v.as_rational();
                neg = r.sign() < 0;
                Rational mag = r.abs();
                if (k == 0)
                    coeff_part = mag.to_string();
                else if (!mag.is_one())
                    coeff_part = mag.to_string() + "*";
            } else {
                coeff_part = "(" + v.to_string() + ")";
                if (k != 0)
                    coeff_part += "*";
            }
            if (first) {
                if (neg)
                    out += "-";
                first = false;
            } else {
                out += neg ? " - " : " + ";
            }
            out += coeff_part;
            if (k != 0) {
                out += "q";
                if (k != 1)
                    out += "^" + std::to_string(k);
            }
        }
        return out;
    }
};

} // namespace qmock
