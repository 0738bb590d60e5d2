#pragma once

/// The symbolic core: q-hypergeometric summand families and the passes that
/// turn them into truncated series.
///
///   - term_expand       direct termwise summation with a termination scan
///   - term_invert_q     the rewrite (a;1/q)_n = (1/a;q)_n (-a)^n q^{-n(n-1)/2}
///                       applied factor by factor, with all sign/monomial
///                       corrections folded back into the term
///   - term_substitute   w -> c*w^k at the term level
///   - poch_inf_expand   infinite Pochhammer products
///   - theta_expand      bilateral sums over all of Z
///   - appell_lerch_expand  the two bilateral sums with 1/(1-w q^n) kernels
///   - fine_expand       F(a,b;t) = sum (aq)_n/(bq)_n t^n, by direct summation
///                       when t carries a positive q power and by iterating
///                       the difference equation
///                       F(a,b;t) = (1-b)/(1-t) + (b-atq)/(1-t) F(a,b;tq)
///                       when it does not
///   - term_expand_stabilized  sums with a q-free geometric part gamma^n whose
///                       Pochhammer ratio stabilizes; the tail is split off
///                       against the infinite product and the geometric part
///                       is resummed as 1/(1-gamma)

#include <qmock/errors.hpp>
#include <qmock/oracles.hpp>
#include <qmock/qseries.hpp>

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace qmock {

// ---------------------------------------------------------------------------
// w evaluation context: fully symbolic, or a fixed rational value.

struct WContext {
    bool symbolic = true;
    Rational value;

    static WContext sym() { return WContext{}; }
    static WContext at(Rational v) { return WContext{false, std::move(v)}; }
};

inline RationalFunction w_power(const WContext& ctx, int e) {
    if (e == 0)
        return RationalFunction(Rational(1));
    if (ctx.symbolic)
        return RationalFunction::w_power(e);
    return RationalFunction(ctx.value.pow(e));
}

// ---------------------------------------------------------------------------
// Quadratic exponent polynomials c2*n^2 + c1*n + c0 with rational
// coefficients, integer-valued on the support they are used with.

struct ExpPoly {
    Rational c2, c1, c0;

    ExpPoly() = default;
    ExpPoly(Rational a2, Rational a1, Rational a0)
        : c2(std::move(a2)), c1(std::move(a1)), c0(std::move(a0)) {}

    static ExpPoly constant(Rational c) { return {Rational(0), Rational(0), std::move(c)}; }
    static ExpPoly linear(Rational a1, Rational a0) {
        return {Rational(0), std::move(a1), std::move(a0)};
    }

    bool is_zero() const { return c2.is_zero() && c1.is_zero() && c0.is_zero(); }
    bool is_linear() const { return c2.is_zero(); }

    Rational eval(long long n) const {
        Rational nn(n);
        return c2 * nn * nn + c1 * nn + c0;
    }

    /// Value at n, which must be an integer (support guarantees this for
    /// well-formed terms).
    int eval_int(long long n) const {
        Rational v = eval(n);
        if (!v.is_integer())
            throw DegenerateFactor("exponent polynomial is not integral at n = " +
                                   std::to_string(n));
        return static_cast<int>(v.num().convert_to<long long>());
    }

    friend ExpPoly operator+(const ExpPoly& a, const ExpPoly& b) {
        return {a.c2 + b.c2, a.c1 + b.c1, a.c0 + b.c0};
    }
    friend ExpPoly operator-(const ExpPoly& a) { return {-a.c2, -a.c1, -a.c0}; }
    ExpPoly scaled(const Rational& f) const { return {c2 * f, c1 * f, c0 * f}; }
};

// ---------------------------------------------------------------------------
// Kronecker characters restricting the support of a summand family.

enum class Character { none, chi12, chi12neg, chi3 };

inline int character_value(Character chi, long long n) {
    switch (chi) {
    case Character::none: return 1;
    case Character::chi12: return oracle::kronecker(12, n);
    case Character::chi12neg: return oracle::kronecker(-12, n);
    case Character::chi3: return oracle::kronecker(n, 3);
    }
    return 1;
}

inline std::string character_name(Character chi) {
    switch (chi) {
    case Character::none: return "none";
    case Character::chi12: return "chi12";
    case Character::chi12neg: return "chi_neg12";
    case Character::chi3: return "chi3";
    }
    return "none";
}

inline Character character_from_name(const std::string& s) {
    if (s == "none") return Character::none;
    if (s == "chi12") return Character::chi12;
    if (s == "chi_neg12") return Character::chi12neg;
    if (s == "chi3") return Character::chi3;
    throw UnknownName("unknown character: " + s);
}

// ---------------------------------------------------------------------------
// One Pochhammer factor (c * w^e * q^k ; (+-1) * q^s)_len, in the numerator
// or denominator, with length n + delta, or infinite.

struct PochFactor {
    int base_sign = 1;    // base is base_sign * q^base_pow
    int base_pow = 1;     // s >= 1
    Rational arg_const;   // c
    int arg_wexp = 0;     // e
    int arg_qexp = 0;     // k
    bool infinite = false;
    int len_delta = 0;    // length n + len_delta when finite
    bool denominator = false;
    int multiplicity = 1;

    static PochFactor num(Rational c, int e, int k, int s = 1, int delta = 0, int mult = 1) {
        return PochFactor{1, s, std::move(c), e, k, false, delta, false, mult};
    }
    static PochFactor den(Rational c, int e, int k, int s = 1, int delta = 0, int mult = 1) {
        return PochFactor{1, s, std::move(c), e, k, false, delta, true, mult};
    }
    static PochFactor inf_num(Rational c, int e, int k, int s = 1, int mult = 1) {
        return PochFactor{1, s, std::move(c), e, k, true, 0, false, mult};
    }
    static PochFactor inf_den(Rational c, int e, int k, int s = 1, int mult = 1) {
        return PochFactor{1, s, std::move(c), e, k, true, 0, true, mult};
    }
};

// ---------------------------------------------------------------------------
// A full summand family:
//   const * geom^n * (-1)^{sign(n)} * chi(n) * w^{wexp(n)} * q^{qexp(n)}
//     * prod of factors,   summed over n >= n_start on the support of chi.

struct HypergeometricTerm {
    Rational const_factor{1};
    Rational geom{1};          // rational base raised to the n-th power
    ExpPoly sign;              // contributes (-1)^{sign(n)}
    Character chi = Character::none;
    ExpPoly w_exp;             // linear, integer-valued on the support
    ExpPoly q_exp;             // quadratic, integer-valued on the support
    std::vector<PochFactor> factors;
    int n_start = 0;
};

// ---------------------------------------------------------------------------
// Factor (1 - c * w^e * (+-1)^j * q^o) as a series.

inline QSeries factor_series(const WContext& ctx, const Rational& c, int e, int o,
                             int sign_pow_j, int order) {
    QSeries s = QSeries::constant(RationalFunction(Rational(1)), order);
    Rational coef = -c;
    if (sign_pow_j % 2 != 0)
        coef = -coef;
    if (coef.is_zero())
        return s;
    return s + QSeries::monomial(RationalFunction(coef) * w_power(ctx, e), o, order);
}

/// Exact q-order of the n-th summand.  Finite numerator factors with
/// nonnegative argument q-order contribute nothing; arguments with negative
/// q-order (inverted-regime intermediates) contribute their principal part.
inline int term_min_qorder(const HypergeometricTerm& t, long long n) {
    int base = t.q_exp.eval_int(n);
    long long extra = 0;
    for (const auto& f : t.factors) {
        if (f.infinite) {
            if (f.arg_qexp < 0)
                throw DegenerateFactor("infinite factor with negative argument q-order");
            continue;
        }
        long long len = n + f.len_delta;
        for (long long j = 0; j < len; ++j) {
            long long o = f.arg_qexp + static_cast<long long>(f.base_pow) * j;
            if (o >= 0)
                break; // orders increase with j
            extra += (f.denominator ? -o : o) * f.multiplicity;
        }
    }
    return base + static_cast<int>(extra);
}

namespace detail {

inline int term_cap(const HypergeometricTerm& t, int order) {
    return 2 * std::max(order, 1) + 32 + t.n_start;
}

/// Scans min q-orders looking for three consecutive support points beyond
/// the target order with strictly increasing values; in-scope terms have
/// linear or quadratic order growth, so this certifies formal summability.
inline bool formally_summable(const HypergeometricTerm& t, int order) {
    int cap = term_cap(t, order);
    int consecutive = 0;
    long long last = std::numeric_limits<long long>::min();
    for (long long n = t.n_start; n <= cap; ++n) {
        if (character_value(t.chi, n) == 0)
            continue;
        long long m = term_min_qorder(t, n);
        if (m > order && m > last) {
            if (++consecutive >= 3)
                return true;
        } else {
            consecutive = (m > order) ? 1 : 0;
        }
        last = m;
    }
    return false;
}

/// The n-th summand as a series exact to absolute order N.
inline QSeries term_summand(const HypergeometricTerm& t, long long n, const WContext& ctx,
                            int order) {
    int chi = character_value(t.chi, n);
    if (chi == 0)
        return QSeries::zero(order);

    Rational scalar = t.const_factor * t.geom.pow(n) * Rational(chi);
    if (t.sign.eval_int(n) % 2 != 0)
        scalar = -scalar;
    if (scalar.is_zero())
        return QSeries::zero(order);

    int shift = t.q_exp.eval_int(n);

    // Negative-order factor arguments force extra working precision.
    long long slack = 0;
    for (const auto& f : t.factors) {
        if (f.infinite)
            continue;
        long long len = n + f.len_delta;
        for (long long j = 0; j < len; ++j) {
            long long o = f.arg_qexp + static_cast<long long>(f.base_pow) * j;
            if (o >= 0)
                break;
            slack += -o * f.multiplicity;
        }
    }
    int work = order - shift + 2 * static_cast<int>(slack);
    if (work < 0)
        return QSeries::zero(order);

    RationalFunction head = RationalFunction(scalar) * w_power(ctx, t.w_exp.eval_int(n));
    QSeries acc = QSeries::constant(head, work);
    QSeries den = QSeries::constant(RationalFunction(Rational(1)), work);
    bool den_trivial = true;

    for (const auto& f : t.factors) {
        long long len = f.infinite ? std::numeric_limits<long long>::max() : n + f.len_delta;
        for (int mult = 0; mult < f.multiplicity; ++mult) {
            for (long long j = 0; j < len; ++j) {
                long long o = f.arg_qexp + static_cast<long long>(f.base_pow) * j;
                if (o > work)
                    break;
                QSeries fac = factor_series(ctx, f.arg_const, f.arg_wexp, static_cast<int>(o),
                                            f.base_sign < 0 ? static_cast<int>(j) : 0, work);
                if (f.denominator) {
                    den = den * fac;
                    den_trivial = false;
                } else {
                    acc = acc * fac;
                }
            }
        }
    }
    if (!den_trivial)
        acc = acc * den.inverted();
    if (acc.order() < order - shift)
        throw BeyondTruncation("summand lost working precision");
    return acc.truncated(order - shift).shifted(shift).truncated(order);
}

} // namespace detail

/// Termwise expansion of a summand family to exact order N.  Stops once the
/// minimal q-order has left the window for good; terms whose q-order never
/// escapes are rejected.
inline QSeries term_expand(const HypergeometricTerm& t, const WContext& ctx, int order) {
    QSeries acc = QSeries::zero(order);
    int cap = detail::term_cap(t, order);
    int consecutive = 0;
    long long last = std::numeric_limits<long long>::min();
    for (long long n = t.n_start; n <= cap; ++n) {
        if (character_value(t.chi, n) == 0)
            continue;
        long long m = term_min_qorder(t, n);
        if (m > order && m > last) {
            if (++consecutive >= 3)
                return acc;
        } else {
            consecutive = (m > order) ? 1 : 0;
        }
        if (m <= order)
            acc = acc + detail::term_summand(t, n, ctx, order);
        last = m;
    }
    throw NotFormallySummable("summand q-order does not escape the truncation window");
}

// ---------------------------------------------------------------------------
// q -> 1/q rewrite.

namespace detail {

/// The rewrite without the summability gate; callers that can fall back to
/// resummation use this directly.
inline HypergeometricTerm invert_q_raw(const HypergeometricTerm& t) {
    HypergeometricTerm r;
    r.const_factor = t.const_factor;
    r.geom = t.geom;
    r.sign = t.sign;
    r.chi = t.chi;
    r.w_exp = t.w_exp;
    r.q_exp = -t.q_exp;
    r.n_start = t.n_start;

    for (const auto& f : t.factors) {
        if (f.infinite)
            throw NotInvertible("infinite Pochhammer factor has no monomial inversion");
        if (f.base_sign != 1)
            throw NotInvertible("negative Pochhammer base is not supported under q -> 1/q");
        if (f.arg_const.is_zero())
            throw NotInvertible("zero Pochhammer argument");

        PochFactor g = f;
        g.arg_const = f.arg_const.inverse();
        g.arg_wexp = -f.arg_wexp;
        g.arg_qexp = f.arg_qexp; // same magnitude, now a positive power of q
        r.factors.push_back(g);

        // (a; 1/q^s)_m = (1/a; q^s)_m (-a)^m (1/q^s)^{m(m-1)/2},  m = n + d,
        // with a = c w^e q^{-k} once the series variable is flipped.
        Rational gamma = -f.arg_const;
        int sgn = f.denominator ? -1 : 1;
        long long reps = f.multiplicity;
        Rational k(f.arg_qexp);
        Rational s(f.base_pow);
        Rational d(f.len_delta);
        Rational half(1, 2);

        r.geom = r.geom * gamma.pow(sgn * reps);
        r.const_factor = r.const_factor * gamma.pow(sgn * reps * f.len_delta);
        r.w_exp = r.w_exp +
                  ExpPoly::linear(Rational(f.arg_wexp), Rational(f.arg_wexp) * d)
                      .scaled(Rational(sgn * reps));
        // -k(n+d) - s (n+d)(n+d-1)/2 expanded in n:
        ExpPoly corr{-s * half,
                     -k - s * (Rational(2) * d - Rational(1)) * half,
                     -k * d - s * d * (d - Rational(1)) * half};
        r.q_exp = r.q_exp + corr.scaled(Rational(sgn * reps));
    }
    return r;
}

} // namespace detail

/// Rewrites a term so its expansion in q equals the original evaluated at
/// q -> 1/q.  Terms whose rewritten q-order cannot escape the window are
/// rejected here; they are usable only after resummation.
inline HypergeometricTerm term_invert_q(const HypergeometricTerm& t) {
    HypergeometricTerm r = detail::invert_q_raw(t);
    if (!detail::formally_summable(r, 8))
        throw NotFormallySummable("inverted term requires resummation");
    return r;
}

/// w -> c * w^k applied at the term level (c nonzero rational, k integer).
inline HypergeometricTerm term_substitute(const HypergeometricTerm& t, const Rational& c,
                                          int k) {
    if (c.is_zero())
        throw DegenerateFactor("substitution w -> 0 is not a monomial substitution");
    HypergeometricTerm r = t;
    r.w_exp = t.w_exp.scaled(Rational(k));
    if (c.sign() < 0)
        r.sign = t.sign + t.w_exp;
    Rational magnitude = c.abs();
    if (!magnitude.is_one()) {
        if (!t.w_exp.is_linear() || !t.w_exp.c1.is_integer() || !t.w_exp.c0.is_integer())
            throw DegenerateFactor("scaling substitution needs an integer-linear w exponent");
        r.geom = t.geom * magnitude.pow(t.w_exp.c1.num().convert_to<long long>());
        r.const_factor =
            t.const_factor * magnitude.pow(t.w_exp.c0.num().convert_to<long long>());
    }
    for (auto& f : r.factors) {
        f.arg_const = f.arg_const * c.pow(f.arg_wexp);
        f.arg_wexp = f.arg_wexp * k;
    }
    return r;
}

// ---------------------------------------------------------------------------
// Infinite Pochhammer products.

inline QSeries poch_inf_expand(const std::vector<PochFactor>& factors, const WContext& ctx,
                               int order) {
    QSeries num = QSeries::constant(RationalFunction(Rational(1)), order);
    QSeries den = num;
    bool have_den = false;
    for (const auto& f : factors) {
        if (f.arg_qexp < 0)
            throw DegenerateFactor("infinite product argument must have q-order >= 0");
        if (f.arg_qexp == 0 && f.arg_const.is_one() && f.arg_wexp == 0)
            throw DegenerateFactor("infinite product factor (1;q)_inf vanishes identically");
        for (int mult = 0; mult < f.multiplicity; ++mult) {
            for (long long j = 0;; ++j) {
                long long o = f.arg_qexp + static_cast<long long>(f.base_pow) * j;
                if (o > order)
                    break;
                QSeries fac = factor_series(ctx, f.arg_const, f.arg_wexp, static_cast<int>(o),
                                            f.base_sign < 0 ? static_cast<int>(j) : 0, order);
                if (f.denominator) {
                    den = den * fac;
                    have_den = true;
                } else {
                    num = num * fac;
                }
            }
        }
    }
    return have_den ? num * den.inverted() : num;
}

// ---------------------------------------------------------------------------
// Bilateral sums.

/// sum_{n in Z} c^n w^{e n} q^{A n^2 + B n}, A > 0.
inline QSeries theta_expand(const Rational& c, int e, const Rational& A, const Rational& B,
                            const WContext& ctx, int order) {
    if (!(Rational(0) < A))
        throw NotFormallySummable("bilateral sum needs a positive quadratic coefficient");
    if (c.is_zero())
        throw DegenerateFactor("bilateral sum with zero base");
    if (!(A + B).is_integer() || !(A - B).is_integer())
        throw DegenerateFactor("bilateral exponent is not integer-valued on Z");

    QSeries acc = QSeries::zero(order);
    auto exponent = [&](long long n) { return A * Rational(n) * Rational(n) + B * Rational(n); };
    auto add_point = [&](long long n) {
        Rational ev = exponent(n);
        int k = static_cast<int>(ev.num().convert_to<long long>());
        RationalFunction coeff = RationalFunction(c.pow(n)) * w_power(ctx, static_cast<int>(e * n));
        acc = acc + QSeries::monomial(coeff, k, order);
    };
    for (long long n = 0;; ++n) {
        Rational ev = exponent(n);
        if (Rational(order) < ev)
            break;
        add_point(n);
    }
    for (long long n = -1;; --n) {
        Rational ev = exponent(n);
        if (Rational(order) < ev)
            break;
        add_point(n);
    }
    return acc;
}

enum class AppellKind { rank, g3 };

/// sum_{n in Z} (-1)^n q^{(3n^2+n)/2} / (1 - w q^n)   (rank kind), or the
/// (3n^2+3n)/2 variant (g3 kind).  The n < 0 branch is rewritten through
/// 1/(1 - w q^{-m}) = -q^m/(w (1 - q^m/w)) so every summand is a genuine
/// q-series; n = 0 contributes the pure coefficient 1/(1-w).
inline QSeries appell_lerch_expand(AppellKind kind, const WContext& ctx, int order) {
    Rational A(3, 2);
    Rational B = (kind == AppellKind::rank) ? Rational(1, 2) : Rational(3, 2);
    auto exponent = [&](long long n) {
        Rational ev = A * Rational(n) * Rational(n) + B * Rational(n);
        return static_cast<int>(ev.num().convert_to<long long>());
    };

    QSeries acc = QSeries::zero(order);

    // n = 0: 1/(1-w).
    RationalFunction one_minus_w =
        RationalFunction(Rational(1)) - w_power(ctx, 1);
    if (one_minus_w.is_zero())
        throw PoleError("Appell-Lerch sum has a pole at w = 1");
    acc = acc + QSeries::constant(one_minus_w.inverse(), order);

    for (long long n = 1;; ++n) {
        int e0 = exponent(n);
        if (e0 > order)
            break;
        QSeries geo = QSeries::zero(order - e0);
        for (long long k = 0; n * k <= order - e0; ++k)
            geo = geo + QSeries::monomial(w_power(ctx, static_cast<int>(k)),
                                          static_cast<int>(n * k), order - e0);
        if (n % 2 != 0)
            geo = -geo;
        acc = acc + geo.shifted(e0).truncated(order);
    }
    for (long long n = -1;; --n) {
        long long m = -n;
        int e0 = exponent(n);
        if (e0 + m > order)
            break;
        QSeries geo = QSeries::zero(order - e0);
        for (long long k = 0; m * (k + 1) <= order - e0; ++k)
            geo = geo + QSeries::monomial(-w_power(ctx, static_cast<int>(-(k + 1))),
                                          static_cast<int>(m * (k + 1)), order - e0);
        if (n % 2 != 0)
            geo = -geo;
        acc = acc + geo.shifted(e0).truncated(order);
    }
    return acc;
}

// ---------------------------------------------------------------------------
// The basic hypergeometric series F(a,b;t) = sum_{n>=0} (aQ;Q)_n/(bQ;Q)_n t^n
// with Q = q^base.

struct Monomial {
    Rational c; // zero allowed: the zero monomial
    int wexp = 0;
    int qexp = 0;

    bool is_zero() const { return c.is_zero(); }
    Monomial times(const Monomial& o) const { return {c * o.c, wexp + o.wexp, qexp + o.qexp}; }
    Monomial times_qpow(int k) const { return {c, wexp, qexp + k}; }
};

inline QSeries monomial_series(const WContext& ctx, const Monomial& m, int order) {
    if (m.is_zero())
        return QSeries::zero(order);
    return QSeries::monomial(RationalFunction(m.c) * w_power(ctx, m.wexp), m.qexp, order);
}

enum class FinePath { automatic, direct, recurrence };

namespace detail {

inline QSeries one_minus(const WContext& ctx, const Monomial& m, int order) {
    return QSeries::constant(RationalFunction(Rational(1)), order) - monomial_series(ctx, m, order);
}

/// 1/(1 - m) for a monomial m: geometric series when m carries a positive
/// q power, scalar inverse otherwise.
inline QSeries geometric_inverse(const WContext& ctx, const Monomial& m, int order) {
    if (m.is_zero())
        return QSeries::constant(RationalFunction(Rational(1)), order);
    if (m.qexp > 0) {
        QSeries acc = QSeries::constant(RationalFunction(Rational(1)), order);
        RationalFunction step = RationalFunction(m.c) * w_power(ctx, m.wexp);
        RationalFunction coeff = step;
        for (int k = m.qexp; k <= order; k += m.qexp) {
            acc = acc + QSeries::monomial(coeff, k, order);
            coeff = coeff * step;
        }
        return acc;
    }
    if (m.qexp < 0)
        throw DegenerateFactor("geometric inverse of a negative q power");
    RationalFunction v = RationalFunction(Rational(1)) - RationalFunction(m.c) * w_power(ctx, m.wexp);
    if (v.is_zero())
        throw DegenerateFactor("vanishing factor 1 - t");
    return QSeries::constant(v.inverse(), order);
}

} // namespace detail

inline QSeries fine_expand(const Monomial& a, const Monomial& b, const Monomial& t, int base,
                           const WContext& ctx, int order, FinePath path = FinePath::automatic) {
    if (base < 1)
        throw DegenerateFactor("Pochhammer base must be a positive power of q");
    // Negative q powers in b would feed the closure error of the backward
    // iteration into ever lower orders, so all three monomials must carry
    // nonnegative q powers.
    if (!a.is_zero() && a.qexp < 0)
        throw DegenerateFactor("argument a must have q-order >= 0");
    if (!b.is_zero() && b.qexp < 0)
        throw DegenerateFactor("argument b must have q-order >= 0");
    if (t.is_zero())
        return QSeries::constant(RationalFunction(Rational(1)), order);
    if (t.qexp < 0)
        throw DegenerateFactor("t must have q-order >= 0");
    if (t.qexp == 0 && t.wexp == 0 && t.c.is_one())
        throw DegenerateFactor("F(a,b;t) is degenerate at t = 1");

    if (path == FinePath::automatic)
        path = (t.qexp >= 1) ? FinePath::direct : FinePath::recurrence;

    if (path == FinePath::direct) {
        if (t.qexp < 1)
            throw NotFormallySummable("direct summation needs t with positive q-order");
        QSeries acc = QSeries::constant(RationalFunction(Rational(1)), order);
        QSeries cur = acc;
        for (long long n = 1; n * t.qexp <= order; ++n) {
            cur = cur * detail::one_minus(ctx, a.times_qpow(base * static_cast<int>(n)), order);
            cur = cur * detail::geometric_inverse(ctx, b.times_qpow(base * static_cast<int>(n)),
                                                  order);
            cur = cur * monomial_series(ctx, t, order);
            cur = cur.truncated(order);
            acc = acc + cur;
        }
        return acc;
    }

    // Difference-equation path: iterate deep enough that the remaining
    // series is 1 + O(q^{order+1}); (t q^{base m})^n has q-order >= base*m*n.
    int depth = order / base + 1;
    while (t.qexp + base * depth <= order)
        ++depth;
    QSeries g = QSeries::constant(RationalFunction(Rational(1)), order);
    for (int m = depth - 1; m >= 0; --m) {
        Monomial tm = t.times_qpow(base * m);
        QSeries inv = detail::geometric_inverse(ctx, tm, order);
        QSeries first = detail::one_minus(ctx, b, order) * inv;
        QSeries second =
            (monomial_series(ctx, b, order) -
             monomial_series(ctx, a.times(t).times_qpow(base * (m + 1)), order)) *
            inv;
        g = (first + second * g).truncated(order);
    }
    return g;
}

// ---------------------------------------------------------------------------
// Stabilized-tail summation: sum_n gamma^n u_n with u_n a pure Pochhammer
// ratio that converges factorwise to its infinite product.  Used for sums
// whose geometric part carries no q power at all.

inline QSeries term_expand_stabilized(const HypergeometricTerm& t, const WContext& ctx,
                                      int order) {
    if (t.chi != Character::none || !t.sign.is_linear() || !t.w_exp.is_linear() ||
        !t.q_exp.is_linear() || t.n_start != 0)
        throw NotFormallySummable("summand family does not stabilize");
    for (const auto& f : t.factors)
        if (f.infinite || f.len_delta < 0 || f.arg_qexp < 0)
            throw NotFormallySummable("factor shape does not stabilize");
    if (!t.sign.c1.is_integer() || !t.sign.c0.is_integer() || !t.w_exp.c1.is_integer() ||
        !t.w_exp.c0.is_integer() || !t.q_exp.c1.is_integer() || !t.q_exp.c0.is_integer())
        throw NotFormallySummable("non-integer exponent data");

    auto int_of = [](const Rational& r) { return static_cast<int>(r.num().convert_to<long long>()); };

    Monomial gamma{t.geom, int_of(t.w_exp.c1), int_of(t.q_exp.c1)};
    if (t.sign.c1.num() % 2 != 0)
        gamma.c = -gamma.c;
    Monomial pref{t.const_factor, int_of(t.w_exp.c0), int_of(t.q_exp.c0)};
    if (t.sign.c0.num() % 2 != 0)
        pref.c = -pref.c;
    if (gamma.qexp < 0)
        throw NotFormallySummable("geometric part with negative q-order");

    int work = order + std::abs(pref.qexp);

    std::vector<PochFactor> inf_factors;
    for (const auto& f : t.factors) {
        PochFactor g = f;
        g.infinite = true;
        inf_factors.push_back(g);
    }
    QSeries u_inf = poch_inf_expand(inf_factors, ctx, work);

    QSeries acc = u_inf * detail::geometric_inverse(ctx, gamma, work);
    acc = acc.truncated(work);

    // u_0 and the incremental factor updates u_m -> u_{m+1}.
    QSeries u = QSeries::constant(RationalFunction(Rational(1)), work);
    for (const auto& f : t.factors) {
        for (int mult = 0; mult < f.multiplicity; ++mult) {
            for (int j = 0; j < f.len_delta; ++j) {
                Monomial arg{f.arg_const, f.arg_wexp, f.arg_qexp + f.base_pow * j};
                u = f.denominator ? (u * detail::geometric_inverse(ctx, arg, work)).truncated(work)
                                  : (u * detail::one_minus(ctx, arg, work)).truncated(work);
            }
        }
    }

    Monomial gpow{Rational(1), 0, 0};
    for (long long m = 0;; ++m) {
        long long tail_order = std::numeric_limits<long long>::max();
        for (const auto& f : t.factors)
            tail_order = std::min(tail_order, static_cast<long long>(f.arg_qexp) +
                                                  static_cast<long long>(f.base_pow) *
                                                      (m + f.len_delta));
        if (t.factors.empty())
            tail_order = work + 1;
        if (m * gamma.qexp + tail_order > work)
            break;

        QSeries diff = u - u_inf;
        acc = acc + (diff * monomial_series(ctx, gpow, work)).truncated(work);

        for (const auto& f : t.factors) {
            for (int mult = 0; mult < f.multiplicity; ++mult) {
                Monomial arg{f.arg_const, f.arg_wexp,
                             f.arg_qexp + f.base_pow * static_cast<int>(m + f.len_delta)};
                u = f.denominator ? (u * detail::geometric_inverse(ctx, arg, work)).truncated(work)
                                  : (u * detail::one_minus(ctx, arg, work)).truncated(work);
            }
        }
        gpow = gpow.times(gamma);
    }

    return (acc * monomial_series(ctx, pref, work)).truncated(order);
}

// ---------------------------------------------------------------------------
// Resummation router for rewritten terms whose raw q-order is flat: peel the
// fixed leading factors and match the remainder against F(a,b;t).

inline std::optional<QSeries> fine_route(const HypergeometricTerm& t, const WContext& ctx,
                                         int order) {
    if (t.chi != Character::none || t.n_start != 0)
        return std::nullopt;
    if (!t.sign.is_linear() || !t.w_exp.is_linear() || !t.q_exp.is_linear())
        return std::nullopt;
    if (!t.sign.c1.is_integer() || !t.sign.c0.is_integer() || !t.w_exp.c1.is_integer() ||
        !t.w_exp.c0.is_integer() || !t.q_exp.c1.is_integer() || !t.q_exp.c0.is_integer())
        return std::nullopt;

    auto int_of = [](const Rational& r) { return static_cast<int>(r.num().convert_to<long long>()); };

    int base = 0;
    std::optional<Monomial> num_arg, den_arg;
    std::vector<std::pair<Monomial, bool>> peeled; // (argument, denominator?)
    for (const auto& f : t.factors) {
        if (f.infinite || f.base_sign != 1 || f.multiplicity != 1 || f.len_delta < 0 ||
            f.len_delta > 1)
            return std::nullopt;
        if (base == 0)
            base = f.base_pow;
        else if (base != f.base_pow)
            return std::nullopt;
        Monomial arg{f.arg_const, f.arg_wexp, f.arg_qexp};
        if (f.len_delta == 1) {
            peeled.emplace_back(arg, f.denominator);
            arg = arg.times_qpow(f.base_pow);
        }
        auto& slot = f.denominator ? den_arg : num_arg;
        if (slot.has_value())
            return std::nullopt;
        slot = arg;
    }
    if (base == 0)
        base = 1;

    Monomial tm{t.geom, int_of(t.w_exp.c1), int_of(t.q_exp.c1)};
    if (t.sign.c1.num() % 2 != 0)
        tm.c = -tm.c;
    Monomial pref{t.const_factor, int_of(t.w_exp.c0), int_of(t.q_exp.c0)};
    if (t.sign.c0.num() % 2 != 0)
        pref.c = -pref.c;
    if (tm.is_zero() || tm.qexp < 0)
        return std::nullopt;

    Monomial a = num_arg ? num_arg->times_qpow(-base) : Monomial{Rational(0), 0, 0};
    Monomial b = den_arg ? den_arg->times_qpow(-base) : Monomial{Rational(0), 0, 0};
    if ((!a.is_zero() && a.qexp < 0) || (!b.is_zero() && b.qexp < 0))
        return std::nullopt;

    int work = order + std::abs(pref.qexp);
    QSeries acc = fine_expand(a, b, tm, base, ctx, work);
    for (const auto& [arg, in_den] : peeled) {
        acc = in_den ? (acc * detail::geometric_inverse(ctx, arg, work)).truncated(work)
                     : (acc * detail::one_minus(ctx, arg, work)).truncated(work);
    }
    return (acc * monomial_series(ctx, pref, work)).truncated(order);
}

/// Direct expansion when the term is summable, the Fine-shift route when it
/// is not, and a hard error otherwise.
inline QSeries term_expand_auto(const HypergeometricTerm& t, const WContext& ctx, int order) {
    if (detail::formally_summable(t, order))
        return term_expand(t, ctx, order);
    if (auto routed = fine_route(t, ctx, order))
        return *routed;
    throw NotFormallySummable("summand family is not summable in this regime");
}

} // namespace qmock
