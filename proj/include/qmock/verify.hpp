#pragma once

/// Identity registry and verification harness.  Each identity carries two
/// series recipes; verification expands both to the requested order and
/// compares coefficients exactly — as canonical rational functions of w in
/// symbolic mode, at seeded rational substitutions for the extra parameters
/// in sampled mode.

#include <qmock/catalog.hpp>

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace qmock {

using ParamMap = std::map<std::string, Rational>;

struct EvalCtx {
    WContext w;
    int order = 0;
    const ParamMap* params = nullptr;

    Rational param(const std::string& key) const {
        if (params == nullptr)
            throw UnknownName("identity expects sampled parameter '" + key + "'");
        auto it = params->find(key);
        if (it == params->end())
            throw UnknownName("missing sampled parameter '" + key + "'");
        return it->second;
    }
};

using Side = std::function<QSeries(const Catalog&, const EvalCtx&)>;

enum class VerifyMode { symbolic, sampled };

inline std::string verify_mode_name(VerifyMode m) {
    return m == VerifyMode::symbolic ? "symbolic-w" : "sampled";
}

struct Identity {
    std::string id;
    std::string anchor;
    VerifyMode mode = VerifyMode::symbolic;
    std::vector<std::string> extra_params;
    std::function<bool(const ParamMap&)> admissible; // may be empty
    std::vector<std::string> deps;                   // catalog entries exercised
    Side lhs, rhs;
};

struct Mismatch {
    int q_power = 0;
    std::string lhs, rhs;
};

struct Report {
    std::string id;
    std::string mode;
    int order = 0;
    int seed = 0;
    std::vector<ParamMap> samples;
    std::string status; // pass | fail | error
    std::optional<Mismatch> mismatch;
    std::string error;
    double elapsed_ms = 0.0;
};

class Registry {
    std::vector<Identity> ids_;

public:
    void add(Identity i) { ids_.push_back(std::move(i)); }
    const std::vector<Identity>& identities() const { return ids_; }

    const Identity& find(const std::string& id) const {
        for (const auto& i : ids_)
            if (i.id == id)
                return i;
        throw UnknownName("unknown identity: " + id);
    }
    bool contains(const std::string& id) const {
        for (const auto& i : ids_)
            if (i.id == id)
                return true;
        return false;
    }

    static Registry standard();
};

// ---------------------------------------------------------------------------
// Sampling.

/// Rational sample pool; 0 and +-1 are deliberately absent so q^0 parameter
/// exclusions hold automatically.
inline const std::vector<Rational>& sample_pool() {
    static const std::vector<Rational> pool = [] {
        std::vector<Rational> p;
        const long long nums[][2] = {{1, 3},  {2, 5},  {3, 2}, {1, 2}, {2, 3},
                                     {5, 2},  {3, 4},  {4, 3}, {2, 7}, {5, 3},
                                     {1, 4},  {7, 2},  {3, 5}, {5, 4}, {4, 7}};
        for (auto [n, d] : nums) {
            p.emplace_back(n, d);
            p.emplace_back(-n, d);
        }
        return p;
    }();
    return pool;
}

namespace detail {

inline uint64_t fnv1a(const std::string& s) {
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

inline ParamMap draw_params(const Identity& ident, std::mt19937_64& rng) {
    const auto& pool = sample_pool();
    std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
    for (int attempt = 0; attempt < 256; ++attempt) {
        ParamMap params;
        for (const auto& name : ident.extra_params)
            params[name] = pool[pick(rng)];
        if (!ident.admissible || ident.admissible(params))
            return params;
    }
    throw UnknownName("no admissible sample found for identity " + ident.id);
}

} // namespace detail

// ---------------------------------------------------------------------------
// Verification.

inline Report verify_identity(const Catalog& cat, const Registry& reg, const std::string& id,
                              int order, int samples, int seed) {
    const Identity& ident = reg.find(id);
    Report report;
    report.id = ident.id;
    report.mode = verify_mode_name(ident.mode);
    report.order = order;
    report.seed = seed;

    auto t0 = std::chrono::steady_clock::now();
    try {
        if (ident.mode == VerifyMode::symbolic) {
            EvalCtx ctx{WContext::sym(), order, nullptr};
            QSeries lhs = ident.lhs(cat, ctx).truncated(order);
            QSeries rhs = ident.rhs(cat, ctx).truncated(order);
            auto mm = QSeries::first_mismatch(lhs, rhs, order);
            if (mm) {
                report.status = "fail";
                report.mismatch =
                    Mismatch{mm->q_power, mm->lhs.to_string(), mm->rhs.to_string()};
            } else {
                report.status = "pass";
            }
        } else {
            std::mt19937_64 rng(static_cast<uint64_t>(seed) ^ detail::fnv1a(ident.id));
            report.status = "pass";
            for (int s = 0; s < samples; ++s) {
                ParamMap params = detail::draw_params(ident, rng);
                report.samples.push_back(params);
                EvalCtx ctx{WContext::sym(), order, &params};
                QSeries lhs = ident.lhs(cat, ctx).truncated(order);
                QSeries rhs = ident.rhs(cat, ctx).truncated(order);
                auto mm = QSeries::first_mismatch(lhs, rhs, order);
                if (mm) {
                    report.status = "fail";
                    report.mismatch =
                        Mismatch{mm->q_power, mm->lhs.to_string(), mm->rhs.to_string()};
                    break;
                }
            }
        }
    } catch (const std::exception& e) {
        report.status = "error";
        report.error = e.what();
    }
    auto t1 = std::chrono::steady_clock::now();
    report.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return report;
}

inline std::vector<Report> verify_all(const Catalog& cat, const Registry& reg, int order,
                                      int samples, int seed) {
    std::vector<Report> out;
    out.reserve(reg.identities().size());
    for (const auto& ident : reg.identities())
        out.push_back(verify_identity(cat, reg, ident.id, order, samples, seed));
    return out;
}

inline std::vector<std::tuple<std::string, std::string, std::string>>
list_identities(const Registry& reg) {
    std::vector<std::tuple<std::string, std::string, std::string>> out;
    for (const auto& i : reg.identities())
        out.emplace_back(i.id, i.anchor, verify_mode_name(i.mode));
    return out;
}

// ---------------------------------------------------------------------------
// The standard registry.

namespace regdetail {

using builders::lin;
using builders::quad;
using builders::term;

inline RationalFunction W() { return RationalFunction::w_power(1); }
inline RationalFunction Winv() { return RationalFunction::w_power(-1); }
inline RationalFunction rfc(long long n) { return RationalFunction(Rational(n)); }

inline QSeries cst(const RationalFunction& v, const EvalCtx& x) {
    RationalFunction c = x.w.symbolic ? v : RationalFunction(v.eval(x.w.value));
    return QSeries::constant(c, x.order);
}

inline QSeries entry(const Catalog& c, const std::string& n, const EvalCtx& x,
                     WSub sub = WSub{}) {
    return expand_entry(c, n, sub, x.w, x.order);
}
inline QSeries entry_inv(const Catalog& c, const std::string& n, const EvalCtx& x,
                         WSub sub = WSub{}) {
    return expand_entry_inverted(c, n, sub, x.w, x.order);
}
inline QSeries entry_at(const Catalog& c, const std::string& n, const Rational& w, int order) {
    return catalog_series(c, n, WContext::at(w), order);
}

inline QSeries texp(const HypergeometricTerm& t, const EvalCtx& x) {
    return term_expand(t, x.w, x.order);
}

inline QSeries prod(std::vector<PochFactor> fs, const EvalCtx& x) {
    return poch_inf_expand(fs, x.w, x.order);
}

inline QSeries scale_rf(const QSeries& s, const RationalFunction& v, const EvalCtx& x) {
    RationalFunction c = x.w.symbolic ? v : RationalFunction(v.eval(x.w.value));
    return s.scaled(c);
}

} // namespace regdetail

inline Registry Registry::standard() {
    using namespace regdetail;
    Registry reg;

    auto sym = [&](std::string id, std::string anchor, std::vector<std::string> deps, Side lhs,
                   Side rhs) {
        Identity i;
        i.id = std::move(id);
        i.anchor = std::move(anchor);
        i.mode = VerifyMode::symbolic;
        i.deps = std::move(deps);
        i.lhs = std::move(lhs);
        i.rhs = std::move(rhs);
        reg.add(std::move(i));
    };

    // --- the motivating example chain -------------------------------------

    sym("rogers-1.1", "Rogers: sum_{n>=0} (-1)^n q^(n(n+1)/2)/(-q;q)_n = psi(q)", {"psi"},
        [](const Catalog&, const EvalCtx& x) {
            return texp(term(Rational(1), Rational(1), lin(1, 0), Character::none, ExpPoly{},
                             quad(frac(1, 2), frac(1, 2), 0),
                             {PochFactor::den(Rational(-1), 0, 1)}, 0),
                        x);
        },
        [](const Catalog& c, const EvalCtx& x) { return entry(c, "psi", x); });

    sym("false-theta-form", "psi(q) = sum_{n>=0} q^(n(3n+1)/2) (1 - q^(2n+1))", {"psi"},
        [](const Catalog& c, const EvalCtx& x) { return entry(c, "psi", x); },
        [](const Catalog&, const EvalCtx& x) {
            return texp(term(Rational(1), Rational(1), ExpPoly{}, Character::none, ExpPoly{},
                             quad(frac(3, 2), frac(1, 2), 0), {}, 0),
                        x) +
                   texp(term(Rational(-1), Rational(1), ExpPoly{}, Character::none, ExpPoly{},
                             quad(frac(3, 2), frac(5, 2), 1), {}, 0),
                        x);
        });

    sym("durfee", "R(1;q) = (q;q)_inf^-1", {"R"},
        [](const Catalog& c, const EvalCtx& x) { return entry_at(c, "R", Rational(1), x.order); },
        [](const Catalog&, const EvalCtx& x) {
            return prod({PochFactor::inf_den(Rational(1), 0, 1)}, x);
        });

    sym("f-eq-fstar", "f(q) = fstar(q)", {"f", "fstar"},
        [](const Catalog& c, const EvalCtx& x) { return entry(c, "f", x); },
        [](const Catalog& c, const EvalCtx& x) { return entry(c, "fstar", x); });

    sym("fstar-inv", "fstar(1/q) = 2 psi(q)", {"fstar", "psi"},
        [](const Catalog& c, const EvalCtx& x) { return entry_inv(c, "fstar", x); },
        [](const Catalog& c, const EvalCtx& x) { return entry(c, "psi", x).scaled(rfc(2)); });

    sym("f-inv", "f(1/q) = 2 psi(q) - S(q)", {"f", "psi", "S"},
        [](const Catalog& c, const EvalCtx& x) { return entry_inv(c, "f", x); },
        [](const Catalog& c, const EvalCtx& x) {
            return entry(c, "psi", x).scaled(rfc(2)) - entry(c, "S", x);
        });

    sym("phi-inv", "phi(-1/q) = psi(q)", {"phi", "psi"},
        [](const Catalog& c, const EvalCtx& x) { return entry_inv(c, "phi", x).negated_q(); },
        [](const Catalog& c, const EvalCtx& x) { return entry(c, "psi", x); });

    sym("mtc-phi-f", "2 phi(q) = f(-q) + T(q)", {"phi", "f", "T"},
        [](const Catalog& c, const EvalCtx& x) { return entry(c, "phi", x).scaled(rfc(2)); },
        [](const Catalog& c, const EvalCtx& x) {
            return entry(c, "f", x).negated_q() + entry(c, "T", x);
        });

    // --- difference equations and classical summations --------------------

    sym("fine-shift-2.1",
        "F(a,b;t) = (1-b)/(1-t) + (b-atq)/(1-t) F(a,b;tq), at a=w, b=-w, t=w", {},
        [](const Catalog&, const EvalCtx& x) {
            return fine_expand(Monomial{Rational(1), 1, 0}, Monomial{Rational(-1), 1, 0},
                               Monomial{Rational(1), 1, 0}, 1, x.w, x.order);
        },
        [](const Catalog&, const EvalCtx& x) {
            RationalFunction inv_1mt =
                (RationalFunction(Rational(1)) - RationalFunction::w_power(1)).inverse();
            QSeries tail = fine_expand(Monomial{Rational(1), 1, 0}, Monomial{Rational(-1), 1, 0},
                                       Monomial{Rational(1), 1, 1}, 1, x.w, x.order);
            QSeries first = cst((rfc(1) + W()), x); // 1 - b = 1 + w
            QSeries second = QSeries::monomial(x.w.symbolic ? -W() : RationalFunction((-W()).eval(x.w.value)), 0, x.order) +
                             QSeries::monomial(x.w.symbolic ? -(W() * W())
                                                            : RationalFunction((-(W() * W())).eval(x.w.value)),
                                               1, x.order);
            return (first + (second * tail).truncated(x.order)).scaled(
                x.w.symbolic ? inv_1mt : RationalFunction(inv_1mt.eval(x.w.value)));
        });

    {
        Identity i;
        i.id = "rogers-fine-2.2";
        i.anchor = "Rogers-Fine: F(a/q,b/q;t) = sum (a,atq/b)_n b^n t^n q^(n^2-n) "
                   "(1-atq^(2n)) / ((b)_n (t)_(n+1))";
        i.mode = VerifyMode::sampled;
        i.extra_params = {"a", "b", "t"};
        i.lhs = [](const Catalog&, const EvalCtx& x) {
            Rational a = x.param("a"), b = x.param("b"), t = x.param("t");
            // F(a/q, b/q; t) = sum_{n>=0} (a;q)_n/(b;q)_n t^n, resummed
            // against the stabilized tail since t carries no q power.
            return term_expand_stabilized(
                term(Rational(1), t, ExpPoly{}, Character::none, ExpPoly{}, ExpPoly{},
                     {PochFactor::num(a, 0, 0), PochFactor::den(b, 0, 0)}, 0),
                x.w, x.order);
        };
        i.rhs = [](const Catalog&, const EvalCtx& x) {
            Rational a = x.param("a"), b = x.param("b"), t = x.param("t");
            auto factors = std::vector<PochFactor>{
                PochFactor::num(a, 0, 0), PochFactor::num(a * t / b, 0, 1),
                PochFactor::den(b, 0, 0), PochFactor::den(t, 0, 0, 1, 1)};
            return texp(term(Rational(1), b * t, ExpPoly{}, Character::none, ExpPoly{},
                             quad(1, -1, 0), factors, 0),
                        x) +
                   texp(term(-(a * t), b * t, ExpPoly{}, Character::none, ExpPoly{},
                             quad(1, 1, 0), factors, 0),
                        x);
        };
        reg.add(std::move(i));
    }

    sym("fine-12.2",
        "(1-t) F(a,b;t) = sum (b/a)_n (-at)^n q^(n(n+1)/2)/((bq)_n (tq)_n), at a=w, b=w^2, t=w",
        {},
        [](const Catalog&, const EvalCtx& x) {
            QSeries f = fine_expand(Monomial{Rational(1), 1, 0}, Monomial{Rational(1), 2, 0},
                                    Monomial{Rational(1), 1, 0}, 1, x.w, x.order);
            return scale_rf(f, rfc(1) - W(), x);
        },
        [](const Catalog&, const EvalCtx& x) {
            return texp(term(Rational(1), Rational(1), lin(1, 0), Character::none, lin(2, 0),
                             quad(frac(1, 2), frac(1, 2), 0),
                             {PochFactor::num(Rational(1), 1, 0),
                              PochFactor::den(Rational(1), 2, 1),
                              PochFactor::den(Rational(1), 1, 1)},
                             0),
                        x);
        });

    sym("fine-12.3",
        "(1-t) F(0,b;t) = sum (bt)^n q^(n^2)/((bq)_n (tq)_n), at b=w, t=q/w", {},
        [](const Catalog&, const EvalCtx& x) {
            QSeries f = fine_expand(Monomial{Rational(0), 0, 0}, Monomial{Rational(1), 1, 0},
                                    Monomial{Rational(1), -1, 1}, 1, x.w, x.order);
            QSeries one_minus_t = QSeries::constant(RationalFunction(Rational(1)), x.order) -
                                  QSeries::monomial(w_power(x.w, -1), 1, x.order);
            return (one_minus_t * f).truncated(x.order);
        },
        [](const Catalog&, const EvalCtx& x) {
            return texp(term(Rational(1), Rational(1), ExpPoly{}, Character::none, ExpPoly{},
                             quad(1, 1, 0),
                             {PochFactor::den(Rational(1), 1, 1),
                              PochFactor::den(Rational(1), -1, 2)},
                             0),
                        x);
        });

    sym("fine-14.31",
        "(1-a) F(a,-a;a) = 1 + 2 sum_{n>=1} (-1)^n a^(2n) q^(n^2), at a=w", {},
        [](const Catalog&, const EvalCtx& x) {
            QSeries f = fine_expand(Monomial{Rational(1), 1, 0}, Monomial{Rational(-1), 1, 0},
                                    Monomial{Rational(1), 1, 0}, 1, x.w, x.order);
            return scale_rf(f, rfc(1) - W(), x);
        },
        [](const Catalog&, const EvalCtx& x) {
            return QSeries::constant(RationalFunction(Rational(1)), x.order) +
                   texp(term(Rational(2), Rational(1), lin(1, 0), Character::none, lin(2, 0),
                             quad(1, 0, 0), {}, 1),
                        x);
        });

    {
        Identity i;
        i.id = "andrews-2.6";
        i.anchor = "Andrews: sum (B,-Abq)_n q^n/((-aq,-bq)_n) = "
                   "-a^-1 (B,-Abq)_inf/((-aq,-bq)_inf) sum (A^-1)_m (Ab a^-1 q)^m/((-B a^-1)_(m+1))"
                   " + (1+a^-1)(1+b) sum (-a^-1 q, -a^-1 ABq)_m (-b)^m/((-B a^-1, Ab a^-1 q)_(m+1))";
        i.mode = VerifyMode::sampled;
        i.extra_params = {"A", "B", "a", "b"};
        i.admissible = [](const ParamMap& p) {
            return !(p.at("B") + p.at("a")).is_zero();
        };
        i.lhs = [](const Catalog&, const EvalCtx& x) {
            Rational A = x.param("A"), B = x.param("B"), a = x.param("a"), b = x.param("b");
            return texp(term(Rational(1), Rational(1), ExpPoly{}, Character::none, ExpPoly{},
                             lin(1, 0),
                             {PochFactor::num(B, 0, 0), PochFactor::num(-(A * b), 0, 1),
                              PochFactor::den(-a, 0, 1), PochFactor::den(-b, 0, 1)},
                             0),
                        x);
        };
        i.rhs = [](const Catalog&, const EvalCtx& x) {
            Rational A = x.param("A"), B = x.param("B"), a = x.param("a"), b = x.param("b");
            QSeries products = prod({PochFactor::inf_num(B, 0, 0),
                                     PochFactor::inf_num(-(A * b), 0, 1),
                                     PochFactor::inf_den(-a, 0, 1),
                                     PochFactor::inf_den(-b, 0, 1)},
                                    x);
            QSeries sum1 = texp(term(Rational(1), A * b / a, ExpPoly{}, Character::none,
                                     ExpPoly{}, lin(1, 0),
                                     {PochFactor::num(A.inverse(), 0, 0),
                                      PochFactor::den(-(B / a), 0, 0, 1, 1)},
                                     0),
                                x);
            QSeries first = (products * sum1).truncated(x.order).scaled(
                RationalFunction(-a.inverse()));
            QSeries sum2 = term_expand_stabilized(
                term(Rational(1), -b, ExpPoly{}, Character::none, ExpPoly{}, ExpPoly{},
                     {PochFactor::num(-a.inverse(), 0, 1),
                      PochFactor::num(-(A * B / a), 0, 1),
                      PochFactor::den(-(B / a), 0, 0, 1, 1),
                      PochFactor::den(A * b / a, 0, 1, 1, 1)},
                     0),
                x.w, x.order);
            QSeries second = sum2.scaled(
                RationalFunction((Rational(1) + a.inverse()) * (Rational(1) + b)));
            return first + second;
        };
        reg.add(std::move(i));
    }

    sym("ram-2.7",
        "Ramanujan: sum q^n/((-aq,-a^-1 q)_n) = (1+a) sum a^(3n) q^(n(3n+1)/2)(1-a^2 q^(2n+1))"
        " - a (-aq,-a^-1 q)_inf^-1 sum (-1)^n a^(2n) q^(n(n+1)/2), at a=w",
        {},
        [](const Catalog&, const EvalCtx& x) {
            return texp(term(Rational(1), Rational(1), ExpPoly{}, Character::none, ExpPoly{},
                             lin(1, 0),
                             {PochFactor::den(Rational(-1), 1, 1),
                              PochFactor::den(Rational(-1), -1, 1)},
                             0),
                        x);
        },
        [](const Catalog&, const EvalCtx& x) {
            QSeries partial =
                texp(term(Rational(1), Rational(1), ExpPoly{}, Character::none, lin(3, 0),
                          quad(frac(3, 2), frac(1, 2), 0), {}, 0),
                     x) +
                texp(term(Rational(-1), Rational(1), ExpPoly{}, Character::none, lin(3, 2),
                          quad(frac(3, 2), frac(5, 2), 1), {}, 0),
                     x);
            QSeries theta_part =
                (prod({PochFactor::inf_den(Rational(-1), 1, 1),
                       PochFactor::inf_den(Rational(-1), -1, 1)},
                      x) *
                 texp(term(Rational(1), Rational(1), lin(1, 0), Character::none, lin(2, 0),
                           quad(frac(1, 2), frac(1, 2), 0), {}, 0),
                      x))
                    .truncated(x.order);
            return scale_rf(partial, rfc(1) + W(), x) - scale_rf(theta_part, W(), x);
        });

    sym("ram-2.8",
        "Ramanujan: sum (-1)^n a^(2n) q^(n(n+1)/2)/(-aq)_n = "
        "sum a^(3n) q^(n(3n+1)/2)(1-a^2 q^(2n+1)), at a=w",
        {},
        [](const Catalog&, const EvalCtx& x) {
            return texp(term(Rational(1), Rational(1), lin(1, 0), Character::none, lin(2, 0),
                             quad(frac(1, 2), frac(1, 2), 0),
                             {PochFactor::den(Rational(-1), 1, 1)}, 0),
                        x);
        },
        [](const Catalog&, const EvalCtx& x) {
            return texp(term(Rational(1), Rational(1), ExpPoly{}, Character::none, lin(3, 0),
                             quad(frac(3, 2), frac(1, 2), 0), {}, 0),
                        x) +
                   texp(term(Rational(-1), Rational(1), ExpPoly{}, Character::none, lin(3, 2),
                             quad(frac(3, 2), frac(5, 2), 1), {}, 0),
                        x);
        });

    sym("ram-2.9",
        "Ramanujan: (1+a^-1) sum q^(2n+1) (q;q^2)_n/((-aq,-a^-1 q;q^2)_(n+1)) = "
        "sum (-a)^n q^(n(n+1)/2) - (q)_inf sum q^(3n^2+n) a^(3n) (1-a^2 q^(4n+2)) "
        "(sum_m q^(m^2) a^m)^-1, at a=w",
        {},
        [](const Catalog&, const EvalCtx& x) {
            QSeries s = texp(term(Rational(1), Rational(1), ExpPoly{}, Character::none,
                                  ExpPoly{}, lin(2, 1),
                                  {PochFactor::num(Rational(1), 0, 1, 2),
                                   PochFactor::den(Rational(-1), 1, 1, 2, 1),
                                   PochFactor::den(Rational(-1), -1, 1, 2, 1)},
                                  0),
                             x);
            return scale_rf(s, rfc(1) + Winv(), x);
        },
        [](const Catalog&, const EvalCtx& x) {
            QSeries first = texp(term(Rational(1), Rational(1), lin(1, 0), Character::none,
                                      lin(1, 0), quad(frac(1, 2), frac(1, 2), 0), {}, 0),
                                 x);
            QSeries partial =
                texp(term(Rational(1), Rational(1), ExpPoly{}, Character::none, lin(3, 0),
                          quad(3, 1, 0), {}, 0),
                     x) +
                texp(term(Rational(-1), Rational(1), ExpPoly{}, Character::none, lin(3, 2),
                          quad(3, 5, 2), {}, 0),
                     x);
            QSeries theta_inv =
                theta_expand(Rational(1), 1, Rational(1), Rational(0), x.w, x.order).inverted();
            QSeries second = (prod({PochFactor::inf_num(Rational(1), 0, 1)}, x) * partial)
                                 .truncated(x.order);
            second = (second * theta_inv).truncated(x.order);
            return first - second;
        });

    // --- the g3 family -----------------------------------------------------

    sym("riden1",
        "R(w;q) = (1-w) (q)_inf^-1 sum_{n in Z} (-1)^n q^((3n^2+n)/2)/(1-wq^n)", {"R"},
        [](const Catalog& c, const EvalCtx& x) { return entry(c, "R", x); },
        [](const Catalog&, const EvalCtx& x) {
            QSeries s = (prod({PochFactor::inf_den(Rational(1), 0, 1)}, x) *
                         appell_lerch_expand(AppellKind::rank, x.w, x.order))
                            .truncated(x.order);
            return scale_rf(s, rfc(1) - W(), x);
        });

    sym("g3iden1",
        "g3(w;q) = (q)_inf^-1 sum_{n in Z} (-1)^n q^((3n^2+3n)/2)/(1-wq^n)", {"g3"},
        [](const Catalog& c, const EvalCtx& x) { return entry(c, "g3", x); },
        [](const Catalog&, const EvalCtx& x) {
            return (prod({PochFactor::inf_den(Rational(1), 0, 1)}, x) *
                    appell_lerch_expand(AppellKind::g3, x.w, x.order))
                .truncated(x.order);
        });

    sym("pentagonal", "Euler: sum_{n in Z} (-1)^n q^((3n^2+n)/2) = (q;q)_inf", {},
        [](const Catalog&, const EvalCtx& x) {
            return theta_expand(Rational(-1), 0, frac(3, 2), frac(1, 2), x.w, x.order);
        },
        [](const Catalog&, const EvalCtx& x) {
            return prod({PochFactor::inf_num(Rational(1), 0, 1)}, x);
        });

    sym("thm3.1a", "g3_1(w;q) = g3_2(w;q)", {"g3", "g3_2", "R"},
        [](const Catalog& c, const EvalCtx& x) { return entry(c, "g3_1", x); },
        [](const Catalog& c, const EvalCtx& x) { return entry(c, "g3_2", x); });

    sym("thm3.1b", "g3_2(w;q) = g3_3(w;q)", {"g3_2", "g3_3", "R"},
        [](const Catalog& c, const EvalCtx& x) { return entry(c, "g3_2", x); },
        [](const Catalog& c, const EvalCtx& x) { return entry(c, "g3_3", x); });

    sym("partialident",
        "sum (-1)^n w^(-3n) q^(n(3n+1)/2) (1 - w^-2 q^(2n+1)) = "
        "sum (12|n) w^((1-n)/2) q^((n^2-1)/24)",
        {},
        [](const Catalog&, const EvalCtx& x) {
            return texp(term(Rational(1), Rational(1), lin(1, 0), Character::none, lin(-3, 0),
                             quad(frac(3, 2), frac(1, 2), 0), {}, 0),
                        x) +
                   texp(term(Rational(-1), Rational(1), lin(1, 0), Character::none,
                             lin(-3, -2), quad(frac(3, 2), frac(5, 2), 1), {}, 0),
                        x);
        },
        [](const Catalog&, const EvalCtx& x) {
            return texp(term(Rational(1), Rational(1), ExpPoly{}, Character::chi12,
                             lin(frac(-1, 2), frac(1, 2)), quad(frac(1, 24), 0, frac(-1, 24)),
                             {}, 0),
                        x);
        });

    sym("thm3.2a", "g3_2(w;1/q) = psi1(1/w;q) + S2(1/w;q)",
        {"g3_2", "R", "psi1", "S2", "psi2"},
        [](const Catalog& c, const EvalCtx& x) { return entry_inv(c, "g3_2", x); },
        [](const Catalog& c, const EvalCtx& x) {
            return entry(c, "psi1", x, WSub{Rational(1), -1}) +
                   entry(c, "S2", x, WSub{Rational(1), -1});
        });

    sym("thm3.2b", "g3_3(w;1/q) = psi1(1/w;q)", {"g3_3", "psi1"},
        [](const Catalog& c, const EvalCtx& x) { return entry_inv(c, "g3_3", x); },
        [](const Catalog& c, const EvalCtx& x) {
            return entry(c, "psi1", x, WSub{Rational(1), -1});
        });

    sym("psi1-spec", "psi1(-1;q) = 1 - psi(q)", {"psi1", "psi"},
        [](const Catalog& c, const EvalCtx& x) {
            return entry_at(c, "psi1", Rational(-1), x.order);
        },
        [](const Catalog& c, const EvalCtx& x) {
            return QSeries::constant(RationalFunction(Rational(1)), x.order) -
                   entry(c, "psi", x);
        });

    sym("s2-spec", "2 S2(-1;q) = S(q)", {"S2", "psi2", "S"},
        [](const Catalog& c, const EvalCtx& x) {
            return entry_at(c, "S2", Rational(-1), x.order).scaled(rfc(2));
        },
        [](const Catalog& c, const EvalCtx& x) { return entry(c, "S", x); });

    // --- the g2 family -----------------------------------------------------

    sym("g2-mcintosh", "g2(w;q) = (1+w)/(2w(1-w)) O2(w;q) - 1/(2w)",
        {"g2", "g2_2", "O2"},
        [](const Catalog& c, const EvalCtx& x) { return entry(c, "g2_1", x); },
        [](const Catalog& c, const EvalCtx& x) { return entry(c, "g2_2", x); });

    sym("thm4.1b", "g2_2(w;q) = g2_3(w;q)", {"g2_2", "g2_3", "O2"},
        [](const Catalog& c, const EvalCtx& x) { return entry(c, "g2_2", x); },
        [](const Catalog& c, const EvalCtx& x) { return entry(c, "g2_3", x); });

    sym("thm4.2a", "g2_1(w;1/q) = -w^-2 psi3(w;q) - w^-1 + S4(w;q)",
        {"g2", "psi3", "S4", "psi4"},
        [](const Catalog& c, const EvalCtx& x) { return entry_inv(c, "g2_1", x); },
        [](const Catalog& c, const EvalCtx& x) {
            return scale_rf(entry(c, "psi3", x), -(Winv() * Winv()), x) +
                   cst(-Winv(), x) + entry(c, "S4", x);
        });

    sym("thm4.2b", "g2_2(w;1/q) = psi3(1/w;q) + S1(-1/w;q)",
        {"g2_2", "O2", "psi3", "S1", "psi1"},
        [](const Catalog& c, const EvalCtx& x) { return entry_inv(c, "g2_2", x); },
        [](const Catalog& c, const EvalCtx& x) {
            return entry(c, "psi3", x, WSub{Rational(1), -1}) +
                   entry(c, "S1", x, WSub{Rational(-1), -1});
        });

    sym("thm4.2c", "g2_3(w;1/q) = psi3(1/w;q)", {"g2_3", "psi3"},
        [](const Catalog& c, const EvalCtx& x) { return entry_inv(c, "g2_3", x); },
        [](const Catalog& c, const EvalCtx& x) {
            return entry(c, "psi3", x, WSub{Rational(1), -1});
        });

    sym("secondg2id",
        "sum (-1)_n q^n/((wq,w^-1 q)_n) = (w-1)/(w+1) sum (-1)^n q^(n(n+1)/2) (-1)_n "
        "w^(-2n)/((w^-2 q^2;q^2)_n) + (-1)_inf (w (wq,w^-1 q)_inf)^-1 "
        "sum (-1)^n q^(n(n+1)/2) w^(-2n)/((-w^-1)_(n+1))",
        {},
        [](const Catalog&, const EvalCtx& x) {
            return texp(term(Rational(1), Rational(1), ExpPoly{}, Character::none, ExpPoly{},
                             lin(1, 0),
                             {PochFactor::num(Rational(-1), 0, 0),
                              PochFactor::den(Rational(1), 1, 1),
                              PochFactor::den(Rational(1), -1, 1)},
                             0),
                        x);
        },
        [](const Catalog&, const EvalCtx& x) {
            QSeries first = texp(term(Rational(1), Rational(1), lin(1, 0), Character::none,
                                      lin(-2, 0), quad(frac(1, 2), frac(1, 2), 0),
                                      {PochFactor::num(Rational(-1), 0, 0),
                                       PochFactor::den(Rational(1), -2, 2, 2)},
                                      0),
                                 x);
            QSeries second = (prod({PochFactor::inf_num(Rational(-1), 0, 0),
                                    PochFactor::inf_den(Rational(1), 1, 1),
                                    PochFactor::inf_den(Rational(1), -1, 1)},
                                   x) *
                              texp(term(Rational(1), Rational(1), lin(1, 0), Character::none,
                                        lin(-2, 0), quad(frac(1, 2), frac(1, 2), 0),
                                        {PochFactor::den(Rational(-1), -1, 0, 1, 1)}, 0),
                                   x))
                                 .truncated(x.order);
            return scale_rf(first, (W() - rfc(1)) / (W() + rfc(1)), x) +
                   scale_rf(second, Winv(), x);
        });

    sym("psi4-rel", "psi4(w;q) = w^-1 - w^-2 + w^-3 psi1(-w;q)", {"psi4", "psi1"},
        [](const Catalog& c, const EvalCtx& x) { return entry(c, "psi4", x); },
        [](const Catalog& c, const EvalCtx& x) {
            return cst(Winv() - Winv() * Winv(), x) +
                   scale_rf(entry(c, "psi1", x, WSub{Rational(-1), 1}),
                            RationalFunction::w_power(-3), x);
        });

    sym("psi3-theta",
        "psi3(1/w;q) + w^-2 psi3(w;q) + w^-1 = sum_{n in Z} (-1)^(n+1) w^(2n-1) q^(n^2)",
        {"psi3"},
        [](const Catalog& c, const EvalCtx& x) {
            return entry(c, "psi3", x, WSub{Rational(1), -1}) +
                   scale_rf(entry(c, "psi3", x), Winv() * Winv(), x) + cst(Winv(), x);
        },
        [](const Catalog&, const EvalCtx& x) {
            return theta_expand(Rational(-1), 2, Rational(1), Rational(0), x.w, x.order)
                .scaled(x.w.symbolic ? -Winv() : RationalFunction((-Winv()).eval(x.w.value)));
        });

    // --- the K family ------------------------------------------------------

    sym("thm5.1a", "kappa(w;q) = K1(w;q)", {"kappa", "K1"},
        [](const Catalog& c, const EvalCtx& x) { return entry(c, "kappa", x); },
        [](const Catalog& c, const EvalCtx& x) { return entry(c, "K1", x); });

    sym("thm5.1b",
        "K1(w;q) = -w/(1-w)^2 (K(w;q) - (q;q^2)_inf^3 (q^2;q^2)_inf/((wq,w^-1 q)_inf))",
        {"K1", "K"},
        [](const Catalog& c, const EvalCtx& x) { return entry(c, "K1", x); },
        [](const Catalog& c, const EvalCtx& x) {
            QSeries quot = prod({PochFactor::inf_num(Rational(1), 0, 1, 2, 3),
                                 PochFactor::inf_num(Rational(1), 0, 2, 2),
                                 PochFactor::inf_den(Rational(1), 1, 1),
                                 PochFactor::inf_den(Rational(1), -1, 1)},
                                x);
            RationalFunction pref =
                -W() / ((rfc(1) - W()) * (rfc(1) - W()));
            return scale_rf(entry(c, "K", x) - quot, pref, x);
        });

    sym("thm5.2a", "kappa(w;1/q) = psi2(1/w;q)/(1-w)", {"kappa", "psi2"},
        [](const Catalog& c, const EvalCtx& x) { return entry_inv(c, "kappa", x); },
        [](const Catalog& c, const EvalCtx& x) {
            return scale_rf(entry(c, "psi2", x, WSub{Rational(1), -1}),
                            (rfc(1) - W()).inverse(), x);
        });

    sym("thm5.2b", "K1(w;1/q) = w/(w-1) (psi2(w;q) + s1(w;q))",
        {"K1", "psi2", "s1", "psi1"},
        [](const Catalog& c, const EvalCtx& x) { return entry_inv(c, "K1", x); },
        [](const Catalog& c, const EvalCtx& x) {
            return scale_rf(entry(c, "psi2", x) + entry(c, "s1", x),
                            W() / (W() - rfc(1)), x);
        });

    sym("thm5.2c", "K(w;1/q) = (1-w) psi2(w;q) + S5(w;q)", {"K", "psi2", "S5", "psi5"},
        [](const Catalog& c, const EvalCtx& x) { return entry_inv(c, "K", x); },
        [](const Catalog& c, const EvalCtx& x) {
            return scale_rf(entry(c, "psi2", x), rfc(1) - W(), x) + entry(c, "S5", x);
        });

    sym("jtp",
        "Jacobi triple product: sum_{n in Z} (-1)^n w^n q^(n^2) = "
        "(q^2;q^2)_inf (wq;q^2)_inf (w^-1 q;q^2)_inf",
        {},
        [](const Catalog&, const EvalCtx& x) {
            return theta_expand(Rational(-1), 1, Rational(1), Rational(0), x.w, x.order);
        },
        [](const Catalog&, const EvalCtx& x) {
            return prod({PochFactor::inf_num(Rational(1), 0, 2, 2),
                         PochFactor::inf_num(Rational(1), 1, 1, 2),
                         PochFactor::inf_num(Rational(1), -1, 1, 2)},
                        x);
        });

    sym("psi5-form",
        "sum_{n>=0} (-1)^n w^(3n) q^(3n^2+2n) (1 + w q^(2n+1)) = psi5(w;q)", {"psi5"},
        [](const Catalog&, const EvalCtx& x) {
            return texp(term(Rational(1), Rational(1), lin(1, 0), Character::none, lin(3, 0),
                             quad(3, 2, 0), {}, 0),
                        x) +
                   texp(term(Rational(1), Rational(1), lin(1, 0), Character::none, lin(3, 1),
                             quad(3, 4, 1), {}, 0),
                        x);
        },
        [](const Catalog& c, const EvalCtx& x) { return entry(c, "psi5", x); });

    sym("psi2-theta",
        "psi2(w;q) + w^-1 psi2(1/w;q) = sum_{n in Z} w^n q^(n(n+1)/2)", {"psi2"},
        [](const Catalog& c, const EvalCtx& x) {
            return entry(c, "psi2", x) +
                   scale_rf(entry(c, "psi2", x, WSub{Rational(1), -1}), Winv(), x);
        },
        [](const Catalog&, const EvalCtx& x) {
            return theta_expand(Rational(1), 1, frac(1, 2), frac(1, 2), x.w, x.order);
        });

    sym("euler-qq2", "(q;q)_inf/(q^2;q^2)_inf = (q;q^2)_inf", {},
        [](const Catalog&, const EvalCtx& x) {
            return prod({PochFactor::inf_num(Rational(1), 0, 1),
                         PochFactor::inf_den(Rational(1), 0, 2, 2)},
                        x);
        },
        [](const Catalog&, const EvalCtx& x) {
            return prod({PochFactor::inf_num(Rational(1), 0, 1, 2)}, x);
        });

    return reg;
}

} // namespace qmock
