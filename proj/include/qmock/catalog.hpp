#pragma once

/// The named-function catalog.  Every entry is plain recipe data — a sum of
/// components, each a w-rational prefactor times summand families, infinite
/// products, bilateral sums and references to other entries — so the same
/// data drives direct expansion, the mechanical q -> 1/q regime, listing,
/// serialization and mutation testing.

#include <qmock/hyperterm.hpp>

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace qmock {

/// Substitution w -> c * w^k.
struct WSub {
    Rational c{1};
    int k = 1;

    bool is_identity() const { return c.is_one() && k == 1; }

    /// The substitution "apply s to the variable, then this".
    WSub after(const WSub& s) const { return WSub{c * s.c.pow(k), s.k * k}; }
};

struct ThetaAtom {
    Rational c;
    int wexp = 0;
    Rational A, B;
    bool inverted = false;
};

struct SubEntryAtom {
    std::string name;
    WSub sub{};
    int q_power = 1; // expand the entry, then q -> q^{q_power}
};

struct Component {
    RationalFunction prefactor{Rational(1)}; // rational function of w only
    std::vector<HypergeometricTerm> terms;
    std::vector<PochFactor> products; // infinite factors
    std::vector<ThetaAtom> thetas;
    std::vector<SubEntryAtom> subs;
};

enum class WMode { symbolic_w, numeric_only };

struct CatalogEntry {
    std::string name;
    std::string anchor; // the defining series, human readable
    WMode w_mode = WMode::symbolic_w;
    std::vector<Component> components;
    std::vector<Rational> excluded_w; // declared parameter exclusions
};

class Catalog {
    std::map<std::string, CatalogEntry> entries_;
    std::map<std::string, std::string> aliases_;
    std::vector<std::string> order_;

public:
    void add(CatalogEntry e) {
        order_.push_back(e.name);
        entries_[e.name] = std::move(e);
    }
    void add_alias(const std::string& alias, const std::string& target) {
        aliases_[alias] = target;
    }

    const CatalogEntry& at(const std::string& name) const {
        auto al = aliases_.find(name);
        const std::string& key = al == aliases_.end() ? name : al->second;
        auto it = entries_.find(key);
        if (it == entries_.end())
            throw UnknownName("unknown catalog entry: " + name);
        return it->second;
    }

    CatalogEntry& at_mutable(const std::string& name) {
        auto al = aliases_.find(name);
        const std::string& key = al == aliases_.end() ? name : al->second;
        auto it = entries_.find(key);
        if (it == entries_.end())
            throw UnknownName("unknown catalog entry: " + name);
        return it->second;
    }

    bool contains(const std::string& name) const {
        return entries_.count(name) > 0 || aliases_.count(name) > 0;
    }

    const std::vector<std::string>& names() const { return order_; }
    const std::map<std::string, std::string>& aliases() const { return aliases_; }

    static Catalog standard();
};

// ---------------------------------------------------------------------------
// Expansion of catalog data.

namespace detail {

inline RationalFunction prefactor_in_ctx(const RationalFunction& rf, const WSub& sub,
                                         const WContext& ctx) {
    RationalFunction s = sub.is_identity() ? rf : rf.substituted(sub.c, sub.k);
    if (ctx.symbolic)
        return s;
    return RationalFunction(s.eval(ctx.value));
}

inline PochFactor substituted_factor(const PochFactor& f, const WSub& sub) {
    if (sub.is_identity())
        return f;
    PochFactor g = f;
    g.arg_const = f.arg_const * sub.c.pow(f.arg_wexp);
    g.arg_wexp = f.arg_wexp * sub.k;
    return g;
}

inline ThetaAtom substituted_theta(const ThetaAtom& th, const WSub& sub) {
    if (sub.is_identity())
        return th;
    ThetaAtom r = th;
    r.c = th.c * sub.c.pow(th.wexp);
    r.wexp = th.wexp * sub.k;
    return r;
}

} // namespace detail

QSeries expand_entry(const Catalog& cat, const std::string& name, const WSub& sub,
                     const WContext& ctx, int order);

inline QSeries expand_component(const Catalog& cat, const Component& comp, const WSub& sub,
                                const WContext& ctx, int order) {
    QSeries acc =
        QSeries::constant(detail::prefactor_in_ctx(comp.prefactor, sub, ctx), order);
    for (const auto& t : comp.terms) {
        HypergeometricTerm ts = sub.is_identity() ? t : term_substitute(t, sub.c, sub.k);
        acc = (acc * term_expand_auto(ts, ctx, order)).truncated(order);
    }
    if (!comp.products.empty()) {
        std::vector<PochFactor> fs;
        fs.reserve(comp.products.size());
        for (const auto& f : comp.products)
            fs.push_back(detail::substituted_factor(f, sub));
        acc = (acc * poch_inf_expand(fs, ctx, order)).truncated(order);
    }
    for (const auto& th : comp.thetas) {
        ThetaAtom a = detail::substituted_theta(th, sub);
        QSeries s = theta_expand(a.c, a.wexp, a.A, a.B, ctx, order);
        if (a.inverted)
            s = s.inverted();
        acc = (acc * s).truncated(order);
    }
    for (const auto& se : comp.subs) {
        QSeries s = expand_entry(cat, se.name, se.sub.after(sub), ctx,
                                 se.q_power == 1 ? order : order / se.q_power);
        if (se.q_power != 1)
            s = s.q_power(se.q_power);
        acc = (acc * s.truncated(order)).truncated(order);
    }
    return acc;
}

inline QSeries expand_entry(const Catalog& cat, const std::string& name, const WSub& sub,
                            const WContext& ctx, int order) {
    const CatalogEntry& e = cat.at(name);
    QSeries acc = QSeries::zero(order);
    for (const auto& comp : e.components)
        acc = acc + expand_component(cat, comp, sub, ctx, order);
    return acc.truncated(order);
}

/// Expansion of an entry at q -> 1/q: prefactors are q-free and survive
/// untouched, every summand family goes through the mechanical rewrite, and
/// rewritten families whose q-order stays flat are resummed via the
/// difference equation of F(a,b;t).  Entries built from infinite products or
/// bilateral sums have no mechanical inverted regime.
inline QSeries expand_entry_inverted(const Catalog& cat, const std::string& name,
                                     const WSub& sub, const WContext& ctx, int order) {
    const CatalogEntry& e = cat.at(name);
    QSeries acc = QSeries::zero(order);
    for (const auto& comp : e.components) {
        if (!comp.products.empty() || !comp.thetas.empty())
            throw NotInvertible("entry '" + name + "' has no mechanical q -> 1/q regime");
        QSeries part =
            QSeries::constant(detail::prefactor_in_ctx(comp.prefactor, sub, ctx), order);
        for (const auto& t : comp.terms) {
            HypergeometricTerm ts = sub.is_identity() ? t : term_substitute(t, sub.c, sub.k);
            part = (part * term_expand_auto(detail::invert_q_raw(ts), ctx, order))
                       .truncated(order);
        }
        for (const auto& se : comp.subs) {
            if (se.q_power != 1)
                throw NotInvertible("entry '" + name + "' rescales q; not invertible here");
            QSeries s = expand_entry_inverted(cat, se.name, se.sub.after(sub), ctx, order);
            part = (part * s).truncated(order);
        }
        acc = acc + part;
    }
    return acc.truncated(order);
}

// ---------------------------------------------------------------------------
// Public catalog operations.

inline void check_excluded(const CatalogEntry& e, const WContext& ctx) {
    if (ctx.symbolic)
        return;
    for (const auto& x : e.excluded_w)
        if (x == ctx.value)
            throw PoleError("entry '" + e.name + "' excludes w = " + x.to_string());
}

inline QSeries catalog_series(const Catalog& cat, const std::string& name, const WContext& ctx,
                              int order) {
    check_excluded(cat.at(name), ctx);
    return expand_entry(cat, name, WSub{}, ctx, order);
}

inline QSeries catalog_series_inverted(const Catalog& cat, const std::string& name,
                                       const WContext& ctx, int order) {
    check_excluded(cat.at(name), ctx);
    return expand_entry_inverted(cat, name, WSub{}, ctx, order);
}

/// R(w;q), the rank generating function.
inline QSeries rank_series(const Catalog& cat, const WContext& ctx, int order) {
    return catalog_series(cat, "R", ctx, order);
}

/// O2(w;q), the overpartition rank generating function.
inline QSeries overpartition_rank_series(const Catalog& cat, const WContext& ctx, int order) {
    return catalog_series(cat, "O2", ctx, order);
}

struct CatalogListing {
    std::string name;
    std::string anchor;
    WMode w_mode;
    bool direct;
    bool inverted;
};

inline std::vector<CatalogListing> catalog_listing(const Catalog& cat) {
    std::vector<CatalogListing> out;
    for (const auto& name : cat.names()) {
        const CatalogEntry& e = cat.at(name);
        bool inverted = true;
        try {
            expand_entry_inverted(cat, name, WSub{}, WContext::sym(), 4);
        } catch (const std::exception&) {
            inverted = false;
        }
        out.push_back(CatalogListing{e.name, e.anchor, e.w_mode, true, inverted});
    }
    return out;
}

// ---------------------------------------------------------------------------
// The standard catalog.

namespace builders {

inline RationalFunction W() { return RationalFunction::w_power(1); }
inline RationalFunction rf(long long n) { return RationalFunction(Rational(n)); }
inline RationalFunction rf(const Rational& r) { return RationalFunction(r); }

inline ExpPoly lin(Rational a1, Rational a0) { return ExpPoly::linear(std::move(a1), std::move(a0)); }
inline ExpPoly quad(Rational a2, Rational a1, Rational a0) {
    return ExpPoly{std::move(a2), std::move(a1), std::move(a0)};
}

inline HypergeometricTerm term(Rational cst, Rational geom, ExpPoly sign, Character chi,
                               ExpPoly wexp, ExpPoly qexp, std::vector<PochFactor> fs,
                               int n0) {
    HypergeometricTerm t;
    t.const_factor = std::move(cst);
    t.geom = std::move(geom);
    t.sign = std::move(sign);
    t.chi = chi;
    t.w_exp = std::move(wexp);
    t.q_exp = std::move(qexp);
    t.factors = std::move(fs);
    t.n_start = n0;
    return t;
}

} // namespace builders

inline Catalog Catalog::standard() {
    using namespace builders;
    const ExpPoly zero_poly;
    const Rational one(1);
    Catalog cat;

    // psi(q) = sum_{n>=0} (-12|n) q^{(n^2-1)/24}
    {
        CatalogEntry e;
        e.name = "psi";
        e.anchor = "psi(q) = sum_{n>=0} (-12|n) q^((n^2-1)/24)";
        Component c;
        c.terms.push_back(term(one, one, zero_poly, Character::chi12neg, zero_poly,
                               quad(frac(1, 24), 0, frac(-1, 24)), {}, 0));
        e.components.push_back(c);
        cat.add(e);
    }

    // R(w;q) = sum_{n>=0} q^{n^2} / ((wq)_n (q/w)_n)
    {
        CatalogEntry e;
        e.name = "R";
        e.anchor = "R(w;q) = sum_{n>=0} q^(n^2)/((wq;q)_n (w^-1 q;q)_n)";
        e.excluded_w = {Rational(0)};
        Component c;
        c.terms.push_back(term(one, one, zero_poly, Character::none, zero_poly,
                               quad(1, 0, 0),
                               {PochFactor::den(one, 1, 1), PochFactor::den(one, -1, 1)}, 0));
        e.components.push_back(c);
        cat.add(e);
    }

    // f(q) = sum_{n>=0} q^{n^2} / (-q)_n^2
    {
        CatalogEntry e;
        e.name = "f";
        e.anchor = "f(q) = sum_{n>=0} q^(n^2)/(-q;q)_n^2";
        Component c;
        c.terms.push_back(term(one, one, zero_poly, Character::none, zero_poly, quad(1, 0, 0),
                               {PochFactor::den(Rational(-1), 0, 1, 1, 0, 2)}, 0));
        e.components.push_back(c);
        cat.add(e);
    }

    // f*(q) = 1 + sum_{n>=1} (-1)^{n+1} q^n / (-q)_n
    {
        CatalogEntry e;
        e.name = "fstar";
        e.anchor = "fstar(q) = 1 + sum_{n>=1} (-1)^(n+1) q^n/(-q;q)_n";
        e.components.push_back(Component{}); // the constant 1
        Component c;
        c.terms.push_back(term(one, one, lin(1, 1), Character::none, zero_poly, lin(1, 0),
                               {PochFactor::den(Rational(-1), 0, 1)}, 1));
        e.components.push_back(c);
        cat.add(e);
    }

    // S(q) = (-q)_inf^{-2} sum_{n>=0} (-1)^n q^{n(n+1)/2}
    {
        CatalogEntry e;
        e.name = "S";
        e.anchor = "S(q) = (-q;q)_inf^-2 sum_{n>=0} (-1)^n q^(n(n+1)/2)";
        Component c;
        c.terms.push_back(term(one, one, lin(1, 0), Character::none, zero_poly,
                               quad(frac(1, 2), frac(1, 2), 0), {}, 0));
        c.products.push_back(PochFactor::inf_den(Rational(-1), 0, 1, 1, 2));
        e.components.push_back(c);
        cat.add(e);
    }

    // phi(q) = sum_{n>=0} q^{n^2} / (-q^2; q^2)_n
    {
        CatalogEntry e;
        e.name = "phi";
        e.anchor = "phi(q) = sum_{n>=0} q^(n^2)/(-q^2;q^2)_n";
        Component c;
        c.terms.push_back(term(one, one, zero_poly, Character::none, zero_poly, quad(1, 0, 0),
                               {PochFactor::den(Rational(-1), 0, 2, 2)}, 0));
        e.components.push_back(c);
        cat.add(e);
    }

    // T(q) = (q^2;q^2)_inf^7 / ((q;q)_inf^3 (q^4;q^4)_inf^3)
    {
        CatalogEntry e;
        e.name = "T";
        e.anchor = "T(q) = (q^2;q^2)_inf^7 / ((q;q)_inf^3 (q^4;q^4)_inf^3)";
        Component c;
        c.products.push_back(PochFactor::inf_num(one, 0, 2, 2, 7));
        c.products.push_back(PochFactor::inf_den(one, 0, 1, 1, 3));
        c.products.push_back(PochFactor::inf_den(one, 0, 4, 4, 3));
        e.components.push_back(c);
        cat.add(e);
    }

    // g2(w;q) = sum_{n>=0} (-q)_n q^{n(n+1)/2} / ((w)_{n+1} (q/w)_{n+1})
    {
        CatalogEntry e;
        e.name = "g2";
        e.anchor = "g2(w;q) = sum (-q;q)_n q^(n(n+1)/2)/((w;q)_(n+1) (w^-1 q;q)_(n+1))";
        e.excluded_w = {Rational(0), Rational(1)};
        Component c;
        c.terms.push_back(term(one, one, zero_poly, Character::none, zero_poly,
                               quad(frac(1, 2), frac(1, 2), 0),
                               {PochFactor::num(Rational(-1), 0, 1),
                                PochFactor::den(one, 1, 0, 1, 1),
                                PochFactor::den(one, -1, 1, 1, 1)},
                               0));
        e.components.push_back(c);
        cat.add(e);
    }

    // g3(w;q) = sum_{n>=0} q^{n(n+1)} / ((w)_{n+1} (q/w)_{n+1})
    {
        CatalogEntry e;
        e.name = "g3";
        e.anchor = "g3(w;q) = sum q^(n(n+1))/((w;q)_(n+1) (w^-1 q;q)_(n+1))";
        e.excluded_w = {Rational(0), Rational(1)};
        Component c;
        c.terms.push_back(term(one, one, zero_poly, Character::none, zero_poly, quad(1, 1, 0),
                               {PochFactor::den(one, 1, 0, 1, 1),
                                PochFactor::den(one, -1, 1, 1, 1)},
                               0));
        e.components.push_back(c);
        cat.add(e);
    }

    // K(w;q) = sum_{n>=0} (-1)^n q^{n^2} (q;q^2)_n / ((wq^2, q^2/w; q^2)_n)
    {
        CatalogEntry e;
        e.name = "K";
        e.anchor = "K(w;q) = sum (-1)^n q^(n^2) (q;q^2)_n/((wq^2;q^2)_n (w^-1 q^2;q^2)_n)";
        e.excluded_w = {Rational(0)};
        Component c;
        c.terms.push_back(term(one, one, lin(1, 0), Character::none, zero_poly, quad(1, 0, 0),
                               {PochFactor::num(one, 0, 1, 2),
                                PochFactor::den(one, 1, 2, 2),
                                PochFactor::den(one, -1, 2, 2)},
                               0));
        e.components.push_back(c);
        cat.add(e);
    }

    // g3_2(w;q) = -1/w + R(w;q)/(w(1-w))
    {
        CatalogEntry e;
        e.name = "g3_2";
        e.anchor = "g3_2(w;q) = -1/w + R(w;q)/(w(1-w))";
        e.excluded_w = {Rational(0), Rational(1)};
        Component c0;
        c0.prefactor = rf(-1) / W();
        e.components.push_back(c0);
        Component c1;
        c1.prefactor = rf(1) / (W() * (rf(1) - W()));
        c1.subs.push_back(SubEntryAtom{"R", WSub{}, 1});
        e.components.push_back(c1);
        cat.add(e);
    }

    // g3_3(w;q) = sum_{n>=0} w^{-n} q^n / (w)_{n+1}
    {
        CatalogEntry e;
        e.name = "g3_3";
        e.anchor = "g3_3(w;q) = sum_{n>=0} w^-n q^n/(w;q)_(n+1)";
        e.excluded_w = {Rational(0), Rational(1)};
        Component c;
        c.terms.push_back(term(one, one, zero_poly, Character::none, lin(-1, 0), lin(1, 0),
                               {PochFactor::den(one, 1, 0, 1, 1)}, 0));
        e.components.push_back(c);
        cat.add(e);
    }

    // psi1(w;q) = -w - w^2 sum_{n>=0} (12|n) w^{(n-1)/2} q^{(n^2-1)/24}
    {
        CatalogEntry e;
        e.name = "psi1";
        e.anchor = "psi1(w;q) = -w - w^2 sum (12|n) w^((n-1)/2) q^((n^2-1)/24)";
        Component c0;
        c0.prefactor = -W();
        e.components.push_back(c0);
        Component c1;
        c1.prefactor = -(W() * W());
        c1.terms.push_back(term(one, one, zero_poly, Character::chi12,
                                lin(frac(1, 2), frac(-1, 2)),
                                quad(frac(1, 24), 0, frac(-1, 24)), {}, 0));
        e.components.push_back(c1);
        cat.add(e);
    }

    // psi2(w;q) = sum_{n>=0} w^n q^{n(n+1)/2}
    {
        CatalogEntry e;
        e.name = "psi2";
        e.anchor = "psi2(w;q) = sum_{n>=0} w^n q^(n(n+1)/2)";
        Component c;
        c.terms.push_back(term(one, one, zero_poly, Character::none, lin(1, 0),
                               quad(frac(1, 2), frac(1, 2), 0), {}, 0));
        e.components.push_back(c);
        cat.add(e);
    }

    // S2(w;q) = w^2 / ((wq)_inf (1/w)_inf) * psi2(-w^2; q)
    {
        CatalogEntry e;
        e.name = "S2";
        e.anchor = "S2(w;q) = w^2 (wq;q)_inf^-1 (w^-1;q)_inf^-1 psi2(-w^2;q)";
        e.excluded_w = {Rational(0), Rational(1)};
        Component c;
        c.prefactor = W() * W();
        c.products.push_back(PochFactor::inf_den(one, 1, 1));
        c.products.push_back(PochFactor::inf_den(one, -1, 0));
        c.subs.push_back(SubEntryAtom{"psi2", WSub{Rational(-1), 2}, 1});
        e.components.push_back(c);
        cat.add(e);
    }

    // O2(w;q) = sum_{n>=0} (-1)_n q^{n(n+1)/2} / ((wq)_n (q/w)_n)
    {
        CatalogEntry e;
        e.name = "O2";
        e.anchor = "O2(w;q) = sum (-1;q)_n q^(n(n+1)/2)/((wq;q)_n (w^-1 q;q)_n)";
        e.excluded_w = {Rational(0)};
        Component c;
        c.terms.push_back(term(one, one, zero_poly, Character::none, zero_poly,
                               quad(frac(1, 2), frac(1, 2), 0),
                               {PochFactor::num(Rational(-1), 0, 0),
                                PochFactor::den(one, 1, 1), PochFactor::den(one, -1, 1)},
                               0));
        e.components.push_back(c);
        cat.add(e);
    }

    // g2_2(w;q) = (1+w)/(2w(1-w)) O2(w;q) - 1/(2w)
    {
        CatalogEntry e;
        e.name = "g2_2";
        e.anchor = "g2_2(w;q) = (1+w)/(2w(1-w)) O2(w;q) - 1/(2w)";
        e.excluded_w = {Rational(0), Rational(1)};
        Component c0;
        c0.prefactor = (rf(1) + W()) / (rf(2) * W() * (rf(1) - W()));
        c0.subs.push_back(SubEntryAtom{"O2", WSub{}, 1});
        e.components.push_back(c0);
        Component c1;
        c1.prefactor = rf(-1) / (rf(2) * W());
        e.components.push_back(c1);
        cat.add(e);
    }

    // g2_3(w;q) = -(1+w)/(2w^2) sum_{n>=0} (-wq)_n/(wq)_n w^{-n} - 1/(2w)
    {
        CatalogEntry e;
        e.name = "g2_3";
        e.anchor = "g2_3(w;q) = -(1+w)/(2w^2) sum (-wq;q)_n/(wq;q)_n w^-n - 1/(2w)";
        e.excluded_w = {Rational(0)};
        Component c0;
        c0.prefactor = -(rf(1) + W()) / (rf(2) * W() * W());
        c0.terms.push_back(term(one, one, zero_poly, Character::none, lin(-1, 0), zero_poly,
                                {PochFactor::num(Rational(-1), 1, 1),
                                 PochFactor::den(one, 1, 1)},
                                0));
        e.components.push_back(c0);
        Component c1;
        c1.prefactor = rf(-1) / (rf(2) * W());
        e.components.push_back(c1);
        cat.add(e);
    }

    // psi3(w;q) = sum_{n>=0} (-1)^{n+1} w^{2n+1} q^{n^2}
    {
        CatalogEntry e;
        e.name = "psi3";
        e.anchor = "psi3(w;q) = sum_{n>=0} (-1)^(n+1) w^(2n+1) q^(n^2)";
        Component c;
        c.terms.push_back(term(one, one, lin(1, 1), Character::none, lin(2, 1), quad(1, 0, 0),
                               {}, 0));
        e.components.push_back(c);
        cat.add(e);
    }

    // psi4(w;q) = sum_{n>=1} w^{3n-2} q^{(3n^2-n)/2} (1 - w q^n)
    {
        CatalogEntry e;
        e.name = "psi4";
        e.anchor = "psi4(w;q) = sum_{n>=1} w^(3n-2) q^((3n^2-n)/2) (1 - w q^n)";
        Component c0;
        c0.terms.push_back(term(one, one, zero_poly, Character::none, lin(3, -2),
                                quad(frac(3, 2), frac(-1, 2), 0), {}, 1));
        e.components.push_back(c0);
        Component c1;
        c1.terms.push_back(term(Rational(-1), one, zero_poly, Character::none, lin(3, -1),
                                quad(frac(3, 2), frac(1, 2), 0), {}, 1));
        e.components.push_back(c1);
        cat.add(e);
    }

    // S1(w;q) = (-q)_inf / ((-1/w)_inf (-wq)_inf) * (psi1(w;q)/w + 1)
    {
        CatalogEntry e;
        e.name = "S1";
        e.anchor = "S1(w;q) = (-q;q)_inf ((-w^-1;q)_inf (-wq;q)_inf)^-1 (w^-1 psi1(w;q) + 1)";
        e.excluded_w = {Rational(0), Rational(-1)};
        auto products = std::vector<PochFactor>{PochFactor::inf_num(Rational(-1), 0, 1),
                                                PochFactor::inf_den(Rational(-1), -1, 0),
                                                PochFactor::inf_den(Rational(-1), 1, 1)};
        Component c0;
        c0.prefactor = rf(1) / W();
        c0.products = products;
        c0.subs.push_back(SubEntryAtom{"psi1", WSub{}, 1});
        e.components.push_back(c0);
        Component c1;
        c1.products = products;
        e.components.push_back(c1);
        cat.add(e);
    }

    // S4(w;q) = (-q)_inf / ((wq)_inf (1/w)_inf) * psi4(w;q)
    {
        CatalogEntry e;
        e.name = "S4";
        e.anchor = "S4(w;q) = (-q;q)_inf ((wq;q)_inf (w^-1;q)_inf)^-1 psi4(w;q)";
        e.excluded_w = {Rational(0), Rational(1)};
        Component c;
        c.products.push_back(PochFactor::inf_num(Rational(-1), 0, 1));
        c.products.push_back(PochFactor::inf_den(one, 1, 1));
        c.products.push_back(PochFactor::inf_den(one, -1, 0));
        c.subs.push_back(SubEntryAtom{"psi4", WSub{}, 1});
        e.components.push_back(c);
        cat.add(e);
    }

    // K1(w;q) = sum_{n>=1} (-1)^{n-1} q^{n^2} (q;q^2)_{n-1} / ((wq, q/w; q^2)_n)
    {
        CatalogEntry e;
        e.name = "K1";
        e.anchor = "K1(w;q) = sum_{n>=1} (-1)^(n-1) q^(n^2) (q;q^2)_(n-1)/((wq;q^2)_n (w^-1 q;q^2)_n)";
        e.excluded_w = {Rational(0)};
        Component c;
        c.terms.push_back(term(one, one, lin(1, 1), Character::none, zero_poly, quad(1, 0, 0),
                               {PochFactor::num(one, 0, 1, 2, -1),
                                PochFactor::den(one, 1, 1, 2),
                                PochFactor::den(one, -1, 1, 2)},
                               1));
        e.components.push_back(c);
        cat.add(e);
    }

    // kappa(w;q) = sum_{n>=0} q^{n+1} w^{-n} (wq^2;q^2)_n / (wq;q^2)_{n+1}
    {
        CatalogEntry e;
        e.name = "kappa";
        e.anchor = "kappa(w;q) = sum_{n>=0} q^(n+1) w^-n (wq^2;q^2)_n/(wq;q^2)_(n+1)";
        e.excluded_w = {Rational(0)};
        Component c;
        c.terms.push_back(term(one, one, zero_poly, Character::none, lin(-1, 0), lin(1, 1),
                               {PochFactor::num(one, 1, 2, 2),
                                PochFactor::den(one, 1, 1, 2, 1)},
                               0));
        e.components.push_back(c);
        cat.add(e);
    }

    // psi5(w;q) = sum_{n>=0} (n|3) (-w)^{n-1} q^{(n^2-1)/3}
    {
        CatalogEntry e;
        e.name = "psi5";
        e.anchor = "psi5(w;q) = sum_{n>=0} (n|3) (-w)^(n-1) q^((n^2-1)/3)";
        Component c;
        c.terms.push_back(term(one, one, lin(1, -1), Character::chi3, lin(1, -1),
                               quad(frac(1, 3), 0, frac(-1, 3)), {}, 0));
        e.components.push_back(c);
        cat.add(e);
    }

    // s1(w;q) = (q;q^2)_inf / (w (wq, q/w; q^2)_inf) * (psi1(w;q^2)/w + 1)
    {
        CatalogEntry e;
        e.name = "s1";
        e.anchor = "s1(w;q) = (q;q^2)_inf (w (wq;q^2)_inf (w^-1 q;q^2)_inf)^-1 (w^-1 psi1(w;q^2) + 1)";
        e.excluded_w = {Rational(0)};
        auto products = std::vector<PochFactor>{PochFactor::inf_num(one, 0, 1, 2),
                                                PochFactor::inf_den(one, 1, 1, 2),
                                                PochFactor::inf_den(one, -1, 1, 2)};
        Component c0;
        c0.prefactor = rf(1) / (W() * W());
        c0.products = products;
        c0.subs.push_back(SubEntryAtom{"psi1", WSub{}, 2});
        e.components.push_back(c0);
        Component c1;
        c1.prefactor = rf(1) / W();
        c1.products = products;
        e.components.push_back(c1);
        cat.add(e);
    }

    // S5(w;q) = w (q;q^2)_inf / ((wq^2, q^2/w; q^2)_inf) * psi5(w;q)
    {
        CatalogEntry e;
        e.name = "S5";
        e.anchor = "S5(w;q) = w (q;q^2)_inf ((wq^2;q^2)_inf (w^-1 q^2;q^2)_inf)^-1 psi5(w;q)";
        e.excluded_w = {Rational(0)};
        Component c;
        c.prefactor = W();
        c.products.push_back(PochFactor::inf_num(one, 0, 1, 2));
        c.products.push_back(PochFactor::inf_den(one, 1, 2, 2));
        c.products.push_back(PochFactor::inf_den(one, -1, 2, 2));
        c.subs.push_back(SubEntryAtom{"psi5", WSub{}, 1});
        e.components.push_back(c);
        cat.add(e);
    }

    cat.add_alias("g3_1", "g3");
    cat.add_alias("g2_1", "g2");
    return cat;
}

} // namespace qmock
