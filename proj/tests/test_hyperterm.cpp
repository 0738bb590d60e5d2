#include <qmock/catalog.hpp>
#include <qmock/oracles.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace qmock;
using namespace qmock::builders;

namespace {

const WContext SYM = WContext::sym();

QSeries cmono(long long c, int k, int order) {
    return QSeries::monomial(RationalFunction(Rational(c)), k, order);
}
QSeries sone(int order) { return QSeries::constant(RationalFunction(Rational(1)), order); }

bool agree_to(const QSeries& a, const QSeries& b, int upto) {
    return !QSeries::first_mismatch(a, b, upto).has_value();
}

// (c * w^e * q^k) as a one-term series
QSeries wq_mono(const Rational& c, int e, int k, int order) {
    return QSeries::monomial(RationalFunction(c) * RationalFunction::w_power(e), k, order);
}

HypergeometricTerm f_term() {
    return term(Rational(1), Rational(1), ExpPoly{}, Character::none, ExpPoly{}, quad(1, 0, 0),
                {PochFactor::den(Rational(-1), 0, 1, 1, 0, 2)}, 0);
}

HypergeometricTerm g33_term() {
    return term(Rational(1), Rational(1), ExpPoly{}, Character::none, lin(-1, 0), lin(1, 0),
                {PochFactor::den(Rational(1), 1, 0, 1, 1)}, 0);
}

HypergeometricTerm g23_sum_term() {
    return term(Rational(1), Rational(1), ExpPoly{}, Character::none, lin(-1, 0), ExpPoly{},
                {PochFactor::num(Rational(-1), 1, 1), PochFactor::den(Rational(1), 1, 1)}, 0);
}

} // namespace

TEST_CASE("minimal q-order of summands") {
    CHECK(term_min_qorder(f_term(), 3) == 9);
    CHECK(term_min_qorder(g33_term(), 4) == 4);
    for (int n = 0; n <= 6; ++n)
        CHECK(term_min_qorder(g23_sum_term(), n) == 0);
}

TEST_CASE("termwise expansion matches the rank-parity oracle") {
    QSeries f = term_expand(f_term(), SYM, 12);
    for (int n = 0; n <= 12; ++n) {
        RationalFunction c = f.coeff(n);
        CHECK(c == RationalFunction(Rational(oracle::f_coeff_oracle(n))));
    }
    CHECK(f.coeff(1) == RationalFunction(Rational(1)));
    CHECK(f.coeff(2) == RationalFunction(Rational(-2)));
    CHECK(f.coeff(3) == RationalFunction(Rational(3)));
    CHECK(f.coeff(4) == RationalFunction(Rational(-3)));
}

TEST_CASE("false theta form of the partial theta series") {
    // sum q^{n(3n+1)/2} (1 - q^{2n+1}) = 1 - q + q^2 - q^5 + q^7 - q^12 + q^15
    QSeries s = term_expand(term(Rational(1), Rational(1), ExpPoly{}, Character::none,
                                 ExpPoly{}, quad(frac(3, 2), frac(1, 2), 0), {}, 0),
                            SYM, 15) +
                term_expand(term(Rational(-1), Rational(1), ExpPoly{}, Character::none,
                                 ExpPoly{}, quad(frac(3, 2), frac(5, 2), 1), {}, 0),
                            SYM, 15);
    QSeries expected = sone(15) - cmono(1, 1, 15) + cmono(1, 2, 15) - cmono(1, 5, 15) +
                       cmono(1, 7, 15) - cmono(1, 12, 15) + cmono(1, 15, 15);
    CHECK(agree_to(s, expected, 15));
    CHECK(s.coeff(5) == RationalFunction(Rational(-1)));
}

TEST_CASE("non-summable families are rejected") {
    // sum w^-n (with no q growth at all) never escapes the window
    CHECK_THROWS_AS(term_expand(g23_sum_term(), SYM, 6), NotFormallySummable);
    // and the partial theta series diverges outright at q -> 1/q
    HypergeometricTerm psi = term(Rational(1), Rational(1), ExpPoly{}, Character::chi12neg,
                                  ExpPoly{}, quad(frac(1, 24), 0, frac(-1, 24)), {}, 0);
    CHECK_THROWS_AS(term_invert_q(psi), NotFormallySummable);
}

TEST_CASE("rewrite at q -> 1/q: the base identity on random monomials") {
    // prod_{j=0}^{n-1} (1 - a q^-j) = (a^-1; q)_n (-a)^n q^{-n(n-1)/2}
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<int> cnum(-3, 3), e_dist(-1, 1), k_dist(-2, 2);
    int done = 0;
    while (done < 40) {
        int cn = cnum(rng);
        if (cn == 0)
            continue;
        Rational c(cn, 2);
        int e = e_dist(rng), k = k_dist(rng);
        for (int n = 0; n <= 6; ++n) {
            // Laurent factors cost tracked order, so work with plenty of slack.
            int order = 85;
            QSeries lhs = sone(order);
            for (int j = 0; j < n; ++j)
                lhs = lhs * (sone(order) - wq_mono(c, e, k - j, order));
            QSeries rhs = sone(order);
            for (int j = 0; j < n; ++j)
                rhs = rhs * (sone(order) - wq_mono(c.inverse(), -e, -k + j, order));
            rhs = rhs * wq_mono(c.pow(n) * Rational(n % 2 ? -1 : 1), e * n,
                                k * n - n * (n - 1) / 2, order);
            int upto = std::min(lhs.order(), rhs.order());
            REQUIRE(upto >= 8);
            CHECK(agree_to(lhs, rhs, 8));
        }
        ++done;
    }
}

TEST_CASE("rewrite at q -> 1/q: catalog shapes") {
    // f: q^{n^2}/(-q)_n^2  ->  q^n/(-q)_n^2
    HypergeometricTerm f_inv = term_invert_q(f_term());
    HypergeometricTerm f_inv_expected =
        term(Rational(1), Rational(1), ExpPoly{}, Character::none, ExpPoly{}, lin(1, 0),
             {PochFactor::den(Rational(-1), 0, 1, 1, 0, 2)}, 0);
    CHECK(agree_to(term_expand(f_inv, SYM, 10), term_expand(f_inv_expected, SYM, 10), 10));

    // fstar tail: (-1)^{n+1} q^n/(-q)_n -> -(-1)^n q^{n(n-1)/2}/(-q)_n
    HypergeometricTerm fstar_tail =
        term(Rational(1), Rational(1), lin(1, 1), Character::none, ExpPoly{}, lin(1, 0),
             {PochFactor::den(Rational(-1), 0, 1)}, 1);
    HypergeometricTerm expect =
        term(Rational(-1), Rational(1), lin(1, 0), Character::none, ExpPoly{},
             quad(frac(1, 2), frac(-1, 2), 0), {PochFactor::den(Rational(-1), 0, 1)}, 1);
    CHECK(agree_to(term_expand(term_invert_q(fstar_tail), SYM, 10),
                   term_expand(expect, SYM, 10), 10));

    // K: (-1)^n q^{n^2} (q;q^2)_n/((wq^2,w^-1 q^2;q^2)_n)
    //      -> q^{2n} (q;q^2)_n/((wq^2,w^-1 q^2;q^2)_n)
    HypergeometricTerm K =
        term(Rational(1), Rational(1), lin(1, 0), Character::none, ExpPoly{}, quad(1, 0, 0),
             {PochFactor::num(Rational(1), 0, 1, 2), PochFactor::den(Rational(1), 1, 2, 2),
              PochFactor::den(Rational(1), -1, 2, 2)},
             0);
    HypergeometricTerm K_expected =
        term(Rational(1), Rational(1), ExpPoly{}, Character::none, ExpPoly{}, lin(2, 0),
             {PochFactor::num(Rational(1), 0, 1, 2), PochFactor::den(Rational(1), 1, 2, 2),
              PochFactor::den(Rational(1), -1, 2, 2)},
             0);
    CHECK(agree_to(term_expand(term_invert_q(K), SYM, 10), term_expand(K_expected, SYM, 10),
                   10));
}

TEST_CASE("rewrite involution") {
    for (const auto& t : {f_term(), g33_term()}) {
        HypergeometricTerm twice = detail::invert_q_raw(detail::invert_q_raw(t));
        CHECK(agree_to(term_expand(twice, SYM, 10), term_expand(t, SYM, 10), 10));
    }
}

TEST_CASE("term substitution") {
    // psi2(w;q) under w -> -w^2: summand (-1)^n w^{2n} q^{n(n+1)/2}
    HypergeometricTerm psi2 = term(Rational(1), Rational(1), ExpPoly{}, Character::none,
                                   lin(1, 0), quad(frac(1, 2), frac(1, 2), 0), {}, 0);
    QSeries subbed = term_expand(term_substitute(psi2, Rational(-1), 2), SYM, 10);
    QSeries direct = term_expand(term(Rational(1), Rational(1), lin(1, 0), Character::none,
                                      lin(2, 0), quad(frac(1, 2), frac(1, 2), 0), {}, 0),
                                 SYM, 10);
    CHECK(agree_to(subbed, direct, 10));

    // psi3(w;q) under w -> 1/w: sum (-1)^{n+1} w^{-2n-1} q^{n^2}
    HypergeometricTerm psi3 = term(Rational(1), Rational(1), lin(1, 1), Character::none,
                                   lin(2, 1), quad(1, 0, 0), {}, 0);
    QSeries s = term_expand(term_substitute(psi3, Rational(1), -1), SYM, 9);
    CHECK(s.coeff(0) == -RationalFunction::w_power(-1));
    CHECK(s.coeff(1) == RationalFunction::w_power(-3));

    // substituting w -> 1/w twice is the identity
    HypergeometricTerm twice = term_substitute(term_substitute(g33_term(), Rational(1), -1),
                                               Rational(1), -1);
    CHECK(agree_to(term_expand(twice, SYM, 8), term_expand(g33_term(), SYM, 8), 8));
}

TEST_CASE("infinite products") {
    // (q;q)_inf to order 7, frozen against the factorwise product
    QSeries euler = poch_inf_expand({PochFactor::inf_num(Rational(1), 0, 1)}, SYM, 7);
    QSeries brute = sone(7);
    for (int j = 1; j <= 7; ++j)
        brute = brute * (sone(7) - cmono(1, j, 7));
    CHECK(agree_to(euler, brute, 7));
    QSeries expected =
        sone(7) - cmono(1, 1, 7) - cmono(1, 2, 7) + cmono(1, 5, 7) + cmono(1, 7, 7);
    CHECK(agree_to(euler, expected, 7));

    // (-1;q)_inf = 2 (-q;q)_inf
    QSeries lhs = poch_inf_expand({PochFactor::inf_num(Rational(-1), 0, 0)}, SYM, 10);
    QSeries rhs =
        poch_inf_expand({PochFactor::inf_num(Rational(-1), 0, 1)}, SYM, 10).scaled(
            RationalFunction(Rational(2)));
    CHECK(agree_to(lhs, rhs, 10));

    // denominator inversion: the eta-quotient T, frozen from an independent
    // expansion
    QSeries t = poch_inf_expand({PochFactor::inf_num(Rational(1), 0, 2, 2, 7),
                                 PochFactor::inf_den(Rational(1), 0, 1, 1, 3),
                                 PochFactor::inf_den(Rational(1), 0, 4, 4, 3)},
                                SYM, 4);
    QSeries t_expected = sone(4) + cmono(3, 1, 4) + cmono(2, 2, 4) + cmono(1, 3, 4) +
                         cmono(5, 4, 4);
    CHECK(agree_to(t, t_expected, 4));

    CHECK_THROWS_AS(poch_inf_expand({PochFactor::inf_num(Rational(1), 0, 0)}, SYM, 5),
                    DegenerateFactor);
}

TEST_CASE("bilateral theta sums") {
    // pentagonal numbers vs the Euler product, to order 30
    QSeries theta = theta_expand(Rational(-1), 0, frac(3, 2), frac(1, 2), SYM, 30);
    QSeries euler = poch_inf_expand({PochFactor::inf_num(Rational(1), 0, 1)}, SYM, 30);
    CHECK(agree_to(theta, euler, 30));

    // sum w^m q^{m^2} to order 4
    QSeries sq = theta_expand(Rational(1), 1, Rational(1), Rational(0), SYM, 4);
    CHECK(sq.coeff(0) == RationalFunction(Rational(1)));
    CHECK(sq.coeff(1) ==
          RationalFunction::w_power(1) + RationalFunction::w_power(-1));
    CHECK(sq.coeff(2).is_zero());
    CHECK(sq.coeff(4) ==
          RationalFunction::w_power(2) + RationalFunction::w_power(-2));

    CHECK_THROWS_AS(theta_expand(Rational(1), 0, Rational(-1), Rational(0), SYM, 5),
                    NotFormallySummable);
    CHECK_THROWS_AS(theta_expand(Rational(1), 0, frac(1, 2), Rational(0), SYM, 5),
                    DegenerateFactor);
}

TEST_CASE("bilateral sums with rank kernels") {
    // q^0 coefficient is 1/(1-w) (only n = 0 reaches order zero)
    QSeries rank = appell_lerch_expand(AppellKind::rank, SYM, 8);
    RationalFunction one_minus_w_inv =
        (RationalFunction(Rational(1)) - RationalFunction::w_power(1)).inverse();
    CHECK(rank.coeff(0) == one_minus_w_inv);

    // (q)_inf g3(2;q) equals the g3 kernel sum at w = 2
    WContext two = WContext::at(Rational(2));
    QSeries lhs = appell_lerch_expand(AppellKind::g3, two, 8);
    Catalog cat = Catalog::standard();
    QSeries euler = poch_inf_expand({PochFactor::inf_num(Rational(1), 0, 1)}, two, 8);
    QSeries rhs = (euler * catalog_series(cat, "g3", two, 8)).truncated(8);
    CHECK(agree_to(lhs, rhs, 8));

    // and symbolically: R(w;q) = (1-w)/(q)_inf * rank kernel sum, order 12
    QSeries rank12 = appell_lerch_expand(AppellKind::rank, SYM, 12);
    QSeries qinv =
        poch_inf_expand({PochFactor::inf_den(Rational(1), 0, 1)}, SYM, 12);
    QSeries lhs_sym = catalog_series(cat, "R", SYM, 12);
    QSeries rhs_sym = ((rank12 * qinv).truncated(12))
                          .scaled(RationalFunction(Rational(1)) - RationalFunction::w_power(1));
    CHECK(agree_to(lhs_sym, rhs_sym, 12));
}

TEST_CASE("basic hypergeometric series") {
    // F(0,0;q) is geometric
    QSeries f00 = fine_expand(Monomial{Rational(0), 0, 0}, Monomial{Rational(0), 0, 0},
                              Monomial{Rational(1), 0, 1}, 1, SYM, 3);
    for (int k = 0; k <= 3; ++k)
        CHECK(f00.coeff(k) == RationalFunction(Rational(1)));

    // (1-w) g3_3(w;q) = F(0, w; q/w), symbolically, to order 10
    Catalog cat = Catalog::standard();
    QSeries lhs = catalog_series(cat, "g3_3", SYM, 10)
                      .scaled(RationalFunction(Rational(1)) - RationalFunction::w_power(1));
    QSeries rhs = fine_expand(Monomial{Rational(0), 0, 0}, Monomial{Rational(1), 1, 0},
                              Monomial{Rational(1), -1, 1}, 1, SYM, 10);
    CHECK(agree_to(lhs, rhs, 10));

    // (1-a) F(a,-a;a) = 1 + 2 sum (-1)^n a^{2n} q^{n^2} with a = w (flat-t path)
    QSeries faaa = fine_expand(Monomial{Rational(1), 1, 0}, Monomial{Rational(-1), 1, 0},
                               Monomial{Rational(1), 1, 0}, 1, SYM, 12)
                       .scaled(RationalFunction(Rational(1)) - RationalFunction::w_power(1));
    QSeries expected = sone(12);
    for (int n = 1; n * n <= 12; ++n)
        expected = expected + QSeries::monomial(RationalFunction(Rational(n % 2 ? -2 : 2)) *
                                                    RationalFunction::w_power(2 * n),
                                                n * n, 12);
    CHECK(agree_to(faaa, expected, 12));

    CHECK_THROWS_AS(fine_expand(Monomial{Rational(0), 0, 0}, Monomial{Rational(0), 0, 0},
                                Monomial{Rational(1), 0, 0}, 1, SYM, 4),
                    DegenerateFactor);
}

TEST_CASE("both evaluation paths of F(a,b;t) agree when t has positive q-order") {
    std::mt19937_64 rng(1313);
    std::uniform_int_distribution<int> cdist(-3, 3), edist(-1, 1), kdist(1, 2);
    int done = 0;
    while (done < 25) {
        int ca = cdist(rng), cb = cdist(rng), ct = cdist(rng);
        if (ct == 0)
            continue;
        Monomial a{Rational(ca, 2), edist(rng), std::max(0, kdist(rng) - 1)};
        Monomial b{Rational(cb, 2), edist(rng), std::max(0, kdist(rng) - 1)};
        Monomial t{Rational(ct, 2), edist(rng), kdist(rng)};
        QSeries direct = fine_expand(a, b, t, 1, SYM, 10, FinePath::direct);
        QSeries recur = fine_expand(a, b, t, 1, SYM, 10, FinePath::recurrence);
        CHECK(agree_to(direct, recur, 10));
        ++done;
    }
}

TEST_CASE("stabilized tails agree with the difference-equation path") {
    // F(a,b;t) = sum (aq)_n/(bq)_n t^n with flat t: once as a stabilized
    // tail, once through the backward difference equation.
    const Rational a(2, 5), b(3, 2), t(-1, 3);
    QSeries stab = term_expand_stabilized(
        term(Rational(1), t, ExpPoly{}, Character::none, ExpPoly{}, ExpPoly{},
             {PochFactor::num(a, 0, 1), PochFactor::den(b, 0, 1)}, 0),
        SYM, 12);
    QSeries fine = fine_expand(Monomial{a, 0, 0}, Monomial{b, 0, 0}, Monomial{t, 0, 0}, 1,
                               SYM, 12);
    CHECK(agree_to(stab, fine, 12));

    // with t carrying a q power the stabilized path must match plain
    // termwise summation
    QSeries stab2 = term_expand_stabilized(
        term(Rational(1), t, ExpPoly{}, Character::none, ExpPoly{}, lin(1, 0),
             {PochFactor::num(a, 0, 0), PochFactor::den(b, 0, 0)}, 0),
        SYM, 12);
    QSeries direct2 = term_expand(
        term(Rational(1), t, ExpPoly{}, Character::none, ExpPoly{}, lin(1, 0),
             {PochFactor::num(a, 0, 0), PochFactor::den(b, 0, 0)}, 0),
        SYM, 12);
    CHECK(agree_to(stab2, direct2, 12));

    // arguments with negative q powers are rejected by the closure analysis
    CHECK_THROWS_AS(fine_expand(Monomial{a, 0, -1}, Monomial{b, 0, -1},
                                Monomial{t, 0, 0}, 1, SYM, 8),
                    DegenerateFactor);
}

TEST_CASE("flat families route through the difference equation automatically") {
    // the g2_3 summand has q-order zero for every n; term_expand_auto must
    // resum it through F(-w, w; 1/w)
    QSeries routed = term_expand_auto(g23_sum_term(), SYM, 10);
    // q^0 coefficient: sum w^{-n} = w/(w-1)
    RationalFunction expected0 =
        RationalFunction::w_power(1) *
        (RationalFunction::w_power(1) - RationalFunction(Rational(1))).inverse();
    CHECK(routed.coeff(0) == expected0);
}
