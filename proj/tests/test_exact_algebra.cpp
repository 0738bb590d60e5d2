#include <qmock/rational_function.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace qmock;

namespace {

RationalFunction rf_frac(const LaurentPoly& n, const LaurentPoly& d) {
    return RationalFunction::normalized(n, d);
}

LaurentPoly mono(long long c, int e) { return LaurentPoly::monomial(Rational(c), e); }

// Random rational functions built from small Laurent polynomials; seeded so
// every run checks the same inputs.
struct Gen {
    std::mt19937_64 rng{20240811};

    Rational rational() {
        std::uniform_int_distribution<int> num(-6, 6);
        std::uniform_int_distribution<int> den(1, 5);
        return Rational(num(rng), den(rng));
    }

    LaurentPoly poly(bool nonzero = false) {
        std::uniform_int_distribution<int> nterms(0, 3);
        std::uniform_int_distribution<int> exp(-3, 3);
        LaurentPoly p;
        int k = nterms(rng);
        for (int i = 0; i < k; ++i)
            p = p + LaurentPoly::monomial(rational(), exp(rng));
        if (nonzero && p.is_zero())
            p = LaurentPoly::one();
        return p;
    }

    RationalFunction rf(bool nonzero = false) {
        RationalFunction r = RationalFunction::normalized(poly(), poly(true));
        if (nonzero && r.is_zero())
            return RationalFunction(Rational(1));
        return r;
    }
};

} // namespace

TEST_CASE("rational arithmetic canonical form") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(0).den() == 1);
    CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational::parse("-7/3") == Rational(-7, 3));
    CHECK(Rational(22, 7).to_string() == "22/7");
}

TEST_CASE("fraction normalization cancels common factors") {
    // (w^2 - 1)/(w - 1) -> (w + 1)/1
    RationalFunction a = rf_frac(mono(1, 2) - mono(1, 0), mono(1, 1) - mono(1, 0));
    CHECK(a == RationalFunction::normalized(mono(1, 1) + mono(1, 0), LaurentPoly::one()));
    CHECK(a.to_string() == "1 + w");

    // content reduction: (2w)/4 -> w/2
    RationalFunction b = rf_frac(mono(2, 1), mono(4, 0));
    CHECK(b.to_string() == "(w)/(2)");

    // Laurent shift: (1 - 1/w)/1 -> (-1 + w)/w
    RationalFunction c = rf_frac(mono(1, 0) - mono(1, -1), mono(1, 0));
    CHECK(c.to_string() == "(-1 + w)/(w)");

    CHECK_THROWS_AS(rf_frac(mono(1, 0), LaurentPoly()), DivisionByZero);
}

TEST_CASE("normalization is idempotent and scale invariant") {
    Gen gen;
    for (int i = 0; i < 200; ++i) {
        LaurentPoly n = gen.poly();
        LaurentPoly d = gen.poly(true);
        Rational c = gen.rational();
        if (c.is_zero())
            c = Rational(3, 7);
        RationalFunction a = RationalFunction::normalized(n, d);
        RationalFunction b = RationalFunction::normalized(n.scaled(c), d.scaled(c));
        CHECK(a == b);
        CHECK(a == RationalFunction::normalized(a.num(), a.den()));
    }
}

TEST_CASE("field axioms on randomized rational functions") {
    Gen gen;
    for (int i = 0; i < 150; ++i) {
        RationalFunction a = gen.rf(), b = gen.rf(), c = gen.rf();
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        RationalFunction nz = gen.rf(true);
        CHECK(nz * nz.inverse() == RationalFunction(Rational(1)));
    }
}

TEST_CASE("evaluation is a ring homomorphism away from poles") {
    Gen gen;
    int done = 0;
    while (done < 100) {
        RationalFunction a = gen.rf(), b = gen.rf();
        Rational x = gen.rational();
        if (x.is_zero())
            continue;
        try {
            Rational va = a.eval(x), vb = b.eval(x);
            CHECK((a + b).eval(x) == va + vb);
            CHECK((a * b).eval(x) == va * vb);
            CHECK((a - b).eval(x) == va - vb);
            ++done;
        } catch (const PoleError&) {
            // pole hit; draw again
        }
    }
}

TEST_CASE("evaluation poles and special values") {
    // 1/(1-w) at 2 -> -1 and at 1 -> pole
    RationalFunction r = rf_frac(mono(1, 0), mono(1, 0) - mono(1, 1));
    CHECK(r.eval(Rational(2)) == Rational(-1));
    CHECK_THROWS_AS(r.eval(Rational(1)), PoleError);

    RationalFunction s = rf_frac(mono(1, 1) + mono(1, 0), mono(1, 0));
    CHECK(s.eval(Rational(-1)) == Rational(0));
}

TEST_CASE("partial fraction pair sums to one") {
    // 1/(1-w) + 1/(1-1/w) = 1
    RationalFunction a = rf_frac(mono(1, 0), mono(1, 0) - mono(1, 1));
    RationalFunction b = rf_frac(mono(1, 0), mono(1, 0) - mono(1, -1));
    CHECK(a + b == RationalFunction(Rational(1)));

    CHECK(RationalFunction::w_power(1) * RationalFunction::w_power(-1) ==
          RationalFunction(Rational(1)));
    CHECK((rf_frac(mono(1, 1) + mono(1, 0), mono(1, 0)) * RationalFunction()).is_zero());
}

TEST_CASE("w substitution") {
    // r(w) = (1+w)/w, r(1/w) = (1+w) ... (1 + 1/w)/(1/w) = w + 1
    RationalFunction r = rf_frac(mono(1, 0) + mono(1, 1), mono(1, 1));
    CHECK(r.substituted(Rational(1), -1) ==
          rf_frac(mono(1, 0) + mono(1, 1), mono(1, 0)));
    CHECK(r.substituted(Rational(-1), 1).eval(Rational(2)) == Rational(1, 2));
}

TEST_CASE("canonical rendering") {
    RationalFunction r = rf_frac(mono(2, 1) - mono(1, 0), mono(1, 0) - mono(1, 1));
    CHECK(r.to_string() == "(-1 + 2*w)/(1 - w)");
    CHECK(RationalFunction(Rational(-3, 2)).to_string() == "-3/2");
    CHECK(RationalFunction().to_string() == "0");
}
