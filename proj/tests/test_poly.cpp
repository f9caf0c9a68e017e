#include <catch2/catch_amalgamated.hpp>

#include "pvi/bipoly.hpp"
#include "pvi/parser.hpp"
#include "pvi/poly.hpp"
#include "pvi/ratfunc.hpp"
#include "test_support.hpp"

using namespace pvi;
using P = Poly<Rational>;
using R = RatFunc<Rational>;

namespace {

const char* kExampleW =
    "1-15*x+90*x^2-295*x^3+594*x^4-771*x^5+650*x^6-345*x^7+105*x^8-14*x^9";

P example_w() { return parse_poly<Rational>(kExampleW); }

} // namespace

TEST_CASE("polynomial arithmetic") {
    P onemx = parse_poly<Rational>("1-x");
    P onepx = parse_poly<Rational>("1+x");
    CHECK(onemx * onepx == parse_poly<Rational>("1-x^2"));

    auto [q, r] = divrem(parse_poly<Rational>("x^2-1"), parse_poly<Rational>("x-1"));
    CHECK(q == parse_poly<Rational>("x+1"));
    CHECK(r.is_zero());

    SECTION("the Heun solution multiplies out from its factors") {
        P cubic = parse_poly<Rational>("1-9*x+21*x^2-14*x^3");
        CHECK(onemx.pow(6) * cubic == example_w());
    }
    SECTION("division by zero polynomial") {
        CHECK_THROWS_AS(divrem(onepx, P::zero()), math_error);
    }
    SECTION("degree of zero is a sentinel") {
        CHECK(P::zero().is_zero());
        CHECK_THROWS_AS(P::zero().degree(), math_error);
    }
}

TEST_CASE("polynomial derivative") {
    CHECK(parse_poly<Rational>("1-15*x+90*x^2").derivative() ==
          parse_poly<Rational>("-15+180*x"));
    CHECK(P(Rational(7)).derivative().is_zero());
    CHECK(example_w().derivative().coeff(0) == Rational(-15));
}

TEST_CASE("polynomial gcd") {
    CHECK(gcd(parse_poly<Rational>("x^2-1"), parse_poly<Rational>("x-1")) ==
          parse_poly<Rational>("x-1"));
    P p = parse_poly<Rational>("3*x^2+3");
    CHECK(gcd(p, P::zero()) == p.monic());
    CHECK_THROWS_AS(gcd(P::zero(), P::zero()), math_error);

    SECTION("gcd(w, w') = (x-1)^5 for the factored Heun solution") {
        // Oracle: w = (1-x)^6 c with c squarefree and c(1) != 0, so the
        // common factor is exactly the multiplicity-reduced power.
        P cubic = parse_poly<Rational>("1-9*x+21*x^2-14*x^3");
        REQUIRE(gcd(cubic, cubic.derivative()).is_one());
        REQUIRE(!cubic.eval(Rational(1)).is_zero());
        P w = example_w();
        CHECK(gcd(w, w.derivative()) == parse_poly<Rational>("(x-1)^5"));
    }
}

TEST_CASE("gcd product property on random coprime pairs") {
    testing::Gen gen(424242);
    int done = 0;
    while (done < 40) {
        P a = gen.poly<Rational>(4), b = gen.poly<Rational>(4), g = gen.poly<Rational>(3);
        if (a.is_zero() || b.is_zero() || g.is_zero())
            continue;
        P common = gcd(a, b);
        a = divrem(a, common).first;
        b = divrem(b, common).first;
        if (a.is_constant() && b.is_constant())
            continue;
        CHECK(gcd(g * a, g * b) == g.monic());
        ++done;
    }
}

TEST_CASE("rational function arithmetic") {
    R x = R::variable();
    R one{Rational(1)};

    SECTION("derivative of 1/(1-x)") {
        R f = one / (one - x);
        R df = f.derivative();
        CHECK(df.num() == P::one());
        CHECK(df.den() == parse_poly<Rational>("x^2-2*x+1"));
    }
    SECTION("(x/(x-1)) ((x-1)/x) = 1") {
        R f(P::variable(), parse_poly<Rational>("x-1"));
        R g(parse_poly<Rational>("x-1"), P::variable());
        CHECK((f * g).is_one());
    }
    SECTION("the collapse reduces to degree 4 over degree 3") {
        P w = example_w();
        R y = x * (x - one) * R{w.derivative()} / (R{Rational(6)} * R{w});
        CHECK(y.num().degree() == 4);
        CHECK(y.den().degree() == 3);
        CHECK(y.den().leading().is_one());
    }
    SECTION("division by zero and poles") {
        R f(P::one(), parse_poly<Rational>("x-1"));
        CHECK_THROWS_AS(f / R{}, math_error);
        CHECK_THROWS_AS(f.eval(Rational(1)), math_error);
        CHECK(f.eval(Rational(3)) == Rational(1, 2));
    }
}

TEST_CASE("rational function normalization invariants") {
    testing::Gen gen(777);
    for (int i = 0; i < 40; ++i) {
        P num = gen.poly<Rational>(5);
        P den = gen.poly<Rational>(5);
        if (den.is_zero())
            continue;
        R f(num, den);
        // Reduced and denominator-monic.
        CHECK(f.den().leading().is_one());
        if (!f.num().is_zero())
            CHECK(gcd(f.num(), f.den()).is_one());
        // Normalizing again is the identity.
        CHECK(R(f.num(), f.den()) == f);
        // Derivative agrees with the explicitly assembled quotient rule.
        R expected = (R{f.num().derivative()} * R{f.den()} -
                      R{f.num()} * R{f.den().derivative()}) /
                     (R{f.den()} * R{f.den()});
        CHECK(f.derivative() == expected);
    }
}

TEST_CASE("bivariate polynomials") {
    using B = BiPoly<Rational>;
    B x = B::x(), y = B::y();

    CHECK((x + y) * (x - y) == x * x - y * y);
    B p = (x + y) * (x - y) + B::constant(Rational(3));
    CHECK((p - p).is_zero());

    SECTION("y(y-1)(y-x) expands as expected") {
        B one = B::constant(Rational(1));
        B expanded = y * (y - one) * (y - x);
        B expected = B::monomial(0, 3, Rational(1)) + B::monomial(0, 2, Rational(-1)) +
                     B::monomial(1, 2, Rational(-1)) + B::monomial(1, 1, Rational(1));
        CHECK(expanded == expected);

        // Cross-check by evaluation at sample points.
        testing::Gen gen(5150);
        for (int i = 0; i < 5; ++i) {
            Rational x0 = gen.rational(), y0 = gen.rational();
            Rational direct = y0 * (y0 - Rational(1)) * (y0 - x0);
            Rational via = 0;
            for (const auto& [m, c] : expanded.terms()) {
                Rational term = c;
                for (unsigned j = 0; j < m.first; ++j)
                    term *= x0;
                for (unsigned j = 0; j < m.second; ++j)
                    term *= y0;
                via += term;
            }
            CHECK(via == direct);
        }
    }
}
