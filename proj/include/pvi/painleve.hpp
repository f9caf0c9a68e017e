#ifndef PVI_PAINLEVE_HPP
#define PVI_PAINLEVE_HPP

#include "pvi/bipoly.hpp"
#include "pvi/ratfunc.hpp"

namespace pvi {

/// Parameters (alpha, beta, gamma, delta) of the sixth Painleve equation
///
///   y'' = 1/2 (1/y + 1/(y-1) + 1/(y-x)) y'^2
///         - (1/x + 1/(x-1) + 1/(y-x)) y'
///         + y(y-1)(y-x)/(x^2(x-1)^2)
///           { alpha + beta x/y^2 + gamma (x-1)/(y-1)^2
///             + delta x(x-1)/(y-x)^2 }.
template <scalar_field K>
struct PviParams {
    K alpha;
    K beta;
    K gamma;
    K delta;

    friend bool operator==(const PviParams&, const PviParams&) = default;
};

/// Coefficients of the Riccati equation x(x-1) y' = a y^2 + (bx+c) y + dx
/// with the constraint a + b + c + d = 0 enforced at construction.
template <scalar_field K>
class RiccatiCoeffs {
public:
    RiccatiCoeffs(K a, K b, K c, K d)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
        if (!(a_ + b_ + c_ + d_).is_zero())
            throw math_error("Riccati coefficients must satisfy a + b + c + d = 0");
    }

    const K& a() const { return a_; }
    const K& b() const { return b_; }
    const K& c() const { return c_; }
    const K& d() const { return d_; }

    friend bool operator==(const RiccatiCoeffs&, const RiccatiCoeffs&) = default;

private:
    K a_, b_, c_, d_;
};

/// Coefficients of the degenerate Heun equation
///   x(x-1)^2 w'' - (x-1)(rx+s) w' + t w = 0
/// reached by linearizing the Riccati equation; r = b-2, s = c+1, t = ad.
template <scalar_field K>
struct HeunCoeffs {
    K r;
    K s;
    K t;
};

template <scalar_field K>
K half_of(const K& v) {
    return v / K{2};
}

/// A Riccati solution solves P_VI(a^2/2, -d^2/2, (b+d)^2/2,
/// (1-(c+d+1)^2)/2).
template <scalar_field K>
PviParams<K> riccati_to_pvi(const RiccatiCoeffs<K>& rc) {
    K one{1};
    K cd1 = rc.c() + rc.d() + one;
    return {half_of(rc.a() * rc.a()),
            -half_of(rc.d() * rc.d()),
            half_of((rc.b() + rc.d()) * (rc.b() + rc.d())),
            half_of(one - cd1 * cd1)};
}

/// The Heun equation produced by the substitution y = -x(x-1)w'/(aw).
template <scalar_field K>
HeunCoeffs<K> riccati_to_heun(const RiccatiCoeffs<K>& rc) {
    return {rc.b() - K{2}, rc.c() + K{1}, rc.a() * rc.d()};
}

/// y'' minus the P_VI right-hand side, fully reduced; identically zero
/// iff y solves P_VI(p).  y identically 0, 1 or x makes the equation's
/// singular terms undefined and is rejected.
template <scalar_field K>
RatFunc<K> pvi_residual(const RatFunc<K>& y, const PviParams<K>& p) {
    using R = RatFunc<K>;
    R x = R::variable();
    R one{K{1}};
    if (y.is_zero() || y == one || y == x)
        throw precondition_error("y is identically " + y.str() +
                                 ", outside the equation's domain");

    R yp = y.derivative();
    R ypp = yp.derivative();
    R half{scalar_from_rational<K>(Rational(1, 2))};
    R ym1 = y - one;
    R ymx = y - x;
    R xm1 = x - one;

    R first = half * (one / y + one / ym1 + one / ymx) * yp * yp;
    R second = (one / x + one / xm1 + one / ymx) * yp;
    R bracket = R{p.alpha} + R{p.beta} * x / (y * y) + R{p.gamma} * xm1 / (ym1 * ym1) +
                R{p.delta} * x * xm1 / (ymx * ymx);
    R third = y * ym1 * ymx / (x * x * xm1 * xm1) * bracket;

    return ypp - (first - second + third);
}

/// x(x-1) y' - (a y^2 + (bx+c) y + dx), reduced.
template <scalar_field K>
RatFunc<K> riccati_residual(const RatFunc<K>& y, const RiccatiCoeffs<K>& rc) {
    using R = RatFunc<K>;
    R x = R::variable();
    R one{K{1}};
    R rhs = R{rc.a()} * y * y + (R{rc.b()} * x + R{rc.c()}) * y + R{rc.d()} * x;
    return x * (x - one) * y.derivative() - rhs;
}

/// y'^2 - 2(y-x)^2 {(beta+gamma) y - beta} / (x^2(x-1)^2), reduced; zero
/// iff y solves the first-order Garnier equation, hence P_VI(0, beta,
/// gamma, 0).
template <scalar_field K>
RatFunc<K> quadratic_residual(const RatFunc<K>& y, const K& beta, const K& gamma) {
    using R = RatFunc<K>;
    R x = R::variable();
    R one{K{1}};
    R yp = y.derivative();
    R ymx = y - x;
    R xm1 = x - one;
    R rhs = R{K{2}} * ymx * ymx * (R{beta + gamma} * y - R{beta}) / (x * x * xm1 * xm1);
    return yp * yp - rhs;
}

/// Residual of the Lemma-1 identity with y treated as a second
/// indeterminate and no constraint assumed on the coefficients: y'' from
/// the differentiated Riccati equation (with y' replaced by
/// (ay^2+(bx+c)y+dx)/(x(x-1))) minus the P_VI right-hand side with
/// parameters riccati_to_pvi, as the numerator over a nonvanishing
/// denominator.  Identically zero iff the identity holds.
template <scalar_field K>
BiPoly<K> lemma1_residual(const K& a, const K& b, const K& c, const K& d) {
    using B = BiRat<K>;
    auto cst = [](K v) { return B(BiPoly<K>::constant(std::move(v))); };
    B x{BiPoly<K>::x()};
    B y{BiPoly<K>::y()};
    B one = cst(K{1});
    B two = cst(K{2});
    B half = cst(scalar_from_rational<K>(Rational(1, 2)));

    B xm1 = x - one;
    B ym1 = y - one;
    B ymx = y - x;

    // q = x(x-1) y' on the Riccati equation.
    B q = cst(a) * y * y + (cst(b) * x + cst(c)) * y + cst(d) * x;
    B yp = q / (x * xm1);

    // Differentiate the Riccati equation and solve for y''.
    B lhs = (two * cst(a) * y + cst(b - K{2}) * x + cst(c + K{1})) * q / (x * x * xm1 * xm1) +
            (cst(b) * y + cst(d)) / (x * xm1);

    K cd1 = c + d + K{1};
    K alpha = half_of(a * a);
    K beta = -half_of(d * d);
    K gamma = half_of((b + d) * (b + d));
    K delta = half_of(K{1} - cd1 * cd1);

    B first = half * (one / y + one / ym1 + one / ymx) * yp * yp;
    B second = (one / x + one / xm1 + one / ymx) * yp;
    B bracket = cst(alpha) + cst(beta) * x / (y * y) + cst(gamma) * xm1 / (ym1 * ym1) +
                cst(delta) * x * xm1 / (ymx * ymx);
    B third = y * ym1 * ymx / (x * x * xm1 * xm1) * bracket;

    B diff = lhs - (first - second + third);
    return diff.num;
}

/// The Lemma-1 bivariate identity for coefficients satisfying the sum
/// constraint; must be the zero polynomial.
template <scalar_field K>
BiPoly<K> lemma1_identity(const RiccatiCoeffs<K>& rc) {
    return lemma1_residual(rc.a(), rc.b(), rc.c(), rc.d());
}

} // namespace pvi

#endif
