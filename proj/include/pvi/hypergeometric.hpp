#ifndef PVI_HYPERGEOMETRIC_HPP
#define PVI_HYPERGEOMETRIC_HPP

#include <optional>
#include <utility>

#include "pvi/poly.hpp"

namespace pvi {

/// (a)_n = a(a+1)...(a+n-1), with (a)_0 = 1.
template <scalar_field K>
K pochhammer(const K& a, unsigned long n) {
    K acc{1};
    K factor = a;
    K one{1};
    for (unsigned long i = 0; i < n; ++i) {
        acc = acc * factor;
        factor = factor + one;
    }
    return acc;
}

/// Parameters of the Gauss series F(alpha, beta, gamma, x) =
/// sum_n (alpha)_n (beta)_n / (gamma)_n * x^n / n!.
template <scalar_field K>
struct HypParams {
    K alpha;
    K beta;
    K gamma;
};

inline constexpr unsigned long kSeriesCap = 64;

/// Degree at which the series terminates: the smaller magnitude among
/// alpha and beta that are nonpositive integers, or nullopt if neither
/// is (the series is then genuinely infinite).
template <scalar_field K>
std::optional<unsigned long> hyp_termination_degree(const HypParams<K>& p) {
    auto ma = as_nonpositive_integer(p.alpha);
    auto mb = as_nonpositive_integer(p.beta);
    if (ma && mb)
        return static_cast<unsigned long>(std::min(*ma, *mb));
    if (ma)
        return static_cast<unsigned long>(*ma);
    if (mb)
        return static_cast<unsigned long>(*mb);
    return std::nullopt;
}

namespace detail {

/// Coefficients of F up to degree m via the term recurrence
/// c_{n+1} = c_n (alpha+n)(beta+n) / ((gamma+n)(n+1)).
template <scalar_field K>
Poly<K> hyp_truncation(const HypParams<K>& p, unsigned long m) {
    std::vector<K> coeffs(m + 1, K{});
    K c{1};
    coeffs[0] = c;
    K a = p.alpha, b = p.beta, g = p.gamma;
    K one{1};
    for (unsigned long n = 0; n < m; ++n) {
        if (g.is_zero())
            throw math_error("vanishing (gamma)_n in hypergeometric series at n = " +
                             std::to_string(n + 1));
        K np1 = scalar_from_rational<K>(Rational(static_cast<long long>(n + 1)));
        c = c * a * b / (g * np1);
        coeffs[n + 1] = c;
        a = a + one;
        b = b + one;
        g = g + one;
    }
    return Poly<K>::from_coeffs(std::move(coeffs));
}

} // namespace detail

/// The terminating series as an exact polynomial.  Requires alpha or
/// beta to be a nonpositive integer and (gamma)_n nonzero through the
/// terminating degree, which must not exceed max_degree.
template <scalar_field K>
Poly<K> hyp_poly(const HypParams<K>& p, unsigned long max_degree = kSeriesCap) {
    auto m = hyp_termination_degree(p);
    if (!m)
        throw no_representation_error(
            "hypergeometric series does not terminate: neither alpha = " + p.alpha.str() +
            " nor beta = " + p.beta.str() + " is a nonpositive integer");
    if (*m > max_degree)
        throw math_error("terminating degree " + std::to_string(*m) +
                         " exceeds the series cap " + std::to_string(max_degree));
    return detail::hyp_truncation(p, *m);
}

/// Truncation of the (possibly non-terminating) series to the given
/// order.
template <scalar_field K>
Poly<K> hyp_series(const HypParams<K>& p, unsigned long order) {
    return detail::hyp_truncation(p, order);
}

/// d/dx F(alpha, beta, gamma, x) = (alpha*beta/gamma) F(alpha+1, beta+1,
/// gamma+1, x): the scale and the shifted parameters.
template <scalar_field K>
std::pair<K, HypParams<K>> hyp_derivative_params(const HypParams<K>& p) {
    if (p.gamma.is_zero())
        throw math_error("hypergeometric derivative relation needs gamma != 0");
    K one{1};
    return {p.alpha * p.beta / p.gamma,
            HypParams<K>{p.alpha + one, p.beta + one, p.gamma + one}};
}

/// Truncation of the binomial series (1-x)^e to the given order; the
/// coefficient of x^n is (-e)_n / n!.
template <scalar_field K>
Poly<K> binomial_series(const K& e, unsigned long order) {
    std::vector<K> coeffs(order + 1, K{});
    K c{1};
    coeffs[0] = c;
    K factor = -e;
    K one{1};
    for (unsigned long n = 0; n < order; ++n) {
        K np1 = scalar_from_rational<K>(Rational(static_cast<long long>(n + 1)));
        c = c * factor / np1;
        coeffs[n + 1] = c;
        factor = factor + one;
    }
    return Poly<K>::from_coeffs(std::move(coeffs));
}

} // namespace pvi

#endif
