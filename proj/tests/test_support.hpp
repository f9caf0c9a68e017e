#ifndef PVI_TEST_SUPPORT_HPP
#define PVI_TEST_SUPPORT_HPP

#include <random>

#include "pvi/poly.hpp"
#include "pvi/quadratic.hpp"
#include "pvi/rational.hpp"

namespace pvi::testing {

/// Deterministic generators for the property tests.
struct Gen {
    std::mt19937 rng;

    explicit Gen(unsigned seed) : rng(seed) {}

    long long integer(long long lo, long long hi) {
        return std::uniform_int_distribution<long long>(lo, hi)(rng);
    }

    Rational rational(long long num_mag = 9, long long den_max = 4) {
        return Rational(integer(-num_mag, num_mag), integer(1, den_max));
    }

    Rational nonzero_rational(long long num_mag = 9, long long den_max = 4) {
        for (;;) {
            Rational r = rational(num_mag, den_max);
            if (!r.is_zero())
                return r;
        }
    }

    QuadScalar quad(long long d = 2) {
        return QuadScalar(rational(), rational(), d);
    }

    QuadScalar nonzero_quad(long long d = 2) {
        for (;;) {
            QuadScalar q = quad(d);
            if (!q.is_zero())
                return q;
        }
    }

    template <class K>
    Poly<K> poly(unsigned max_degree);
};

template <>
inline Poly<Rational> Gen::poly<Rational>(unsigned max_degree) {
    std::vector<Rational> coeffs(integer(0, max_degree) + 1);
    for (auto& c : coeffs)
        c = rational();
    return Poly<Rational>::from_coeffs(std::move(coeffs));
}

template <>
inline Poly<QuadScalar> Gen::poly<QuadScalar>(unsigned max_degree) {
    std::vector<QuadScalar> coeffs(integer(0, max_degree) + 1);
    for (auto& c : coeffs)
        c = quad();
    return Poly<QuadScalar>::from_coeffs(std::move(coeffs));
}

} // namespace pvi::testing

#endif
