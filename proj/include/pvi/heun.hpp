#ifndef PVI_HEUN_HPP
#define PVI_HEUN_HPP

#include <vector>

#include "pvi/linalg.hpp"
#include "pvi/painleve.hpp"
#include "pvi/poly.hpp"

namespace pvi {

enum class HeunStatus {
    ok,
    /// The system was solved and its null space is trivial.
    empty_null_space,
    /// r + 1 is not a nonnegative integer, so no nonzero polynomial
    /// degree is admissible and no system was solved.
    no_degree_bound,
};

template <scalar_field K>
struct HeunSolutions {
    HeunStatus status = HeunStatus::ok;
    std::vector<Poly<K>> basis;
};

/// Basis of all polynomial solutions of the degenerate Heun equation
///   x(x-1)^2 w'' - (x-1)(rx+s) w' + t w = 0.
///
/// The x^(m+1) coefficient of the left side for w of degree m is
/// m(m-1-r) c_m, so nonconstant solutions need degree exactly r+1; the
/// full exact linear system over degrees 0..r+1 is solved (a forward
/// recurrence would miss null spaces of dimension > 1), and each basis
/// element is normalized to first nonzero coefficient 1.
template <scalar_field K>
HeunSolutions<K> heun_poly_solutions(const HeunCoeffs<K>& h,
                                     unsigned long max_degree = 256) {
    auto bound = as_nonnegative_integer(h.r + K{1});
    if (!bound)
        return {HeunStatus::no_degree_bound, {}};
    if (static_cast<unsigned long>(*bound) > max_degree)
        throw math_error("Heun degree bound " + std::to_string(*bound) +
                         " exceeds the cap " + std::to_string(max_degree));

    std::size_t n = static_cast<std::size_t>(*bound);
    // Coefficient of x^i in the equation, as a linear form in c_0..c_n.
    Matrix<K> m(n + 2, n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
        K cj = scalar_from_rational<K>(Rational(static_cast<long long>(j)));
        K cjm1 = scalar_from_rational<K>(Rational(static_cast<long long>(j) - 1));
        K jj1 = cj * cjm1; // j(j-1)
        m.at(j + 1, j) = m.at(j + 1, j) + jj1 - h.r * cj;
        m.at(j, j) = m.at(j, j) - K{2} * jj1 + (h.r - h.s) * cj + h.t;
        if (j >= 1)
            m.at(j - 1, j) = m.at(j - 1, j) + jj1 + h.s * cj;
    }

    HeunSolutions<K> out;
    for (std::vector<K>& v : nullspace(std::move(m))) {
        Poly<K> w = Poly<K>::from_coeffs(std::move(v));
        for (const K& c : w.coeffs()) {
            if (!c.is_zero()) {
                w = w / c;
                break;
            }
        }
        out.basis.push_back(std::move(w));
    }
    out.status = out.basis.empty() ? HeunStatus::empty_null_space : HeunStatus::ok;
    return out;
}

} // namespace pvi

#endif
