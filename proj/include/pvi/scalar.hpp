#ifndef PVI_SCALAR_HPP
#define PVI_SCALAR_HPP

#include <concepts>
#include <optional>
#include <string>

#include "pvi/quadratic.hpp"
#include "pvi/rational.hpp"

namespace pvi {

/// An exact field element: Rational or QuadScalar.  Everything upstream
/// (polynomials, rational functions, series, solution families) is
/// generic over this.
template <typename K>
concept scalar_field = requires(const K& a, const K& b) {
    K{};
    K{1};
    { a + b } -> std::convertible_to<K>;
    { a - b } -> std::convertible_to<K>;
    { a * b } -> std::convertible_to<K>;
    { a / b } -> std::convertible_to<K>;
    { -a } -> std::convertible_to<K>;
    { a == b } -> std::convertible_to<bool>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.is_one() } -> std::convertible_to<bool>;
    { a.str() } -> std::convertible_to<std::string>;
    { as_machine_integer(a) } -> std::convertible_to<std::optional<long long>>;
};

static_assert(scalar_field<Rational>);
static_assert(scalar_field<QuadScalar>);

template <scalar_field K>
K scalar_from_rational(const Rational& r) {
    if constexpr (std::same_as<K, Rational>)
        return r;
    else
        return K(r);
}

/// True (with magnitude) iff v is an integer >= 0.
template <scalar_field K>
std::optional<long long> as_nonnegative_integer(const K& v,
                                                long long bound = kDefaultIntegerBound) {
    auto n = as_machine_integer(v, bound);
    if (!n || *n < 0)
        return std::nullopt;
    return n;
}

template <scalar_field K>
bool is_integer(const K& v) {
    return as_machine_integer(v).has_value();
}

} // namespace pvi

#endif
