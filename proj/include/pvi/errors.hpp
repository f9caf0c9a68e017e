#ifndef PVI_ERRORS_HPP
#define PVI_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pvi {

/// Base class of everything this library throws.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Arithmetic domain violations: division by zero, mixed surd bases,
/// evaluation at a pole, integer-magnitude bounds.
class math_error : public error {
public:
    using error::error;
};

/// A declared precondition of a constructor or verifier was violated
/// (s = 0, s integer for the second-solution families, y identically
/// 0/1/x, ...).  Grid scans treat these as skippable, not fatal.
class precondition_error : public math_error {
public:
    using math_error::math_error;
};

/// The terminating-representation resolver found neither the direct nor
/// the swapped form terminating.
class no_representation_error : public math_error {
public:
    using math_error::math_error;
};

/// A constructed solution failed one of its own residual checks.
class verification_error : public error {
public:
    using error::error;
};

/// Expression or flag text that does not parse; carries the offset of
/// the offending character.
class parse_error : public error {
public:
    parse_error(const std::string& what, std::size_t position)
        : error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

} // namespace pvi

#endif
