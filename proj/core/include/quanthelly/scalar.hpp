#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace quanthelly {

/// Exact rational. GMP keeps mpq_class values canonical (reduced, positive
/// denominator) after every arithmetic operation.
using Scalar = mpq_class;
using Integer = mpz_class;

/// Parses "p/q", "-p/q" or an integer string. Throws InvalidArgument.
Scalar parse_scalar(std::string_view text);

/// Canonical text form: "p/q", or "p" when the denominator is one.
std::string format_scalar(const Scalar& value);

/// Decimal rendering with `digits` significant digits (for display only).
std::string format_decimal(const Scalar& value, int digits = 12);

Integer floor_of(const Scalar& value);
Integer ceil_of(const Scalar& value);

inline bool is_integral(const Scalar& value) { return value.get_den() == 1; }

Scalar abs_of(const Scalar& value);

/// Lower and upper rational bounds of sqrt(value) with absolute error at most
/// 2^-bits. Exact (lo == hi) whenever value is the square of a rational.
struct SqrtBounds {
  Scalar lo;
  Scalar hi;
};
SqrtBounds sqrt_bounds(const Scalar& value, unsigned bits);

/// Exact square root when value is a perfect rational square.
bool exact_sqrt(const Scalar& value, Scalar& root);

Scalar pow2(int exponent);

Integer binomial(unsigned n, unsigned k);

Integer lcm_of(const Integer& a, const Integer& b);

/// Scales a rational vector by a positive factor so that its entries become
/// coprime integers. The zero vector is returned unchanged.
std::vector<Scalar> primitive_integer_vector(const std::vector<Scalar>& v);

}  // namespace quanthelly
