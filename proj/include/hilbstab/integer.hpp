#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace hilbstab {

using Integer = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const Integer& z) { return z.get_str(); }

/// Parses a base-10 integer with optional leading sign. Throws InvalidInput.
Integer parse_integer(const std::string& text);

/// Exact conversion; throws InvalidInput when the value does not fit.
std::int64_t to_int64(const Integer& z);

/// Exact halving of an even numerator; throws InvalidInput with `what`
/// in the message when the numerator is odd.
Integer exact_half(const Integer& numerator, const char* what);

/// Canonicalized num/den; den must be nonzero.
inline Rational fraction(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Integer ceil(const Rational& q);

}  // namespace hilbstab
