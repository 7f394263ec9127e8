#include "hilbstab/integer.hpp"

#include <limits>

#include "hilbstab/error.hpp"

namespace hilbstab {

Integer parse_integer(const std::string& text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) throw InvalidInput("not an integer: '" + text + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (text[j] < '0' || text[j] > '9') throw InvalidInput("not an integer: '" + text + "'");
  }
  // mpz rejects a leading '+'
  return Integer(text[0] == '+' ? text.substr(1) : text, 10);
}

std::int64_t to_int64(const Integer& z) {
  if (z < std::numeric_limits<std::int64_t>::min() ||
      z > std::numeric_limits<std::int64_t>::max()) {
    throw InvalidInput("integer out of 64-bit range: " + z.get_str());
  }
  // mpz's get_si takes long, which is 64-bit on LP64 targets
  static_assert(sizeof(long) == sizeof(std::int64_t));
  return z.get_si();
}

Integer exact_half(const Integer& numerator, const char* what) {
  if (mpz_odd_p(numerator.get_mpz_t())) {
    throw InvalidInput(std::string("parity violation in ") + what + ": numerator " +
                       numerator.get_str() +
                       " is odd (D^2 + D.K must be even on a surface)");
  }
  Integer q;
  mpz_divexact_ui(q.get_mpz_t(), numerator.get_mpz_t(), 2);
  return q;
}

Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

}  // namespace hilbstab
