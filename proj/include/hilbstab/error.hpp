#pragma once

#include <stdexcept>
#include <string>

namespace hilbstab {

/// Input data that cannot describe a surface or violates an operation's
/// precondition (bad parameters, odd adjunction parity, malformed spec).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The requested method does not apply to this surface, e.g. the intervals
/// are eventually empty or the gaps between them grow without bound.
class Inapplicable : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A finite window was too small to certify the requested result.
class HorizonError : public std::runtime_error {
 public:
  HorizonError(const std::string& what, long long best_n0 = -1,
               long long best_period = -1)
      : std::runtime_error(what), best_n0_(best_n0), best_period_(best_period) {}

  // Best (n0, period) candidate seen during the search, or -1 when none.
  long long best_n0() const noexcept { return best_n0_; }
  long long best_period() const noexcept { return best_period_; }

 private:
  long long best_n0_;
  long long best_period_;
};

}  // namespace hilbstab
