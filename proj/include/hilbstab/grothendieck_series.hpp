#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hilbstab/equivalence_engine.hpp"
#include "hilbstab/integer.hpp"

namespace hilbstab {

/// Monomial in L = [A^1], x = [X] = s_1 and s_i = [Sym^i X] for i >= 2.
///
/// `s[k]` is the exponent of s_{k+2}; trailing zeros are never stored.
struct Monomial {
  unsigned L = 0;
  unsigned x = 0;
  std::vector<unsigned> s;

  static Monomial sym(unsigned i);  // s_0 = 1, s_1 = x
  Monomial& operator*=(const Monomial& o);
  unsigned degree() const;
  bool operator==(const Monomial&) const = default;
};

/// Graded lexicographic order on (L, x, s_2, s_3, ...), smallest first.
struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Integer polynomial in commuting class symbols. No zero coefficients.
class ClassPoly {
 public:
  ClassPoly() = default;
  ClassPoly(const Integer& constant);  // NOLINT: implicit on purpose for literals
  ClassPoly(const Monomial& m, const Integer& coeff = 1);

  static ClassPoly L() { return ClassPoly(Monomial{1, 0, {}}); }
  static ClassPoly x() { return ClassPoly(Monomial{0, 1, {}}); }
  static ClassPoly sym(unsigned i) { return ClassPoly(Monomial::sym(i)); }

  ClassPoly& operator+=(const ClassPoly& o);
  ClassPoly& operator-=(const ClassPoly& o);
  friend ClassPoly operator+(ClassPoly a, const ClassPoly& b) { return a += b; }
  friend ClassPoly operator-(ClassPoly a, const ClassPoly& b) { return a -= b; }
  friend ClassPoly operator*(const ClassPoly& a, const ClassPoly& b);
  bool operator==(const ClassPoly& o) const { return terms_ == o.terms_; }

  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Integer, MonomialLess>& terms() const { return terms_; }

  /// Value with every symbol replaced by the given integers
  /// (s_i for i >= 2 all take `s`).
  Integer evaluate(const Integer& L, const Integer& x, const Integer& s) const;

  /// Canonical ASCII rendering, e.g. "s3 + x^2*L + x*L^2"; "0" when zero.
  std::string str() const;

 private:
  void add(const Monomial& m, const Integer& c);
  std::map<Monomial, Integer, MonomialLess> terms_;
};

/// Multiplicity vectors (a_1, ..., a_n) with sum i*a_i = n, in reverse
/// lexicographic order of the underlying partitions. n = 0 gives one empty vector.
std::vector<std::vector<unsigned>> partitions(unsigned n);

/// [Hilb^n X] = sum over partitions of n of
/// [Sym^{a_1} X x ... x Sym^{a_n} X x A^{n - |alpha|}].
ClassPoly goettsche_class(unsigned n);

/// Image in K_0(Var)/(L): drops every monomial divisible by L.
ClassPoly reduce_mod_L(const ClassPoly& p);

/// Opaque stable-birational class label; the unit class of Hilb^0 is kUnitClass.
using ClassLabel = std::int64_t;
inline constexpr ClassLabel kUnitClass = -1;

std::string label_str(ClassLabel c);  // "1" or "c<label>"

/// 1 + sum mu_L([Hilb^n]) t^n truncated at `horizon`.
struct LabeledSeries {
  std::vector<ClassLabel> coefficients;  // coefficients[0] == kUnitClass
  std::int64_t horizon() const { return static_cast<std::int64_t>(coefficients.size()) - 1; }
};

/// head + t^n0 * tail / (1 - t^p).
struct RationalSeries {
  std::vector<ClassLabel> head;  // degree < n0
  std::vector<ClassLabel> tail;  // degree < p
  std::int64_t n0 = 0;
  std::int64_t p = 1;

  ClassLabel coefficient(std::int64_t n) const;
  /// "1 + (c1*t + c1*t^2 + c3*t^3)/(1 - t^3)"
  std::string str() const;
};

/// Throws InvalidInput if horizon exceeds the partition's horizon, and
/// HorizonError if the partition is uncertified and `allow_uncertified` is false.
LabeledSeries zeta_series(const ClassPartition& classes, std::int64_t horizon,
                          bool allow_uncertified = false);

/// Least period p, then least n0, with horizon >= n0 + 2p.
/// Throws HorizonError carrying the best candidate when none exists.
RationalSeries rationalize(const LabeledSeries& s);

/// Compares head*(1 - t^p) + t^n0 * tail with s*(1 - t^p) through t^N,
/// coefficientwise in the free abelian group on class labels.
bool verify_rational(const RationalSeries& r, const LabeledSeries& s, std::int64_t N);

}  // namespace hilbstab
