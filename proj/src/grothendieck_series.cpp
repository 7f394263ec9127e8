#include "hilbstab/grothendieck_series.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "hilbstab/error.hpp"

namespace hilbstab {

// ---------------------------------------------------------------------------
// Monomials

Monomial Monomial::sym(unsigned i) {
  Monomial m;
  if (i == 1) {
    m.x = 1;
  } else if (i >= 2) {
    m.s.assign(i - 1, 0);
    m.s.back() = 1;
  }
  return m;
}

Monomial& Monomial::operator*=(const Monomial& o) {
  L += o.L;
  x += o.x;
  if (o.s.size() > s.size()) s.resize(o.s.size(), 0);
  for (std::size_t k = 0; k < o.s.size(); ++k) s[k] += o.s[k];
  while (!s.empty() && s.back() == 0) s.pop_back();
  return *this;
}

unsigned Monomial::degree() const {
  unsigned d = L + x;
  for (unsigned e : s) d += e;
  return d;
}

bool MonomialLess::operator()(const Monomial& a, const Monomial& b) const {
  const unsigned da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  if (a.L != b.L) return a.L < b.L;
  if (a.x != b.x) return a.x < b.x;
  const std::size_t n = std::max(a.s.size(), b.s.size());
  for (std::size_t k = 0; k < n; ++k) {
    const unsigned ea = k < a.s.size() ? a.s[k] : 0;
    const unsigned eb = k < b.s.size() ? b.s[k] : 0;
    if (ea != eb) return ea < eb;
  }
  return false;
}

namespace {

void append_power(std::string& out, const std::string& sym, unsigned e) {
  if (e == 0) return;
  if (!out.empty()) out += '*';
  out += sym;
  if (e > 1) out += "^" + std::to_string(e);
}

std::string monomial_str(const Monomial& m) {
  std::string out;
  for (std::size_t k = 0; k < m.s.size(); ++k) append_power(out, "s" + std::to_string(k + 2), m.s[k]);
  append_power(out, "x", m.x);
  append_power(out, "L", m.L);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// ClassPoly

ClassPoly::ClassPoly(const Integer& constant) { add(Monomial{}, constant); }

ClassPoly::ClassPoly(const Monomial& m, const Integer& coeff) { add(m, coeff); }

void ClassPoly::add(const Monomial& m, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ClassPoly& ClassPoly::operator+=(const ClassPoly& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

ClassPoly& ClassPoly::operator-=(const ClassPoly& o) {
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

ClassPoly operator*(const ClassPoly& a, const ClassPoly& b) {
  ClassPoly out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m = ma;
      m *= mb;
      out.add(m, ca * cb);
    }
  }
  return out;
}

Integer ClassPoly::evaluate(const Integer& L, const Integer& x, const Integer& s) const {
  auto pow = [](const Integer& base, unsigned e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
  };
  Integer total = 0;
  for (const auto& [m, c] : terms_) {
    Integer v = c * pow(L, m.L) * pow(x, m.x);
    for (unsigned e : m.s) v *= pow(s, e);
    total += v;
  }
  return total;
}

std::string ClassPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const std::string body = monomial_str(m);
    const Integer mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (body.empty()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += body;
    }
    first = false;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Partitions and the Hilbert scheme class

std::vector<std::vector<unsigned>> partitions(unsigned n) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> mult(n, 0);
  // parts emitted in non-increasing order, largest first
  std::function<void(unsigned, unsigned)> rec = [&](unsigned remaining, unsigned max_part) {
    if (remaining == 0) {
      out.push_back(mult);
      return;
    }
    for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
      ++mult[part - 1];
      rec(remaining - part, part);
      --mult[part - 1];
    }
  };
  rec(n, n);
  return out;
}

ClassPoly goettsche_class(unsigned n) {
  ClassPoly total;
  for (const auto& a : partitions(n)) {
    Monomial m;
    unsigned length = 0;
    for (unsigned ai : a) {
      m *= Monomial::sym(ai);
      length += ai;
    }
    m.L += n - length;
    total += ClassPoly(m);
  }
  return total;
}

ClassPoly reduce_mod_L(const ClassPoly& p) {
  ClassPoly out;
  for (const auto& [m, c] : p.terms()) {
    if (m.L == 0) out += ClassPoly(m, c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Zeta series

std::string label_str(ClassLabel c) { return c == kUnitClass ? "1" : "c" + std::to_string(c); }

ClassLabel RationalSeries::coefficient(std::int64_t n) const {
  if (n < n0) return head.at(static_cast<std::size_t>(n));
  return tail.at(static_cast<std::size_t>((n - n0) % p));
}

namespace {

std::string term_str(ClassLabel c, std::int64_t k) {
  std::string t = k == 0 ? "" : (k == 1 ? "t" : "t^" + std::to_string(k));
  if (c == kUnitClass) return t.empty() ? "1" : t;
  return t.empty() ? label_str(c) : label_str(c) + "*" + t;
}

}  // namespace

std::string RationalSeries::str() const {
  std::ostringstream os;
  for (std::int64_t k = 0; k < n0; ++k) {
    if (k > 0) os << " + ";
    os << term_str(head[k], k);
  }
  if (n0 > 0) os << " + ";
  os << "(";
  for (std::int64_t j = 0; j < p; ++j) {
    if (j > 0) os << " + ";
    os << term_str(tail[j], n0 + j);
  }
  os << ")/(1 - " << (p == 1 ? std::string("t") : "t^" + std::to_string(p)) << ")";
  return os.str();
}

LabeledSeries zeta_series(const ClassPartition& classes, std::int64_t horizon,
                          bool allow_uncertified) {
  if (horizon < 0) throw InvalidInput("zeta horizon must be non-negative");
  if (horizon > classes.horizon) {
    throw InvalidInput("zeta horizon " + std::to_string(horizon) +
                       " exceeds the partition horizon " + std::to_string(classes.horizon));
  }
  if (!classes.certified && !allow_uncertified) {
    throw HorizonError("class partition is not certified (needs horizon >= n0 + 2*period)",
                       classes.n0, classes.period);
  }
  LabeledSeries s;
  s.coefficients.reserve(static_cast<std::size_t>(horizon) + 1);
  s.coefficients.push_back(kUnitClass);
  for (std::int64_t n = 1; n <= horizon; ++n) s.coefficients.push_back(classes.label(n));
  return s;
}

RationalSeries rationalize(const LabeledSeries& s) {
  const auto& c = s.coefficients;
  const std::int64_t N = s.horizon();
  if (N < 0) throw InvalidInput("cannot rationalize an empty series");
  std::int64_t best_n0 = -1, best_p = -1;
  for (std::int64_t p = 1; 2 * p <= N; ++p) {
    std::int64_t n0 = 0;
    for (std::int64_t n = N - p; n >= 0; --n) {
      if (c[n] != c[n + p]) {
        n0 = n + 1;
        break;
      }
    }
    if (N >= n0 + 2 * p) {
      RationalSeries r;
      r.n0 = n0;
      r.p = p;
      r.head.assign(c.begin(), c.begin() + n0);
      r.tail.assign(c.begin() + n0, c.begin() + n0 + p);
      return r;
    }
    if (best_p < 0 || n0 + 2 * p < best_n0 + 2 * best_p) {
      best_n0 = n0;
      best_p = p;
    }
  }
  throw HorizonError("no eventually periodic certificate within horizon " + std::to_string(N) +
                         (best_p > 0 ? "; best candidate n0=" + std::to_string(best_n0) +
                                           " period=" + std::to_string(best_p)
                                     : std::string()),
                     best_n0, best_p);
}

bool verify_rational(const RationalSeries& r, const LabeledSeries& s, std::int64_t N) {
  if (N > s.horizon()) {
    throw InvalidInput("verification order exceeds the series horizon");
  }
  if (r.p < 1 || r.n0 < 0 || static_cast<std::int64_t>(r.head.size()) != r.n0 ||
      static_cast<std::int64_t>(r.tail.size()) != r.p) {
    return false;
  }
  // Coefficients live in the free abelian group on class labels.
  using Element = std::map<ClassLabel, long long>;
  auto bump = [](Element& el, ClassLabel c, long long by) {
    if ((el[c] += by) == 0) el.erase(c);
  };
  for (std::int64_t k = 0; k <= N; ++k) {
    Element lhs, rhs;
    if (k < r.n0) bump(lhs, r.head[k], 1);
    if (k - r.p >= 0 && k - r.p < r.n0) bump(lhs, r.head[k - r.p], -1);
    if (k >= r.n0 && k - r.n0 < r.p) bump(lhs, r.tail[k - r.n0], 1);
    bump(rhs, s.coefficients[k], 1);
    if (k - r.p >= 0) bump(rhs, s.coefficients[k - r.p], -1);
    if (lhs != rhs) return false;
  }
  return true;
}

}  // namespace hilbstab
