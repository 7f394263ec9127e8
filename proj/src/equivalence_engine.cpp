#include "hilbstab/equivalence_engine.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "hilbstab/error.hpp"

namespace hilbstab {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), least_(n) {
    std::iota(parent_.begin(), parent_.end(), std::int64_t{0});
    std::iota(least_.begin(), least_.end(), std::int64_t{0});
  }

  std::int64_t find(std::int64_t v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  void unite(std::int64_t a, std::int64_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    // the root with the smaller least element survives
    if (least_[b] < least_[a]) std::swap(a, b);
    parent_[b] = a;
  }

  std::int64_t least(std::int64_t v) { return least_[find(v)]; }

 private:
  std::vector<std::int64_t> parent_;
  std::vector<std::int64_t> least_;
};

std::vector<std::int64_t> divisors(std::int64_t g) {
  std::vector<std::int64_t> small, large;
  for (std::int64_t k = 1; k * k <= g; ++k) {
    if (g % k == 0) {
      small.push_back(k);
      if (k != g / k) large.push_back(g / k);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// Domain of n with both n and n + step inside [0, horizon].
std::optional<std::pair<std::int64_t, std::int64_t>> effective_range(const Relation& r,
                                                                     std::int64_t horizon) {
  if (r.step > horizon || r.domain.empty()) return std::nullopt;
  const Integer lo = std::max(r.domain.lo, Integer(0));
  const Integer hi = std::min(r.domain.hi, Integer(Integer(horizon) - r.step));
  if (lo > hi) return std::nullopt;
  return std::make_pair(to_int64(lo), to_int64(hi));
}

std::vector<Integer> distinct_degrees(const std::vector<Integer>& degrees) {
  std::set<Integer> seen(degrees.begin(), degrees.end());
  return {seen.begin(), seen.end()};
}

void check_period_divides_index(const ClassPartition& cp, const std::vector<Integer>& degrees) {
  if (cp.labels.empty()) return;
  const IndexResult ind = index(degrees);
  if (ind.g % cp.period != 0) {
    throw std::logic_error("eventual period " + std::to_string(cp.period) +
                           " does not divide the index " + ind.g.get_str());
  }
}

}  // namespace

std::vector<std::int64_t> ClassPartition::eventual_classes() const {
  std::set<std::int64_t> seen;
  for (std::int64_t n = n0; n <= horizon; ++n) seen.insert(label(n));
  return {seen.begin(), seen.end()};
}

Integer IndexResult::evaluate() const {
  Integer s = 0;
  for (const auto& t : combination) s += t.coeff * t.degree;
  return s;
}

IndexResult index(const std::vector<Integer>& point_degrees) {
  if (point_degrees.empty()) throw InvalidInput("index: empty list of point degrees");
  for (const auto& d : point_degrees) {
    if (d < 1) throw InvalidInput("index: point degrees must be positive");
  }
  auto gcd_of = [](const std::vector<Integer>& v) {
    Integer g = 0;
    for (const auto& d : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    return g;
  };
  const Integer g = gcd_of(point_degrees);

  // Greedy left-to-right pruning yields an inclusion-minimal support.
  std::vector<Integer> support = point_degrees;
  for (std::size_t i = 0; i < support.size();) {
    std::vector<Integer> trial = support;
    trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
    if (!trial.empty() && gcd_of(trial) == g) {
      support = std::move(trial);
    } else {
      ++i;
    }
  }

  // Iterated extended Euclid: running = sum coeffs[j] * support[j].
  std::vector<Integer> coeffs(support.size());
  coeffs[0] = 1;
  Integer running = support[0];
  for (std::size_t i = 1; i < support.size(); ++i) {
    Integer next, u, v;
    mpz_gcdext(next.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), running.get_mpz_t(),
               support[i].get_mpz_t());
    for (std::size_t j = 0; j < i; ++j) coeffs[j] *= u;
    coeffs[i] = v;
    running = next;
  }

  IndexResult out;
  out.g = g;
  for (int sign : {1, -1}) {
    for (std::size_t i = 0; i < support.size(); ++i) {
      if (sgn(coeffs[i]) == sign) out.combination.push_back({coeffs[i], support[i]});
    }
  }
  return out;
}

std::vector<Relation> relations_from_intervals(
    const std::vector<std::pair<IntInterval, Integer>>& intervals) {
  std::vector<Relation> out;
  for (const auto& [I, d] : intervals) {
    if (d < 1) throw InvalidInput("relation step must be positive, got " + d.get_str());
    if (!I.empty()) out.push_back({d, I});
  }
  return out;
}

std::int64_t periodic_from(const std::vector<std::int64_t>& labels, std::int64_t p) {
  const auto N = static_cast<std::int64_t>(labels.size()) - 1;
  for (std::int64_t n = N - p; n >= 0; --n) {
    if (labels[n] != labels[n + p]) return n + 1;
  }
  return 0;
}

ClassPartition partition(const std::vector<Relation>& relations, std::int64_t horizon) {
  if (horizon < 1) throw InvalidInput("horizon must be positive");
  ClassPartition cp;
  cp.horizon = horizon;
  cp.conditional = std::any_of(relations.begin(), relations.end(),
                               [](const Relation& r) { return r.domain.conditional; });

  DisjointSets sets(static_cast<std::size_t>(horizon) + 1);
  std::int64_t g = 0;
  for (const auto& r : relations) {
    if (r.step < 1) throw InvalidInput("relation step must be positive");
    const auto range = effective_range(r, horizon);
    if (!range) continue;
    const std::int64_t step = to_int64(r.step);
    g = std::gcd(g, step);
    for (std::int64_t n = range->first; n <= range->second; ++n) sets.unite(n, n + step);
  }

  cp.labels.resize(static_cast<std::size_t>(horizon) + 1);
  for (std::int64_t n = 0; n <= horizon; ++n) cp.labels[n] = sets.least(n);

  if (relations.empty()) {
    cp.n0 = 0;
    cp.period = 1;
    cp.certified = false;
    return cp;
  }
  if (g == 0) {
    throw HorizonError("horizon " + std::to_string(horizon) +
                       " is too small to evaluate any relation");
  }

  cp.n0 = periodic_from(cp.labels, g);
  cp.period = g;
  for (std::int64_t p : divisors(g)) {
    if (periodic_from(cp.labels, p) <= cp.n0) {
      cp.period = p;
      break;
    }
  }
  cp.certified = horizon >= cp.n0 + 2 * cp.period;
  return cp;
}

std::vector<Relation> polarized_relations(const PolarizedSurface& P, const Integer& e_min,
                                          std::int64_t horizon, std::optional<Integer> d_prime) {
  P.validate();
  if (e_min < 1) throw InvalidInput("e_min must be positive");
  const auto degrees = distinct_degrees(P.surface.point_degrees);
  if (!d_prime) d_prime = 2 * degrees.back();
  if (*d_prime < 1) throw InvalidInput("d' must be positive");
  if (P.bundle.c1_sq <= 0) throw Inapplicable("c1(L)^2 <= 0: L cannot be ample");

  std::vector<Relation> out;
  for (const auto& d : degrees) {
    const CoverageVerdict v = gaps_coverable(P, d, d_prime);
    if (!v.coverable) {
      throw Inapplicable("gaps between the intervals I_e are not coverable for d = " +
                         d.get_str() + " (" + std::string(to_string(v.reason)) +
                         (v.reason == CoverageReason::blowup_fill ? ", needs d' >= 2d" : "") +
                         ")");
    }
    const bool fill = v.reason == CoverageReason::blowup_fill;
    for (Integer e = e_min;; ++e) {
      const IntInterval I = interval_Ie(P, e, d);
      const bool before_vertex = 2 * e * P.bundle.c1_sq < -P.bundle.c1_dot_K;
      if (I.lo > horizon && !before_vertex) break;
      if (!I.empty()) out.push_back({d, I});
      if (fill) {
        IntInterval J = interval_Ie_blowup(P, e + 1, d, *d_prime);
        if (!J.empty()) out.push_back({d, std::move(J)});
      }
    }
  }
  return out;
}

std::vector<Relation> conic_relations(const ConicBundleData& CB,
                                      const std::vector<Integer>& point_degrees,
                                      const Integer& e_min, std::int64_t horizon) {
  CB.validate();
  if (e_min < 1) throw InvalidInput("e_min must be positive");
  if (!CB.anticanonical_negative()) {
    throw InvalidInput("conic bundle needs a > m(r-8)/(2 delta) so that c1(L).K_X < 0");
  }
  if (CB.c1_sq() <= 0) throw Inapplicable("c1(L)^2 <= 0: -mK + aF cannot be ample");
  if (point_degrees.empty()) throw InvalidInput("point_degrees must be nonempty");

  std::vector<Relation> out;
  for (const auto& d : distinct_degrees(point_degrees)) {
    if (d < 1) throw InvalidInput("point degrees must be positive");
    for (Integer e = e_min;; ++e) {
      // lo(I_(e,b)) >= lo(I_(e,0)), which is convex in e
      const IntInterval base = interval_conic(CB, e, 0, d);
      const bool before_vertex = 2 * e * CB.c1_sq() < -CB.c1_dot_K();
      if (base.lo > horizon && !before_vertex) break;
      for (Integer b = conic_b_bound(CB, e, d);; ++b) {
        IntInterval I = interval_conic(CB, e, b, d);
        if (I.lo > horizon) break;
        if (!I.empty()) out.push_back({d, std::move(I)});
      }
    }
  }
  return out;
}

ClassPartition polarized_classes(const PolarizedSurface& P, const Integer& e_min,
                                 std::int64_t horizon, std::optional<Integer> d_prime) {
  ClassPartition cp = partition(polarized_relations(P, e_min, horizon, d_prime), horizon);
  check_period_divides_index(cp, P.surface.point_degrees);
  return cp;
}

ClassPartition del_pezzo_classes(const Integer& dX, const std::vector<Integer>& point_degrees,
                                 const Integer& e_min, std::int64_t horizon,
                                 std::optional<Integer> d_prime) {
  PolarizedSurface P = catalog("del_pezzo", {dX});
  P.surface.point_degrees = point_degrees;
  return polarized_classes(P, e_min, horizon, d_prime);
}

ClassPartition conic_bundle_classes(const ConicBundleData& CB,
                                    const std::vector<Integer>& point_degrees,
                                    const Integer& e_min, std::int64_t horizon) {
  ClassPartition cp = partition(conic_relations(CB, point_degrees, e_min, horizon), horizon);
  check_period_divides_index(cp, point_degrees);
  return cp;
}

ClassPartition brauer_severi_classes(const Integer& ind, std::int64_t horizon) {
  if (ind != 1 && ind != 3) {
    throw InvalidInput("Brauer-Severi surface index must be 1 or 3, got " + ind.get_str());
  }
  if (horizon < 1) throw InvalidInput("horizon must be positive");
  const std::int64_t k = to_int64(ind);
  ClassPartition cp;
  cp.horizon = horizon;
  cp.conditional = false;
  cp.labels.resize(static_cast<std::size_t>(horizon) + 1);
  cp.labels[0] = 0;
  // gcd(n, ind) is itself the least member of its class
  for (std::int64_t n = 1; n <= horizon; ++n) cp.labels[n] = std::gcd(n, k);
  cp.n0 = 1;
  cp.period = k;
  cp.certified = horizon >= cp.n0 + 2 * cp.period;
  return cp;
}

KodairaDiagnostic kodaira_guard(bool h0_omega_positive, bool h0_omega_n_or_2n_positive) {
  if (h0_omega_positive) {
    return {true,
            "h0(K_X) > 0: Hilb^n and Hilb^n' are never stably birational for n != n' "
            "(Litt); no eventual equivalences are generated"};
  }
  if (h0_omega_n_or_2n_positive) {
    return {true,
            "a pluricanonical system is nonempty: Hilb^n ~ Hilb^n' only if n = n' "
            "(Wood); no eventual equivalences are generated"};
  }
  return {false, ""};
}

}  // namespace hilbstab
