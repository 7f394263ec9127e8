#include "hilbstab/interval_engine.hpp"

#include <algorithm>

#include "hilbstab/error.hpp"

namespace hilbstab {

namespace {

void require_positive(const Integer& v, const char* name) {
  if (v < 1) throw InvalidInput(std::string(name) + " must be positive, got " + v.get_str());
}

// (e^2 c1^2 + e c1.K) / 2, the L^e part of the arithmetic genus.
Integer half_plus(const PolarizedSurface& P, const Integer& e) {
  return exact_half(e * e * P.bundle.c1_sq + e * P.bundle.c1_dot_K, "e^2 c1^2 + e c1.K");
}

// (e^2 c1^2 - e c1.K) / 2, the L^e part of chi.
Integer half_minus(const PolarizedSurface& P, const Integer& e) {
  return exact_half(e * e * P.bundle.c1_sq - e * P.bundle.c1_dot_K, "e^2 c1^2 - e c1.K");
}

Integer c1_sum(const PolarizedSurface& P) { return P.bundle.c1_sq + P.bundle.c1_dot_K; }

// lo(I_e) is convex in e; it can only return below `horizon` while e is left
// of the vertex -c1.K / (2 c1^2).
bool before_vertex(const PolarizedSurface& P, const Integer& e) {
  return 2 * e * P.bundle.c1_sq < -P.bundle.c1_dot_K;
}

}  // namespace

std::string_view to_string(CoverageReason r) {
  switch (r) {
    case CoverageReason::overlap: return "overlap";
    case CoverageReason::blowup_fill: return "blowup-fill";
    case CoverageReason::growing_gaps: return "growing-gaps";
  }
  return "?";
}

Integer h0_asymptotic(const PolarizedSurface& P, const Integer& e) {
  require_positive(e, "e");
  return half_minus(P, e) + 1 + P.surface.h2;
}

Integer genus_bound(const PolarizedSurface& P, const Integer& e) {
  require_positive(e, "e");
  return half_plus(P, e) + 1;
}

IntInterval interval_Ie(const PolarizedSurface& P, const Integer& e, const Integer& d) {
  require_positive(e, "e");
  require_positive(d, "d");
  return {half_plus(P, e) + 1, half_minus(P, e) + P.surface.h2 - 2 * d, true};
}

IntInterval interval_Ie_blowup(const PolarizedSurface& P, const Integer& e, const Integer& d,
                               const Integer& d_prime) {
  require_positive(d_prime, "d'");
  IntInterval I = interval_Ie(P, e, d);
  I.lo -= d_prime;
  I.hi -= 3 * d_prime;
  return I;
}

IntInterval interval_conic(const ConicBundleData& CB, const Integer& e, const Integer& b,
                           const Integer& d) {
  CB.validate();
  require_positive(e, "e");
  require_positive(d, "d");
  if (b < 0) throw InvalidInput("b must be non-negative, got " + b.get_str());
  // (e c1 + bF)^2 and (e c1 + bF).K with F^2 = 0.
  const Integer S = e * e * CB.c1_sq() + 2 * e * b * CB.c1_dot_F();
  const Integer T = e * CB.c1_dot_K() + b * CB.F_dot_K();
  return {exact_half(S + T, "S + T") + 1, exact_half(S - T, "S - T") - 2 * d, true};
}

IntInterval gap(const PolarizedSurface& P, const Integer& e, const Integer& d) {
  const IntInterval cur = interval_Ie(P, e, d);
  const IntInterval next = interval_Ie(P, e + 1, d);
  return {cur.hi + 1, next.lo - 1, true};
}

Integer gap_width_formula(const PolarizedSurface& P, const Integer& e, const Integer& d) {
  require_positive(e, "e");
  require_positive(d, "d");
  return (2 * e + 1) * exact_half(c1_sum(P), "c1^2 + c1.K") + 2 * d;
}

Integer width_witness(const PolarizedSurface& P, const Integer& e, const Integer& d) {
  return -e * P.bundle.c1_dot_K + P.surface.h2 - 2 * d - 1;
}

bool infinitely_nonempty(const PolarizedSurface& P, const Integer& d) {
  require_positive(d, "d");
  return P.bundle.c1_dot_K < 0;
}

std::optional<Integer> nonempty_from(const PolarizedSurface& P, const Integer& d) {
  if (!infinitely_nonempty(P, d)) return std::nullopt;
  const Integer e = ceil(fraction(2 * d + 1 - P.surface.h2, -P.bundle.c1_dot_K));
  return std::max(e, Integer(1));
}

CoverageVerdict gaps_coverable(const PolarizedSurface& P, const Integer& d,
                               const std::optional<Integer>& d_prime) {
  require_positive(d, "d");
  if (P.bundle.c1_dot_K >= 0) {
    throw Inapplicable("c1(L).K_X = " + P.bundle.c1_dot_K.get_str() +
                       " >= 0: the intervals I_e are empty for all large e");
  }
  const Integer s = c1_sum(P);
  if (s < 0) return {true, CoverageReason::overlap};
  if (s == 0) return {d_prime.has_value() && *d_prime >= 2 * d, CoverageReason::blowup_fill};
  return {false, CoverageReason::growing_gaps};
}

std::vector<std::pair<Integer, Integer>> merge_intervals(std::vector<IntInterval> parts,
                                                         const Integer& horizon) {
  std::vector<std::pair<Integer, Integer>> clipped;
  for (auto& I : parts) {
    Integer lo = std::max(I.lo, Integer(0));
    Integer hi = std::min(I.hi, horizon);
    if (lo <= hi) clipped.emplace_back(std::move(lo), std::move(hi));
  }
  std::sort(clipped.begin(), clipped.end());
  std::vector<std::pair<Integer, Integer>> merged;
  for (auto& [lo, hi] : clipped) {
    if (!merged.empty() && lo <= merged.back().second + 1) {
      merged.back().second = std::max(merged.back().second, hi);
    } else {
      merged.emplace_back(lo, hi);
    }
  }
  return merged;
}

std::optional<Integer> covered_suffix(const std::vector<IntInterval>& parts,
                                      const Integer& horizon) {
  const auto merged = merge_intervals(parts, horizon);
  if (merged.empty() || merged.back().second != horizon) return std::nullopt;
  return merged.back().first;
}

Integer coverage_threshold(const PolarizedSurface& P, const Integer& d,
                           const std::optional<Integer>& d_prime, const Integer& e_min,
                           const Integer& horizon) {
  require_positive(e_min, "e_min");
  require_positive(horizon, "horizon");
  const CoverageVerdict v = gaps_coverable(P, d, d_prime);
  if (!v.coverable) {
    throw Inapplicable("gaps between the intervals I_e are not coverable (" +
                       std::string(to_string(v.reason)) + ")");
  }
  if (P.bundle.c1_sq <= 0) {
    throw Inapplicable("c1(L)^2 <= 0: L cannot be ample");
  }
  const bool fill = v.reason == CoverageReason::blowup_fill;
  std::vector<IntInterval> parts;
  for (Integer e = e_min;; ++e) {
    IntInterval I = interval_Ie(P, e, d);
    const bool live = I.lo <= horizon || before_vertex(P, e);
    if (!live) break;
    parts.push_back(std::move(I));
    if (fill) parts.push_back(interval_Ie_blowup(P, e + 1, d, *d_prime));
  }
  auto n_star = covered_suffix(parts, horizon);
  if (!n_star) {
    throw HorizonError("horizon " + horizon.get_str() + " is not covered by I_e with e >= " +
                       e_min.get_str());
  }
  return *n_star;
}

std::optional<Integer> gap_fill_onset(const PolarizedSurface& P, const Integer& d,
                                      const Integer& d_prime, const Integer& e_from,
                                      const Integer& e_to, const Integer& window) {
  require_positive(e_from, "e_from");
  Integer run_start = e_from;
  for (Integer f = e_from; f <= e_to + window; ++f) {
    const bool ok = interval_Ie_blowup(P, f + 1, d, d_prime).covers(gap(P, f, d));
    if (!ok) {
      run_start = f + 1;
      if (run_start > e_to) return std::nullopt;
    } else if (f - run_start >= window) {
      return run_start;
    }
  }
  return std::nullopt;
}

std::optional<UncoveredWitness> uncovered_gap_witness(const PolarizedSurface& P,
                                                      const Integer& d, const Integer& d_prime,
                                                      const Integer& e_from,
                                                      const Integer& e_to) {
  if (P.bundle.c1_sq <= 0) throw Inapplicable("c1(L)^2 <= 0: L cannot be ample");
  constexpr long kMaxPointsPerGap = 10000;
  for (Integer e = e_from; e <= e_to; ++e) {
    const IntInterval g = gap(P, e, d);
    long tried = 0;
    for (Integer n = g.lo; n <= g.hi && tried < kMaxPointsPerGap; ++n, ++tried) {
      bool covered = false;
      for (Integer f = 1; !covered; ++f) {
        const IntInterval I = interval_Ie(P, f, d);
        const IntInterval J = interval_Ie_blowup(P, f, d, d_prime);
        if (I.lo > n && J.lo > n && !before_vertex(P, f)) break;
        covered = I.contains(n) || J.contains(n);
      }
      if (!covered) return UncoveredWitness{e, n};
    }
  }
  return std::nullopt;
}

Integer conic_b_bound(const ConicBundleData& CB, const Integer& e, const Integer& d) {
  CB.validate();
  require_positive(e, "e");
  require_positive(d, "d");
  if (!CB.anticanonical_negative()) {
    throw InvalidInput("conic bundle needs a > m(r-8)/(2 delta) so that c1(L).K_X < 0");
  }
  const Rational bound = fraction(d, CB.delta) +
                         e * (fraction(CB.m * (CB.r - 8), 2 * CB.delta) - CB.a + CB.m) -
                         fraction(1, 2);
  return std::max(ceil(bound), Integer(0));
}

AssumptionReport check_assumptions(const PolarizedSurface& P, const Integer& e,
                                   const Integer& d, const Integer& n) {
  require_positive(d, "d");
  AssumptionReport r;
  r.h0 = h0_asymptotic(P, e);
  r.genus = genus_bound(P, e);
  r.a2_holds = r.h0 >= n + 1 + 2 * d;
  r.a5_holds = r.genus <= n;
  r.a1_a3_a4 = Tri::asymptotic_only;
  return r;
}

}  // namespace hilbstab
