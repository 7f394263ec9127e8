#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "hilbstab/integer.hpp"
#include "hilbstab/surface_model.hpp"

namespace hilbstab {

/// Closed integer interval [lo, hi]; empty when lo > hi.
///
/// `conditional` marks results that only hold for e >= e0(X, L, Q), a
/// threshold that exists but is not effectively computable.
struct IntInterval {
  Integer lo;
  Integer hi;
  bool conditional = true;

  bool empty() const { return lo > hi; }
  bool contains(const Integer& n) const { return lo <= n && n <= hi; }
  /// Number of integers in the interval (0 when empty).
  Integer size() const { return empty() ? Integer(0) : Integer(hi - lo + 1); }
  /// Whole of `other` lies inside this interval. An empty `other` is contained.
  bool covers(const IntInterval& other) const {
    return other.empty() || (!empty() && lo <= other.lo && other.hi <= hi);
  }

  bool operator==(const IntInterval& o) const { return lo == o.lo && hi == o.hi; }
};

enum class Tri { yes, no, asymptotic_only };

struct AssumptionReport {
  bool a2_holds = false;  // h0(L^e) >= n + 1 + 2d, with h0 = chi
  bool a5_holds = false;  // p_a of curves in |L^e| <= n
  Tri a1_a3_a4 = Tri::asymptotic_only;
  Integer h0;
  Integer genus;
};

enum class CoverageReason { overlap, blowup_fill, growing_gaps };

std::string_view to_string(CoverageReason r);

struct CoverageVerdict {
  bool coverable = false;
  CoverageReason reason = CoverageReason::growing_gaps;
};

/// chi(L^e) = (e^2 c1^2 - e c1.K)/2 + 1 + h2, equal to h0 once e >= e0.
Integer h0_asymptotic(const PolarizedSurface& P, const Integer& e);

/// Arithmetic genus of curves in |L^e|: (e^2 c1^2 + e c1.K)/2 + 1.
Integer genus_bound(const PolarizedSurface& P, const Integer& e);

/// Range of n for which (X, L^e, Q) with deg Q = d satisfies the numeric
/// assumptions; each such n gives Hilb^n ~ Hilb^{n+d}.
IntInterval interval_Ie(const PolarizedSurface& P, const Integer& e, const Integer& d);

/// Same range on the blow-up along a cycle of degree d_prime, polarized by
/// b^*(L^e)(-2E).
IntInterval interval_Ie_blowup(const PolarizedSurface& P, const Integer& e,
                               const Integer& d, const Integer& d_prime);

/// Interval for L^e(bF) on a conic bundle.
IntInterval interval_conic(const ConicBundleData& CB, const Integer& e,
                           const Integer& b, const Integer& d);

/// [hi(I_e) + 1, lo(I_{e+1}) - 1].
IntInterval gap(const PolarizedSurface& P, const Integer& e, const Integer& d);

/// Closed form of the gap width, (2e+1)(c1^2 + c1.K)/2 + 2d, as printed for
/// surfaces with h2 = 0.
Integer gap_width_formula(const PolarizedSurface& P, const Integer& e, const Integer& d);

/// hi(I_e) - lo(I_e) = -e c1.K + h2 - 2d - 1. I_e is nonempty iff >= 0.
Integer width_witness(const PolarizedSurface& P, const Integer& e, const Integer& d);

/// I_e is nonempty for infinitely many e iff c1.K < 0.
bool infinitely_nonempty(const PolarizedSurface& P, const Integer& d);

/// Least e >= 1 from which I_e stays nonempty, or nullopt when c1.K >= 0.
std::optional<Integer> nonempty_from(const PolarizedSurface& P, const Integer& d);

/// Whether the gaps between consecutive I_e are eventually closed, either by
/// overlap (c1^2 + c1.K < 0) or by blow-up intervals (c1^2 + c1.K = 0 and
/// d' >= 2d). Throws Inapplicable when c1.K >= 0.
CoverageVerdict gaps_coverable(const PolarizedSurface& P, const Integer& d,
                               const std::optional<Integer>& d_prime);

/// Least n* such that [n*, horizon] is covered by I_e (e >= e_min) and, when
/// c1^2 + c1.K = 0, by blow-up intervals for e >= e_min + 1.
/// Throws Inapplicable when the gaps are not coverable and HorizonError when
/// `horizon` itself is not covered.
Integer coverage_threshold(const PolarizedSurface& P, const Integer& d,
                           const std::optional<Integer>& d_prime,
                           const Integer& e_min, const Integer& horizon);

/// Least e in [e_from, e_to] such that gap_f lies inside the blow-up interval
/// of f + 1 for every f in [e, e + window].
std::optional<Integer> gap_fill_onset(const PolarizedSurface& P, const Integer& d,
                                      const Integer& d_prime, const Integer& e_from,
                                      const Integer& e_to, const Integer& window);

struct UncoveredWitness {
  Integer e;  // gap index
  Integer n;  // point of gap_e outside every I_f and blow-up interval
};

/// Searches e in [e_from, e_to] for a point of gap_e that no I_f and no
/// blow-up interval contains.
std::optional<UncoveredWitness> uncovered_gap_witness(const PolarizedSurface& P,
                                                      const Integer& d,
                                                      const Integer& d_prime,
                                                      const Integer& e_from,
                                                      const Integer& e_to);

/// Least non-negative integer b >= d/delta + e(m(r-8)/(2 delta) - a + m) - 1/2,
/// above which consecutive conic intervals overlap.
/// Throws InvalidInput unless c1.K < 0.
Integer conic_b_bound(const ConicBundleData& CB, const Integer& e, const Integer& d);

AssumptionReport check_assumptions(const PolarizedSurface& P, const Integer& e,
                                   const Integer& d, const Integer& n);

/// Sorted, merged union of the nonempty intervals, clipped to [0, horizon].
std::vector<std::pair<Integer, Integer>> merge_intervals(std::vector<IntInterval> parts,
                                                         const Integer& horizon);

/// Least n* with [n*, horizon] inside the union; nullopt if horizon is uncovered.
std::optional<Integer> covered_suffix(const std::vector<IntInterval>& parts,
                                      const Integer& horizon);

}  // namespace hilbstab
