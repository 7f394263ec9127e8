#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hilbstab/integer.hpp"
#include "hilbstab/interval_engine.hpp"
#include "hilbstab/surface_model.hpp"

namespace hilbstab {

/// Hilb^n ~ Hilb^{n+step} for every n in `domain`.
struct Relation {
  Integer step;
  IntInterval domain;
};

/// Stable-birational classes of Hilb^n for 0 <= n <= horizon.
///
/// Labels are canonical: the least n in each class. `period` and `n0` are a
/// finite-window certificate: labels[n] == labels[n + period] for
/// n0 <= n <= horizon - period. `certified` requires horizon >= n0 + 2 period.
struct ClassPartition {
  std::int64_t horizon = 0;
  std::vector<std::int64_t> labels;
  std::int64_t n0 = 0;
  std::int64_t period = 1;
  bool certified = false;
  bool conditional = true;  // relations only valid for e >= e0

  std::int64_t label(std::int64_t n) const { return labels.at(static_cast<std::size_t>(n)); }
  /// Distinct labels occurring in [n0, horizon].
  std::vector<std::int64_t> eventual_classes() const;
};

struct IndexTerm {
  Integer coeff;  // nonzero
  Integer degree;
};

/// ind = sum of coeff * degree, positive terms listed first.
struct IndexResult {
  Integer g;
  std::vector<IndexTerm> combination;
  Integer evaluate() const;
};

IndexResult index(const std::vector<Integer>& point_degrees);

std::vector<Relation> relations_from_intervals(
    const std::vector<std::pair<IntInterval, Integer>>& intervals);

/// Union-find closure of the relations on {0..horizon}, followed by
/// extraction of the eventual (n0, period) certificate. The period is the
/// least divisor of the gcd of all steps that is periodic from n0.
ClassPartition partition(const std::vector<Relation>& relations, std::int64_t horizon);

/// Least n0 with labels[n] == labels[n+p] for all n0 <= n <= horizon - p.
std::int64_t periodic_from(const std::vector<std::int64_t>& labels, std::int64_t p);

/// Relations for a polarized surface with c1.K < 0 and c1^2 + c1.K <= 0:
/// I_e for e >= e_min and blow-up fillers for e >= e_min + 1 (only when
/// c1^2 + c1.K = 0), for each degree in the surface's point list.
/// `d_prime` defaults to 2 * max degree.
std::vector<Relation> polarized_relations(const PolarizedSurface& P, const Integer& e_min,
                                          std::int64_t horizon,
                                          std::optional<Integer> d_prime = std::nullopt);

/// Relations I_(e,b) for e >= e_min and b >= conic_b_bound(e, d), for each d.
std::vector<Relation> conic_relations(const ConicBundleData& CB,
                                      const std::vector<Integer>& point_degrees,
                                      const Integer& e_min, std::int64_t horizon);

ClassPartition polarized_classes(const PolarizedSurface& P, const Integer& e_min,
                                 std::int64_t horizon,
                                 std::optional<Integer> d_prime = std::nullopt);

ClassPartition del_pezzo_classes(const Integer& dX, const std::vector<Integer>& point_degrees,
                                 const Integer& e_min, std::int64_t horizon,
                                 std::optional<Integer> d_prime = std::nullopt);

ClassPartition conic_bundle_classes(const ConicBundleData& CB,
                                    const std::vector<Integer>& point_degrees,
                                    const Integer& e_min, std::int64_t horizon);

/// Hilb^n ~ Hilb^{gcd(n, ind)}; holds for every n, so not conditional.
ClassPartition brauer_severi_classes(const Integer& ind, std::int64_t horizon);

struct KodairaDiagnostic {
  bool blocked = false;
  std::string message;
};

/// Blocks the interval pipelines for surfaces with non-negative Kodaira
/// dimension, where no eventual equivalences exist.
KodairaDiagnostic kodaira_guard(bool h0_omega_positive, bool h0_omega_n_or_2n_positive);

}  // namespace hilbstab
