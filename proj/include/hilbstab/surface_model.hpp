#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hilbstab/integer.hpp"

namespace hilbstab {

/// Intersection data of a smooth projective surface with q(X) = 0.
struct SurfaceData {
  Integer K_sq;                        // K_X . K_X
  Integer h2;                          // dim H^2(X, O_X)
  std::vector<Integer> point_degrees;  // degrees of geometrically reduced closed points
  bool char_zero = true;

  /// Throws InvalidInput if h2 < 0 or any degree is < 1 or the list is empty.
  void validate() const;
};

/// Numerical class of a line bundle: only c1(L)^2 and c1(L).K_X are tracked.
/// Ampleness is asserted by the caller, never derived.
struct LineBundleClass {
  Integer c1_sq;
  Integer c1_dot_K;
  bool ample_asserted = false;

  /// Nakai-Moishezon: an asserted ample class needs c1_sq > 0.
  void validate() const;

  bool operator==(const LineBundleClass&) const = default;
};

struct PolarizedSurface {
  SurfaceData surface;
  LineBundleClass bundle;
  std::string name;

  void validate() const;
};

/// Minimal rational conic bundle with r singular fibres, polarized by
/// L = -m K_X + a F where F is a smooth fibre over a closed point of
/// degree delta on the base conic.
struct ConicBundleData {
  Integer r;
  Integer delta;
  Integer m;
  Integer a;

  void validate() const;

  Integer K_sq() const { return 8 - r; }
  Integer F_dot_K() const { return -2 * delta; }
  Integer c1_dot_F() const { return 2 * m * delta; }
  Integer c1_sq() const;
  Integer c1_dot_K() const;

  /// c1(L).K_X < 0, i.e. a > m(r-8)/(2 delta).
  bool anticanonical_negative() const;

  /// Polarized data of (X, -mK + aF). `degrees` defaults to {1}.
  PolarizedSurface polarized(std::vector<Integer> degrees = {1},
                             bool char_zero = true) const;
};

/// Standard invariants for a named minimal geometrically rational surface.
///   projective_plane  ()             O(1)
///   quadric           ()             hyperplane class O(1)
///   del_pezzo         (dX)           anticanonical, 1 <= dX <= 9
///   conic_bundle      (r,delta,m,a)  -mK + aF
///   brauer_severi     (ind)          anticanonical, ind in {1,3}
PolarizedSurface catalog(std::string_view name, const std::vector<Integer>& params);

ConicBundleData make_conic_bundle(const Integer& r, const Integer& delta,
                                  const Integer& m, const Integer& a);

/// Scales c1 by e: (c1^2, c1.K) -> (e^2 c1^2, e c1.K).
LineBundleClass tensor_power(const LineBundleClass& L, const Integer& e);

/// Invariants of the blow-up of X along a 0-cycle of degree d_prime,
/// polarized by b^*(L^e)(-2E). The result is not asserted ample.
PolarizedSurface blow_up(const PolarizedSurface& P, const Integer& e,
                         const Integer& d_prime);

}  // namespace hilbstab
