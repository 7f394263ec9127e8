#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hilbstab/integer.hpp"
#include "hilbstab/surface_model.hpp"

namespace hilbstab {

/// Validated contents of a surface spec document (JSON).
///
/// Recognised keys: name, K_sq, h2, char_zero, line_bundle {c1_sq, c1_dot_K,
/// ample_asserted}, points, conic {r, delta, m, a}, brauer_severi {ind},
/// blowup_cycles, kodaira {h0_omega_positive, h0_pluricanonical_positive}.
/// Integers may be JSON numbers or decimal strings of any length.
struct SurfaceSpec {
  enum class Kind { polarized, conic_bundle, brauer_severi };

  Kind kind = Kind::polarized;
  PolarizedSurface surface;            // filled for every kind
  std::optional<ConicBundleData> conic;
  std::optional<Integer> bs_index;
  std::vector<Integer> blowup_cycles;
  bool h0_omega_positive = false;
  bool h0_pluricanonical_positive = false;
};

/// Throws InvalidInput with the offending field path in the message.
SurfaceSpec parse_surface_spec_text(const std::string& text);
SurfaceSpec parse_surface_spec(const std::string& path);

}  // namespace hilbstab
