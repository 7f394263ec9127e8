#include "hilbstab/surface_model.hpp"

#include <string>

#include "hilbstab/error.hpp"

namespace hilbstab {

void SurfaceData::validate() const {
  if (h2 < 0) throw InvalidInput("h2 must be non-negative, got " + h2.get_str());
  if (point_degrees.empty()) throw InvalidInput("point_degrees must be nonempty");
  for (const auto& d : point_degrees) {
    if (d < 1) throw InvalidInput("point degrees must be positive, got " + d.get_str());
  }
}

void LineBundleClass::validate() const {
  if (ample_asserted && c1_sq <= 0) {
    throw InvalidInput("an ample class needs c1_sq > 0, got " + c1_sq.get_str());
  }
}

void PolarizedSurface::validate() const {
  surface.validate();
  bundle.validate();
}

void ConicBundleData::validate() const {
  if (r < 0) throw InvalidInput("conic bundle: r must be non-negative");
  if (delta < 1) throw InvalidInput("conic bundle: delta must be positive");
  if (m <= 0) throw InvalidInput("conic bundle: m must be positive for -mK + aF to be ample");
}

Integer ConicBundleData::c1_sq() const { return m * m * (8 - r) + 4 * a * m * delta; }

Integer ConicBundleData::c1_dot_K() const { return -m * (8 - r) - 2 * a * delta; }

bool ConicBundleData::anticanonical_negative() const { return 2 * a * delta > m * (r - 8); }

PolarizedSurface ConicBundleData::polarized(std::vector<Integer> degrees, bool char_zero) const {
  PolarizedSurface P;
  P.surface = SurfaceData{K_sq(), 0, std::move(degrees), char_zero};
  P.bundle = LineBundleClass{c1_sq(), c1_dot_K(), true};
  P.name = "conic_bundle";
  // The ample flag is the caller's claim about (m, a); only the necessary
  // condition c1^2 > 0 can be checked here.
  if (P.bundle.c1_sq <= 0) P.bundle.ample_asserted = false;
  return P;
}

ConicBundleData make_conic_bundle(const Integer& r, const Integer& delta, const Integer& m,
                                  const Integer& a) {
  ConicBundleData cb{r, delta, m, a};
  cb.validate();
  return cb;
}

namespace {

PolarizedSurface anticanonical(const Integer& degree, std::string name,
                               std::vector<Integer> points) {
  PolarizedSurface P;
  P.surface = SurfaceData{degree, 0, std::move(points), true};
  P.bundle = LineBundleClass{degree, -degree, true};
  P.name = std::move(name);
  return P;
}

void expect_params(std::string_view name, const std::vector<Integer>& params, std::size_t n) {
  if (params.size() != n) {
    throw InvalidInput("catalog '" + std::string(name) + "' expects " + std::to_string(n) +
                       " parameter(s), got " + std::to_string(params.size()));
  }
}

}  // namespace

PolarizedSurface catalog(std::string_view name, const std::vector<Integer>& params) {
  if (name == "projective_plane") {
    expect_params(name, params, 0);
    PolarizedSurface P;
    P.surface = SurfaceData{9, 0, {1}, true};
    P.bundle = LineBundleClass{1, -3, true};
    P.name = "projective_plane";
    return P;
  }
  if (name == "quadric") {
    expect_params(name, params, 0);
    PolarizedSurface P;
    P.surface = SurfaceData{8, 0, {1}, true};
    P.bundle = LineBundleClass{2, -4, true};
    P.name = "quadric";
    return P;
  }
  if (name == "del_pezzo") {
    expect_params(name, params, 1);
    const Integer& dX = params[0];
    if (dX < 1 || dX > 9) {
      throw InvalidInput("del Pezzo degree must lie in [1, 9], got " + dX.get_str());
    }
    return anticanonical(dX, "del_pezzo_" + dX.get_str(), {1});
  }
  if (name == "conic_bundle") {
    expect_params(name, params, 4);
    return make_conic_bundle(params[0], params[1], params[2], params[3]).polarized();
  }
  if (name == "brauer_severi") {
    expect_params(name, params, 1);
    const Integer& ind = params[0];
    if (ind != 1 && ind != 3) {
      throw InvalidInput("Brauer-Severi surface index must be 1 or 3, got " + ind.get_str());
    }
    return anticanonical(9, "brauer_severi", {ind});
  }
  throw InvalidInput("unknown catalog surface '" + std::string(name) + "'");
}

LineBundleClass tensor_power(const LineBundleClass& L, const Integer& e) {
  if (e < 1) throw InvalidInput("tensor power exponent must be positive, got " + e.get_str());
  return LineBundleClass{e * e * L.c1_sq, e * L.c1_dot_K, L.ample_asserted};
}

PolarizedSurface blow_up(const PolarizedSurface& P, const Integer& e, const Integer& d_prime) {
  if (e < 1) throw InvalidInput("blow_up: e must be positive, got " + e.get_str());
  if (d_prime < 1) throw InvalidInput("blow_up: d' must be positive, got " + d_prime.get_str());
  // E.E = -d', b^*D.E = 0, K~ = b^*K + E.
  PolarizedSurface out = P;
  out.bundle.c1_sq = e * e * P.bundle.c1_sq - 4 * d_prime;
  out.bundle.c1_dot_K = e * P.bundle.c1_dot_K + 2 * d_prime;
  out.bundle.ample_asserted = false;
  out.surface.K_sq = P.surface.K_sq - d_prime;
  out.name = P.name + "_blowup";
  return out;
}

}  // namespace hilbstab
