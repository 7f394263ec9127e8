#include <gtest/gtest.h>

#include "hilbstab/error.hpp"
#include "hilbstab/surface_spec.hpp"

using namespace hilbstab;

namespace {

std::string error_of(const std::string& text) {
  try {
    parse_surface_spec_text(text);
  } catch (const InvalidInput& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(SurfaceSpec, PolarizedFile) {
  const auto spec = parse_surface_spec(std::string(HILBSTAB_TEST_DATA) + "/dp1.json");
  EXPECT_EQ(spec.kind, SurfaceSpec::Kind::polarized);
  EXPECT_EQ(spec.surface.bundle.c1_sq, 1);
  EXPECT_EQ(spec.surface.bundle.c1_dot_K, -1);
  EXPECT_EQ(spec.blowup_cycles, std::vector<Integer>{2});
  EXPECT_TRUE(spec.surface.surface.char_zero);
}

TEST(SurfaceSpec, ConicDerivesBundle) {
  const auto spec = parse_surface_spec(std::string(HILBSTAB_TEST_DATA) + "/conic.json");
  EXPECT_EQ(spec.kind, SurfaceSpec::Kind::conic_bundle);
  ASSERT_TRUE(spec.conic.has_value());
  EXPECT_EQ(spec.surface.bundle.c1_sq, 3);
  EXPECT_EQ(spec.surface.bundle.c1_dot_K, -1);
}

TEST(SurfaceSpec, BrauerSeveriAndKodaira) {
  const auto bs = parse_surface_spec(std::string(HILBSTAB_TEST_DATA) + "/bs3.json");
  EXPECT_EQ(bs.kind, SurfaceSpec::Kind::brauer_severi);
  EXPECT_EQ(*bs.bs_index, 3);
  const auto k3 = parse_surface_spec(std::string(HILBSTAB_TEST_DATA) + "/k3.json");
  EXPECT_TRUE(k3.h0_omega_positive);
}

TEST(SurfaceSpec, BigIntegersAsStrings) {
  const auto spec = parse_surface_spec_text(R"({"name": "big", "K_sq": "0", "h2": 0,
      "line_bundle": {"c1_sq": "100000000000000000000000", "c1_dot_K": "-2"}, "points": [1]})");
  EXPECT_EQ(spec.surface.bundle.c1_sq, Integer("100000000000000000000000"));
}

TEST(SurfaceSpec, ErrorsNameTheField) {
  EXPECT_NE(error_of("{").find("parse error"), std::string::npos);
  EXPECT_NE(error_of(R"({"name": "x", "K_sq": 1, "h2": 0, "points": [1],
      "line_bundle": {"c1_sq": 1, "c1_dot_K": -1, "colour": 1}})").find("line_bundle.colour"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"name": "x", "K_sq": 1, "h2": 0, "points": [1],
      "line_bundle": {"c1_sq": 1.5, "c1_dot_K": -1}})").find("line_bundle.c1_sq"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"name": "x", "K_sq": 1, "h2": 0, "points": [1, 0],
      "line_bundle": {"c1_sq": 1, "c1_dot_K": -1}})").find("points[1]"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"name": "x", "K_sq": 1, "h2": 0, "points": [1]})").find("line_bundle"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"name": "x", "K_sq": 0, "h2": 0, "points": [1],
      "conic": {"r": 9, "delta": 1, "m": 1, "a": 1}})").find("K_sq"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"name": "x", "brauer_severi": {"ind": 2}})").find("brauer_severi.ind"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"name": "x", "K_sq": 1, "h2": 0, "points": [1],
      "line_bundle": {"c1_sq": 0, "c1_dot_K": -1, "ample_asserted": true}})").find("c1_sq > 0"),
            std::string::npos);
  EXPECT_THROW(parse_surface_spec("/nonexistent/spec.json"), InvalidInput);
}
