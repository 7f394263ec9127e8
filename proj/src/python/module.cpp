#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "hilbstab/cli.hpp"
#include "hilbstab/equivalence_engine.hpp"
#include "hilbstab/error.hpp"
#include "hilbstab/grothendieck_series.hpp"
#include "hilbstab/interval_engine.hpp"
#include "hilbstab/surface_model.hpp"
#include "hilbstab/surface_spec.hpp"

namespace py = pybind11;
using namespace hilbstab;

// Python int <-> mpz_class through decimal strings; no size limit either way.
namespace pybind11::detail {
template <>
struct type_caster<mpz_class> {
  PYBIND11_TYPE_CASTER(mpz_class, const_name("int"));

  bool load(handle src, bool) {
    if (!src || !PyLong_Check(src.ptr())) return false;
    value = mpz_class(py::str(src).cast<std::string>());
    return true;
  }

  static handle cast(const mpz_class& z, return_value_policy, handle) {
    return PyLong_FromString(z.get_str().c_str(), nullptr, 10);
  }
};
}  // namespace pybind11::detail

namespace {

py::tuple as_tuple(const IntInterval& I) { return py::make_tuple(I.lo, I.hi); }

py::dict partition_dict(const ClassPartition& cp) {
  py::dict d;
  d["horizon"] = cp.horizon;
  d["labels"] = cp.labels;
  d["n0"] = cp.n0;
  d["period"] = cp.period;
  d["certified"] = cp.certified;
  d["conditional"] = cp.conditional;
  return d;
}

ClassPartition classes_for(const SurfaceSpec& spec, const Integer& e_min, std::int64_t horizon) {
  switch (spec.kind) {
    case SurfaceSpec::Kind::brauer_severi:
      return brauer_severi_classes(*spec.bs_index, horizon);
    case SurfaceSpec::Kind::conic_bundle:
      return conic_bundle_classes(*spec.conic, spec.surface.surface.point_degrees, e_min, horizon);
    case SurfaceSpec::Kind::polarized:
      break;
  }
  std::optional<Integer> d_prime;
  if (!spec.blowup_cycles.empty()) {
    d_prime = *std::max_element(spec.blowup_cycles.begin(), spec.blowup_cycles.end());
  }
  return polarized_classes(spec.surface, e_min, horizon, d_prime);
}

}  // namespace

PYBIND11_MODULE(_hilbstab, m) {
  m.doc() = "Stable-birational intervals and classes of Hilbert schemes of points";

  py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
  py::register_exception<Inapplicable>(m, "Inapplicable", PyExc_ValueError);
  py::register_exception<HorizonError>(m, "HorizonError", PyExc_RuntimeError);

  py::class_<PolarizedSurface>(m, "PolarizedSurface")
      .def_property_readonly("name", [](const PolarizedSurface& P) { return P.name; })
      .def_property_readonly("c1_sq", [](const PolarizedSurface& P) { return P.bundle.c1_sq; })
      .def_property_readonly("c1_dot_K",
                             [](const PolarizedSurface& P) { return P.bundle.c1_dot_K; })
      .def_property_readonly("K_sq", [](const PolarizedSurface& P) { return P.surface.K_sq; })
      .def_property_readonly("h2", [](const PolarizedSurface& P) { return P.surface.h2; })
      .def_property_readonly("point_degrees",
                             [](const PolarizedSurface& P) { return P.surface.point_degrees; })
      .def("__repr__", [](const PolarizedSurface& P) {
        std::ostringstream os;
        os << "PolarizedSurface(" << P.name << ", c1_sq=" << P.bundle.c1_sq
           << ", c1_dot_K=" << P.bundle.c1_dot_K << ")";
        return os.str();
      });

  m.def(
      "surface",
      [](const std::string& name, const std::vector<Integer>& params,
         const std::vector<Integer>& points) {
        PolarizedSurface P = catalog(name, params);
        if (!points.empty()) {
          P.surface.point_degrees = points;
          P.validate();
        }
        return P;
      },
      py::arg("name"), py::arg("params") = std::vector<Integer>{},
      py::arg("points") = std::vector<Integer>{});
  m.def(
      "polarized",
      [](const Integer& K_sq, const Integer& h2, const Integer& c1_sq, const Integer& c1_dot_K,
         const std::vector<Integer>& points) {
        PolarizedSurface P{{K_sq, h2, points, true}, {c1_sq, c1_dot_K, false}, "custom"};
        P.validate();
        return P;
      },
      py::arg("K_sq"), py::arg("h2"), py::arg("c1_sq"), py::arg("c1_dot_K"),
      py::arg("points") = std::vector<Integer>{1});
  m.def("load_spec", [](const std::string& path) { return parse_surface_spec(path).surface; });

  m.def("interval",
        [](const PolarizedSurface& P, const Integer& e, const Integer& d) {
          return as_tuple(interval_Ie(P, e, d));
        },
        py::arg("surface"), py::arg("e"), py::arg("d"));
  m.def("gap",
        [](const PolarizedSurface& P, const Integer& e, const Integer& d) {
          return as_tuple(gap(P, e, d));
        },
        py::arg("surface"), py::arg("e"), py::arg("d"));
  m.def("blowup_interval",
        [](const PolarizedSurface& P, const Integer& e, const Integer& d, const Integer& dp) {
          return as_tuple(interval_Ie_blowup(P, e, d, dp));
        },
        py::arg("surface"), py::arg("e"), py::arg("d"), py::arg("d_prime"));
  m.def("conic_interval",
        [](const Integer& r, const Integer& delta, const Integer& mm, const Integer& a,
           const Integer& e, const Integer& b, const Integer& d) {
          return as_tuple(interval_conic(make_conic_bundle(r, delta, mm, a), e, b, d));
        },
        py::arg("r"), py::arg("delta"), py::arg("m"), py::arg("a"), py::arg("e"), py::arg("b"),
        py::arg("d"));
  m.def("conic_b_bound",
        [](const Integer& r, const Integer& delta, const Integer& mm, const Integer& a,
           const Integer& e, const Integer& d) {
          return conic_b_bound(make_conic_bundle(r, delta, mm, a), e, d);
        },
        py::arg("r"), py::arg("delta"), py::arg("m"), py::arg("a"), py::arg("e"), py::arg("d"));
  m.def("coverage_threshold",
        [](const PolarizedSurface& P, const Integer& d, std::optional<Integer> d_prime,
           const Integer& e_min, const Integer& horizon) {
          return coverage_threshold(P, d, d_prime, e_min, horizon);
        },
        py::arg("surface"), py::arg("d"), py::arg("d_prime") = py::none(),
        py::arg("e_min") = 1, py::arg("horizon") = 1000);
  m.def("index", [](const std::vector<Integer>& degrees) { return index(degrees).g; });

  m.def("classes",
        [](const PolarizedSurface& P, const Integer& e_min, std::int64_t horizon,
           std::optional<Integer> d_prime) {
          return partition_dict(polarized_classes(P, e_min, horizon, d_prime));
        },
        py::arg("surface"), py::arg("e_min") = 1, py::arg("horizon") = 500,
        py::arg("d_prime") = py::none());
  m.def("spec_classes",
        [](const std::string& path, const Integer& e_min, std::int64_t horizon) {
          return partition_dict(classes_for(parse_surface_spec(path), e_min, horizon));
        },
        py::arg("path"), py::arg("e_min") = 1, py::arg("horizon") = 500);
  m.def("brauer_severi_classes",
        [](const Integer& ind, std::int64_t horizon) {
          return partition_dict(brauer_severi_classes(ind, horizon));
        },
        py::arg("ind"), py::arg("horizon"));

  m.def("goettsche", [](unsigned n) { return goettsche_class(n).str(); }, py::arg("n"));
  m.def("goettsche_mod_L", [](unsigned n) { return reduce_mod_L(goettsche_class(n)).str(); },
        py::arg("n"));
  m.def("zeta",
        [](const std::vector<std::int64_t>& labels) {
          LabeledSeries s;
          s.coefficients.push_back(kUnitClass);
          s.coefficients.insert(s.coefficients.end(), labels.begin() + 1, labels.end());
          const RationalSeries r = rationalize(s);
          py::dict d;
          d["form"] = r.str();
          d["n0"] = r.n0;
          d["period"] = r.p;
          d["verified"] = verify_rational(r, s, s.horizon());
          return d;
        },
        py::arg("labels"), "Rational form of 1 + sum labels[n] t^n (labels[0] is ignored).");

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
