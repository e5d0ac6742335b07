#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <numeric>

#include "ffl/basis.hpp"
#include "ffl/ec_group.hpp"
#include "ffl/error.hpp"
#include "ffl/geometry.hpp"
#include "ffl/lattice.hpp"

namespace py = pybind11;
using namespace ffl;

namespace {

py::object to_pyint(const BigInt& v) {
  const std::string s = v.str();
  return py::reinterpret_steal<py::object>(PyLong_FromString(s.c_str(), nullptr, 10));
}

py::object to_fraction(const Rational& r) {
  return py::module_::import("fractions").attr("Fraction")(r.numerator(), r.denominator());
}

RationalPoint from_python_point(const py::sequence& coords) {
  auto Fraction = py::module_::import("fractions").attr("Fraction");
  std::vector<std::pair<std::int64_t, std::int64_t>> parts;
  std::int64_t den = 1;
  for (auto item : coords) {
    py::object f = Fraction(item);
    const auto n = f.attr("numerator").cast<std::int64_t>();
    const auto d = f.attr("denominator").cast<std::int64_t>();
    parts.emplace_back(n, d);
    den = std::lcm(den, d);
  }
  RationalPoint p;
  p.den = den;
  for (auto [n, d] : parts) p.num.push_back(n * (den / d));
  return p;
}

py::tuple element(const GroupElement& x) { return py::make_tuple(x.a, x.b); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Lattices of finite abelian groups and elliptic curves over prime fields";

  py::register_exception<Error>(m, "FflError", PyExc_ValueError);

  py::class_<AbelianGroup>(m, "AbelianGroup")
      .def_property_readonly("m", &AbelianGroup::m)
      .def_property_readonly("n", &AbelianGroup::n)
      .def_property_readonly("order", &AbelianGroup::order)
      .def_property_readonly("is_cyclic", &AbelianGroup::is_cyclic)
      .def("spec", &AbelianGroup::spec)
      .def("enumerate",
           [](const AbelianGroup& g) {
             py::list out;
             for (const auto& x : g.enumerate()) out.append(element(x));
             return out;
           })
      .def("index", [](const AbelianGroup& g, std::int64_t a,
                       std::int64_t b) { return g.index(g.reduce(a, b)); })
      .def("element_order", [](const AbelianGroup& g, std::int64_t a,
                               std::int64_t b) { return g.element_order(g.reduce(a, b)); })
      .def("__repr__", [](const AbelianGroup& g) { return "AbelianGroup(" + g.spec() + ")"; });

  m.def("make_group", &make_group, py::arg("m"), py::arg("n"));
  m.def("make_product_group", &make_product_group, py::arg("m"), py::arg("n"));

  py::class_<Lattice>(m, "Lattice")
      .def(py::init<AbelianGroup>(), py::arg("group"))
      .def_property_readonly("group", &Lattice::group)
      .def_property_readonly("rank", &Lattice::rank)
      .def("contains", [](const Lattice& l, const LatticeVector& v) { return l.contains(v); })
      .def("minimal_distance_sq", &Lattice::minimal_distance_sq,
           py::arg("cross_check_bound") = kDefaultCrossCheckBound)
      .def("minimal_vectors", &Lattice::minimal_vectors)
      .def("determinant_sq", [](const Lattice& l) { return to_pyint(l.determinant_sq()); })
      .def("index_in_an", &Lattice::index_in_an)
      .def("svp_oracle", &Lattice::svp_oracle, py::arg("norm_sq_bound"),
           py::arg("max_dimension") = kDefaultOracleBound);

  m.def("gram_det", [](const std::vector<LatticeVector>& v) { return to_pyint(gram_report(v).det); });
  m.def("span_rank", &span_rank);
  m.def("divisor_degree", [](const LatticeVector& v) { return divisor_degree(v); });

  py::class_<CertificationReport>(m, "CertificationReport")
      .def_readonly("all_in_lattice", &CertificationReport::all_in_lattice)
      .def_readonly("all_minimal", &CertificationReport::all_minimal)
      .def_readonly("count_ok", &CertificationReport::count_ok)
      .def_readonly("gram_det_sq_ok", &CertificationReport::gram_det_sq_ok)
      .def_property_readonly("gram_det_sq",
                             [](const CertificationReport& r) { return to_pyint(r.gram_det_sq); })
      .def_property_readonly("certified", &CertificationReport::certified);

  py::class_<BasisResult>(m, "BasisResult")
      .def_property_readonly("kind", [](const BasisResult& r) { return std::string(to_string(r.kind)); })
      .def_readonly("vectors", &BasisResult::vectors)
      .def_readonly("fallback", &BasisResult::fallback)
      .def_readonly("report", &BasisResult::report)
      .def_readonly("certified", &BasisResult::certified);

  m.def("cyclic_basis", &cyclic_basis, py::arg("n"));
  m.def("rect_basis", &rect_basis, py::arg("m"), py::arg("n"));
  m.def("build_minimal_basis", &build_minimal_basis, py::arg("group"));
  m.def("verify_basis", &verify_basis, py::arg("group"), py::arg("vectors"));

  py::class_<CurveGroup>(m, "CurveGroup")
      .def_property_readonly("p", [](const CurveGroup& c) { return c.curve.p; })
      .def_property_readonly("order", &CurveGroup::size)
      .def_property_readonly("structure", [](const CurveGroup& c) { return c.structure; })
      .def_property_readonly("points", [](const CurveGroup& c) {
        py::list out;
        for (const auto& p : c.points)
          out.append(p.infinity ? py::object(py::none()) : py::object(py::make_tuple(p.x, p.y)));
        return out;
      });
  m.def(
      "curve_group",
      [](std::int64_t p, std::int64_t a, std::int64_t b) {
        const Curve c = make_curve(p, a, b);
        return group_structure(curve_points(c), c);
      },
      py::arg("p"), py::arg("a"), py::arg("b"));

  py::class_<DensityReport>(m, "DensityReport")
      .def_readonly("N", &DensityReport::N)
      .def_readonly("log_density", &DensityReport::log_density)
      .def_readonly("log_mh_bound", &DensityReport::log_mh_bound)
      .def_readonly("satisfies_mh", &DensityReport::satisfies_mh);
  m.def("zeta", &zeta, py::arg("k"));
  m.def("packing_density_log", &packing_density_log, py::arg("N"));
  m.def("mh_window_scan", &mh_window_scan, py::arg("n_min"), py::arg("n_max"));

  py::class_<CoveringReport>(m, "CoveringReport")
      .def_readonly("N", &CoveringReport::N)
      .def_property_readonly("mu_A_sq", [](const CoveringReport& r) { return to_fraction(r.mu_A_sq); })
      .def_readonly("lower", &CoveringReport::lower)
      .def_readonly("upper_new", &CoveringReport::upper_new)
      .def_readonly("upper_old", &CoveringReport::upper_old)
      .def_readonly("upper_boettcher", &CoveringReport::upper_boettcher);
  m.def("covering_bounds", &covering_bounds, py::arg("N"), py::arg("cyclic"));
  m.def("covering_radius_an_sq", [](std::int64_t N) { return to_fraction(covering_radius_an_sq(N)); });
  m.def("deep_hole_an", [](std::int64_t N) {
    const RationalPoint w = deep_hole_an(N);
    py::list out;
    for (std::size_t i = 0; i < w.size(); ++i) out.append(to_fraction(w.coord(i)));
    return out;
  });
  m.def("retract", &retract, py::arg("group"), py::arg("v"));
  m.def(
      "cvp",
      [](const AbelianGroup& g, const py::sequence& target, py::object cap) {
        const RationalPoint t = from_python_point(target);
        Rational c = cap.is_none() ? default_cvp_cap(g.order())
                                   : [&] {
                                       auto f = py::module_::import("fractions").attr("Fraction")(cap);
                                       return Rational(f.attr("numerator").cast<std::int64_t>(),
                                                       f.attr("denominator").cast<std::int64_t>());
                                     }();
        const CvpResult r = cvp(g, t, c);
        return py::make_tuple(r.vector, to_fraction(r.distance_sq));
      },
      py::arg("group"), py::arg("target"), py::arg("radius_sq_cap") = py::none());
  m.def(
      "sampled_covering_check",
      [](const AbelianGroup& g, std::int64_t trials, std::uint64_t seed) {
        const auto r = sampled_covering_check(g, trials, seed);
        py::dict d;
        d["N"] = r.N;
        d["trials"] = r.trials;
        d["deep_hole_distance_sq"] = to_fraction(r.deep_hole_distance_sq);
        d["deep_hole_exact"] = r.deep_hole_exact;
        d["max_distance_sq"] = to_fraction(r.max_distance_sq);
        d["all_within_upper"] = r.all_within_upper;
        d["max_at_least_lower"] = r.max_at_least_lower;
        return d;
      },
      py::arg("group"), py::arg("trials"), py::arg("seed"));
}
