#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "trilin/centers.hpp"
#include "trilin/conjugate.hpp"
#include "trilin/error.hpp"
#include "trilin/oracle.hpp"
#include "trilin/regions.hpp"
#include "trilin/report.hpp"
#include "trilin/svg.hpp"
#include "trilin/tolerance.hpp"

namespace py = pybind11;
using namespace trilin;

namespace {

using Triple = std::tuple<double, double, double>;

Triple to_tuple(const std::array<double, 3>& v) { return {v[0], v[1], v[2]}; }
BaryPoint bary(const Triple& t) { return BaryPoint(std::get<0>(t), std::get<1>(t), std::get<2>(t)); }
WeightTriple weights(const Triple& t) { return WeightTriple(std::get<0>(t), std::get<1>(t), std::get<2>(t)); }

py::dict solve_dict(const Triangle& t, const Triple& w) {
  const ExtremumResult r = solve_extremum(t, weights(w));
  py::dict d;
  d["kind"] = to_string(r.kind);
  d["value"] = r.value ? py::cast(*r.value) : py::none();
  d["point_bary"] = r.point ? py::cast(to_tuple(r.point->coords())) : py::none();
  d["point_tri"] = r.point_tri ? py::cast(to_tuple(r.point_tri->d)) : py::none();
  d["point_set"] = r.set_side ? py::cast(std::string(side_name(*r.set_side))) : py::none();
  d["J"] = r.J ? py::cast(*r.J) : py::none();
  d["case"] = r.case_label;
  d["region_M"] = r.region_M ? py::cast(to_string(*r.region_M)) : py::none();
  d["region_N"] = r.region_N ? py::cast(to_string(*r.region_N)) : py::none();
  d["diagnostics"] = r.diagnostics;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Extrema of weighted squared distances to the sidelines of a triangle.";

  static py::exception<Error> error(m, "Error", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = error;
      py::object inst = exc(e.what());
      inst.attr("code") = to_string(e.code());
      PyErr_SetObject(error.ptr(), inst.ptr());
    }
  });

  py::class_<Triangle>(m, "Triangle")
      .def_static("from_sides", &Triangle::from_sides, py::arg("a"), py::arg("b"), py::arg("c"))
      .def_static(
          "from_vertices",
          [](std::tuple<double, double> p1, std::tuple<double, double> p2, std::tuple<double, double> p3) {
            const auto v = [](auto p) { return Vec2{std::get<0>(p), std::get<1>(p)}; };
            return Triangle::from_vertices(v(p1), v(p2), v(p3));
          },
          py::arg("p1"), py::arg("p2"), py::arg("p3"))
      .def_property_readonly("sides", [](const Triangle& t) { return to_tuple(t.sides()); })
      .def_property_readonly("area", &Triangle::area)
      .def_property_readonly("circumradius", &Triangle::circumradius)
      .def_property_readonly("vertices",
                             [](const Triangle& t) {
                               std::vector<std::tuple<double, double>> out;
                               for (int k = 0; k < 3; ++k) out.emplace_back(t.vertex(k).x, t.vertex(k).y);
                               return out;
                             })
      .def("__repr__", [](const Triangle& t) {
        return "Triangle(" + std::to_string(t.a()) + ", " + std::to_string(t.b()) + ", " + std::to_string(t.c()) + ")";
      });

  m.def("solve", &solve_dict, py::arg("triangle"), py::arg("weights"),
        "Extremum of l x^2 + m y^2 + n z^2 over the plane, as a dict.");

  m.def(
      "isogonal", [](const Triangle& t, const Triple& p) { return to_tuple(isogonal(t, bary(p)).coords()); },
      py::arg("triangle"), py::arg("point_bary"));

  m.def(
      "classify",
      [](const Triangle& t, const Triple& p) {
        const BaryPoint b = bary(p);
        py::dict d;
        d["region"] = to_string(region_classify(t, b));
        d["J"] = b.zero_count() == 0 ? py::cast(compute_J(t, b)) : py::none();
        d["inside_circumcircle"] = inside_circumcircle(t, b);
        d["on_circumcircle"] = on_circumcircle(t, b);
        return d;
      },
      py::arg("triangle"), py::arg("point_bary"));

  m.def(
      "eval_f",
      [](const Triangle& t, const Triple& w, const Triple& tri) {
        return eval_F(t, weights(w), TriPoint{std::array<double, 3>{std::get<0>(tri), std::get<1>(tri), std::get<2>(tri)}});
      },
      py::arg("triangle"), py::arg("weights"), py::arg("point_tri"));

  m.def(
      "center",
      [](const Triangle& t, const std::string& name) {
        return to_tuple(named_center(t, parse_center_name(name)).canonical().coords());
      },
      py::arg("triangle"), py::arg("name"));

  m.def(
      "inequality",
      [](const Triangle& t, const Triple& w, const Triple& x) {
        const InequalityReport r = inequality_report(t, weights(w), bary(x));
        py::dict d;
        d["kind"] = to_string(r.kind);
        d["lhs"] = r.lhs;
        d["rhs"] = r.rhs;
        d["slack"] = r.slack;
        d["tight"] = r.tight;
        d["N"] = to_tuple(r.N.coords());
        d["case"] = r.case_label;
        return d;
      },
      py::arg("triangle"), py::arg("weights"), py::arg("x_bary"));

  m.def(
      "mass_vector_identity",
      [](const Triangle& t, const Triple& w) {
        const auto r = trilin::mass_vector_identity(t, weights(w));
        return std::make_tuple(r.vsq, r.rhs);
      },
      py::arg("triangle"), py::arg("weights"));

  m.def(
      "verify",
      [](int trials, std::uint64_t seed) {
        oracle::VerifyReport r;
        {
          py::gil_scoped_release release;
          r = oracle::verify_corpus(trials, seed);
        }
        py::dict d;
        d["trials"] = r.trials;
        d["extremal"] = r.extremal;
        d["grid_checked"] = r.grid_checked;
        d["nonexistence"] = r.nonexistence;
        d["ok"] = r.ok();
        d["failures"] = r.failures;
        return d;
      },
      py::arg("trials") = 500, py::arg("seed") = 1);

  m.def(
      "render_svg",
      [](const Triangle& t, const std::string& path, const std::vector<std::string>& marks, std::optional<double> level,
         std::optional<Triple> w) {
        std::vector<Annotation> notes;
        for (const auto& name : marks) {
          notes.push_back({bary_to_cartesian(t, named_center(t, parse_center_name(name))), name});
        }
        std::optional<WeightTriple> wt;
        if (w) wt = weights(*w);
        render_svg_file(t, notes, level, wt, path);
      },
      py::arg("triangle"), py::arg("path"), py::arg("marks") = std::vector<std::string>{},
      py::arg("level") = std::nullopt, py::arg("weights") = std::nullopt);

  m.def("tolerance", &tolerance);
  m.def("set_tolerance", &set_tolerance, py::arg("tau"));
}
