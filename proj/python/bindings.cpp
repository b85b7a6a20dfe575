#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "tricover/census.hpp"
#include "tricover/cheeger.hpp"
#include "tricover/cli.hpp"
#include "tricover/cocycle.hpp"
#include "tricover/cover.hpp"
#include "tricover/group.hpp"
#include "tricover/homology.hpp"
#include "tricover/io.hpp"
#include "tricover/normal.hpp"
#include "tricover/splitting.hpp"

namespace py = pybind11;
using namespace tricover;

namespace {

py::object fraction(const Ratio& r) { return py::module_::import("fractions").attr("Fraction")(r.num, r.den); }

py::dict checks_dict(const std::vector<LedgerCheck>& checks) {
  py::dict d;
  for (const auto& c : checks) d[py::str(c.name)] = c.holds;
  return d;
}

Cocycle to_cocycle(const std::vector<std::int64_t>& values) { return Cocycle{values}; }

}  // namespace

PYBIND11_MODULE(_tricover, m) {
  m.doc() = "Finite covers, Cheeger cuts and cocycle certificates for triangulated 3-manifolds";

  py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);
  py::register_exception<InvalidTriangulation>(m, "InvalidTriangulation", PyExc_ValueError);
  py::register_exception<CoverError>(m, "CoverError", PyExc_ValueError);
  py::register_exception<TooLarge>(m, "TooLarge", PyExc_ValueError);
  py::register_exception<SupportTooLarge>(m, "SupportTooLarge", PyExc_ValueError);
  py::register_exception<PreconditionViolation>(m, "PreconditionViolation", PyExc_ValueError);

  py::class_<Triangulation>(m, "Triangulation")
      .def(py::init<std::size_t>(), py::arg("tet_count"))
      .def_static("from_text", &triangulation_from_string, py::arg("text"))
      .def("to_text", &triangulation_to_string)
      .def("__len__", &Triangulation::size)
      .def("glue", [](Triangulation& t, std::size_t tet, int face, std::size_t target, std::array<int, 4> p) {
        t.glue(tet, face, target, Perm4(p[0], p[1], p[2], p[3]));
      }, py::arg("tet"), py::arg("face"), py::arg("target"), py::arg("perm"))
      .def("validate", [](const Triangulation& t) {
        py::dict d;
        for (const auto& c : validate(t).checks) d[py::str(c.name)] = c.passed;
        return d;
      })
      .def("is_valid", [](const Triangulation& t) { return validate(t).ok(); })
      .def("euler_characteristic", [](const Triangulation& t) { return build_skeleton(t).euler_characteristic(); })
      .def("edge_count", [](const Triangulation& t) { return build_skeleton(t).edges.size(); })
      .def("__eq__", [](const Triangulation& a, const Triangulation& b) { return a == b; });

  m.def("census", &census::by_name, py::arg("name"));
  m.def("census_names", [] {
    std::vector<std::string> out;
    for (const auto& e : census::all()) out.push_back(e.name);
    return out;
  });

  m.def("homology", [](const Triangulation& t) {
    const auto h = homology(t);
    py::dict d;
    d["betti"] = std::vector<std::size_t>(h.betti.begin(), h.betti.end());
    d["torsion"] = std::vector<std::vector<std::int64_t>>(h.torsion.begin(), h.torsion.end());
    return d;
  }, py::arg("triangulation"));

  m.def("presentation", [](const Triangulation& t) {
    const auto p = presentation_from(t, build_skeleton(t));
    std::vector<std::vector<std::pair<std::size_t, int>>> relators;
    for (const auto& w : p.relators) {
      auto& r = relators.emplace_back();
      for (const auto& l : w) r.emplace_back(l.generator, l.exponent);
    }
    return py::make_tuple(p.generator_count, relators);
  }, py::arg("triangulation"), "Generator count and relators as (generator, exponent) lists.");

  py::class_<FiniteGroup>(m, "FiniteGroup")
      .def(py::init<std::vector<std::vector<std::size_t>>>(), py::arg("table"))
      .def_static("cyclic", &FiniteGroup::cyclic)
      .def_static("symmetric", &FiniteGroup::symmetric)
      .def_static("quaternion", &FiniteGroup::quaternion)
      .def_static("product", &FiniteGroup::product)
      .def_property_readonly("order", &FiniteGroup::order)
      .def("mul", &FiniteGroup::mul)
      .def("inverse", &FiniteGroup::inverse)
      .def_property_readonly("table", &FiniteGroup::table);

  py::class_<FiniteQuotient>(m, "FiniteQuotient")
      .def(py::init([](FiniteGroup g, std::vector<std::size_t> images) { return FiniteQuotient{std::move(g), std::move(images)}; }),
           py::arg("group"), py::arg("images"))
      .def_readonly("group", &FiniteQuotient::group)
      .def_readonly("images", &FiniteQuotient::images)
      .def_property_readonly("degree", &FiniteQuotient::degree)
      .def("is_valid_for", [](const FiniteQuotient& q, const Triangulation& t) {
        return validate_quotient(presentation_from(t, build_skeleton(t)), q).ok();
      });

  m.def("cyclic_quotients", [](const Triangulation& t, std::size_t n) {
    return cyclic_quotients(presentation_from(t, build_skeleton(t)), n);
  }, py::arg("triangulation"), py::arg("n"));

  py::class_<CoverTriangulation>(m, "CoverTriangulation")
      .def_property_readonly("degree", &CoverTriangulation::degree)
      .def_readonly("base", &CoverTriangulation::base)
      .def_readonly("lifted", &CoverTriangulation::lifted)
      .def_readonly("quotient", &CoverTriangulation::quotient)
      .def_property_readonly("edge_count", [](const CoverTriangulation& c) { return c.lifted_skeleton.edges.size(); })
      .def_readonly("edge_generator", &CoverTriangulation::edge_generator)
      .def_readonly("edge_start", &CoverTriangulation::edge_start)
      .def_readonly("edge_direction", &CoverTriangulation::edge_direction);

  m.def("build_cover", &build_cover, py::arg("base"), py::arg("quotient"));

  py::class_<MultiGraph>(m, "MultiGraph")
      .def(py::init<std::size_t, const std::vector<std::pair<std::size_t, std::size_t>>&>(), py::arg("vertex_count"),
           py::arg("edges"))
      .def_property_readonly("vertex_count", &MultiGraph::vertex_count)
      .def_property_readonly("edges", [](const MultiGraph& g) {
        std::vector<py::tuple> out;
        for (const auto& e : g.edges()) out.push_back(py::make_tuple(e.u, e.v, e.multiplicity));
        return out;
      })
      .def("degree", &MultiGraph::degree)
      .def_property_readonly("max_degree", &MultiGraph::max_degree)
      .def("connected", &MultiGraph::connected);

  py::class_<CutCertificate>(m, "CutCertificate")
      .def(py::init([](const MultiGraph& g, std::vector<std::size_t> subset) { return make_cut(g, std::move(subset)); }),
           py::arg("graph"), py::arg("subset"))
      .def_readonly("subset", &CutCertificate::subset)
      .def_readonly("boundary", &CutCertificate::boundary)
      .def_readonly("optimal", &CutCertificate::optimal)
      .def_property_readonly("ratio", [](const CutCertificate& c) { return fraction(c.ratio); });

  m.def("cayley_graph", &cayley_graph, py::arg("quotient"));
  m.def("cheeger_exact", &cheeger_exact, py::arg("graph"), py::arg("limit") = kDefaultExactLimit);
  m.def("cheeger_sweep", &cheeger_sweep, py::arg("graph"));
  m.def("spectral_brackets", [](const MultiGraph& g) {
    const auto b = spectral_brackets(g);
    py::dict d;
    d["lambda2"] = b.lambda2;
    d["max_degree"] = b.max_degree;
    d["lower"] = b.lower;
    d["upper"] = b.upper;
    return d;
  }, py::arg("graph"));
  m.def("certificate_threshold", &certificate_threshold, py::arg("vertex_count"));
  m.def("below_certificate_threshold", [](const CutCertificate& c, std::size_t v) {
    return below_certificate_threshold(c.ratio, v);
  }, py::arg("cut"), py::arg("vertex_count"));

  m.def("search_certificate", [](const CoverTriangulation& cover, const CutCertificate& cut, std::size_t cap, bool force) {
    const auto r = search_certificate(cover, cut, SearchOptions{cap, force});
    py::dict d;
    d["found"] = r.certificate.has_value();
    d["values"] = r.certificate ? py::cast(r.certificate->values) : py::none();
    d["support"] = r.support;
    d["threshold_holds"] = r.threshold_holds;
    d["warnings"] = r.warnings;
    return d;
  }, py::arg("cover"), py::arg("cut"), py::arg("cap") = kDefaultSupportCap, py::arg("force") = false);

  m.def("verify_certificate", [](const CoverTriangulation& cover, const CutCertificate& cut, std::size_t cap) {
    const auto r = verify_certificate_implication(cover, cut, cap);
    py::dict d;
    d["ratio"] = fraction(r.ratio);
    d["threshold"] = r.threshold;
    d["threshold_holds"] = r.threshold_holds;
    d["cut_optimal"] = r.cut_optimal;
    d["found"] = r.found;
    d["values"] = r.certificate ? py::cast(r.certificate->values) : py::none();
    d["b1"] = r.b1;
    d["verdict"] = verdict_name(r.verdict);
    d["warnings"] = r.warnings;
    return d;
  }, py::arg("cover"), py::arg("cut"), py::arg("cap") = kDefaultSupportCap);

  m.def("surface_profile", [](const Triangulation& t, const std::vector<std::int64_t>& values) {
    const auto s = dual_surface(t, to_cocycle(values));
    const auto p = profile(s);
    py::list comps;
    for (const auto& c : p.components) {
      py::dict d;
      d["euler"] = c.euler;
      d["orientable"] = c.orientable;
      d["genus"] = c.genus;
      d["tets"] = c.tets;
      comps.append(d);
    }
    py::dict d;
    d["vertices"] = p.vertices;
    d["edges"] = p.edges;
    d["faces"] = p.faces;
    d["euler"] = p.euler;
    d["components"] = comps;
    d["oriented"] = consistently_oriented(s);
    return d;
  }, py::arg("triangulation"), py::arg("cocycle"), "Profile of the surface dual to a {-1, 0, 1} cocycle.");

  m.def("verify_splitting", [](std::int64_t chi_F, std::vector<std::int64_t> chis) {
    const SplittingProfile p{chi_F, std::move(chis)};
    const auto e = verify_expansion(p);
    py::dict d;
    d["terms"] = e.term_strings();
    d["ok"] = e.ok();
    d["checks"] = checks_dict(e.checks);
    return d;
  }, py::arg("chi_F"), py::arg("chis"));
  m.def("pigeonhole_bound", &pigeonhole_bound, py::arg("m"), py::arg("c_size"), py::arg("d_size"));

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "Runs the command-line front end, returning (exit code, stdout, stderr).");
}
