#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "convex_blockers/blockers.h"
#include "convex_blockers/errors.h"
#include "convex_blockers/json_io.h"
#include "convex_blockers/matchings.h"
#include "convex_blockers/oracle.h"
#include "convex_blockers/render.h"
#include "convex_blockers/verify.h"

namespace py = pybind11;
namespace cb = convex_blockers;

namespace {

using PyEdge = std::pair<int, int>;
using PyEdges = std::vector<PyEdge>;

cb::EdgeSet ToEdges(const cb::PolygonContext& ctx, const PyEdges& edges) {
  cb::EdgeSet out;
  for (const auto& [u, v] : edges) {
    if (!ctx.IsVertex(u) || !ctx.IsVertex(v)) {
      throw cb::InputError("edge endpoint out of range");
    }
    out.push_back(ctx.MakeEdge(u, v));
  }
  return cb::Canonicalize(ctx, std::move(out));
}

PyEdges FromEdges(const cb::EdgeSet& edges) {
  PyEdges out;
  for (const cb::Edge& e : edges) out.emplace_back(e.a, e.b);
  return out;
}

std::vector<PyEdges> FromSets(const std::vector<cb::EdgeSet>& sets) {
  std::vector<PyEdges> out;
  for (const cb::EdgeSet& s : sets) out.push_back(FromEdges(s));
  return out;
}

py::object ToPython(const cb::Json& json) {
  return py::module_::import("json").attr("loads")(json.dump());
}

py::int_ ToPythonInt(const cb::BigInt& value) {
  std::ostringstream text;
  text << value;
  return py::int_(py::reinterpret_steal<py::object>(
      PyLong_FromString(text.str().c_str(), nullptr, 10)));
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "Minimum blocking sets of simple perfect matchings in CK(2m)";

  py::register_exception<cb::InputError>(mod, "InputError", PyExc_ValueError);
  py::register_exception<cb::ResourceError>(mod, "ResourceError", PyExc_RuntimeError);
  py::register_exception<cb::InfeasibleError>(mod, "InfeasibleError", PyExc_ValueError);
  py::register_exception<cb::StructureError>(mod, "StructureError", PyExc_ValueError);

  mod.def("enumerate_spms", [](int m) {
    return FromSets(cb::EnumerateSpms(cb::PolygonContext(m), cb::Limits::FromEnvironment()));
  }, py::arg("m"));
  mod.def("parallel_spm", [](int m, int l) {
    return FromEdges(cb::ParallelSpm(cb::PolygonContext(m), l));
  }, py::arg("m"), py::arg("l"));
  mod.def("triangular_spm", [](int m, int i1, int i2, int i3) {
    return FromEdges(cb::TriangularSpm(cb::PolygonContext(m), i1, i2, i3));
  }, py::arg("m"), py::arg("i1"), py::arg("i2"), py::arg("i3"));

  mod.def("generate_blocker", [](int m, int start, int t, std::vector<int> eps) {
    return FromEdges(cb::GenerateBlocker(cb::PolygonContext(m), {start, t, std::move(eps)}));
  }, py::arg("m"), py::arg("start"), py::arg("t"), py::arg("eps"));
  mod.def("parse_blocker", [](int m, const PyEdges& edges) {
    const cb::PolygonContext ctx(m);
    const cb::ParseResult result = cb::ParseBlocker(ctx, ToEdges(ctx, edges));
    if (const auto* spec = std::get_if<cb::BlockerSpec>(&result)) {
      return ToPython(cb::BlockerToJson(ctx, *spec));
    }
    return ToPython(cb::FindingToJson(std::get<cb::Finding>(result)));
  }, py::arg("m"), py::arg("edges"));
  mod.def("enumerate_blockers", [](int m) {
    return FromSets(cb::EnumerateBlockers(cb::PolygonContext(m)));
  }, py::arg("m"));
  mod.def("count_blockers", [](int m) { return ToPythonInt(cb::CountBlockers(m)); },
          py::arg("m"));
  mod.def("count_blockers_by_spine",
          [](int m, int t) { return ToPythonInt(cb::CountBlockersBySpine(m, t)); },
          py::arg("m"), py::arg("t"));
  mod.def("validate_caterpillar", [](int m, const PyEdges& edges) {
    const cb::PolygonContext ctx(m);
    return ToPython(cb::CaterpillarReportToJson(cb::ValidateCaterpillar(ctx, ToEdges(ctx, edges))));
  }, py::arg("m"), py::arg("edges"));
  mod.def("restrict_blocker", [](int m, const PyEdges& edges, PyEdge e, PyEdge f) {
    const cb::PolygonContext ctx(m);
    const cb::Restriction r =
        cb::RestrictBlocker(ctx, ToEdges(ctx, edges), ToEdges(ctx, {e})[0], ToEdges(ctx, {f})[0]);
    return py::make_tuple(r.ctx.m(), FromEdges(r.edges));
  }, py::arg("m"), py::arg("edges"), py::arg("e"), py::arg("f"));
  mod.def("classify_boundary_set", [](int m, const PyEdges& edges) {
    const cb::PolygonContext ctx(m);
    std::vector<std::string> names;
    for (cb::BoundaryCase c : cb::ClassifyBoundarySet(ctx, ToEdges(ctx, edges))) {
      names.emplace_back(cb::BoundaryCaseName(c));
    }
    return names;
  }, py::arg("m"), py::arg("edges"));

  mod.def("is_blocking_set", [](int m, const PyEdges& edges) {
    const cb::PolygonContext ctx(m);
    const cb::SpmFamilyIndex index = cb::BuildFamilyIndex(ctx, cb::Limits::FromEnvironment());
    return cb::IsBlockingSet(index, ToEdges(ctx, edges));
  }, py::arg("m"), py::arg("edges"));
  mod.def("find_minimum_blockers", [](int m, const std::string& mode) {
    if (mode != "naive" && mode != "class_pruned") {
      throw cb::InputError("mode must be 'naive' or 'class_pruned'");
    }
    const cb::Limits limits = cb::Limits::FromEnvironment();
    const cb::PolygonContext ctx(m);
    const cb::SpmFamilyIndex index = cb::BuildFamilyIndex(ctx, limits);
    const cb::OracleMode which =
        mode == "naive" ? cb::OracleMode::kNaive : cb::OracleMode::kClassPruned;
    cb::OracleResult result;
    {
      py::gil_scoped_release release;
      result = cb::FindMinimumBlockers(index, which, limits);
    }
    return ToPython(cb::OracleResultToJson(ctx, result));
  }, py::arg("m"), py::arg("mode") = "class_pruned");
  mod.def("verify_theorem", [](int m_min, int m_max, int naive_up_to) {
    std::vector<cb::VerificationReport> reports;
    {
      py::gil_scoped_release release;
      reports = cb::VerifyTheorem(m_min, m_max, naive_up_to, cb::Limits::FromEnvironment());
    }
    cb::Json all = cb::Json::array();
    for (const auto& r : reports) all.push_back(cb::ReportToJson(r));
    return ToPython(all);
  }, py::arg("m_min"), py::arg("m_max"), py::arg("naive_up_to") = 4);

  mod.def("render_figure", [](int m, const PyEdges& solid, const PyEdges& dotted,
                              const PyEdges& thick, bool labels) {
    const cb::PolygonContext ctx(m);
    cb::RenderSpec spec{m, {}, labels};
    spec.layers.push_back({ToEdges(ctx, solid), cb::EdgeStyle::kSolid});
    spec.layers.push_back({ToEdges(ctx, dotted), cb::EdgeStyle::kDotted});
    spec.layers.push_back({ToEdges(ctx, thick), cb::EdgeStyle::kThick});
    return cb::RenderFigure(spec);
  }, py::arg("m"), py::arg("solid") = PyEdges{}, py::arg("dotted") = PyEdges{},
     py::arg("thick") = PyEdges{}, py::arg("labels") = true);
}
