#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "movekit/boundary.hpp"
#include "movekit/catalog.hpp"
#include "movekit/fuzz.hpp"
#include "movekit/geometry.hpp"
#include "movekit/layout.hpp"
#include "movekit/trace.hpp"

namespace py = pybind11;
using namespace movekit;

namespace {

PointerButton parseButton(const std::string& name) {
    if (name == "left") {
        return PointerButton::Left;
    }
    if (name == "right") {
        return PointerButton::Right;
    }
    throw py::value_error("button must be 'left' or 'right'");
}

std::vector<Point> toPoints(const std::vector<std::pair<double, double>>& xy) {
    std::vector<Point> out;
    out.reserve(xy.size());
    for (const auto& [x, y] : xy) {
        out.push_back({x, y});
    }
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Direct-manipulation engine: covers, mover, layouts, replay and fuzzing";

    py::register_exception<LayoutError>(m, "LayoutError", PyExc_ValueError);
    py::register_exception<TraceError>(m, "TraceError", PyExc_ValueError);

    m.def("dist_point_segment", [](std::pair<double, double> p, std::pair<double, double> a,
                                   std::pair<double, double> b) {
        return distPointSegment({p.first, p.second}, {a.first, a.second}, {b.first, b.second});
    });
    m.def("point_in_convex_polygon", [](std::pair<double, double> p, const std::vector<std::pair<double, double>>& v) {
        return pointInConvexPolygon({p.first, p.second}, toPoints(v));
    });

    m.def("scene_names", &sceneNames);

    py::class_<Scene, std::unique_ptr<Scene>>(m, "Scene")
        .def(py::init([](const std::string& name) { return makeScene(name); }), py::arg("name"))
        .def_property_readonly("id", &Scene::id)
        .def_property_readonly("extent", [](const Scene& s) { return std::pair{s.extent().w, s.extent().h}; })
        .def("tags", &Scene::tags)
        .def(
            "pointer_down",
            [](Scene& s, double x, double y, const std::string& button) {
                return s.mover().catchAt({x, y}, parseButton(button));
            },
            py::arg("x"), py::arg("y"), py::arg("button") = "left")
        .def("pointer_move", [](Scene& s, double x, double y) { return s.mover().move({x, y}); })
        .def("pointer_up",
             [](Scene& s) -> std::optional<std::pair<std::string, std::size_t>> {
                 const auto released = s.mover().release();
                 if (!released) {
                     return std::nullopt;
                 }
                 return std::pair{s.tagOf(released->element), released->node};
             })
        .def("cursor", [](const Scene& s, double x, double y) { return std::string(toString(s.mover().cursor({x, y}))); })
        .def("field", [](const Scene& s, const std::string& path, const std::string& field) {
            return recordField(s, path, field);
        })
        .def("save_layout", [](const Scene& s) { return saveLayout(s); })
        .def("restore_layout", [](Scene& s, const std::string& text) { return restoreLayout(s, text); })
        .def("render", [](const Scene& s, bool overlay) { return toJson(s.render(overlay)).dump(); },
             py::arg("overlay") = false)
        .def("violations", [](const Scene& s) { return Fuzzer::auditScene(s); });

    py::class_<ReplayReport>(m, "ReplayReport")
        .def_readonly("scene", &ReplayReport::scene)
        .def_readonly("events", &ReplayReport::events)
        .def_readonly("catches", &ReplayReport::catches)
        .def_readonly("repaints", &ReplayReport::repaints)
        .def_readonly("layout", &ReplayReport::layout)
        .def_property_readonly("failed", &ReplayReport::failed)
        .def_property_readonly("passed", &ReplayReport::passed)
        .def("format", &ReplayReport::format);

    m.def("replay", [](const std::string& scene, const std::string& trace) {
        return runTrace(scene, parseTrace(trace));
    });

    py::class_<FuzzReport>(m, "FuzzReport")
        .def_readonly("scene", &FuzzReport::scene)
        .def_readonly("seed", &FuzzReport::seed)
        .def_readonly("steps", &FuzzReport::steps)
        .def_readonly("catches", &FuzzReport::catches)
        .def_readonly("repaints", &FuzzReport::repaints)
        .def_readonly("violation_count", &FuzzReport::violationCount)
        .def_readonly("violations", &FuzzReport::violations)
        .def_readonly("layout_hash", &FuzzReport::layoutHash)
        .def_readonly("layout", &FuzzReport::layout)
        .def_property_readonly("ok", &FuzzReport::ok)
        .def("format", &FuzzReport::format);

    m.def("fuzz", &fuzzScene, py::arg("scene"), py::arg("steps") = 1000, py::arg("seed") = 1);

    py::class_<BoundarySession>(m, "BoundarySession")
        .def(py::init<>())
        .def("handle_line", &BoundarySession::handleLine);
}
