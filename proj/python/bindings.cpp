#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tilesub/catalogue.hpp"
#include "tilesub/enumerator.hpp"
#include "tilesub/json_io.hpp"
#include "tilesub/recognition.hpp"
#include "tilesub/subdivision.hpp"
#include "tilesub/tiling.hpp"

namespace py = pybind11;
using namespace tilesub;

namespace {

py::dict marks_dict(const VertexLabeling& l) {
    py::dict d;
    for (auto [v, m] : l) d[py::int_(v)] = m == Mark::Filled ? "filled" : "hollow";
    return d;
}

py::tuple subdivided(const Subdivided& s) { return py::make_tuple(s.map, marks_dict(s.labeling)); }

Subdivided simple(const GMap& g, bool dual) {
    auto res = check_subdivisible(g);
    if (!std::holds_alternative<SubdivisionAssignment>(res)) throw py::value_error("tiling is not subdivisible");
    auto a = std::get<SubdivisionAssignment>(res);
    return simple_pentagonal_subdivision(g, dual ? dual_assignment(a) : a);
}

}  // namespace

PYBIND11_MODULE(_tilesub, m) {
    m.doc() = "Subdivisible tilings of surfaces as generalized maps";

    py::register_exception<GMapError>(m, "GMapError", PyExc_ValueError);
    py::register_exception<JsonInputError>(m, "JsonInputError", PyExc_ValueError);
    py::register_exception<UnknownName>(m, "UnknownName", PyExc_KeyError);
    py::register_exception<SubdivisionError>(m, "SubdivisionError", PyExc_ValueError);
    py::register_exception<EnumError>(m, "EnumError", PyExc_ValueError);

    py::class_<GMap>(m, "GMap")
        .def(py::init([](std::vector<Dart> a0, std::vector<Dart> a1, std::vector<Dart> a2) {
                 return GMap::build(std::move(a0), std::move(a1), std::move(a2));
             }),
             py::arg("alpha0"), py::arg("alpha1"), py::arg("alpha2"))
        .def_static("from_json", [](const std::string& s) { return from_gmap_json(s).map; })
        .def("to_json", [](const GMap& g) { return to_gmap_json(g); })
        .def("alpha", [](const GMap& g, int i) { return g.alpha(i); })
        .def("__len__", &GMap::size)
        .def("__eq__", [](const GMap& a, const GMap& b) { return a == b; })
        .def("canonical", [](const GMap& g) { return canonical_form(g); })
        .def("dual", [](const GMap& g) { return dual_map(g); })
        .def("cell_count", [](const GMap& g, int dim) { return cell_count(g, dim); })
        .def_property_readonly("euler", [](const GMap& g) { return euler_characteristic(g); })
        .def_property_readonly("orientable", [](const GMap& g) { return is_orientable(g); })
        .def_property_readonly("surface", [](const GMap& g) { return classify_surface(g).word(); })
        .def("__repr__", [](const GMap& g) {
            return "<GMap darts=" + std::to_string(g.size()) + " " + classify_surface(g).word() + ">";
        });

    m.def("is_isomorphic", [](const GMap& a, const GMap& b) { return are_isomorphic(a, b).has_value(); });
    m.def("catalogue_list", &catalogue_list);
    m.def("catalogue_get", [](const std::string& n) { return catalogue_get(n).map; });

    m.def("tile_tags", [](const GMap& g) {
        py::dict d;
        for (const Cell& f : cells(g, 2)) d[py::int_(f.id)] = tag_name(classify_quad_tile(g, f.id).tag);
        return d;
    });
    m.def("is_subdivisible", &is_subdivisible);
    m.def("check_subdivisible", [](const GMap& g) {
        py::dict d;
        auto res = check_subdivisible(g);
        d["subdivisible"] = std::holds_alternative<SubdivisionAssignment>(res);
        if (auto* a = std::get_if<SubdivisionAssignment>(&res)) d["assignment"] = *a;
        else {
            auto& w = std::get<ParityWitness>(res);
            d["witness"] = py::dict(py::arg("faces") = w.faces, py::arg("edges") = w.edges);
        }
        return d;
    });

    m.def(
        "subdivide",
        [](const GMap& g, const std::string& op) -> py::tuple {
            if (op == "simple") return subdivided(simple(g, false));
            if (op == "dual-simple") return subdivided(simple(g, true));
            if (op == "refine3") return py::make_tuple(refine3(g), py::dict());
            if (op == "quad") return subdivided(quadrilateral_subdivision(g));
            if (op == "pent") {
                Orientation o = orientation(g);
                if (!o.orientable) throw SubdivisionError(SubdivisionError::Kind::NotOrientable, "pentagonal subdivision needs an orientable surface");
                return subdivided(pentagonal_subdivision(g, o.color));
            }
            if (op == "double") {
                DoubleResult r = double_pentagonal_subdivision(g);
                if (!r.result) throw py::value_error("quadrilateral subdivision is not subdivisible");
                return subdivided(*r.result);
            }
            throw py::value_error("unknown op: " + op);
        },
        py::arg("g"), py::arg("op"));

    m.def(
        "recognize",
        [](const GMap& g, const std::string& mode) {
            RecognitionResult r = mode == "sps"        ? recognize_sps(g)
                                  : mode == "ps"       ? recognize_ps(g)
                                  : mode == "one-circ" ? recognize_one_circ(g)
                                  : mode == "qs"       ? recognize_qs(g)
                                                       : throw py::value_error("unknown mode: " + mode);
            py::dict d;
            d["ok"] = r.ok;
            d["error"] = r.error;
            d["solution_count"] = r.solution_count;
            if (r.ok) {
                d["base"] = r.base;
                d["labeling"] = marks_dict(r.labeling);
                d["verified"] = r.verified;
            } else if (r.failing_face >= 0) {
                d["failing_face"] = r.failing_face;
            }
            return d;
        },
        py::arg("g"), py::arg("mode"));

    m.def(
        "enumerate_tilings",
        [](int gon, int faces, std::optional<std::string> surface, int min_degree, int jobs) {
            py::gil_scoped_release release;
            return enumerate_tilings({gon, faces, surface, min_degree}, jobs);
        },
        py::arg("gon"), py::arg("faces"), py::arg("surface") = std::nullopt, py::arg("min_degree") = 3,
        py::arg("jobs") = 1);
}
