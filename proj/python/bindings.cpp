#include <optional>
#include <sstream>
#include <string>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "isoasym/config.hpp"
#include "isoasym/errors.hpp"
#include "isoasym/frenet.hpp"
#include "isoasym/mesh.hpp"

namespace py = pybind11;
using namespace isoasym;

namespace {

Var var_from_name(const std::string& name) {
    if (name == "s")
        return Var::S;
    if (name == "t")
        return Var::T;
    if (name == "q")
        return Var::Q;
    throw py::value_error("variable must be 's', 't' or 'q'");
}

Param param_from_name(const std::string& name) {
    if (name == "s")
        return Param::S;
    if (name == "t")
        return Param::T;
    if (name == "q")
        return Param::Q;
    throw py::value_error("parameter must be 's', 't' or 'q'");
}

py::tuple to_tuple(const Vec4& v) {
    return py::make_tuple(v.x1, v.x2, v.x3, v.x4);
}

CurveSpec curve_from(const Config& cfg) {
    return CurveSpec({cfg.curve_exprs[0], cfg.curve_exprs[1], cfg.curve_exprs[2],
                      cfg.curve_exprs[3]},
                     cfg.s_min, cfg.s_max);
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Families of hypersurfaces in R^4 sharing a curve as a common "
              "isoasymptotic";

    py::register_exception<Error>(m, "IsoasymError");

    py::class_<Expr>(m, "Expr")
        .def("eval", &Expr::eval, py::arg("s") = 0.0, py::arg("t") = 0.0,
             py::arg("q") = 0.0)
        .def(
            "diff",
            [](const Expr& e, const std::string& var) {
                return e.differentiate(var_from_name(var));
            },
            py::arg("var"))
        .def("is_constant", &Expr::is_constant)
        .def("__str__", &Expr::str)
        .def("__repr__",
             [](const Expr& e) { return "Expr(\"" + e.str() + "\")"; });

    m.def(
        "parse", [](const std::string& text) { return parse(text); },
        py::arg("text"), "Parse an expression in the variables s, t, q");

    m.def("example_names", [] { return example_names(); },
          "Builtin example names");
    m.def(
        "example_config",
        [](const std::string& name) { return example_config(name); },
        py::arg("name"), "Canonical JSON for a builtin example");

    m.def(
        "frenet",
        [](const std::string& config_json, double s) {
            const Config cfg = parse_config(config_json);
            const FrenetData fd = frenet_apparatus(curve_from(cfg), s);
            py::dict d;
            d["s"] = fd.s;
            d["T"] = to_tuple(fd.T);
            d["N"] = to_tuple(fd.N);
            d["B1"] = to_tuple(fd.B1);
            d["B2"] = to_tuple(fd.B2);
            d["kappa1"] = fd.kappa1;
            d["kappa2"] = fd.kappa2;
            d["kappa3"] = fd.kappa3;
            return d;
        },
        py::arg("config_json"), py::arg("s"),
        "Moving frame and curvatures of the configured curve at s");

    m.def(
        "verify_json",
        [](const std::string& config_json) {
            const Config cfg = parse_config(config_json);
            const VerificationReport report =
                check_asymptotic(cfg.make_family(), cfg.grid.n_s,
                                 cfg.tolerances.tol, cfg.tolerances.tol_nondeg);
            return report_json(report);
        },
        py::arg("config_json"),
        "Common-isoasymptotic verification report as a JSON string");

    m.def(
        "mesh_obj",
        [](const std::string& config_json, std::optional<std::string> fix,
           std::optional<double> value, std::optional<int> project_axis,
           int s_samples) {
            const Config cfg = parse_config(config_json);
            SliceConfig slice = cfg.slice;
            if (!cfg.has_slice && (!fix || !value || !project_axis))
                throw ConfigError("slice", "config has no slice section; pass "
                                           "fix, value and project_axis");
            if (fix)
                slice.fix = param_from_name(*fix);
            if (value)
                slice.value = *value;
            if (project_axis)
                slice.project_axis = *project_axis;

            const FamilySpec family = cfg.make_family();
            int n_a, n_b;
            switch (slice.fix) {
            case Param::S: n_a = cfg.grid.n_t; n_b = cfg.grid.n_q; break;
            case Param::T: n_a = s_samples;    n_b = cfg.grid.n_q; break;
            default:       n_a = s_samples;    n_b = cfg.grid.n_t; break;
            }
            const Mesh mesh =
                slice_surface(family, slice.fix, slice.value, n_a, n_b,
                              make_projection(slice.project_axis));
            std::ostringstream out;
            write_obj(mesh, out);
            return out.str();
        },
        py::arg("config_json"), py::arg("fix") = std::nullopt,
        py::arg("value") = std::nullopt, py::arg("project_axis") = std::nullopt,
        py::arg("s_samples") = 25,
        "Projected parameter slice as Wavefront OBJ text");
}
