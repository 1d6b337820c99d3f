#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "locdens/analysis.hpp"
#include "locdens/density.hpp"
#include "locdens/selftest.hpp"
#include "locdens/state.hpp"
#include "locdens/transform.hpp"
#include "locdens/version.hpp"

namespace py = pybind11;
using namespace locdens;

namespace {

MomentumState make_gaussian(double mass, int dim, double p0, double sigma, int nodes) {
    GridSpec spec;
    spec.nodes = nodes;
    return MomentumState::gaussian(ModelParams{mass, dim}, p0, sigma, spec);
}

MixedState make_mixture(const std::vector<std::pair<double, MomentumState>>& components) {
    std::vector<MixedState::Component> comps;
    for (const auto& [w, s] : components)
        comps.push_back({w, s});
    return mix(std::move(comps));
}

Region region_from_parts(const std::vector<std::pair<double, double>>& parts) {
    Region region;
    for (const auto& [lo, hi] : parts)
        region.parts.push_back({lo, hi});
    return region;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Localization probability densities for one-particle states of a "
              "free scalar field";
    m.attr("__version__") = kVersion;

    py::register_exception<Error>(m, "LocdensError");

    py::enum_<FieldKind>(m, "FieldKind")
        .value("plain", FieldKind::Plain)
        .value("tilde", FieldKind::Tilde)
        .value("nw", FieldKind::NewtonWigner);

    py::class_<MomentumState>(m, "MomentumState")
        .def_property_readonly("mass", [](const MomentumState& s) { return s.params().mass; })
        .def_property_readonly("dim", [](const MomentumState& s) { return s.params().dim; })
        .def_property_readonly("nodes",
                               [](const MomentumState& s) { return s.grid().nodes(); })
        .def("norm_squared", &MomentumState::norm_squared)
        .def("refined", &MomentumState::refined, py::arg("factor"))
        .def("phase_advanced", &MomentumState::phase_advanced, py::arg("dt"));

    py::class_<MixedState>(m, "MixedState");

    m.def("gaussian", &make_gaussian, py::arg("mass"), py::arg("dim"), py::arg("p0"),
          py::arg("sigma"), py::arg("nodes") = 2048,
          "Normalized Gaussian wavepacket over the invariant measure");
    m.def("mixture", &make_mixture, py::arg("components"),
          "Convex mixture from [(weight, state), ...]");

    m.def("inner_product", &inner_product);
    m.def("energy_moment", &energy_moment, py::arg("state"), py::arg("k"));
    m.def("energy_spread_ratio", &energy_spread_ratio);

    m.def(
        "field",
        [](const MomentumState& s, const std::string& kind, std::vector<double> points,
           double t) {
            FieldKind fk = FieldKind::Plain;
            if (kind == "tilde")
                fk = FieldKind::Tilde;
            else if (kind == "nw")
                fk = FieldKind::NewtonWigner;
            else if (kind != "plain")
                throw ConfigError("unknown field kind '" + kind + "'");
            const PositionField f = evaluate_field(s, fk, points, t);
            return py::make_tuple(f.value, f.grad, f.dt);
        },
        py::arg("state"), py::arg("kind"), py::arg("points"), py::arg("t") = 0.0,
        "Returns (value, grad, dt) lists of the requested field");

    m.def(
        "density",
        [](const MomentumState& s, const std::string& presc, std::vector<double> points,
           double t) {
            const auto profile =
                density_profile(s, prescription_from_string(presc), points, t);
            return py::make_tuple(profile.values, profile.total_mass_hint);
        },
        py::arg("state"), py::arg("prescription"), py::arg("points"), py::arg("t") = 0.0,
        "Returns (values, total_mass) for 'povm' | 'naive' | 'nw' | 'energy_raw'");

    m.def(
        "mixture_density",
        [](const MixedState& mixed, const std::string& presc, std::vector<double> points,
           double t) {
            return mixture_density(mixed, points, t, prescription_from_string(presc)).values;
        },
        py::arg("mixture"), py::arg("prescription"), py::arg("points"), py::arg("t") = 0.0);

    m.def(
        "region_probability",
        [](const MomentumState& s, const std::vector<std::pair<double, double>>& parts,
           double t, const std::string& presc) {
            return region_probability(s, region_from_parts(parts), t,
                                      prescription_from_string(presc));
        },
        py::arg("state"), py::arg("region"), py::arg("t") = 0.0,
        py::arg("prescription") = "povm");
    m.def(
        "mixture_region_probability",
        [](const MixedState& mixed, const std::vector<std::pair<double, double>>& parts,
           double t, const std::string& presc) {
            return region_probability(mixed, region_from_parts(parts), t,
                                      prescription_from_string(presc));
        },
        py::arg("mixture"), py::arg("region"), py::arg("t") = 0.0,
        py::arg("prescription") = "povm");

    m.def(
        "fit_tail",
        [](const MomentumState& s, const std::string& presc, double lo, double hi, int n) {
            std::vector<double> points(n);
            for (int i = 0; i < n; ++i)
                points[i] = lo + (hi - lo) * i / (n - 1.0);
            const auto profile =
                density_profile(s, prescription_from_string(presc), points, 0.0);
            const TailFit fit = fit_tail(profile, {lo, hi});
            py::dict out;
            out["gamma_hat"] = fit.gamma_hat;
            out["slope"] = fit.slope;
            out["gamma_stderr"] = fit.gamma_stderr;
            out["residual_rms"] = fit.residual_rms;
            return out;
        },
        py::arg("state"), py::arg("prescription"), py::arg("r_lo"), py::arg("r_hi"),
        py::arg("n_points") = 65);

    m.def(
        "front_speed",
        [](const MomentumState& s, double q, std::vector<double> times, int samples) {
            const auto report = front_speed(s, Prescription::Povm, q, times, samples);
            return py::make_tuple(report.times, report.radii, report.speeds);
        },
        py::arg("state"), py::arg("q"), py::arg("times"), py::arg("samples") = 2001);

    m.def(
        "convexity_gap",
        [](const MixedState& mixed, const std::string& presc, double t, int samples) {
            return convexity_gap(mixed, prescription_from_string(presc), t, samples);
        },
        py::arg("mixture"), py::arg("prescription") = "naive", py::arg("t") = 0.0,
        py::arg("samples") = 1201);

    m.def(
        "selftest",
        [](int resolution_scale) {
            SelftestOptions options;
            options.resolution_scale = resolution_scale;
            py::list out;
            for (const auto& c : run_selftest(options))
                out.append(py::make_tuple(c.name, c.measured, c.tolerance, c.pass));
            return out;
        },
        py::arg("resolution_scale") = 1);
}
