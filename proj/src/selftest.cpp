#include "locdens/selftest.hpp"

#include <cmath>

#include "locdens/analysis.hpp"
#include "locdens/density.hpp"
#include "locdens/state.hpp"
#include "locdens/transform.hpp"

namespace locdens {

std::vector<SelftestCheck> run_selftest(const SelftestOptions& options) {
    std::vector<SelftestCheck> checks;
    auto add = [&](const std::string& name, double measured, double tolerance) {
        checks.push_back({name, measured, tolerance, measured <= tolerance});
    };

    const ModelParams params{1.0, 1};
    GridSpec spec;
    spec.nodes = 1024 * options.resolution_scale;
    const MomentumState rest = MomentumState::gaussian(params, 0.0, 0.25, spec);
    const MomentumState boosted = MomentumState::gaussian(params, 2.0, 0.25, spec);

    // normalization over the invariant measure (measure_scale injects the
    // harness fault; correct operation has scale 1)
    add("state_normalization", std::abs(options.measure_scale * rest.norm_squared() - 1.0),
        1e-8);

    // tilde * sqrt(2) * E == newton-wigner, pointwise over the grid
    double weight_dev = 0.0;
    for (double p : rest.grid().nodes()) {
        const double energy = on_shell_energy(p, params.mass);
        const double lhs = field_weight(FieldKind::Tilde, energy) * std::sqrt(2.0) * energy;
        const double rhs = field_weight(FieldKind::NewtonWigner, energy);
        weight_dev = std::max(weight_dev, std::abs(lhs - rhs) / rhs);
    }
    add("tilde_nw_weight_identity", weight_dev, 1e-14);

    // POVM density integrates to one
    add("povm_normalization",
        std::abs(integrate_density(rest, Prescription::Povm, 0.0,
                                   auto_domain(rest, Prescription::Povm, 0.0)) *
                     options.measure_scale -
                 1.0),
        1e-6);

    // energy density integrates to <H>
    const double h1 = energy_moment(rest, 1);
    add("energy_density_vs_mean_energy",
        std::abs(integrate_density(rest, Prescription::EnergyDensityRaw, 0.0,
                                   auto_domain(rest, Prescription::EnergyDensityRaw, 0.0)) /
                     h1 -
                 1.0),
        1e-6);

    // Newton-Wigner density is L2-normalized
    add("nw_normalization",
        std::abs(integrate_density(rest, Prescription::NewtonWigner, 0.0,
                                   auto_domain(rest, Prescription::NewtonWigner, 0.0)) -
                 1.0),
        1e-6);

    // POVM region probabilities are linear on mixtures
    const MixedState mixture = mix({{0.5, rest}, {0.5, boosted}});
    const Region window = Region::interval(-1.0, 1.0);
    const double lin_mix = region_probability(mixture, window, 0.0, Prescription::Povm);
    const double lin_convex =
        0.5 * region_probability(rest, window, 0.0, Prescription::Povm) +
        0.5 * region_probability(boosted, window, 0.0, Prescription::Povm);
    add("povm_mixture_linearity", std::abs(lin_mix - lin_convex), 1e-12);

    // analytic kernels vs central differences
    const auto dplain = check_derivatives(rest, FieldKind::Plain, 0.5, 0.3, 1e-4);
    add("derivatives_plain", dplain.max_deviation, 1e-6);
    const auto dtilde = check_derivatives(boosted, FieldKind::Tilde, 1.0, 0.2, 1e-4);
    add("derivatives_tilde", dtilde.max_deviation, 1e-6);

    // evolving the state phase then evaluating equals evaluating later
    {
        FieldEvaluator direct(boosted, FieldKind::Plain);
        FieldEvaluator advanced(boosted.phase_advanced(0.7), FieldKind::Plain);
        double dev = 0.0;
        for (double x : {-2.0, 0.0, 1.5}) {
            const auto a = direct.at(x, 0.7 + 0.4);
            const auto b = advanced.at(x, 0.4);
            dev = std::max(dev, std::abs(a.value - b.value));
        }
        add("time_translation_covariance", dev, 1e-10);
    }

    return checks;
}

} // namespace locdens
