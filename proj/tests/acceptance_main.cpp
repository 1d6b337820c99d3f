// Acceptance suite: every claim the artifact is contracted to reproduce,
// one PASS/FAIL line each, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "locdens/analysis.hpp"
#include "locdens/density.hpp"
#include "locdens/transform.hpp"

using namespace locdens;

namespace {

int failures = 0;

void report(int index, const std::string& name, bool pass, const std::string& detail) {
    std::printf("%s criterion %2d: %s (%s)\n", pass ? "PASS" : "FAIL", index, name.c_str(),
                detail.c_str());
    if (!pass)
        ++failures;
}

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> xs(n);
    for (int i = 0; i < n; ++i)
        xs[i] = lo + (hi - lo) * i / (n - 1.0);
    return xs;
}

const ModelParams kMassive{1.0, 1};

// --- 1. POVM normalization across the Gaussian fixture family ------------
void criterion_normalization() {
    const auto start = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (double sigma : {0.1, 0.25, 1.0})
        for (double p0 : {0.0, 1.0, 5.0}) {
            const auto s = MomentumState::gaussian(kMassive, p0, sigma);
            for (double t : {0.0, 1.0, 5.0}) {
                const double integral = integrate_density(
                    s, Prescription::Povm, t, auto_domain(s, Prescription::Povm, t));
                worst = std::max(worst, std::abs(integral - 1.0));
            }
        }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char detail[128];
    std::snprintf(detail, sizeof(detail),
                  "max |integral - 1| = %.3g vs 1e-6; runtime %.1f s vs 30 s", worst,
                  seconds);
    report(1, "povm density integrates to one", worst < 1e-6 && seconds < 30.0, detail);
}

// --- 2. POVM region probabilities are linear on mixtures -----------------
void criterion_povm_linearity() {
    const auto s1 = MomentumState::gaussian(kMassive, 0.0, 0.25);
    const auto s2 = MomentumState::gaussian(kMassive, 2.0, 0.25);
    const auto s3 = MomentumState::gaussian(kMassive, 1.0, 0.4);
    const std::vector<MixedState> mixtures{
        mix({{0.5, s1}, {0.5, s2}}),
        mix({{0.3, s1}, {0.7, s2}}),
        mix({{0.2, s1}, {0.5, s2}, {0.3, s3}}),
    };
    std::vector<Region> regions{Region::interval(-1.0, 1.0), Region::interval(0.5, 3.0)};
    Region split;
    split.parts = {{-2.0, -1.0}, {1.0, 2.0}};
    regions.push_back(split);

    double worst = 0.0;
    for (const auto& m : mixtures)
        for (const auto& region : regions) {
            const double p_mix = region_probability(m, region, 0.0, Prescription::Povm);
            double p_convex = 0.0;
            for (const auto& c : m.components())
                p_convex += c.weight * region_probability(c.state, region, 0.0,
                                                          Prescription::Povm);
            worst = std::max(worst, std::abs(p_mix - p_convex));
        }
    char detail[96];
    std::snprintf(detail, sizeof(detail), "max |mixture - convex| = %.3g vs 1e-12", worst);
    report(2, "povm mixture probabilities are convex combinations", worst <= 1e-12, detail);
}

// --- 3. Naive prescription fails convexity on the <H>-ratio-2.2 pair -----
void criterion_naive_nonlinearity() {
    const auto s1 = MomentumState::gaussian(kMassive, 0.0, 0.25);
    const auto s2 = MomentumState::gaussian(kMassive, 2.0, 0.25);
    const auto m = mix({{0.5, s1}, {0.5, s2}});
    const double gap = convexity_gap(m, Prescription::NaiveNormalized, 0.0, 2001);
    // fixture pinned by the double-resolution oracle run before freezing
    const double pinned = 0.0085736;
    const bool pass = gap > 1e-3 && std::abs(gap / pinned - 1.0) < 0.03;
    char detail[96];
    std::snprintf(detail, sizeof(detail), "L1 gap = %.6g vs > 1e-3, pinned %.6g", gap,
                  pinned);
    report(3, "naive mixture density is not the convex combination", pass, detail);
}

// --- 4. tilde(p) = 2^{-1/2} E^{-1} psi_NW(p) ------------------------------
void criterion_weight_identity() {
    const auto s = MomentumState::gaussian(kMassive, 1.0, 0.25);
    double worst = 0.0;
    for (double p : s.grid().nodes()) {
        const double energy = on_shell_energy(p, kMassive.mass);
        const double lhs = field_weight(FieldKind::Tilde, energy);
        const double rhs =
            field_weight(FieldKind::NewtonWigner, energy) / (std::sqrt(2.0) * energy);
        worst = std::max(worst, std::abs(lhs - rhs) / rhs);
    }
    char detail[80];
    std::snprintf(detail, sizeof(detail), "max relative deviation = %.3g vs 1e-14", worst);
    report(4, "newton-wigner weight relation holds on every node", worst <= 1e-14, detail);
}

// --- 5. Fitted tail exponents never beat the mass bound -------------------
void criterion_tail_bound() {
    struct Fixture {
        double p0, sigma, lo, hi;
    };
    const std::vector<Fixture> fixtures{
        {0.0, 0.25, 4.0, 8.0}, {1.0, 0.25, 4.0, 8.0}, {0.0, 0.1, 8.0, 16.0},
        {1.0, 0.1, 8.0, 16.0}};
    bool pass = true;
    double worst_margin = -1e9;
    for (const auto& fx : fixtures) {
        for (int scale : {1, 2}) {
            GridSpec spec;
            spec.nodes = 2048 * scale;
            const auto s = MomentumState::gaussian(kMassive, fx.p0, fx.sigma, spec);
            const auto points = linspace(fx.lo, fx.hi, 65 * scale);
            for (const auto presc :
                 {Prescription::Povm, Prescription::NaiveNormalized}) {
                const auto profile = density_profile(s, presc, points, 0.0);
                const TailFit fit = fit_tail(profile, {fx.lo, fx.hi});
                const double margin =
                    fit.gamma_hat - (kMassive.mass + 3.0 * fit.gamma_stderr);
                worst_margin = std::max(worst_margin, margin);
                pass = pass && margin <= 0.0;
            }
        }
    }
    char detail[112];
    std::snprintf(detail, sizeof(detail),
                  "max gamma_hat - (m + 3 se) = %.4g vs <= 0, two resolutions",
                  worst_margin);
    report(5, "tail exponents satisfy gamma_hat <= m + 3 stderr", pass, detail);
}

// --- 6. Quantile fronts stay subluminal; excess shrinks with resolution ---
void criterion_front_speed() {
    double excess[2] = {0.0, 0.0};
    double max_speed = 0.0;
    for (int i = 0; i < 2; ++i) {
        GridSpec spec;
        spec.nodes = 2048 << i;
        const auto s = MomentumState::gaussian(kMassive, 0.0, 0.25, spec);
        const auto report_ =
            front_speed(s, Prescription::Povm, 0.1, {1.0, 2.0, 4.0}, 4001 << i);
        for (double v : report_.speeds) {
            excess[i] = std::max(excess[i], v - 1.0);
            if (i == 0)
                max_speed = std::max(max_speed, v);
        }
    }
    const bool pass = max_speed <= 1.05 && excess[1] <= excess[0] + 1e-12;
    char detail[112];
    std::snprintf(detail, sizeof(detail),
                  "max speed = %.4g vs 1.05; excess %.3g -> %.3g under doubling",
                  max_speed, std::max(excess[0], 0.0), std::max(excess[1], 0.0));
    report(6, "quantile front speeds are subluminal", pass, detail);
}

// --- 7. Narrow-energy agreement of naive vs povm --------------------------
void criterion_narrow_energy() {
    std::vector<MomentumState> family;
    for (double sigma : {1.0, 0.5, 0.25, 0.1})
        family.push_back(MomentumState::gaussian(kMassive, 5.0, sigma));
    const auto rows = narrow_energy_study(family, 0.0, 3001);
    bool decreasing = true;
    for (std::size_t i = 1; i < rows.size(); ++i)
        decreasing = decreasing && rows[i].l1_distance < rows[i - 1].l1_distance;
    const bool pass = decreasing && rows.back().l1_distance < 0.02;
    char detail[128];
    std::snprintf(detail, sizeof(detail),
                  "L1 = {%.4g, %.4g, %.4g, %.4g}, last vs 0.02", rows[0].l1_distance,
                  rows[1].l1_distance, rows[2].l1_distance, rows[3].l1_distance);
    report(7, "naive and povm densities converge for narrow energy spread", pass, detail);
}

// --- 8. Energy density integrates to <H> -----------------------------------
void criterion_energy_consistency() {
    double worst = 0.0;
    for (double sigma : {0.1, 0.25, 1.0})
        for (double p0 : {0.0, 1.0, 5.0}) {
            const auto s = MomentumState::gaussian(kMassive, p0, sigma);
            const double integral =
                integrate_density(s, Prescription::EnergyDensityRaw, 0.0,
                                  auto_domain(s, Prescription::EnergyDensityRaw, 0.0));
            worst = std::max(worst, std::abs(integral / energy_moment(s, 1) - 1.0));
        }
    char detail[96];
    std::snprintf(detail, sizeof(detail), "max relative gap = %.3g vs 1e-6", worst);
    report(8, "energy density integrates to the mean energy", worst < 1e-6, detail);
}

// --- 9. Analytic derivatives converge at order h^2 -------------------------
void criterion_derivatives() {
    const auto s = MomentumState::gaussian(kMassive, 1.0, 0.25);
    bool pass = true;
    std::string summary;
    for (const auto kind : {FieldKind::Plain, FieldKind::Tilde, FieldKind::NewtonWigner}) {
        double prev = 0.0;
        for (int i = 0; i < 4; ++i) {
            const double h = 8e-3 / (1 << i);
            const auto rep = check_derivatives(s, kind, 0.5, 0.3, h);
            if (i > 0 && prev > 1e-6) {
                const double ratio = prev / rep.max_deviation;
                pass = pass && ratio > 3.0; // O(h^2) until the floor
            }
            prev = rep.max_deviation;
        }
        const auto fine = check_derivatives(s, kind, 0.5, 0.3, 1e-4);
        pass = pass && fine.max_deviation < 1e-6;
        summary += to_string(kind) + "=" + std::to_string(fine.max_deviation) + " ";
    }
    report(9, "analytic derivatives match central differences at O(h^2)", pass,
           summary + "vs 1e-6 floor");
}

// --- 10. Localization products bounded away from zero ----------------------
void criterion_localization_scan() {
    std::vector<MomentumState> family;
    GridSpec spec;
    for (double sigma : {0.1, 0.25, 0.5, 1.0, 2.0, 5.0, 10.0}) {
        spec.nodes = sigma >= 5.0 ? 8192 : 2048;
        family.push_back(MomentumState::gaussian(kMassive, 0.0, sigma, spec));
    }
    const auto rows = localization_bound_scan(family, 0.9, 4001);
    double min_product = rows.front().product;
    for (const auto& row : rows)
        min_product = std::min(min_product, row.product);
    // frozen regression value of the scan minimum
    const double pinned = 2.9535619;
    bool pass = min_product > 0.0 && std::abs(min_product / pinned - 1.0) < 0.02;

    // massless dilation invariance
    const ModelParams massless{0.0, 1};
    GridSpec fine;
    fine.nodes = 4096;
    std::vector<MomentumState> pair{MomentumState::gaussian(massless, 2.0, 0.25, fine),
                                    MomentumState::gaussian(massless, 4.0, 0.5, fine)};
    const auto dil = localization_bound_scan(pair, 0.9, 8001);
    const double drift = std::abs(dil[0].product / dil[1].product - 1.0);
    pass = pass && drift < 1e-3;

    char detail[128];
    std::snprintf(detail, sizeof(detail),
                  "min product = %.6g (pinned %.6g); dilation drift %.2g vs 1e-3",
                  min_product, pinned, drift);
    report(10, "localization products have a positive frozen minimum", pass, detail);
}

} // namespace

int main() {
    criterion_normalization();
    criterion_povm_linearity();
    criterion_naive_nonlinearity();
    criterion_weight_identity();
    criterion_tail_bound();
    criterion_front_speed();
    criterion_narrow_energy();
    criterion_energy_consistency();
    criterion_derivatives();
    criterion_localization_scan();
    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
