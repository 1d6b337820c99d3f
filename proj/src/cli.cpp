#include "locdens/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "locdens/analysis.hpp"
#include "locdens/density.hpp"
#include "locdens/errors.hpp"
#include "locdens/selftest.hpp"
#include "locdens/version.hpp"

namespace locdens {

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

namespace {

void write_header(std::ostream& out, const std::string& command,
                  const ScenarioConfig* cfg, int resolution_scale) {
    out << "# locdens " << kVersion << "\n";
    out << "# command: " << command << "\n";
    out << "# resolution_scale: " << resolution_scale << "\n";
    if (cfg)
        out << "# config: " << cfg->resolved_json() << "\n";
}

struct BoundChecker {
    std::ostream& diag;
    bool ok = true;

    /// lhs <= rhs, else records a violation and prints both sides.
    bool require(const std::string& what, double lhs, double rhs) {
        if (lhs <= rhs)
            return true;
        ok = false;
        diag << "BOUND VIOLATED: " << what << ": " << format_number(lhs) << " > "
             << format_number(rhs) << "\n";
        return false;
    }
};

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> xs(n);
    for (int i = 0; i < n; ++i)
        xs[i] = lo + (hi - lo) * i / (n - 1.0);
    return xs;
}

} // namespace

int run_density(const ScenarioConfig& cfg, int resolution_scale, std::ostream& table,
                std::ostream& diag) {
    const auto selected = cfg.selected_states();
    if (selected.size() != 1)
        throw ConfigError("density command needs exactly one selected state; got " +
                          std::to_string(selected.size()) +
                          " (set run.states to a single name)");
    const MomentumState s = cfg.build_state(selected.front(), resolution_scale);
    const int n = cfg.spatial_points * resolution_scale;

    write_header(table, "density", &cfg, resolution_scale);
    table << "x,t,povm,naive,nw,energy_raw\n";
    for (double t : cfg.run.times) {
        Interval window = cfg.window;
        if (cfg.window_auto) {
            const Interval a = auto_domain(s, Prescription::Povm, t);
            const Interval b = auto_domain(s, Prescription::NaiveNormalized, t);
            const Interval c = auto_domain(s, Prescription::NewtonWigner, t);
            window = {std::min({a.lo, b.lo, c.lo}), std::max({a.hi, b.hi, c.hi})};
            if (s.params().dim == 3)
                window.lo = 0.0;
        }
        const auto points = linspace(window.lo, window.hi, n);
        const DensityProfile povm = povm_density(s, points, t);
        const DensityProfile naive = naive_probability_density(s, points, t);
        const DensityProfile nw = nw_density(s, points, t);
        const DensityProfile raw = energy_density(s, points, t);
        for (int i = 0; i < n; ++i)
            table << format_number(points[i]) << ',' << format_number(t) << ','
                  << format_number(povm.values[i]) << ',' << format_number(naive.values[i])
                  << ',' << format_number(nw.values[i]) << ','
                  << format_number(raw.values[i]) << "\n";
    }
    (void)diag;
    return kExitOk;
}

int run_convexity(const ScenarioConfig& cfg, int resolution_scale, std::ostream& table,
                  std::ostream& diag) {
    const auto selected = cfg.selected_mixtures();
    if (selected.empty())
        throw ConfigError("convexity command needs at least one mixture");

    write_header(table, "convexity", &cfg, resolution_scale);
    table << "mixture,record,label,lo,hi,mixture_value,convex_value,difference\n";
    BoundChecker bounds{diag};
    for (const auto& name : selected) {
        const ScenarioConfig::MixtureSpec& spec = cfg.find_mixture(name);
        const MixedState mixture = cfg.build_mixture(name, resolution_scale);

        for (std::size_t i = 0; i < spec.components.size(); ++i) {
            const double h = energy_moment(mixture.components()[i].state, 1);
            table << name << ",component_mean_energy," << spec.components[i].state
                  << ",,," << format_number(h) << ",,\n";
        }

        const double gap_naive = convexity_gap(mixture, Prescription::NaiveNormalized, 0.0,
                                               cfg.spatial_points * resolution_scale);
        const double gap_povm = convexity_gap(mixture, Prescription::Povm, 0.0,
                                              cfg.spatial_points * resolution_scale);
        table << name << ",l1_gap,naive,,," << format_number(gap_naive) << ",,\n";
        table << name << ",l1_gap,povm,,," << format_number(gap_povm) << ",,\n";
        bounds.require("povm l1 gap (mixture " + name + ") must vanish", gap_povm, 1e-12);

        for (const auto& region : cfg.run.regions) {
            for (const auto presc :
                 {Prescription::Povm, Prescription::NaiveNormalized}) {
                const Region reg = Region::interval(region.lo, region.hi);
                const double p_mix = region_probability(mixture, reg, 0.0, presc);
                double p_convex = 0.0;
                for (const auto& c : mixture.components())
                    p_convex += c.weight * region_probability(c.state, reg, 0.0, presc);
                table << name << ",region_probability," << to_string(presc) << ','
                      << format_number(region.lo) << ',' << format_number(region.hi) << ','
                      << format_number(p_mix) << ',' << format_number(p_convex) << ','
                      << format_number(p_mix - p_convex) << "\n";
                if (presc == Prescription::Povm)
                    bounds.require("povm region probability linearity (mixture " + name + ")",
                                   std::abs(p_mix - p_convex), 1e-12);
            }
        }
    }
    return bounds.ok ? kExitOk : kExitBoundViolated;
}

int run_tails(const ScenarioConfig& cfg, int resolution_scale, std::ostream& table,
              std::ostream& diag) {
    write_header(table, "tails", &cfg, resolution_scale);
    table << "state,prescription,resolution_scale,r_lo,r_hi,n_points,slope,gamma_hat,"
             "gamma_stderr,residual_rms,bound,pass\n";
    BoundChecker bounds{diag};
    const double bound = cfg.model.mass * (1.0 + cfg.run.tail_tolerance);
    const Interval window = cfg.run.tail_window;
    const int n = std::max(33, cfg.spatial_points / 4) * resolution_scale;

    for (const auto& name : cfg.selected_states()) {
        const MomentumState s = cfg.build_state(name, resolution_scale);
        for (const auto& presc_name : cfg.run.prescriptions) {
            const Prescription presc = prescription_from_string(presc_name);
            const auto points = linspace(window.lo, window.hi, n);
            const DensityProfile profile = density_profile(s, presc, points, 0.0);
            const TailFit fit = fit_tail(profile, window);
            const bool pass = fit.gamma_hat <= bound;
            table << name << ',' << presc_name << ',' << resolution_scale << ','
                  << format_number(fit.r_lo) << ',' << format_number(fit.r_hi) << ','
                  << fit.n_points << ',' << format_number(fit.slope) << ','
                  << format_number(fit.gamma_hat) << ',' << format_number(fit.gamma_stderr)
                  << ',' << format_number(fit.residual_rms) << ',' << format_number(bound)
                  << ',' << (pass ? 1 : 0) << "\n";
            bounds.require("gamma_hat (state " + name + ", " + presc_name + ")",
                           fit.gamma_hat, bound);
        }
    }
    return bounds.ok ? kExitOk : kExitBoundViolated;
}

int run_spread(const ScenarioConfig& cfg, int resolution_scale, std::ostream& table,
               std::ostream& diag) {
    std::vector<double> times;
    for (double t : cfg.run.times)
        if (t > 0.0)
            times.push_back(t);
    if (times.empty())
        throw ConfigError("spread command needs at least one positive time in run.times");

    write_header(table, "spread", &cfg, resolution_scale);
    table << "state,prescription,quantile,resolution_scale,t,radius0,radius,speed,bound,"
             "pass\n";
    BoundChecker bounds{diag};
    const double bound = 1.0 + cfg.run.speed_tolerance;
    const int samples = std::max(1001, cfg.spatial_points) * resolution_scale;

    for (const auto& name : cfg.selected_states()) {
        const MomentumState s = cfg.build_state(name, resolution_scale);
        const FrontSpeedReport report =
            front_speed(s, Prescription::Povm, cfg.run.quantile, times, samples);
        for (std::size_t i = 0; i < report.speeds.size(); ++i) {
            const bool pass = report.speeds[i] <= bound;
            table << name << ",povm," << format_number(report.q) << ','
                  << resolution_scale << ',' << format_number(report.times[i + 1]) << ','
                  << format_number(report.radii.front()) << ','
                  << format_number(report.radii[i + 1]) << ','
                  << format_number(report.speeds[i]) << ',' << format_number(bound) << ','
                  << (pass ? 1 : 0) << "\n";
            bounds.require("front speed (state " + name + ", t = " +
                               format_number(report.times[i + 1]) + ")",
                           report.speeds[i], bound);
        }
    }
    return bounds.ok ? kExitOk : kExitBoundViolated;
}

int run_compare(const ScenarioConfig& cfg, int resolution_scale, std::ostream& table,
                std::ostream& diag) {
    const auto family_names = cfg.run.family.empty() ? cfg.selected_states() : cfg.run.family;
    if (family_names.size() < 2)
        throw ConfigError("compare command needs a family of at least two states "
                          "(run.family)");

    std::vector<MomentumState> family;
    for (const auto& name : family_names)
        family.push_back(cfg.build_state(name, resolution_scale));

    write_header(table, "compare", &cfg, resolution_scale);
    table << "record,state,de_ratio,l1,l1_decreased,width,energy,product\n";
    BoundChecker bounds{diag};

    const auto rows = narrow_energy_study(family, 0.0, cfg.spatial_points * resolution_scale);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::string decreased = i == 0 ? "" : (rows[i].l1_distance < rows[i - 1].l1_distance
                                                   ? "1"
                                                   : "0");
        table << "narrow," << family_names[i] << ',' << format_number(rows[i].spread_ratio)
              << ',' << format_number(rows[i].l1_distance) << ',' << decreased << ",,,\n";
        if (i > 0)
            bounds.require("narrow-energy L1 must decrease along the family (state " +
                               family_names[i] + ")",
                           rows[i].l1_distance, rows[i - 1].l1_distance);
    }

    const auto scan = localization_bound_scan(family, cfg.run.mass_fraction,
                                              std::max(2001, cfg.spatial_points) *
                                                  resolution_scale);
    for (std::size_t i = 0; i < scan.size(); ++i) {
        table << "scan," << family_names[i] << ",,,," << format_number(scan[i].width) << ','
              << format_number(scan[i].mean_energy) << ',' << format_number(scan[i].product)
              << "\n";
        bounds.require("localization product must stay positive (state " +
                           family_names[i] + ")",
                       0.0, scan[i].product);
    }
    return bounds.ok ? kExitOk : kExitBoundViolated;
}

int run_selftest_command(int resolution_scale, std::ostream& table, std::ostream& diag) {
    SelftestOptions options;
    options.resolution_scale = resolution_scale;
    const auto checks = run_selftest(options);
    write_header(table, "selftest", nullptr, resolution_scale);
    table << "check,measured,tolerance,pass\n";
    bool ok = true;
    for (const auto& c : checks) {
        table << c.name << ',' << format_number(c.measured) << ','
              << format_number(c.tolerance) << ',' << (c.pass ? 1 : 0) << "\n";
        diag << (c.pass ? "PASS" : "FAIL") << ' ' << c.name
             << ": measured = " << format_number(c.measured)
             << ", tolerated = " << format_number(c.tolerance) << "\n";
        ok = ok && c.pass;
    }
    return ok ? kExitOk : kExitBoundViolated;
}

int run_command(const std::string& command, const ScenarioConfig& cfg,
                int resolution_scale, std::ostream& table, std::ostream& diag) {
    if (command == "density")
        return run_density(cfg, resolution_scale, table, diag);
    if (command == "convexity")
        return run_convexity(cfg, resolution_scale, table, diag);
    if (command == "tails")
        return run_tails(cfg, resolution_scale, table, diag);
    if (command == "spread")
        return run_spread(cfg, resolution_scale, table, diag);
    if (command == "compare")
        return run_compare(cfg, resolution_scale, table, diag);
    if (command == "selftest")
        return run_selftest_command(resolution_scale, table, diag);
    throw ConfigError("unknown command '" + command + "'");
}

} // namespace locdens
