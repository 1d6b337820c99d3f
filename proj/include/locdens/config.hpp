#ifndef LOCDENS_CONFIG_HPP
#define LOCDENS_CONFIG_HPP

#include <map>
#include <string>
#include <vector>

#include "locdens/state.hpp"
#include "locdens/types.hpp"

namespace locdens {

/// Scenario file: model + named wavepackets + named mixtures + grid and
/// run parameters. JSON on disk; see README for the schema.
struct ScenarioConfig {
    struct StateSpec {
        std::string name;
        double p0 = 0.0;
        double sigma = 1.0;
    };
    struct MixtureComponent {
        double weight = 0.0;
        std::string state;
    };
    struct MixtureSpec {
        std::string name;
        std::vector<MixtureComponent> components;
    };
    struct RunParams {
        std::vector<double> times{0.0};
        std::vector<std::string> states;   ///< empty = all declared states
        std::vector<std::string> mixtures; ///< empty = all declared mixtures
        std::vector<Interval> regions{{-1.0, 1.0}};
        double quantile = 0.1;
        double mass_fraction = 0.9;
        Interval tail_window{4.0, 8.0};
        double tail_tolerance = 0.1;  ///< bound: gamma_hat <= mass * (1 + tol)
        double speed_tolerance = 0.05; ///< bound: speed <= 1 + tol
        std::vector<std::string> prescriptions{"povm", "naive"};
        std::vector<std::string> family; ///< ordered family for compare
    };

    ModelParams model;
    std::vector<StateSpec> states;
    std::vector<MixtureSpec> mixtures;
    int momentum_nodes = 2048;
    bool window_auto = true;
    Interval window{-10.0, 10.0};
    int spatial_points = 401;
    RunParams run;

    const StateSpec& find_state(const std::string& name) const;
    const MixtureSpec& find_mixture(const std::string& name) const;

    /// Names selected by run.states / run.mixtures with empty meaning all.
    std::vector<std::string> selected_states() const;
    std::vector<std::string> selected_mixtures() const;

    /// Builds the named wavepacket at resolution_scale times the configured
    /// momentum nodes.
    MomentumState build_state(const std::string& name, int resolution_scale = 1) const;
    MixedState build_mixture(const std::string& name, int resolution_scale = 1) const;

    /// Canonical single-line JSON of the defaults-resolved config (echoed
    /// into every report header).
    std::string resolved_json() const;
};

/// Parses and validates a scenario. Parse errors carry line/column; field
/// errors carry the JSON path of the offending entry.
ScenarioConfig parse_config(const std::string& text);
ScenarioConfig load_config(const std::string& path);

} // namespace locdens

#endif
