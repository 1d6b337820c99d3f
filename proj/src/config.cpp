#include "locdens/config.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "locdens/errors.hpp"

namespace locdens {

using json = nlohmann::json;

namespace {

const json& require_field(const json& j, const char* key, const std::string& path) {
    auto it = j.find(key);
    if (it == j.end())
        throw ConfigError(path + "." + key + ": missing required field");
    return *it;
}

double as_number(const json& j, const std::string& path) {
    if (!j.is_number())
        throw ConfigError(path + ": expected a number");
    return j.get<double>();
}

int as_int(const json& j, const std::string& path) {
    if (!j.is_number_integer())
        throw ConfigError(path + ": expected an integer");
    return j.get<int>();
}

std::string as_string(const json& j, const std::string& path) {
    if (!j.is_string())
        throw ConfigError(path + ": expected a string");
    return j.get<std::string>();
}

Interval as_interval(const json& j, const std::string& path) {
    if (!j.is_array() || j.size() != 2)
        throw ConfigError(path + ": expected [lo, hi]");
    Interval iv{as_number(j[0], path + "[0]"), as_number(j[1], path + "[1]")};
    if (!(iv.lo < iv.hi))
        throw ConfigError(path + ": needs lo < hi");
    return iv;
}

} // namespace

ScenarioConfig parse_config(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config parse error: ") + e.what());
    }

    ScenarioConfig cfg;

    const json& model = require_field(j, "model", "config");
    cfg.model.mass = as_number(require_field(model, "mass", "model"), "model.mass");
    cfg.model.dim = as_int(require_field(model, "dim", "model"), "model.dim");
    cfg.model.validate();

    const json& states = require_field(j, "states", "config");
    if (!states.is_array() || states.empty())
        throw ConfigError("states: expected a nonempty array");
    std::set<std::string> names;
    for (std::size_t i = 0; i < states.size(); ++i) {
        const std::string path = "states[" + std::to_string(i) + "]";
        const json& s = states[i];
        ScenarioConfig::StateSpec spec;
        spec.name = as_string(require_field(s, "name", path), path + ".name");
        const std::string type = as_string(require_field(s, "type", path), path + ".type");
        if (type != "gaussian")
            throw ConfigError(path + ".type: unknown wavepacket type '" + type +
                              "' (only 'gaussian' is supported)");
        spec.p0 = as_number(require_field(s, "p0", path), path + ".p0");
        spec.sigma = as_number(require_field(s, "sigma", path), path + ".sigma");
        if (!(spec.sigma > 0.0))
            throw ConfigError(path + ".sigma: must be > 0");
        if (!names.insert(spec.name).second)
            throw ConfigError(path + ".name: duplicate state name '" + spec.name + "'");
        cfg.states.push_back(spec);
    }

    if (j.contains("mixtures")) {
        const json& mixtures = j["mixtures"];
        if (!mixtures.is_array())
            throw ConfigError("mixtures: expected an array");
        std::set<std::string> mix_names;
        for (std::size_t i = 0; i < mixtures.size(); ++i) {
            const std::string path = "mixtures[" + std::to_string(i) + "]";
            const json& m = mixtures[i];
            ScenarioConfig::MixtureSpec spec;
            spec.name = as_string(require_field(m, "name", path), path + ".name");
            if (!mix_names.insert(spec.name).second)
                throw ConfigError(path + ".name: duplicate mixture name '" + spec.name + "'");
            const json& comps = require_field(m, "components", path);
            if (!comps.is_array() || comps.empty())
                throw ConfigError(path + ".components: expected a nonempty array");
            double total = 0.0;
            for (std::size_t k = 0; k < comps.size(); ++k) {
                const std::string cpath = path + ".components[" + std::to_string(k) + "]";
                const json& c = comps[k];
                ScenarioConfig::MixtureComponent comp;
                comp.weight = as_number(require_field(c, "weight", cpath), cpath + ".weight");
                comp.state = as_string(require_field(c, "state", cpath), cpath + ".state");
                if (!(comp.weight > 0.0))
                    throw ConfigError(cpath + ".weight: must be > 0");
                if (!names.count(comp.state))
                    throw ConfigError(cpath + ".state: unknown state '" + comp.state + "'");
                total += comp.weight;
                spec.components.push_back(comp);
            }
            if (std::abs(total - 1.0) > 1e-12) {
                std::ostringstream msg;
                msg << path << ".components: weights sum to " << total
                    << ", expected 1 within 1e-12";
                throw ConfigError(msg.str());
            }
            cfg.mixtures.push_back(spec);
        }
    }

    if (j.contains("grids")) {
        const json& grids = j["grids"];
        if (grids.contains("momentum_nodes"))
            cfg.momentum_nodes = as_int(grids["momentum_nodes"], "grids.momentum_nodes");
        if (grids.contains("spatial_points"))
            cfg.spatial_points = as_int(grids["spatial_points"], "grids.spatial_points");
        if (grids.contains("spatial_window")) {
            const json& w = grids["spatial_window"];
            if (w.is_string() && w.get<std::string>() == "auto") {
                cfg.window_auto = true;
            } else {
                cfg.window = as_interval(w, "grids.spatial_window");
                cfg.window_auto = false;
            }
        }
    }
    if (cfg.momentum_nodes < 256)
        throw ConfigError("grids.momentum_nodes: minimum is 256, got " +
                          std::to_string(cfg.momentum_nodes));
    if (cfg.spatial_points < 200)
        throw ConfigError("grids.spatial_points: minimum is 200, got " +
                          std::to_string(cfg.spatial_points));

    if (j.contains("run")) {
        const json& run = j["run"];
        auto name_list = [&](const char* key) {
            std::vector<std::string> out;
            if (!run.contains(key))
                return out;
            const json& arr = run[key];
            if (!arr.is_array())
                throw ConfigError(std::string("run.") + key + ": expected an array");
            for (std::size_t i = 0; i < arr.size(); ++i)
                out.push_back(as_string(arr[i], std::string("run.") + key + "[" +
                                                    std::to_string(i) + "]"));
            return out;
        };
        if (run.contains("times")) {
            cfg.run.times.clear();
            const json& times = run["times"];
            if (!times.is_array() || times.empty())
                throw ConfigError("run.times: expected a nonempty array");
            for (std::size_t i = 0; i < times.size(); ++i)
                cfg.run.times.push_back(
                    as_number(times[i], "run.times[" + std::to_string(i) + "]"));
        }
        cfg.run.states = name_list("states");
        cfg.run.mixtures = name_list("mixtures");
        cfg.run.family = name_list("family");
        if (run.contains("regions")) {
            cfg.run.regions.clear();
            const json& regions = run["regions"];
            if (!regions.is_array())
                throw ConfigError("run.regions: expected an array of [lo, hi]");
            for (std::size_t i = 0; i < regions.size(); ++i)
                cfg.run.regions.push_back(
                    as_interval(regions[i], "run.regions[" + std::to_string(i) + "]"));
        }
        if (run.contains("quantile"))
            cfg.run.quantile = as_number(run["quantile"], "run.quantile");
        if (run.contains("mass_fraction"))
            cfg.run.mass_fraction = as_number(run["mass_fraction"], "run.mass_fraction");
        if (run.contains("tail_window"))
            cfg.run.tail_window = as_interval(run["tail_window"], "run.tail_window");
        if (run.contains("tail_tolerance"))
            cfg.run.tail_tolerance = as_number(run["tail_tolerance"], "run.tail_tolerance");
        if (run.contains("speed_tolerance"))
            cfg.run.speed_tolerance =
                as_number(run["speed_tolerance"], "run.speed_tolerance");
        if (run.contains("prescriptions")) {
            cfg.run.prescriptions = name_list("prescriptions");
            for (const auto& p : cfg.run.prescriptions)
                prescription_from_string(p); // validates
        }

        for (const auto& n : cfg.run.states)
            cfg.find_state(n);
        for (const auto& n : cfg.run.family)
            cfg.find_state(n);
        for (const auto& n : cfg.run.mixtures)
            cfg.find_mixture(n);
    }

    return cfg;
}

ScenarioConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

const ScenarioConfig::StateSpec& ScenarioConfig::find_state(const std::string& name) const {
    for (const auto& s : states)
        if (s.name == name)
            return s;
    throw ConfigError("unknown state name '" + name + "'");
}

const ScenarioConfig::MixtureSpec&
ScenarioConfig::find_mixture(const std::string& name) const {
    for (const auto& m : mixtures)
        if (m.name == name)
            return m;
    throw ConfigError("unknown mixture name '" + name + "'");
}

std::vector<std::string> ScenarioConfig::selected_states() const {
    if (!run.states.empty())
        return run.states;
    std::vector<std::string> all;
    for (const auto& s : states)
        all.push_back(s.name);
    return all;
}

std::vector<std::string> ScenarioConfig::selected_mixtures() const {
    if (!run.mixtures.empty())
        return run.mixtures;
    std::vector<std::string> all;
    for (const auto& m : mixtures)
        all.push_back(m.name);
    return all;
}

MomentumState ScenarioConfig::build_state(const std::string& name,
                                          int resolution_scale) const {
    const StateSpec& spec = find_state(name);
    GridSpec grid;
    grid.nodes = momentum_nodes * std::max(1, resolution_scale);
    return MomentumState::gaussian(model, spec.p0, spec.sigma, grid);
}

MixedState ScenarioConfig::build_mixture(const std::string& name,
                                         int resolution_scale) const {
    const MixtureSpec& spec = find_mixture(name);
    std::vector<MixedState::Component> comps;
    for (const auto& c : spec.components)
        comps.push_back({c.weight, build_state(c.state, resolution_scale)});
    return mix(std::move(comps));
}

std::string ScenarioConfig::resolved_json() const {
    json j;
    j["model"] = {{"mass", model.mass}, {"dim", model.dim}};
    j["states"] = json::array();
    for (const auto& s : states)
        j["states"].push_back(
            {{"name", s.name}, {"type", "gaussian"}, {"p0", s.p0}, {"sigma", s.sigma}});
    j["mixtures"] = json::array();
    for (const auto& m : mixtures) {
        json comps = json::array();
        for (const auto& c : m.components)
            comps.push_back({{"weight", c.weight}, {"state", c.state}});
        j["mixtures"].push_back({{"name", m.name}, {"components", comps}});
    }
    j["grids"]["momentum_nodes"] = momentum_nodes;
    j["grids"]["spatial_points"] = spatial_points;
    if (window_auto)
        j["grids"]["spatial_window"] = "auto";
    else
        j["grids"]["spatial_window"] = {window.lo, window.hi};
    json run_j;
    run_j["times"] = run.times;
    run_j["states"] = selected_states();
    run_j["mixtures"] = selected_mixtures();
    run_j["regions"] = json::array();
    for (const auto& r : run.regions)
        run_j["regions"].push_back({r.lo, r.hi});
    run_j["quantile"] = run.quantile;
    run_j["mass_fraction"] = run.mass_fraction;
    run_j["tail_window"] = {run.tail_window.lo, run.tail_window.hi};
    run_j["tail_tolerance"] = run.tail_tolerance;
    run_j["speed_tolerance"] = run.speed_tolerance;
    run_j["prescriptions"] = run.prescriptions;
    run_j["family"] = run.family.empty() ? selected_states() : run.family;
    j["run"] = run_j;
    return j.dump();
}

} // namespace locdens
