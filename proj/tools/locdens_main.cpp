#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "locdens/cli.hpp"
#include "locdens/errors.hpp"
#include "locdens/version.hpp"

int main(int argc, char** argv) {
    CLI::App app{"locdens: localization probability densities for one-particle "
                 "states of a free scalar field"};
    app.set_version_flag("--version", std::string("locdens ") + locdens::kVersion);
    app.require_subcommand(1);

    std::string config_path, out_path;
    int resolution_scale = 1;

    const std::vector<std::string> commands = {"density", "convexity", "tails",
                                               "spread", "compare", "selftest"};
    for (const auto& name : commands) {
        CLI::App* sub = app.add_subcommand(name);
        auto* cfg_opt = sub->add_option("--config", config_path, "scenario config (JSON)");
        if (name != "selftest")
            cfg_opt->required();
        sub->add_option("--out", out_path, "output table path (default: stdout)");
        sub->add_option("--resolution-scale", resolution_scale,
                        "multiply momentum/spatial resolutions by this factor")
            ->check(CLI::PositiveNumber);
    }

    CLI11_PARSE(app, argc, argv);
    const std::string command = app.get_subcommands().front()->get_name();

    try {
        locdens::ScenarioConfig cfg;
        if (!config_path.empty())
            cfg = locdens::load_config(config_path);
        else if (command != "selftest")
            throw locdens::ConfigError("missing --config");

        std::ofstream file;
        std::ostream* table = &std::cout;
        if (!out_path.empty()) {
            file.open(out_path);
            if (!file)
                throw locdens::ConfigError("cannot open output file: " + out_path);
            table = &file;
        }
        return locdens::run_command(command, cfg, resolution_scale, *table, std::cerr);
    } catch (const locdens::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return locdens::kExitError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return locdens::kExitError;
    }
}
