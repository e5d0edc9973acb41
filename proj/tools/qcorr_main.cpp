#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <string>

#include "qcorr/app/config.hpp"
#include "qcorr/app/figure.hpp"
#include "qcorr/app/sweep.hpp"
#include "qcorr/app/verify.hpp"
#include "qcorr/errors.hpp"

namespace {

using namespace qcorr::app;

// One --<key> string option per config key; only the flags actually given
// end up in the override map.
void add_override_flags(CLI::App* cmd, std::map<std::string, std::string>& storage) {
    for (const auto& key : config_keys()) {
        const std::string name(key.name);
        cmd->add_option("--" + name, storage[name], std::string(key.help));
    }
}

KeyValues given_overrides(const CLI::App* cmd, const std::map<std::string, std::string>& storage) {
    KeyValues out;
    for (const auto& [name, value] : storage)
        if (cmd->count("--" + name) > 0) out[name] = value;
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-qubit dephasing with initial system-bath correlations: sweeps, figures, verification"};
    app.require_subcommand(1);

    std::map<std::string, std::string> sweep_flags;
    std::string config_path;
    auto* sweep = app.add_subcommand("sweep", "Time sweep written as CSV");
    sweep->add_option("--config", config_path, "key = value config file")->check(CLI::ExistingFile);
    add_override_flags(sweep, sweep_flags);

    std::map<std::string, std::string> figure_flags;
    std::string panel_name;
    std::string out_dir = ".";
    auto* figure = app.add_subcommand("figure", "Reproduce a figure panel as CSV and SVG");
    figure->add_option("panel", panel_name, "fig1a..fig1d, fig2a..fig2d")->required();
    figure->add_option("--out-dir", out_dir, "Directory for <panel>.csv and <panel>.svg");
    figure->add_option("--config", config_path, "key = value config file")->check(CLI::ExistingFile);
    add_override_flags(figure, figure_flags);

    std::string report_path;
    auto* verify = app.add_subcommand("verify", "Run every oracle and invariant check");
    verify->add_option("--report", report_path, "Write the plain-text report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        if (*verify) return cmd_verify(report_path, std::cout);

        if (*sweep) {
            RunConfig config;
            if (!config_path.empty()) qcorr::app::apply(config, read_key_value_file(config_path));
            qcorr::app::apply(config, given_overrides(sweep, sweep_flags));
            config.validate();
            return cmd_sweep(config, std::cerr);
        }

        const Panel panel = parse_panel(panel_name);
        RunConfig config = figure_defaults(panel);
        if (!config_path.empty()) qcorr::app::apply(config, read_key_value_file(config_path));
        qcorr::app::apply(config, given_overrides(figure, figure_flags));
        config.validate();
        return cmd_figure(panel, config, out_dir, std::cerr);
    } catch (const ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const qcorr::ConvergenceError& e) {
        std::cerr << "non-convergence: " << e.what() << '\n';
        return kExitNonConvergence;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    }
}
