#include "qcorr/app/figure.hpp"

#include <array>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>

#include "qcorr/app/sweep.hpp"
#include "qcorr/channel.hpp"
#include "qcorr/correlations.hpp"
#include "qcorr/errors.hpp"
#include "qcorr/teleport.hpp"

namespace qcorr::app {

namespace {

constexpr std::array<std::string_view, 8> kPanelIds{"fig1a", "fig1b", "fig1c", "fig1d",
                                                    "fig2a", "fig2b", "fig2c", "fig2d"};

bool low_temperature(Panel panel) {
    switch (panel) {
        case Panel::Fig1a:
        case Panel::Fig1c:
        case Panel::Fig2a:
        case Panel::Fig2c: return true;
        default: return false;
    }
}

std::string beta_label(const RunConfig& c) { return "beta = " + format_number(c.bath.beta); }

struct Point {
    double negativity;
    double discord;
    double fidelity;
};

// Closed-form channel measures for one variant at time t.
Point closed_point(const RunConfig& config, const ChannelVariant& v, const DecoherenceState& d) {
    const ChannelState ch = channel_state(config.bath, v, d);
    Point pt{};
    pt.negativity = v.kind == ChannelKind::Correlated ? negativity_closed(config.bath, d)
                                                      : negativity_x_state(config.bath.alpha, ch.kappa_eff);
    pt.discord = discord_closed(std::abs(ch.kappa_eff));
    pt.fidelity = v.kind == ChannelKind::Correlated ? fav_closed(config.placement, config.bath, d)
                                                    : fav_from_coherence(ch.kappa_eff);
    return pt;
}

std::vector<DecoherenceState> decoherence_series(const RunConfig& config, const std::vector<double>& times) {
    std::vector<DecoherenceState> out(times.size());
    parallel_for(times.size(), config.workers,
                 [&](std::size_t i) { out[i] = evaluate_decoherence(config.bath, config.quadrature, times[i]); });
    return out;
}

}  // namespace

Panel parse_panel(std::string_view id) {
    for (std::size_t i = 0; i < kPanelIds.size(); ++i)
        if (kPanelIds[i] == id) return static_cast<Panel>(i);
    throw ConfigError("unknown figure panel '" + std::string(id) + "'");
}

std::string_view panel_id(Panel panel) { return kPanelIds[static_cast<std::size_t>(panel)]; }

RunConfig figure_defaults(Panel panel) {
    RunConfig c;
    c.bath.beta = low_temperature(panel) ? 1.0 : 0.05;
    c.bath.s = 1.0;
    c.grid = {0.0, 100.0, 401};
    c.output_path = std::string(panel_id(panel)) + ".csv";
    return c;
}

LinePlot compute_figure(Panel panel, const RunConfig& config) {
    config.validate();
    const auto times = config.grid.points();
    LinePlot plot;
    plot.x_label = "t";

    auto add = [&](std::string name, std::vector<double> y) {
        plot.series.push_back(LineSeries{std::move(name), times, std::move(y)});
    };

    switch (panel) {
        case Panel::Fig1a:
        case Panel::Fig1b:
        case Panel::Fig1c:
        case Panel::Fig1d: {
            const bool compare = panel == Panel::Fig1c || panel == Panel::Fig1d;
            plot.title = "Negativity and discord, " + beta_label(config) + ", s = " + format_number(config.bath.s);
            plot.y_label = "N, Q";
            const auto dec = decoherence_series(config, times);
            std::vector<std::pair<std::string, ChannelVariant>> variants{
                {"correlated", {ChannelKind::Correlated, 0.0}}};
            if (compare) {
                variants.push_back({"uncorrelated", {ChannelKind::Uncorrelated, 0.0}});
                const double rate = config.markov_rate_auto ? markov_rate_default(config.bath)
                                                            : config.variant.markov_rate;
                variants.push_back({"markovian", {ChannelKind::Markovian, rate}});
            }
            for (const auto& [name, v] : variants) {
                std::vector<double> neg(times.size()), dis(times.size());
                for (std::size_t i = 0; i < times.size(); ++i) {
                    const Point pt = closed_point(config, v, dec[i]);
                    neg[i] = pt.negativity;
                    dis[i] = pt.discord;
                }
                add("negativity_" + name, std::move(neg));
                add("discord_" + name, std::move(dis));
            }
            break;
        }
        case Panel::Fig2a:
        case Panel::Fig2b: {
            plot.title = "Average fidelity, " + beta_label(config);
            plot.y_label = "F_av";
            for (double s : {0.5, 1.0, 2.0, 5.0}) {
                RunConfig c = config;
                c.bath.s = s;
                const auto dec = decoherence_series(c, times);
                std::vector<double> fav(times.size());
                for (std::size_t i = 0; i < times.size(); ++i)
                    fav[i] = closed_point(c, {ChannelKind::Correlated, 0.0}, dec[i]).fidelity;
                add("fav_s=" + format_number(s), std::move(fav));
            }
            break;
        }
        case Panel::Fig2c:
        case Panel::Fig2d: {
            plot.title = "Quantum information measures, " + beta_label(config) + ", s = " +
                         format_number(config.bath.s);
            plot.y_label = "F_av, N, Q";
            const auto dec = decoherence_series(config, times);
            std::vector<double> fav(times.size()), neg(times.size()), dis(times.size());
            for (std::size_t i = 0; i < times.size(); ++i) {
                const Point pt = closed_point(config, {ChannelKind::Correlated, 0.0}, dec[i]);
                fav[i] = pt.fidelity;
                neg[i] = pt.negativity;
                dis[i] = pt.discord;
            }
            add("fav", std::move(fav));
            add("negativity", std::move(neg));
            add("discord", std::move(dis));
            break;
        }
    }
    return plot;
}

std::string figure_csv(const LinePlot& plot) {
    std::string out = "t";
    for (const auto& s : plot.series) out += "," + s.name;
    out += '\n';
    if (plot.series.empty()) return out;
    const auto& xs = plot.series.front().x;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        out += format_number(xs[i]);
        for (const auto& s : plot.series) out += "," + format_number(i < s.y.size() ? s.y[i] : NAN);
        out += '\n';
    }
    return out;
}

int cmd_figure(Panel panel, const RunConfig& config, const std::string& out_dir, std::ostream& log) {
    LinePlot plot;
    try {
        plot = compute_figure(panel, config);
    } catch (const ConvergenceError& e) {
        log << "error: " << e.what() << '\n';
        return kExitNonConvergence;
    }
    const std::filesystem::path dir(out_dir.empty() ? "." : out_dir);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    const std::string id(panel_id(panel));
    const auto csv_path = dir / (id + ".csv");
    const auto svg_path = dir / (id + ".svg");
    std::ofstream csv(csv_path, std::ios::binary | std::ios::trunc);
    std::ofstream svg(svg_path, std::ios::binary | std::ios::trunc);
    if (!csv || !svg) {
        log << "error: cannot write figure files in '" << dir.string() << "'\n";
        return kExitConfig;
    }
    csv << figure_csv(plot);
    svg << render_svg(plot);
    log << "wrote " << csv_path.string() << " and " << svg_path.string() << '\n';
    return kExitOk;
}

}  // namespace qcorr::app
