#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "qcorr/app/config.hpp"
#include "qcorr/app/svg_plot.hpp"

namespace qcorr::app {

enum class Panel { Fig1a, Fig1b, Fig1c, Fig1d, Fig2a, Fig2b, Fig2c, Fig2d };

Panel parse_panel(std::string_view id);
std::string_view panel_id(Panel panel);

// Regime of each panel: beta = 1 for a/c panels, beta = 0.05 for b/d, s = 1,
// t in [0, 100]. User overrides are applied on top of this.
RunConfig figure_defaults(Panel panel);

// fig1a/b: negativity and discord (correlated).
// fig1c/d: negativity and discord for correlated, uncorrelated and Markovian.
// fig2a/b: average fidelity for s in {0.5, 1, 2, 5}.
// fig2c/d: average fidelity, negativity and discord at the configured s.
LinePlot compute_figure(Panel panel, const RunConfig& config);

// Wide CSV: t followed by one column per series.
std::string figure_csv(const LinePlot& plot);

// Writes <out_dir>/<panel>.csv and <out_dir>/<panel>.svg.
int cmd_figure(Panel panel, const RunConfig& config, const std::string& out_dir, std::ostream& log);

}  // namespace qcorr::app
