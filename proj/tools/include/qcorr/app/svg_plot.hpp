#pragma once

#include <string>
#include <vector>

namespace qcorr::app {

struct LineSeries {
    std::string name;
    std::vector<double> x;
    std::vector<double> y;
};

struct LinePlot {
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<LineSeries> series;
};

// Axes, ticks, legend and one polyline per series. Non-finite points break
// the polyline. Output is deterministic for identical input.
std::string render_svg(const LinePlot& plot);

}  // namespace qcorr::app
