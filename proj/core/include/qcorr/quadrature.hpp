#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace qcorr {

// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// n-point rule computed by Newton iteration on P_n; exact for polynomials of
// degree 2n - 1.
GaussLegendreRule gauss_legendre(std::size_t n);

struct QuadratureSum {
    double value = 0.0;
    // Sum of |f| times the weights; bounds the attainable rounding floor.
    double magnitude = 0.0;
};

// Composite rule: [a, b] split into `panels` equal panels, `rule` on each.
// Accumulation uses compensated summation.
QuadratureSum integrate_composite(const std::function<double(double)>& f,
                                  double a,
                                  double b,
                                  std::size_t panels,
                                  const GaussLegendreRule& rule);

}  // namespace qcorr
