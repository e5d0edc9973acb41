#include "qcorr/bath.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "qcorr/errors.hpp"
#include "qcorr/quadrature.hpp"

namespace qcorr {

namespace {

constexpr double kBasePanelWidth = 0.5;
constexpr std::size_t kNodesPerPanel = 16;
constexpr int kMaxRefinements = 10;
constexpr double kSeriesCutoff = 1e-4;

const GaussLegendreRule& panel_rule() {
    static const GaussLegendreRule rule = gauss_legendre(kNodesPerPanel);
    return rule;
}

// Composite Gauss-Legendre on [0, omega_max] with panels no wider than an
// eighth of the fastest oscillation (period-locked), refined by doubling the
// panel count until two successive estimates agree to abs_tol.
double integrate_spectral(const std::function<double(double)>& integrand,
                          const BathParams& p,
                          const QuadratureSpec& q,
                          double t,
                          const char* what) {
    const double scale = std::max({t, p.s, 1.0});
    const double width = std::min(kBasePanelWidth, std::numbers::pi / (q.panels_per_period * scale));
    auto panels = static_cast<std::size_t>(std::ceil(q.omega_max / width));

    QuadratureSum previous = integrate_composite(integrand, 0.0, q.omega_max, panels, panel_rule());
    for (int level = 0; level < kMaxRefinements; ++level) {
        panels *= 2;
        const QuadratureSum current = integrate_composite(integrand, 0.0, q.omega_max, panels, panel_rule());
        // Differences below the rounding floor of the sum are not resolvable.
        const double floor = 64.0 * std::numeric_limits<double>::epsilon() * current.magnitude;
        if (std::abs(current.value - previous.value) <= std::max(q.abs_tol, floor)) return current.value;
        previous = current;
    }
    throw ConvergenceError(std::string(what) + ": quadrature refinement exhausted at t = " + std::to_string(t));
}

void require_time(double t) {
    if (!(t >= 0.0) || !std::isfinite(t)) throw InvalidStateError("time must be finite and nonnegative");
}

}  // namespace

void BathParams::validate() const {
    if (!(coupling_A >= 0.0) || !std::isfinite(coupling_A)) throw InvalidStateError("coupling_A must be >= 0");
    if (!(beta > 0.0)) throw InvalidStateError("beta must be > 0");
    if (!(omega0 > 0.0) || !std::isfinite(omega0)) throw InvalidStateError("omega0 must be > 0");
    if (!(s >= 0.0) || !std::isfinite(s)) throw InvalidStateError("s must be >= 0");
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw InvalidStateError("alpha must lie in [0, 1]");
}

void QuadratureSpec::validate() const {
    if (!(omega_max >= 6.0) || !std::isfinite(omega_max)) throw InvalidStateError("omega_max must be >= 6");
    if (panels_per_period <= 0) throw InvalidStateError("panels_per_period must be positive");
    if (!(abs_tol > 0.0)) throw InvalidStateError("abs_tol must be > 0");
}

double coth_half(double beta, double omega) {
    const double x = 0.5 * beta * omega;
    if (x == 0.0) return std::numeric_limits<double>::infinity();
    if (std::abs(x) < kSeriesCutoff) return 1.0 / x + x / 3.0 - x * x * x / 45.0;
    // (e^{2x} + 1) / (e^{2x} - 1) = 1 + 2 / (e^{2x} - 1); expm1 keeps the
    // small-x cancellation exact and saturates to 1 on overflow.
    return 1.0 + 2.0 / std::expm1(2.0 * x);
}

double omega_coth_half(double beta, double omega) {
    const double x = 0.5 * beta * omega;
    if (std::abs(x) < kSeriesCutoff) return 2.0 / beta + omega * (x / 3.0 - x * x * x / 45.0);
    return omega * coth_half(beta, omega);
}

double sinc(double x) {
    if (std::abs(x) < kSeriesCutoff) {
        const double x2 = x * x;
        return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
    }
    return std::sin(x) / x;
}

double gamma_s(const BathParams& p, const QuadratureSpec& q, double t) {
    require_time(t);
    if (t == 0.0 || p.coupling_A == 0.0) return 0.0;
    auto f = [&](double w) {
        const double half = std::sin(0.5 * w * t);
        return std::exp(-w * w) * (1.0 + sinc(w * p.s)) * half * half * omega_coth_half(p.beta, w);
    };
    return p.coupling_A * integrate_spectral(f, p, q, t, "gamma_s");
}

double zeta(const BathParams& p, const QuadratureSpec& q, double t) {
    require_time(t);
    if (t == 0.0 || p.coupling_A == 0.0) return 0.0;
    auto f = [&](double w) { return w * std::exp(-w * w) * (1.0 + sinc(w * p.s)) * std::sin(w * t); };
    return 0.5 * p.coupling_A * integrate_spectral(f, p, q, t, "zeta");
}

double zeta0(const BathParams& p, const QuadratureSpec& q, double t) {
    require_time(t);
    if (t == 0.0 || p.coupling_A == 0.0) return 0.0;
    auto f = [&](double w) { return w * std::exp(-w * w) * std::sin(w * t); };
    return 0.25 * p.coupling_A * integrate_spectral(f, p, q, t, "zeta0");
}

double gamma1(const BathParams& p, const QuadratureSpec& q, double t) {
    require_time(t);
    if (t == 0.0 || p.coupling_A == 0.0) return 0.0;
    auto f = [&](double w) {
        const double half = std::sin(0.5 * w * t);
        return std::exp(-w * w) * half * half * omega_coth_half(p.beta, w);
    };
    return 0.5 * p.coupling_A * integrate_spectral(f, p, q, t, "gamma1");
}

std::complex<double> correlation_bracket(double alpha, double beta_omega0, double phase) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw InvalidStateError("alpha must lie in [0, 1]");
    const double l1 = std::log(alpha) - beta_omega0;
    const double l2 = std::log1p(-alpha) + beta_omega0;
    const double shift = std::max(l1, l2);
    const double w1 = std::exp(l1 - shift);
    const double w2 = std::exp(l2 - shift);
    const std::complex<double> num = w1 * std::polar(1.0, phase) + w2 * std::polar(1.0, -phase);
    return num / (w1 + w2);
}

double effective_tanh_argument(double alpha, double beta_omega0) {
    if (alpha == 0.5) return beta_omega0;
    return beta_omega0 + 0.5 * (std::log1p(-alpha) - std::log(alpha));
}

std::complex<double> kappa_from(const BathParams& p, double zeta_value, double gamma_s_value) {
    return correlation_bracket(p.alpha, p.beta * p.omega0, 2.0 * zeta_value) * std::exp(-gamma_s_value);
}

std::complex<double> kappa(const BathParams& p, const QuadratureSpec& q, double t) {
    return kappa_from(p, zeta(p, q, t), gamma_s(p, q, t));
}

double gamma_ic_from(const BathParams& p, double zeta_value) {
    const double z = 2.0 * zeta_value;
    const double th = std::tanh(effective_tanh_argument(p.alpha, p.beta * p.omega0));
    const double c = std::cos(z);
    const double s = std::sin(z);
    return -0.5 * std::log(c * c + s * s * th * th);
}

double gamma_ic(const BathParams& p, const QuadratureSpec& q, double t) {
    return gamma_ic_from(p, zeta(p, q, t));
}

double antinode_bracket_modulus(double beta_omega0) {
    // cosh(2x) / cosh^2(x) = 1 + tanh^2(x)
    const double th = std::tanh(beta_omega0);
    return std::sqrt(0.5 * (1.0 + th * th));
}

DecoherenceState evaluate_decoherence(const BathParams& p, const QuadratureSpec& q, double t) {
    DecoherenceState d;
    d.t = t;
    d.gamma_s = gamma_s(p, q, t);
    d.zeta = zeta(p, q, t);
    d.zeta0 = zeta0(p, q, t);
    d.gamma1 = gamma1(p, q, t);
    d.gamma_ic = gamma_ic_from(p, d.zeta);
    d.kappa = kappa_from(p, d.zeta, d.gamma_s);
    return d;
}

}  // namespace qcorr
