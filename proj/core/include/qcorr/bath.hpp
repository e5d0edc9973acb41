#pragma once

#include <complex>

namespace qcorr {

// Dimensionless bath configuration. Frequencies are in units of the cutoff
// omega_c, times in units of 1/omega_c.
struct BathParams {
    double coupling_A = 1.0;  // aggregate coupling prefactor
    double beta = 1.0;        // inverse temperature
    double omega0 = 1.0;      // qubit splitting
    double s = 1.0;           // qubit separation time L/c
    double alpha = 0.5;       // weight of |00> in the channel state

    // Throws InvalidStateError when outside the physical domain.
    void validate() const;
};

struct QuadratureSpec {
    double omega_max = 6.5;
    int panels_per_period = 4;
    double abs_tol = 1e-12;

    void validate() const;
};

// Decoherence functions at a single time.
struct DecoherenceState {
    double t = 0.0;
    double gamma_s = 0.0;
    double zeta = 0.0;
    double zeta0 = 0.0;
    double gamma1 = 0.0;
    double gamma_ic = 0.0;
    std::complex<double> kappa{1.0, 0.0};
};

// coth(beta * omega / 2), series-expanded near the origin. Returns +inf at
// omega = 0; thermal integrands use omega_coth_half instead.
double coth_half(double beta, double omega);
// omega * coth(beta * omega / 2), equal to 2 / beta at omega = 0.
double omega_coth_half(double beta, double omega);
// sin(x) / x with sinc(0) = 1.
double sinc(double x);

// Two-qubit dephasing exponent:
//   A * int_0^inf w e^{-w^2} (1 + sinc(w s)) sin^2(w t / 2) coth(beta w / 2) dw
double gamma_s(const BathParams& p, const QuadratureSpec& q, double t);
// Phase function: (A/2) * int_0^inf w e^{-w^2} (1 + sinc(w s)) sin(w t) dw
double zeta(const BathParams& p, const QuadratureSpec& q, double t);
// Single-qubit phase function: (A/4) * int_0^inf w e^{-w^2} sin(w t) dw
double zeta0(const BathParams& p, const QuadratureSpec& q, double t);
// Single-qubit dephasing exponent:
//   (A/2) * int_0^inf w e^{-w^2} sin^2(w t / 2) coth(beta w / 2) dw
double gamma1(const BathParams& p, const QuadratureSpec& q, double t);

// Bracket factor of the coherence carried by the correlated initial state,
//   (a e^{-x} e^{i phase} + (1-a) e^{x} e^{-i phase}) / (a e^{-x} + (1-a) e^{x}),
// evaluated with shifted exponents so that x = beta * omega0 may reach 700+.
std::complex<double> correlation_bracket(double alpha, double beta_omega0, double phase);

// Effective hyperbolic argument y such that |bracket|^2 = cos^2 + sin^2 tanh^2 y.
// Equals beta * omega0 at alpha = 1/2.
double effective_tanh_argument(double alpha, double beta_omega0);

// kappa(t) = bracket(2 zeta(t)) * e^{-gamma_s(t)}
std::complex<double> kappa(const BathParams& p, const QuadratureSpec& q, double t);
std::complex<double> kappa_from(const BathParams& p, double zeta_value, double gamma_s_value);

// gamma_ic = -1/2 log(cos^2 z + sin^2 z tanh^2(beta omega0)), z = 2 zeta(t),
// so that |kappa| = e^{-gamma_ic - gamma_s}.
double gamma_ic(const BathParams& p, const QuadratureSpec& q, double t);
double gamma_ic_from(const BathParams& p, double zeta_value);

// Bracket modulus quoted for the cos(k.L) = -1 configuration,
// (1/sqrt 2) sqrt(cosh 2x) / cosh x with x = beta * omega0. Diagnostic only:
// it is not consistent with kappa = 1 when gamma_s = zeta = 0.
double antinode_bracket_modulus(double beta_omega0);

// Every decoherence function at time t.
DecoherenceState evaluate_decoherence(const BathParams& p, const QuadratureSpec& q, double t);

}  // namespace qcorr
