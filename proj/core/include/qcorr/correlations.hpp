#pragma once

#include <complex>

#include "qcorr/bath.hpp"
#include "qcorr/channel.hpp"
#include "qcorr/matrix.hpp"

namespace qcorr {

// Projective measurement basis {|n>, |n_perp>} with
// |n> = cos(theta_m/2)|0> + e^{i phi_m} sin(theta_m/2)|1>.
struct MeasurementAngles {
    double theta_m = 0.0;  // [0, pi]
    double phi_m = 0.0;    // [0, 2 pi)
};

struct CorrelationPoint {
    double t = 0.0;
    double negativity_ppt = 0.0;
    double negativity_scaled = 0.0;  // 2 x negativity_ppt normalization, 1 at t = 0
    double discord_closed = 0.0;  // NaN when alpha != 1/2
    double discord_oracle = 0.0;
    double mutual_info = 0.0;
    double classical_corr = 0.0;
};

// (||rho^{T_A}||_1 - 1) / 2 for a two-qubit state.
double negativity_ppt(const DensityMatrix& rho);

// 2 sqrt(alpha (1 - alpha)) sqrt(cos^2 z + sin^2 z tanh^2 y) e^{-gamma_s}, with
// z = 2 zeta and y = beta omega0 at alpha = 1/2. This normalization reaches 1
// at t = 0 and equals twice negativity_ppt of the channel state.
double negativity_closed(const BathParams& p, const DecoherenceState& d);

// 2 sqrt(alpha (1 - alpha)) |kappa| for any member of the channel family.
double negativity_x_state(double alpha, std::complex<double> kappa);

// min(1, Q2) with Q2 = 1 + sum_{+-} ((1 +- |kappa|)/2) log2((1 +- |kappa|)/2),
// valid for the alpha = 1/2 channel.
double discord_closed(double kappa_abs);
double discord_closed(const DecoherenceState& d);

// S(A) + S(B) - S(AB) in bits, clamped at 0.
double mutual_information(const DensityMatrix& rho);

// S(A) - sum_k p_k S(rho_k) after measuring subsystem B in the given basis.
double conditional_information(const DensityMatrix& rho, const MeasurementAngles& angles);

struct ClassicalCorrelation {
    double value = 0.0;
    MeasurementAngles best;
};

struct DiscordOracleOptions {
    int grid = 64;           // grid cells per angle
    double step_tol = 1e-5;  // coordinate-descent termination step
};

// Supremum of conditional_information over measurements on B: grid search
// followed by coordinate descent.
ClassicalCorrelation classical_correlation(const DensityMatrix& rho, const DiscordOracleOptions& opts = {});

// mutual_information - classical_correlation, by direct optimization.
double discord_oracle(const DensityMatrix& rho, const DiscordOracleOptions& opts = {});

// Every correlation measure for one channel state. `d` supplies the
// decoherence functions used by the closed forms.
CorrelationPoint correlation_point(const BathParams& p,
                                   const ChannelVariant& v,
                                   const DecoherenceState& d,
                                   const ChannelState& channel,
                                   bool with_oracle = true);

}  // namespace qcorr
