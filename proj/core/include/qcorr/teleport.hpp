#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string_view>

#include "qcorr/bath.hpp"
#include "qcorr/channel.hpp"
#include "qcorr/matrix.hpp"

namespace qcorr {

// Pure qubit cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>.
struct InputQubit {
    double theta = 0.0;
    double phi = 0.0;

    std::array<cplx, 2> ket() const;
    DensityMatrix density() const;
};

enum class NoisePlacement { ChannelDecoheres, AliceQubitsDecohere, InputQubitDecoheres };

std::string_view to_string(NoisePlacement placement);

struct TeleportResult {
    // Bob's corrected, normalized state per Bell outcome; empty when the
    // outcome has probability below 1e-14.
    std::array<std::optional<DensityMatrix>, 4> outcome_states;
    std::array<double, 4> probabilities{};
    std::array<double, 4> conditional_fidelities{};
    double weighted_fidelity = 0.0;
};

// Projectors onto Phi+, Phi-, Psi+, Psi- (in that order).
const std::array<ComplexMatrix, 4>& bell_projectors();
// Bob's corrections per outcome: I, sigma_z, sigma_x, sigma_x sigma_z.
const std::array<ComplexMatrix, 4>& correction_unitaries();

// Standard protocol on input (x) channel with qubit order (input, Alice,
// Bob). Fidelities are taken against `reference`.
TeleportResult run_protocol(const DensityMatrix& input,
                            const std::array<cplx, 2>& reference,
                            const DensityMatrix& channel);
TeleportResult run_protocol(const InputQubit& input, const ChannelState& channel);

struct SphereAverage {
    double value = 0.0;
    int order = 0;                      // Gauss-Legendre order in cos(theta) that converged
    double refinement_delta = 0.0;      // |F(order) - F(order / 2)|
    double max_probability_defect = 0.0;  // max |sum_i Q_i - 1| over all nodes visited
};

inline constexpr int kSpherePhiPoints = 8;
inline constexpr double kSphereTolerance = 1e-10;
inline constexpr int kSphereMaxOrder = 4096;

// Uniform Bloch-sphere average of the weighted fidelity through `channel`:
// Gauss-Legendre in cos(theta) times an 8-point trapezoid in phi, order
// doubled from `order` until successive values differ by < 1e-10.
SphereAverage average_fidelity_oracle(const ChannelState& channel, int order = 16);

// Coherence factor of a single input qubit prepared in the correlated
// initial state: bracket(cos^2(theta/2), beta omega0 / 2, zeta0) e^{-gamma1}.
std::complex<double> input_qubit_coherence(const BathParams& p, const DecoherenceState& d, double theta);

// Sphere average when the input qubit dephases with input_qubit_coherence and
// is sent through the ideal Bell channel.
SphereAverage input_dephasing_oracle(const BathParams& p, const QuadratureSpec& q, double t, int order = 16);
SphereAverage input_dephasing_oracle(const BathParams& p, const DecoherenceState& d, int order = 16);

// Closed-form average fidelities:
//   channel / Alice: 2/3 + cos(2 zeta) e^{-gamma_s} / 3
//   input:           2/3 + (x - 1) cos(zeta0) e^{-gamma1} / (6 sinh x), x = beta omega0 / 2
double fav_closed(NoisePlacement placement, const BathParams& p, const DecoherenceState& d);

// 2/3 + Re(kappa) / 3: sphere average through any alpha = 1/2 channel state.
double fav_from_coherence(std::complex<double> kappa);

}  // namespace qcorr
