#pragma once

#include <complex>
#include <string_view>

#include "qcorr/bath.hpp"
#include "qcorr/matrix.hpp"

namespace qcorr {

enum class ChannelKind { Correlated, Uncorrelated, Markovian };

struct ChannelVariant {
    ChannelKind kind = ChannelKind::Correlated;
    double markov_rate = 0.0;  // only read for Markovian
};

std::string_view to_string(ChannelKind kind);

// Two-qubit channel state at time t:
//   alpha |00><00| + sqrt(alpha (1 - alpha)) (kappa_eff |00><11| + h.c.) + (1 - alpha) |11><11|
struct ChannelState {
    double t = 0.0;
    DensityMatrix rho;
    std::complex<double> kappa_eff;
};

// X-structured state above for an arbitrary coherence factor |kappa| <= 1.
DensityMatrix x_state(double alpha, std::complex<double> kappa);

// Correlated: kappa(t); Uncorrelated: e^{-gamma_s(t)}; Markovian: e^{-rate t}.
ChannelState channel_state(const BathParams& p, const QuadratureSpec& q, const ChannelVariant& v, double t);

// Same, reusing decoherence functions that were already evaluated at d.t.
ChannelState channel_state(const BathParams& p, const ChannelVariant& v, const DecoherenceState& d);

// White-noise dephasing rate 4 A / beta: the omega -> 0 density of the
// gamma_s integrand.
double markov_rate_default(const BathParams& p);

}  // namespace qcorr
