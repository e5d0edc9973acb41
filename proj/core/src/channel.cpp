#include "qcorr/channel.hpp"

#include <cmath>

#include "qcorr/errors.hpp"

namespace qcorr {

std::string_view to_string(ChannelKind kind) {
    switch (kind) {
        case ChannelKind::Correlated: return "correlated";
        case ChannelKind::Uncorrelated: return "uncorrelated";
        case ChannelKind::Markovian: return "markovian";
    }
    return "unknown";
}

DensityMatrix x_state(double alpha, std::complex<double> kappa) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw InvalidStateError("alpha must lie in [0, 1]");
    const double c = std::sqrt(alpha * (1.0 - alpha));
    ComplexMatrix m(4);
    m(0, 0) = alpha;
    m(3, 3) = 1.0 - alpha;
    m(0, 3) = c * kappa;
    m(3, 0) = c * std::conj(kappa);
    return DensityMatrix(m);
}

double markov_rate_default(const BathParams& p) { return 4.0 * p.coupling_A / p.beta; }

ChannelState channel_state(const BathParams& p, const ChannelVariant& v, const DecoherenceState& d) {
    std::complex<double> k;
    switch (v.kind) {
        case ChannelKind::Correlated: k = d.kappa; break;
        case ChannelKind::Uncorrelated: k = std::exp(-d.gamma_s); break;
        case ChannelKind::Markovian:
            if (!(v.markov_rate >= 0.0)) throw InvalidStateError("markov_rate must be >= 0");
            k = std::exp(-v.markov_rate * d.t);
            break;
    }
    return ChannelState{d.t, x_state(p.alpha, k), k};
}

ChannelState channel_state(const BathParams& p, const QuadratureSpec& q, const ChannelVariant& v, double t) {
    p.validate();
    DecoherenceState d;
    d.t = t;
    switch (v.kind) {
        case ChannelKind::Correlated:
            d.zeta = zeta(p, q, t);
            d.gamma_s = gamma_s(p, q, t);
            d.kappa = kappa_from(p, d.zeta, d.gamma_s);
            break;
        case ChannelKind::Uncorrelated: d.gamma_s = gamma_s(p, q, t); break;
        case ChannelKind::Markovian:
            if (!(t >= 0.0)) throw InvalidStateError("time must be nonnegative");
            break;
    }
    return channel_state(p, v, d);
}

}  // namespace qcorr
