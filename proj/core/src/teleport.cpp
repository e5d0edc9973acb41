#include "qcorr/teleport.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "qcorr/errors.hpp"
#include "qcorr/quadrature.hpp"

namespace qcorr {

namespace {

constexpr double kMinOutcomeProbability = 1e-14;
constexpr double kSmallBetaOmega0 = 1e-8;

struct NodeValue {
    double fidelity;
    double probability_defect;
};

// (1/4 pi) int F sin(theta) dtheta dphi = (1/2) int_{-1}^{1} du (1/2 pi) int F dphi
SphereAverage sphere_average(const std::function<NodeValue(double, double)>& f, int order) {
    if (order < 16) throw InvalidStateError("sphere quadrature order must be >= 16");
    SphereAverage result;
    auto evaluate = [&](int n) {
        const GaussLegendreRule rule = gauss_legendre(static_cast<std::size_t>(n));
        double sum = 0.0;
        for (int i = 0; i < n; ++i) {
            const double theta = std::acos(rule.nodes[i]);
            double ring = 0.0;
            for (int j = 0; j < kSpherePhiPoints; ++j) {
                const double phi = 2.0 * std::numbers::pi * j / kSpherePhiPoints;
                const NodeValue v = f(theta, phi);
                ring += v.fidelity;
                result.max_probability_defect = std::max(result.max_probability_defect, v.probability_defect);
            }
            sum += rule.weights[i] * ring / kSpherePhiPoints;
        }
        return 0.5 * sum;
    };

    double previous = evaluate(order);
    for (int n = 2 * order; n <= kSphereMaxOrder; n *= 2) {
        const double current = evaluate(n);
        const double delta = std::abs(current - previous);
        if (delta < kSphereTolerance) {
            result.value = current;
            result.order = n;
            result.refinement_delta = delta;
            return result;
        }
        previous = current;
    }
    throw ConvergenceError("sphere average did not converge by order " + std::to_string(kSphereMaxOrder));
}

NodeValue node_value(const TeleportResult& r) {
    double total = 0.0;
    for (double q : r.probabilities) total += q;
    return {r.weighted_fidelity, std::abs(total - 1.0)};
}

const DensityMatrix& ideal_channel() {
    static const DensityMatrix bell = x_state(0.5, 1.0);
    return bell;
}

}  // namespace

std::array<cplx, 2> InputQubit::ket() const {
    return {std::cos(0.5 * theta), std::polar(std::sin(0.5 * theta), phi)};
}

DensityMatrix InputQubit::density() const {
    const auto k = ket();
    return DensityMatrix::pure(k);
}

std::string_view to_string(NoisePlacement placement) {
    switch (placement) {
        case NoisePlacement::ChannelDecoheres: return "channel";
        case NoisePlacement::AliceQubitsDecohere: return "alice";
        case NoisePlacement::InputQubitDecoheres: return "input";
    }
    return "unknown";
}

const std::array<ComplexMatrix, 4>& bell_projectors() {
    static const std::array<ComplexMatrix, 4> projectors = [] {
        const double r = 1.0 / std::numbers::sqrt2;
        const std::array<std::array<cplx, 4>, 4> kets{{
            {r, 0.0, 0.0, r},
            {r, 0.0, 0.0, -r},
            {0.0, r, r, 0.0},
            {0.0, r, -r, 0.0},
        }};
        std::array<ComplexMatrix, 4> out;
        for (std::size_t i = 0; i < 4; ++i) out[i] = ComplexMatrix::outer(kets[i]);
        return out;
    }();
    return projectors;
}

const std::array<ComplexMatrix, 4>& correction_unitaries() {
    static const std::array<ComplexMatrix, 4> unitaries{
        ComplexMatrix::identity(2), pauli_z(), pauli_x(), pauli_x() * pauli_z()};
    return unitaries;
}

TeleportResult run_protocol(const DensityMatrix& input,
                            const std::array<cplx, 2>& reference,
                            const DensityMatrix& channel) {
    if (input.dim() != 2 || channel.dim() != 4) {
        throw DimensionError("teleportation needs a qubit input and a two-qubit channel");
    }
    const ComplexMatrix total = kron(input.matrix(), channel.matrix());
    const ComplexMatrix id2 = ComplexMatrix::identity(2);

    TeleportResult r;
    for (std::size_t i = 0; i < 4; ++i) {
        const ComplexMatrix proj = kron(bell_projectors()[i], id2);
        const ComplexMatrix post = proj * total * proj;
        const double q = post.trace().real();
        r.probabilities[i] = q;
        if (q < kMinOutcomeProbability) {
            r.conditional_fidelities[i] = 0.0;
            continue;
        }
        const ComplexMatrix& u = correction_unitaries()[i];
        ComplexMatrix bob = u * partial_trace(post, {2, 2, 2}, {0, 1}) * u.adjoint();
        bob *= 1.0 / q;
        cplx f = 0.0;
        for (std::size_t a = 0; a < 2; ++a)
            for (std::size_t b = 0; b < 2; ++b) f += std::conj(reference[a]) * bob(a, b) * reference[b];
        r.conditional_fidelities[i] = std::clamp(f.real(), 0.0, 1.0);
        r.outcome_states[i].emplace(bob);
        r.weighted_fidelity += q * r.conditional_fidelities[i];
    }
    return r;
}

TeleportResult run_protocol(const InputQubit& input, const ChannelState& channel) {
    return run_protocol(input.density(), input.ket(), channel.rho);
}

SphereAverage average_fidelity_oracle(const ChannelState& channel, int order) {
    return sphere_average(
        [&](double theta, double phi) {
            return node_value(run_protocol(InputQubit{theta, phi}, channel));
        },
        order);
}

std::complex<double> input_qubit_coherence(const BathParams& p, const DecoherenceState& d, double theta) {
    const double c = std::cos(0.5 * theta);
    return correlation_bracket(c * c, 0.5 * p.beta * p.omega0, d.zeta0) * std::exp(-d.gamma1);
}

SphereAverage input_dephasing_oracle(const BathParams& p, const DecoherenceState& d, int order) {
    return sphere_average(
        [&](double theta, double phi) {
            const InputQubit in{theta, phi};
            const auto ket = in.ket();
            ComplexMatrix rho = ComplexMatrix::outer(ket);
            const cplx k = input_qubit_coherence(p, d, theta);
            rho(0, 1) *= k;
            rho(1, 0) *= std::conj(k);
            return node_value(run_protocol(DensityMatrix(rho), ket, ideal_channel()));
        },
        order);
}

SphereAverage input_dephasing_oracle(const BathParams& p, const QuadratureSpec& q, double t, int order) {
    p.validate();
    DecoherenceState d;
    d.t = t;
    d.zeta0 = zeta0(p, q, t);
    d.gamma1 = gamma1(p, q, t);
    return input_dephasing_oracle(p, d, order);
}

double fav_from_coherence(std::complex<double> kappa) { return 2.0 / 3.0 + kappa.real() / 3.0; }

double fav_closed(NoisePlacement placement, const BathParams& p, const DecoherenceState& d) {
    switch (placement) {
        case NoisePlacement::ChannelDecoheres:
        case NoisePlacement::AliceQubitsDecohere:
            return 2.0 / 3.0 + std::cos(2.0 * d.zeta) * std::exp(-d.gamma_s) / 3.0;
        case NoisePlacement::InputQubitDecoheres: {
            const double bw = p.beta * p.omega0;
            const double decay = std::cos(d.zeta0) * std::exp(-d.gamma1);
            if (bw < kSmallBetaOmega0) return 2.0 / 3.0 - decay / (3.0 * bw);
            const double x = 0.5 * bw;
            // 1 / (6 sinh x) = e^{-x} / (3 (1 - e^{-2x})), finite for any x > 0.
            const double inv_sinh6 = std::exp(-x) / (3.0 * -std::expm1(-2.0 * x));
            return 2.0 / 3.0 + (x - 1.0) * decay * inv_sinh6;
        }
    }
    return 0.0;
}

}  // namespace qcorr
