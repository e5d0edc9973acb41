#include "qcorr/correlations.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "qcorr/errors.hpp"

namespace qcorr {

namespace {

constexpr double kNegativityClampBand = -1e-10;
constexpr double kMinOutcomeProbability = 1e-14;

void require_two_qubit(const DensityMatrix& rho) {
    if (rho.dim() != 4) throw DimensionError("two-qubit (4x4) density matrix required");
}

double entropy_of_hermitian(const ComplexMatrix& m) {
    const auto eig = hermitian_eigenvalues(m);
    return shannon_entropy_bits(eig);
}

}  // namespace

double negativity_ppt(const DensityMatrix& rho) {
    require_two_qubit(rho);
    const double n = 0.5 * (trace_norm(partial_transpose(rho.matrix(), 0)) - 1.0);
    if (n < 0.0 && n >= kNegativityClampBand) return 0.0;
    return n;
}

double negativity_closed(const BathParams& p, const DecoherenceState& d) {
    const double c = std::sqrt(p.alpha * (1.0 - p.alpha));
    if (c == 0.0) return 0.0;
    const double z = 2.0 * d.zeta;
    const double th = std::tanh(effective_tanh_argument(p.alpha, p.beta * p.omega0));
    const double cz = std::cos(z);
    const double sz = std::sin(z);
    return 2.0 * c * std::sqrt(cz * cz + sz * sz * th * th) * std::exp(-d.gamma_s);
}

double negativity_x_state(double alpha, std::complex<double> kappa) {
    return 2.0 * std::sqrt(alpha * (1.0 - alpha)) * std::abs(kappa);
}

double discord_closed(double kappa_abs) {
    if (!(kappa_abs >= 0.0) || kappa_abs > 1.0 + 1e-12) throw InvalidStateError("|kappa| must lie in [0, 1]");
    const double k = std::min(kappa_abs, 1.0);
    const std::array<double, 2> halves{0.5 * (1.0 + k), 0.5 * (1.0 - k)};
    double q2 = 1.0;
    for (double h : halves)
        if (h > 0.0) q2 += h * std::log2(h);
    return std::min(1.0, q2);
}

double discord_closed(const DecoherenceState& d) { return discord_closed(std::abs(d.kappa)); }

double mutual_information(const DensityMatrix& rho) {
    require_two_qubit(rho);
    const ComplexMatrix& m = rho.matrix();
    const double s_a = entropy_of_hermitian(partial_trace(m, {2, 2}, {1}));
    const double s_b = entropy_of_hermitian(partial_trace(m, {2, 2}, {0}));
    const double s_ab = entropy_of_hermitian(m);
    return std::max(0.0, s_a + s_b - s_ab);
}

double conditional_information(const DensityMatrix& rho, const MeasurementAngles& angles) {
    require_two_qubit(rho);
    const ComplexMatrix& m = rho.matrix();
    const double ct = std::cos(0.5 * angles.theta_m);
    const double st = std::sin(0.5 * angles.theta_m);
    const cplx ph = std::polar(1.0, angles.phi_m);
    const std::array<cplx, 2> n{ct, ph * st};
    const std::array<cplx, 2> n_perp{-std::conj(ph) * st, ct};
    const ComplexMatrix id2 = ComplexMatrix::identity(2);

    double conditional_entropy = 0.0;
    for (const auto& ket : {n, n_perp}) {
        const ComplexMatrix proj = kron(id2, ComplexMatrix::outer(ket));
        const ComplexMatrix post = proj * m * proj;
        const double pk = post.trace().real();
        if (pk < kMinOutcomeProbability) continue;
        // rho_k = rho_{A|k} (x) P_k, so S(rho_k) = S(Tr_B rho_k).
        ComplexMatrix conditional = partial_trace(post, {2, 2}, {1});
        conditional *= 1.0 / pk;
        conditional_entropy += pk * entropy_of_hermitian(conditional);
    }
    const double s_a = entropy_of_hermitian(partial_trace(m, {2, 2}, {1}));
    return s_a - conditional_entropy;
}

ClassicalCorrelation classical_correlation(const DensityMatrix& rho, const DiscordOracleOptions& opts) {
    require_two_qubit(rho);
    if (opts.grid < 2 || !(opts.step_tol > 0.0)) throw InvalidStateError("invalid discord oracle options");
    constexpr double pi = std::numbers::pi;
    const double d_theta = pi / (opts.grid - 1);
    const double d_phi = 2.0 * pi / opts.grid;

    ClassicalCorrelation best{-std::numeric_limits<double>::infinity(), {}};
    for (int i = 0; i < opts.grid; ++i)
        for (int j = 0; j < opts.grid; ++j) {
            const MeasurementAngles a{i * d_theta, j * d_phi};
            const double v = conditional_information(rho, a);
            if (v > best.value) best = {v, a};
        }

    auto wrap_phi = [&](double phi) {
        phi = std::fmod(phi, 2.0 * pi);
        return phi < 0.0 ? phi + 2.0 * pi : phi;
    };

    double step_theta = d_theta;
    double step_phi = d_phi;
    while (std::max(step_theta, step_phi) >= opts.step_tol) {
        bool improved = false;
        for (int coord = 0; coord < 2; ++coord)
            for (double sign : {1.0, -1.0}) {
                MeasurementAngles a = best.best;
                if (coord == 0) a.theta_m = std::clamp(a.theta_m + sign * step_theta, 0.0, pi);
                else a.phi_m = wrap_phi(a.phi_m + sign * step_phi);
                const double v = conditional_information(rho, a);
                if (v > best.value) {
                    best = {v, a};
                    improved = true;
                }
            }
        if (!improved) {
            step_theta *= 0.5;
            step_phi *= 0.5;
        }
    }
    return best;
}

double discord_oracle(const DensityMatrix& rho, const DiscordOracleOptions& opts) {
    const double q = mutual_information(rho) - classical_correlation(rho, opts).value;
    return std::max(0.0, q);
}

CorrelationPoint correlation_point(const BathParams& p,
                                   const ChannelVariant& v,
                                   const DecoherenceState& d,
                                   const ChannelState& channel,
                                   bool with_oracle) {
    CorrelationPoint out;
    out.t = channel.t;
    out.negativity_ppt = negativity_ppt(channel.rho);
    out.negativity_scaled = v.kind == ChannelKind::Correlated ? negativity_closed(p, d)
                                                             : negativity_x_state(p.alpha, channel.kappa_eff);
    out.discord_closed = p.alpha == 0.5 ? discord_closed(std::abs(channel.kappa_eff))
                                        : std::numeric_limits<double>::quiet_NaN();
    out.mutual_info = mutual_information(channel.rho);
    if (with_oracle) {
        out.classical_corr = classical_correlation(channel.rho).value;
        out.discord_oracle = std::max(0.0, out.mutual_info - out.classical_corr);
    } else {
        out.classical_corr = std::numeric_limits<double>::quiet_NaN();
        out.discord_oracle = std::numeric_limits<double>::quiet_NaN();
    }
    return out;
}

}  // namespace qcorr
