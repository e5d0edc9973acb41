#include <gtest/gtest.h>

#include <cmath>

#include "oracles/refined_quadrature.hpp"
#include "qcorr/channel.hpp"

namespace qcorr {
namespace {

const QuadratureSpec kQuad{};

BathParams params(double A, double beta, double s, double alpha = 0.5) {
    BathParams p;
    p.coupling_A = A;
    p.beta = beta;
    p.s = s;
    p.alpha = alpha;
    return p;
}

const ChannelVariant kCorrelated{ChannelKind::Correlated, 0.0};
const ChannelVariant kUncorrelated{ChannelKind::Uncorrelated, 0.0};

TEST(ChannelState, InitialStateIsThePreparedPureState) {
    for (double alpha : {0.0, 0.25, 0.5, 1.0})
        for (const ChannelVariant& v : {kCorrelated, kUncorrelated, ChannelVariant{ChannelKind::Markovian, 3.0}}) {
            const BathParams p = params(1, 1, 1, alpha);
            const auto st = channel_state(p, kQuad, v, 0.0);
            const std::array<cplx, 4> ket{std::sqrt(alpha), 0.0, 0.0, std::sqrt(1 - alpha)};
            EXPECT_LT(st.rho.matrix().max_abs_diff(ComplexMatrix::outer(ket)), 1e-12);
        }
}

TEST(ChannelState, ProductChannelIsStationary) {
    for (double alpha : {0.0, 1.0})
        for (double t : {0.0, 1.0, 10.0}) {
            const auto st = channel_state(params(1, 1, 1, alpha), kQuad, kCorrelated, t);
            EXPECT_EQ(st.rho.matrix().max_abs_diff(ComplexMatrix::diagonal({alpha, 0.0, 0.0, 1.0 - alpha})), 0.0);
        }
}

TEST(ChannelState, StructureInvariants) {
    for (double alpha : {0.2, 0.5})
        for (double t : {0.3, 5.0}) {
            const BathParams p = params(1, 1, 1, alpha);
            const auto st = channel_state(p, kQuad, kCorrelated, t);
            const auto& m = st.rho.matrix();
            EXPECT_NEAR(m(0, 0).real(), alpha, 1e-12);
            EXPECT_NEAR(std::abs(m(1, 1)), 0.0, 1e-12);
            EXPECT_NEAR(std::abs(m(2, 2)), 0.0, 1e-12);
            EXPECT_NEAR(m(3, 3).real(), 1 - alpha, 1e-12);
            EXPECT_LT(std::abs(m(0, 3) - std::sqrt(alpha * (1 - alpha)) * st.kappa_eff), 1e-15);
            EXPECT_EQ(m(3, 0), std::conj(m(0, 3)));
        }
}

TEST(ChannelState, CorrelatedVersusUncorrelatedAgainstOracle) {
    // beta = 1, A = 1, s = 1, t = 2: both coherence moduli from refined-grid values.
    const BathParams p = params(1, 1, 1);
    const oracle::RefBath b{1.0L, 1.0L, 1.0L};
    const double g = oracle::ref_gamma_s(b, 2.0L);
    const double z = oracle::ref_zeta(b, 2.0L);
    const double th = std::tanh(1.0);
    const double corr_ref = std::sqrt(std::cos(2 * z) * std::cos(2 * z) + std::sin(2 * z) * std::sin(2 * z) * th * th) *
                            std::exp(-g);
    const double unc_ref = std::exp(-g);
    const auto corr = channel_state(p, kQuad, kCorrelated, 2.0);
    const auto unc = channel_state(p, kQuad, kUncorrelated, 2.0);
    EXPECT_NEAR(std::abs(corr.kappa_eff), corr_ref, 1e-10);
    EXPECT_NEAR(std::abs(unc.kappa_eff), unc_ref, 1e-10);
    // The bracket modulus never exceeds 1, so correlations can only lower |kappa| here.
    EXPECT_LE(std::abs(corr.kappa_eff), std::abs(unc.kappa_eff) + 1e-15);
}

TEST(ChannelState, ValidOnParameterGrid) {
    for (double beta : {0.05, 1.0, 10.0})
        for (double s : {0.0, 1.0, 5.0}) {
            const BathParams p = params(1, beta, s);
            const ChannelVariant markov{ChannelKind::Markovian, markov_rate_default(p)};
            for (int i = 0; i < 200; ++i) {
                const double t = 0.5 * i;
                for (const auto& v : {kCorrelated, kUncorrelated, markov}) {
                    EXPECT_NO_THROW((void)channel_state(p, kQuad, v, t));
                }
            }
        }
}

TEST(ChannelState, MarkovianDecaysCorrelatedSaturates) {
    const BathParams p = params(1, 1, 1);
    const ChannelVariant markov{ChannelKind::Markovian, markov_rate_default(p)};
    double prev = 2.0;
    for (double t = 0.0; t <= 5.0; t += 0.25) {
        const double k = std::abs(channel_state(p, kQuad, markov, t).kappa_eff);
        EXPECT_LT(k, prev);
        prev = k;
    }
    EXPECT_GT(std::abs(channel_state(p, kQuad, kCorrelated, 100.0).kappa_eff), 0.1);
}

TEST(ChannelState, ZeroTemperatureVariantsCoincideWithoutPhase) {
    // tanh(beta omega0) -> 1 turns the bracket into a pure phase; at zeta = 0
    // (s = 0 with long times) both variants carry the same modulus.
    const BathParams p = params(1, 1e6, 0);
    for (double t : {0.5, 3.0, 40.0}) {
        EXPECT_NEAR(std::abs(channel_state(p, kQuad, kCorrelated, t).kappa_eff),
                    std::abs(channel_state(p, kQuad, kUncorrelated, t).kappa_eff), 1e-14);
    }
}

TEST(MarkovRate, Values) {
    EXPECT_EQ(markov_rate_default(params(0, 1, 1)), 0.0);
    EXPECT_EQ(markov_rate_default(params(1, 1, 1)), 4.0);
    EXPECT_EQ(markov_rate_default(params(3, 0.5, 1)), 24.0);
}

TEST(MarkovRate, IsTheLowFrequencyDensityOfTheGammaSIntegrand) {
    // omega e^{-omega^2} (1 + sinc) coth(beta omega / 2) at omega -> 0.
    for (double beta : {0.1, 1.0, 7.0}) {
        const double w = 1e-7;
        const double density = w * std::exp(-w * w) * (1.0 + std::sin(w) / w) / std::tanh(0.5 * beta * w);
        EXPECT_NEAR(markov_rate_default(params(1, beta, 1)), density, 1e-6 * density);
    }
}

TEST(XState, RejectsUnphysicalCoherence) { EXPECT_THROW(x_state(0.5, 1.5), InvalidStateError); }

}  // namespace
}  // namespace qcorr
