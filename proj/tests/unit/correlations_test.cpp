#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "qcorr/correlations.hpp"

namespace qcorr {
namespace {

const QuadratureSpec kQuad{};
const double r2 = 1.0 / std::numbers::sqrt2;

BathParams params(double A, double beta, double s, double alpha = 0.5) {
    BathParams p;
    p.coupling_A = A;
    p.beta = beta;
    p.s = s;
    p.alpha = alpha;
    return p;
}

DensityMatrix bell() {
    const std::array<cplx, 4> ket{r2, 0.0, 0.0, r2};
    return DensityMatrix::pure(ket);
}

DensityMatrix product_state() {
    return DensityMatrix(kron(ComplexMatrix::diagonal({0.7, 0.3}), ComplexMatrix::diagonal({0.2, 0.8})));
}

DensityMatrix swap_qubits(const DensityMatrix& rho) {
    ComplexMatrix swap(4);
    swap(0, 0) = swap(1, 2) = swap(2, 1) = swap(3, 3) = 1.0;
    return DensityMatrix(swap * rho.matrix() * swap);
}

// Binary entropy oracle, independent of the eigen-solver.
double h2(double p) {
    double h = 0.0;
    for (double x : {p, 1.0 - p})
        if (x > 0) h -= x * std::log2(x);
    return h;
}

TEST(NegativityPpt, ReferenceStates) {
    EXPECT_NEAR(negativity_ppt(bell()), 0.5, 1e-14);
    EXPECT_EQ(negativity_ppt(product_state()), 0.0);
    // alpha = 1/2, |kappa| = 0.6: negative eigenvalue -sqrt(alpha(1-alpha)) |kappa| = -0.3.
    EXPECT_NEAR(negativity_ppt(x_state(0.5, std::polar(0.6, 1.1))), 0.3, 1e-14);
}

TEST(NegativityClosed, LimitsAndPptEquivalence) {
    DecoherenceState d0;
    EXPECT_NEAR(negativity_closed(params(1, 1, 1), d0), 1.0, 1e-15);
    for (double alpha : {0.0, 1.0})
        for (double t : {0.0, 2.0}) {
            const auto d = evaluate_decoherence(params(1, 1, 1, alpha), kQuad, t);
            EXPECT_EQ(negativity_closed(params(1, 1, 1, alpha), d), 0.0);
        }
    for (double alpha : {0.5, 0.2, 0.85})
        for (double beta : {0.05, 1.0, 10.0})
            for (double t : {0.3, 1.7, 12.0}) {
                const BathParams p = params(1, beta, 1, alpha);
                const auto d = evaluate_decoherence(p, kQuad, t);
                const auto st = channel_state(p, {ChannelKind::Correlated, 0.0}, d);
                EXPECT_NEAR(negativity_closed(p, d), 2.0 * negativity_ppt(st.rho), 1e-10);
                EXPECT_NEAR(negativity_closed(p, d), negativity_x_state(alpha, d.kappa), 1e-13);
            }
}

TEST(DiscordClosed, ReferenceValues) {
    EXPECT_EQ(discord_closed(1.0), 1.0);
    EXPECT_EQ(discord_closed(0.0), 0.0);
    // (3/4) log2(3/4) + (1/4) log2(1/4) + 1
    EXPECT_NEAR(discord_closed(0.5), 0.75 * std::log2(0.75) + 0.25 * std::log2(0.25) + 1.0, 1e-15);
    EXPECT_NEAR(discord_closed(0.5), 0.188721875540867, 1e-12);
    EXPECT_THROW(discord_closed(1.1), InvalidStateError);
}

TEST(DiscordClosed, StrictlyIncreasingInKappa) {
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> u(1e-6, 1.0 - 1e-6);
    for (int i = 0; i < 1000; ++i) {
        double a = u(rng), b = u(rng);
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        EXPECT_LT(discord_closed(a), discord_closed(b));
    }
}

TEST(DiscordClosed, AntinodeCaseUsesKappaOne) {
    // gamma_s = zeta = 0 gives kappa = 1, hence discord 1, while the quoted
    // bracket-only modulus is a separate (smaller) diagnostic.
    DecoherenceState d;
    EXPECT_EQ(discord_closed(d), 1.0);
    EXPECT_LT(antinode_bracket_modulus(1.0), 1.0);
}

TEST(MutualInformation, ReferenceStates) {
    EXPECT_NEAR(mutual_information(product_state()), 0.0, 1e-13);
    EXPECT_NEAR(mutual_information(bell()), 2.0, 1e-13);
    // alpha = 1/2, |kappa| = 0.5: S(A) = S(B) = 1, spectrum {0, 0, 3/4, 1/4}.
    EXPECT_NEAR(mutual_information(x_state(0.5, 0.5)), 2.0 - h2(0.75), 1e-13);
}

TEST(DiscordOracle, ReferenceStates) {
    EXPECT_NEAR(discord_oracle(bell()), 1.0, 1e-9);
    EXPECT_NEAR(discord_oracle(product_state()), 0.0, 1e-9);
}

TEST(DiscordOracle, MatchesClosedFormOnChannelFamily) {
    for (double beta : {0.05, 1.0})
        for (int i = 0; i < 50; ++i) {
            const double t = 0.4 * i;
            const BathParams p = params(1, beta, 1);
            const auto d = evaluate_decoherence(p, kQuad, t);
            const auto st = channel_state(p, {ChannelKind::Correlated, 0.0}, d);
            const double q = discord_oracle(st.rho);
            EXPECT_NEAR(q, discord_closed(d), 1e-6) << "beta=" << beta << " t=" << t;
            EXPECT_LE(q, mutual_information(st.rho) + 1e-9);
        }
}

TEST(DiscordOracle, MeasurementSideIsImmaterialForSymmetricChannel) {
    for (double k : {0.1, 0.45, 0.9}) {
        const auto rho = x_state(0.5, std::polar(k, 0.4));
        EXPECT_NEAR(discord_oracle(rho), discord_oracle(swap_qubits(rho)), 1e-9);
    }
}

TEST(DiscordOracle, VanishesForClassicalDiagonalState) {
    EXPECT_NEAR(discord_oracle(x_state(0.5, 0.0)), 0.0, 1e-9);
}

TEST(ConditionalInformation, ZBasisOnChannelIsOneBit) {
    EXPECT_NEAR(conditional_information(x_state(0.5, 0.3), {0.0, 0.0}), 1.0, 1e-13);
    // Equatorial measurement leaves A with Bloch length |kappa|.
    EXPECT_NEAR(conditional_information(x_state(0.5, 0.3), {std::numbers::pi / 2, 0.0}), 1.0 - h2(0.65), 1e-13);
}

TEST(CorrelationPoint, InvariantsAlongTrajectory) {
    const BathParams p = params(1, 1, 1);
    const ChannelVariant v{ChannelKind::Correlated, 0.0};
    for (double t : {0.0, 1.0, 4.0, 30.0}) {
        const auto d = evaluate_decoherence(p, kQuad, t);
        const auto pt = correlation_point(p, v, d, channel_state(p, v, d));
        EXPECT_NEAR(pt.negativity_scaled, 2.0 * pt.negativity_ppt, 1e-10);
        EXPECT_LE(pt.discord_oracle, pt.mutual_info + 1e-9);
        EXPECT_GE(pt.classical_corr, 0.0);
        EXPECT_NEAR(pt.discord_oracle, pt.discord_closed, 1e-6);
    }
}

}  // namespace
}  // namespace qcorr
