#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "qcorr/app/config.hpp"

namespace qcorr::app {
namespace {

TEST(ParseKeyValues, CommentsWhitespaceAndDuplicates) {
    const auto kv = parse_key_values(
        "# experiment\n"
        "bath.beta = 0.05   # hot\n"
        "\n"
        "  variant=markovian\n"
        "bath.beta = 2\n");
    ASSERT_EQ(kv.size(), 2u);
    EXPECT_EQ(kv.at("bath.beta"), "2");
    EXPECT_EQ(kv.at("variant"), "markovian");
}

TEST(ParseKeyValues, RejectsMalformedLines) {
    EXPECT_THROW(parse_key_values("bath.beta 1\n"), ConfigError);
    EXPECT_THROW(parse_key_values(" = 1\n"), ConfigError);
}

TEST(Apply, EveryKeyIsAccepted) {
    const KeyValues sample{
        {"bath.coupling_A", "0.5"},     {"bath.beta", "3"},
        {"bath.omega0", "2"},           {"bath.s", "4"},
        {"bath.alpha", "0.3"},          {"quadrature.omega_max", "7"},
        {"quadrature.panels_per_period", "8"}, {"quadrature.abs_tol", "1e-13"},
        {"variant", "markovian"},       {"variant.markov_rate", "0.25"},
        {"placement", "input"},         {"grid.t_min", "1"},
        {"grid.t_max", "9"},            {"grid.n_points", "5"},
        {"outputs", "negativity, fidelity"}, {"output", "out.csv"},
        {"sphere.order", "32"},         {"workers", "2"},
    };
    ASSERT_EQ(sample.size(), config_keys().size());
    RunConfig c;
    apply(c, sample);
    EXPECT_EQ(c.bath.coupling_A, 0.5);
    EXPECT_EQ(c.bath.beta, 3.0);
    EXPECT_EQ(c.bath.omega0, 2.0);
    EXPECT_EQ(c.bath.s, 4.0);
    EXPECT_EQ(c.bath.alpha, 0.3);
    EXPECT_EQ(c.quadrature.omega_max, 7.0);
    EXPECT_EQ(c.quadrature.panels_per_period, 8);
    EXPECT_EQ(c.quadrature.abs_tol, 1e-13);
    EXPECT_EQ(c.variant.kind, ChannelKind::Markovian);
    EXPECT_FALSE(c.markov_rate_auto);
    EXPECT_EQ(c.resolved_variant().markov_rate, 0.25);
    EXPECT_EQ(c.placement, NoisePlacement::InputQubitDecoheres);
    EXPECT_EQ(c.grid.t_min, 1.0);
    EXPECT_EQ(c.grid.t_max, 9.0);
    EXPECT_EQ(c.grid.n_points, 5);
    EXPECT_EQ(c.outputs, (std::set<Output>{Output::Negativity, Output::Fidelity}));
    EXPECT_EQ(c.output_path, "out.csv");
    EXPECT_EQ(c.sphere_order, 32);
    EXPECT_EQ(c.workers, 2);
    EXPECT_NO_THROW(c.validate());
}

TEST(Apply, MarkovRateDefaultsToWhiteNoiseRate) {
    RunConfig c;
    apply(c, {{"variant", "markovian"}, {"bath.beta", "0.5"}, {"bath.coupling_A", "2"}});
    EXPECT_TRUE(c.markov_rate_auto);
    EXPECT_EQ(c.resolved_variant().markov_rate, 16.0);
}

TEST(Apply, RejectsUnknownKeysAndBadValues) {
    RunConfig c;
    EXPECT_THROW(apply(c, "bath.temperature", "1"), ConfigError);
    EXPECT_THROW(apply(c, "bath.beta", "1.0x"), ConfigError);
    EXPECT_THROW(apply(c, "grid.n_points", "2.5"), ConfigError);
    EXPECT_THROW(apply(c, "variant", "quantum"), ConfigError);
    EXPECT_THROW(apply(c, "placement", "bob"), ConfigError);
    EXPECT_THROW(apply(c, "outputs", "entropy"), ConfigError);
}

TEST(Validate, Invariants) {
    auto invalid = [](const std::string& key, const std::string& value) {
        RunConfig c;
        apply(c, key, value);
        EXPECT_THROW(c.validate(), ConfigError) << key << " = " << value;
    };
    invalid("grid.t_min", "-1");
    invalid("grid.t_max", "0");
    invalid("grid.n_points", "1");
    invalid("outputs", "");
    invalid("bath.beta", "0");
    invalid("bath.alpha", "1.5");
    invalid("bath.coupling_A", "-1");
    invalid("quadrature.omega_max", "3");
    invalid("sphere.order", "8");
    invalid("workers", "-2");
    EXPECT_NO_THROW(RunConfig{}.validate());
}

TEST(TimeGrid, EndpointsAreExact) {
    const auto pts = TimeGrid{0.0, 100.0, 201}.points();
    ASSERT_EQ(pts.size(), 201u);
    EXPECT_EQ(pts.front(), 0.0);
    EXPECT_EQ(pts[100], 50.0);
    EXPECT_EQ(pts.back(), 100.0);
}

TEST(ReadKeyValueFile, RoundTripAndMissingFile) {
    const auto path = std::filesystem::temp_directory_path() / "qcorr_config_test.cfg";
    {
        std::ofstream(path) << "bath.s = 5\noutput = x.csv\n";
    }
    const auto kv = read_key_value_file(path.string());
    EXPECT_EQ(kv.at("bath.s"), "5");
    EXPECT_EQ(kv.at("output"), "x.csv");
    std::filesystem::remove(path);
    EXPECT_THROW(read_key_value_file(path.string()), ConfigError);
}

}  // namespace
}  // namespace qcorr::app
