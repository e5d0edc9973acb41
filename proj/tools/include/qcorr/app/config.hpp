#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "qcorr/bath.hpp"
#include "qcorr/channel.hpp"
#include "qcorr/errors.hpp"
#include "qcorr/teleport.hpp"

namespace qcorr::app {

class ConfigError : public qcorr::Error {
public:
    using qcorr::Error::Error;
};

enum class Output { Negativity, Discord, Fidelity, DecoherenceFunctions };

struct TimeGrid {
    double t_min = 0.0;
    double t_max = 100.0;
    int n_points = 201;

    std::vector<double> points() const;
};

struct RunConfig {
    BathParams bath;
    QuadratureSpec quadrature;
    ChannelVariant variant;
    bool markov_rate_auto = true;  // use markov_rate_default(bath)
    NoisePlacement placement = NoisePlacement::ChannelDecoheres;
    TimeGrid grid;
    std::set<Output> outputs{Output::Negativity, Output::Discord, Output::Fidelity,
                             Output::DecoherenceFunctions};
    std::string output_path = "sweep.csv";
    int sphere_order = 16;
    int workers = 0;  // 0 = hardware concurrency

    // Throws ConfigError naming the offending field.
    void validate() const;
    // Variant with the Markovian rate resolved.
    ChannelVariant resolved_variant() const;
};

struct ConfigKey {
    std::string_view name;
    std::string_view help;
};

// Every key accepted in config files and as --<key> flags.
const std::vector<ConfigKey>& config_keys();

using KeyValues = std::map<std::string, std::string>;

// Parses "key = value" lines; '#' starts a comment. Later duplicates win.
KeyValues parse_key_values(std::string_view text);
KeyValues read_key_value_file(const std::string& path);

// Applies one key; throws ConfigError for unknown keys or malformed values.
void apply(RunConfig& config, const std::string& key, const std::string& value);
void apply(RunConfig& config, const KeyValues& values);

}  // namespace qcorr::app
