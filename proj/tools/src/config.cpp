#include "qcorr/app/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace qcorr::app {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_double(const std::string& key, const std::string& value) {
    double out = 0.0;
    const auto* end = value.data() + value.size();
    const auto [ptr, ec] = std::from_chars(value.data(), end, out);
    if (ec != std::errc() || ptr != end) throw ConfigError("invalid number for " + key + ": '" + value + "'");
    return out;
}

int parse_int(const std::string& key, const std::string& value) {
    int out = 0;
    const auto* end = value.data() + value.size();
    const auto [ptr, ec] = std::from_chars(value.data(), end, out);
    if (ec != std::errc() || ptr != end) throw ConfigError("invalid integer for " + key + ": '" + value + "'");
    return out;
}

ChannelKind parse_variant(const std::string& value) {
    if (value == "correlated") return ChannelKind::Correlated;
    if (value == "uncorrelated") return ChannelKind::Uncorrelated;
    if (value == "markovian") return ChannelKind::Markovian;
    throw ConfigError("variant must be correlated, uncorrelated or markovian, got '" + value + "'");
}

NoisePlacement parse_placement(const std::string& value) {
    if (value == "channel") return NoisePlacement::ChannelDecoheres;
    if (value == "alice") return NoisePlacement::AliceQubitsDecohere;
    if (value == "input") return NoisePlacement::InputQubitDecoheres;
    throw ConfigError("placement must be channel, alice or input, got '" + value + "'");
}

std::set<Output> parse_outputs(const std::string& value) {
    std::set<Output> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const std::string name(trim(item));
        if (name == "negativity") out.insert(Output::Negativity);
        else if (name == "discord") out.insert(Output::Discord);
        else if (name == "fidelity") out.insert(Output::Fidelity);
        else if (name == "decoherence_functions") out.insert(Output::DecoherenceFunctions);
        else if (!name.empty()) throw ConfigError("unknown output '" + name + "'");
    }
    return out;
}

}  // namespace

std::vector<double> TimeGrid::points() const {
    std::vector<double> t(static_cast<std::size_t>(n_points));
    for (int i = 0; i < n_points; ++i) {
        t[static_cast<std::size_t>(i)] =
            i + 1 == n_points ? t_max : t_min + (t_max - t_min) * i / static_cast<double>(n_points - 1);
    }
    return t;
}

void RunConfig::validate() const {
    try {
        bath.validate();
        quadrature.validate();
    } catch (const InvalidStateError& e) {
        throw ConfigError(e.what());
    }
    if (!(variant.markov_rate >= 0.0)) throw ConfigError("variant.markov_rate must be >= 0");
    if (!(grid.t_min >= 0.0)) throw ConfigError("grid.t_min must be >= 0");
    if (!(grid.t_max > grid.t_min)) throw ConfigError("grid.t_max must exceed grid.t_min");
    if (grid.n_points < 2) throw ConfigError("grid.n_points must be >= 2");
    if (outputs.empty()) throw ConfigError("outputs must name at least one quantity");
    if (sphere_order < 16) throw ConfigError("sphere.order must be >= 16");
    if (workers < 0) throw ConfigError("workers must be >= 0");
}

ChannelVariant RunConfig::resolved_variant() const {
    ChannelVariant v = variant;
    if (v.kind == ChannelKind::Markovian && markov_rate_auto) v.markov_rate = markov_rate_default(bath);
    return v;
}

const std::vector<ConfigKey>& config_keys() {
    static const std::vector<ConfigKey> keys{
        {"bath.coupling_A", "dimensionless coupling prefactor A"},
        {"bath.beta", "inverse temperature (units of 1/omega_c)"},
        {"bath.omega0", "qubit splitting (units of omega_c)"},
        {"bath.s", "qubit separation time L/c (units of 1/omega_c)"},
        {"bath.alpha", "channel weight alpha in [0, 1]"},
        {"quadrature.omega_max", "frequency truncation point"},
        {"quadrature.panels_per_period", "panels per half oscillation period"},
        {"quadrature.abs_tol", "refinement tolerance"},
        {"variant", "correlated | uncorrelated | markovian"},
        {"variant.markov_rate", "Markovian dephasing rate (default 4 A / beta)"},
        {"placement", "channel | alice | input"},
        {"grid.t_min", "first time point"},
        {"grid.t_max", "last time point"},
        {"grid.n_points", "number of time points"},
        {"outputs", "comma list of negativity, discord, fidelity, decoherence_functions"},
        {"output", "CSV output path"},
        {"sphere.order", "starting Gauss-Legendre order of the sphere average"},
        {"workers", "worker threads (0 = all cores)"},
    };
    return keys;
}

KeyValues parse_key_values(std::string_view text) {
    KeyValues out;
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
        }
        const auto key = trim(line.substr(0, eq));
        if (key.empty()) throw ConfigError("line " + std::to_string(line_no) + ": empty key");
        out[std::string(key)] = std::string(trim(line.substr(eq + 1)));
    }
    return out;
}

KeyValues read_key_value_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_key_values(buffer.str());
}

void apply(RunConfig& c, const std::string& key, const std::string& value) {
    if (key == "bath.coupling_A") c.bath.coupling_A = parse_double(key, value);
    else if (key == "bath.beta") c.bath.beta = parse_double(key, value);
    else if (key == "bath.omega0") c.bath.omega0 = parse_double(key, value);
    else if (key == "bath.s") c.bath.s = parse_double(key, value);
    else if (key == "bath.alpha") c.bath.alpha = parse_double(key, value);
    else if (key == "quadrature.omega_max") c.quadrature.omega_max = parse_double(key, value);
    else if (key == "quadrature.panels_per_period") c.quadrature.panels_per_period = parse_int(key, value);
    else if (key == "quadrature.abs_tol") c.quadrature.abs_tol = parse_double(key, value);
    else if (key == "variant") c.variant.kind = parse_variant(value);
    else if (key == "variant.markov_rate") {
        c.variant.markov_rate = parse_double(key, value);
        c.markov_rate_auto = false;
    } else if (key == "placement") c.placement = parse_placement(value);
    else if (key == "grid.t_min") c.grid.t_min = parse_double(key, value);
    else if (key == "grid.t_max") c.grid.t_max = parse_double(key, value);
    else if (key == "grid.n_points") c.grid.n_points = parse_int(key, value);
    else if (key == "outputs") c.outputs = parse_outputs(value);
    else if (key == "output") c.output_path = value;
    else if (key == "sphere.order") c.sphere_order = parse_int(key, value);
    else if (key == "workers") c.workers = parse_int(key, value);
    else throw ConfigError("unknown configuration key '" + key + "'");
}

void apply(RunConfig& config, const KeyValues& values) {
    for (const auto& [key, value] : values) apply(config, key, value);
}

}  // namespace qcorr::app
