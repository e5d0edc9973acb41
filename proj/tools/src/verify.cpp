#include "qcorr/app/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qcorr/app/config.hpp"
#include "qcorr/app/sweep.hpp"
#include "qcorr/correlations.hpp"
#include "qcorr/teleport.hpp"

namespace qcorr::app {
namespace {

constexpr double kClassical = 2.0 / 3.0;

std::vector<double> linspace(double a, double b, int n) {
    std::vector<double> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = a + (b - a) * i / (n - 1);
    return v;
}

BathParams bath(double A, double beta, double s, double omega0 = 1.0) {
    BathParams p;
    p.coupling_A = A;
    p.beta = beta;
    p.s = s;
    p.omega0 = omega0;
    return p;
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

// Wraps a check body: times it, turns exceptions into failures, applies the
// runtime budget.
template <class Body>
CheckResult timed(std::string id, std::string description, double tol, double budget, Body body) {
    CheckResult r;
    r.id = std::move(id);
    r.description = std::move(description);
    r.tolerance = tol;
    r.budget_seconds = budget;
    Timer timer;
    try {
        body(r);
    } catch (const std::exception& e) {
        r.passed = false;
        r.deviation = NAN;
        r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = timer.seconds();
    if (budget > 0 && r.seconds >= budget) {
        r.passed = false;
        r.detail += (r.detail.empty() ? "" : "; ") + std::string("over runtime budget");
    }
    return r;
}

double worst(double a, double b) { return std::isnan(b) ? b : std::max(a, b); }

CheckResult check_initial_limits(const VerifyOptions& o) {
    return timed("1", "initial-state limits at t = 0", 1e-12, 1.0, [&](CheckResult& r) {
        double dev = 0.0;
        for (double A : {0.0, 0.5, 1.0, 5.0})
            for (double beta : {0.05, 1.0, 10.0})
                for (double s : {0.0, 1.0, 5.0}) {
                    const BathParams p = bath(A, beta, s);
                    const auto d = evaluate_decoherence(p, o.quadrature, 0.0);
                    dev = worst(dev, std::abs(d.kappa - 1.0));
                    dev = worst(dev, std::abs(d.gamma_s));
                    dev = worst(dev, std::abs(negativity_closed(p, d) - 1.0));
                    dev = worst(dev, std::abs(o.discord_closed(std::abs(d.kappa)) - 1.0));
                    dev = worst(dev, std::abs(fav_closed(NoisePlacement::ChannelDecoheres, p, d) - 1.0));
                }
        r.deviation = dev;
        r.passed = dev <= r.tolerance;
    });
}

// Shared grid of criteria 2 and 3: 50 times x beta x s, correlated channel.
template <class Fn>
void for_each_channel_point(const QuadratureSpec& q, Fn fn) {
    for (double beta : {0.05, 1.0, 10.0})
        for (double s : {0.0, 1.0, 5.0}) {
            const BathParams p = bath(1.0, beta, s);
            for (double t : linspace(0.0, 100.0, 50)) {
                const auto d = evaluate_decoherence(p, q, t);
                fn(p, d, channel_state(p, ChannelVariant{}, d));
            }
        }
}

CheckResult check_negativity(const VerifyOptions& o) {
    return timed("2", "negativity closed form = 2 x PPT negativity", 1e-10, 10.0, [&](CheckResult& r) {
        double dev = 0.0;
        for_each_channel_point(o.quadrature, [&](const BathParams& p, const DecoherenceState& d, const ChannelState& c) {
            dev = worst(dev, std::abs(negativity_closed(p, d) - 2.0 * negativity_ppt(c.rho)));
        });
        r.deviation = dev;
        r.passed = dev <= r.tolerance;
    });
}

CheckResult check_discord(const VerifyOptions& o) {
    return timed("3", "discord closed form vs measurement optimization", 1e-6, 120.0, [&](CheckResult& r) {
        double dev = 0.0;
        for_each_channel_point(o.quadrature, [&](const BathParams&, const DecoherenceState& d, const ChannelState& c) {
            dev = worst(dev, std::abs(o.discord_closed(std::abs(d.kappa)) - discord_oracle(c.rho)));
        });
        r.deviation = dev;
        r.passed = dev <= r.tolerance;
    });
}

CheckResult check_teleport_channel(const VerifyOptions& o) {
    return timed("4", "channel-decoherence fidelity closed form vs sphere average", 1e-8, 60.0, [&](CheckResult& r) {
        double dev = 0.0;
        double defect = 0.0;
        for (double beta : {0.05, 1.0})
            for (double s : {0.0, 1.0, 5.0}) {
                const BathParams p = bath(1.0, beta, s);
                for (double t : linspace(0.0, 100.0, 30)) {
                    const auto d = evaluate_decoherence(p, o.quadrature, t);
                    const auto avg = average_fidelity_oracle(channel_state(p, ChannelVariant{}, d));
                    dev = worst(dev, std::abs(fav_closed(NoisePlacement::ChannelDecoheres, p, d) - avg.value));
                    defect = std::max(defect, avg.max_probability_defect);
                }
            }
        r.deviation = dev;
        r.passed = dev <= r.tolerance && defect <= 1e-12;
        char buf[96];
        std::snprintf(buf, sizeof buf, "max |sum Q_i - 1| = %.3e (tol 1e-12)", defect);
        r.detail = buf;
    });
}

CheckResult check_critical_temperature(const VerifyOptions& o) {
    return timed("5", "input-decoherence fidelity: 2/3 at beta omega0 = 2, below 2/3 at 0.01", 1e-12, 0.0,
                 [&](CheckResult& r) {
                     double dev = 0.0;
                     const BathParams critical = bath(1.0, 2.0, 1.0);
                     for (double t : linspace(0.0, 100.0, 30)) {
                         const auto d = evaluate_decoherence(critical, o.quadrature, t);
                         dev = worst(dev, std::abs(fav_closed(NoisePlacement::InputQubitDecoheres, critical, d) -
                                                   kClassical));
                     }
                     // Sign check on the early-time window where the input coherence
                     // factor is still above 0.01.
                     const BathParams hot = bath(1.0, 0.01, 1.0);
                     int qualifying = 0;
                     int wrong_sign = 0;
                     for (double t : linspace(0.0, 1.0, 30)) {
                         const auto d = evaluate_decoherence(hot, o.quadrature, t);
                         if (std::cos(d.zeta0) * std::exp(-d.gamma1) <= 0.01) continue;
                         ++qualifying;
                         if (!(fav_closed(NoisePlacement::InputQubitDecoheres, hot, d) < kClassical)) ++wrong_sign;
                     }
                     r.deviation = dev;
                     r.passed = dev <= r.tolerance && qualifying > 0 && wrong_sign == 0;
                     r.detail = "high-T sign check: " + std::to_string(qualifying) + " qualifying points, " +
                                std::to_string(wrong_sign) + " not below 2/3";
                 });
}

std::vector<CheckResult> check_input_dephasing(const VerifyOptions& o) {
    double agreement = 0.0;
    double worst_at_bw = 0.0;
    double worst_at_t = 0.0;
    auto self = timed("6", "input-dephasing sphere average: order-doubling self-consistency", 1e-8, 0.0,
                      [&](CheckResult& r) {
                          double delta = 0.0;
                          for (double bw : {0.5, 2.0, 6.0}) {
                              const BathParams p = bath(1.0, bw, 1.0);
                              for (double t : linspace(0.0, 100.0, 30)) {
                                  const auto d = evaluate_decoherence(p, o.quadrature, t);
                                  const auto avg = input_dephasing_oracle(p, d);
                                  delta = worst(delta, avg.refinement_delta);
                                  const double diff =
                                      std::abs(avg.value - fav_closed(NoisePlacement::InputQubitDecoheres, p, d));
                                  if (diff > agreement) {
                                      agreement = diff;
                                      worst_at_bw = bw;
                                      worst_at_t = t;
                                  }
                              }
                          }
                          r.deviation = delta;
                          r.passed = delta < r.tolerance;
                      });
    CheckResult info;
    info.id = "6-info";
    info.description = "input-dephasing sphere average vs closed-form input fidelity (informational)";
    info.tolerance = 1e-6;
    info.deviation = agreement;
    info.passed = agreement <= info.tolerance;
    info.mandatory = false;
    char buf[128];
    std::snprintf(buf, sizeof buf, "worst at beta omega0 = %g, t = %.6g", worst_at_bw, worst_at_t);
    info.detail = buf;
    return {self, info};
}

CheckResult check_fidelity_shape(const VerifyOptions& o) {
    return timed("7", "fidelity saturates above 2/3 at beta = 1, at 2/3 for beta = 0.05", 0.01, 30.0,
                 [&](CheckResult& r) {
                     const BathParams warm = bath(1.0, 1.0, 1.0);
                     const BathParams hot = bath(1.0, 0.05, 1.0);
                     auto fav = [&](const BathParams& p, double t) {
                         return fav_closed(NoisePlacement::ChannelDecoheres, p,
                                           evaluate_decoherence(p, o.quadrature, t));
                     };
                     const double f_warm = fav(warm, 80.0);
                     double min_warm = fav(warm, 0.0);
                     const double f0 = min_warm;
                     for (double t : linspace(0.0, 80.0, 161)) min_warm = std::min(min_warm, fav(warm, t));
                     const double f_hot = fav(hot, 80.0);
                     // Margins: positive means satisfied.
                     const double margin_warm = f_warm - (kClassical + 0.01);
                     const double margin_hot = 0.01 - std::abs(f_hot - kClassical);
                     const bool dips = min_warm < f0;
                     r.deviation = std::abs(f_hot - kClassical);
                     r.passed = margin_warm > 0 && margin_hot > 0 && dips;
                     char buf[192];
                     std::snprintf(buf, sizeof buf, "F(80; beta=1) = %.6f, min F = %.6f, F(80; beta=0.05) = %.6f",
                                   f_warm, min_warm, f_hot);
                     r.detail = buf;
                 });
}

CheckResult check_correlation_shape(const VerifyOptions& o) {
    return timed("8", "negativity and discord persist at t = 80, Markovian baseline vanishes", 1e-3, 30.0,
                 [&](CheckResult& r) {
                     const BathParams p = bath(1.0, 1.0, 1.0);
                     const auto d = evaluate_decoherence(p, o.quadrature, 80.0);
                     const double n_corr = negativity_closed(p, d);
                     const double q_corr = o.discord_closed(std::abs(d.kappa));
                     const ChannelVariant markov{ChannelKind::Markovian, markov_rate_default(p)};
                     const auto m = channel_state(p, markov, d);
                     const double n_markov = negativity_x_state(p.alpha, m.kappa_eff);
                     const double q_markov = o.discord_closed(std::abs(m.kappa_eff));
                     r.deviation = std::max(n_markov, q_markov);
                     r.passed = n_corr > 0.01 && q_corr > 0.01 && n_markov < 1e-3 && q_markov < 1e-3;
                     char buf[192];
                     std::snprintf(buf, sizeof buf, "correlated N = %.6f, Q = %.6f; Markovian N = %.3e, Q = %.3e",
                                   n_corr, q_corr, n_markov, q_markov);
                     r.detail = buf;
                 });
}

CheckResult check_quadrature(const VerifyOptions& o) {
    return timed("9", "quadrature density doubling and gamma_ic identity", 1e-10, 0.0, [&](CheckResult& r) {
        QuadratureSpec dense = o.quadrature;
        dense.panels_per_period *= 2;
        double dev = 0.0;
        for (double beta : {0.05, 1.0, 10.0})
            for (double s : {0.0, 1.0, 5.0}) {
                const BathParams p = bath(1.0, beta, s);
                for (double t : {0.1, 1.0, 10.0, 100.0}) {
                    const auto a = evaluate_decoherence(p, o.quadrature, t);
                    const auto b = evaluate_decoherence(p, dense, t);
                    dev = worst(dev, std::abs(a.gamma_s - b.gamma_s));
                    dev = worst(dev, std::abs(a.zeta - b.zeta));
                    dev = worst(dev, std::abs(a.zeta0 - b.zeta0));
                    dev = worst(dev, std::abs(a.gamma1 - b.gamma1));
                }
            }
        double identity = 0.0;
        for_each_channel_point(o.quadrature, [&](const BathParams&, const DecoherenceState& d, const ChannelState&) {
            identity = worst(identity, std::abs(std::exp(-d.gamma_ic - d.gamma_s) - std::abs(d.kappa)));
        });
        r.deviation = dev;
        r.passed = dev < r.tolerance && identity <= 1e-12;
        char buf[96];
        std::snprintf(buf, sizeof buf, "identity deviation = %.3e (tol 1e-12)", identity);
        r.detail = buf;
    });
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

CheckResult check_determinism(const VerifyOptions& o) {
    return timed("10", "repeated sweeps are byte-identical", 0.0, 0.0, [&](CheckResult& r) {
        namespace fs = std::filesystem;
        const fs::path dir = o.scratch_dir.empty() ? fs::temp_directory_path() : fs::path(o.scratch_dir);
        RunConfig config;
        config.quadrature = o.quadrature;
        config.grid = TimeGrid{0.0, 20.0, 21};
        std::ostringstream quiet;
        std::string files[2];
        // Different worker counts must not change the output.
        for (int run = 0; run < 2; ++run) {
            const fs::path path = dir / ("qcorr_verify_determinism_" + std::to_string(run) + ".csv");
            config.output_path = path.string();
            config.workers = run == 0 ? 1 : 3;
            if (cmd_sweep(config, quiet) != kExitOk) throw Error("sweep failed: " + quiet.str());
            files[run] = slurp(path);
            fs::remove(path);
        }
        std::size_t differing = 0;
        const std::size_t n = std::min(files[0].size(), files[1].size());
        for (std::size_t i = 0; i < n; ++i) differing += files[0][i] != files[1][i];
        differing += std::max(files[0].size(), files[1].size()) - n;
        r.deviation = static_cast<double>(differing);
        r.passed = differing == 0 && !files[0].empty();
        r.detail = std::to_string(files[0].size()) + " bytes compared";
    });
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
    VerifyOptions o = options;
    if (!o.discord_closed) o.discord_closed = [](double k) { return qcorr::discord_closed(k); };
    o.quadrature.validate();

    auto wanted = [&](std::string_view id) {
        return o.only.empty() || std::find(o.only.begin(), o.only.end(), id) != o.only.end();
    };
    std::vector<CheckResult> out;
    if (wanted("1")) out.push_back(check_initial_limits(o));
    if (wanted("2")) out.push_back(check_negativity(o));
    if (wanted("3")) out.push_back(check_discord(o));
    if (wanted("4")) out.push_back(check_teleport_channel(o));
    if (wanted("5")) out.push_back(check_critical_temperature(o));
    if (wanted("6"))
        for (auto& r : check_input_dephasing(o)) out.push_back(std::move(r));
    if (wanted("7")) out.push_back(check_fidelity_shape(o));
    if (wanted("8")) out.push_back(check_correlation_shape(o));
    if (wanted("9")) out.push_back(check_quadrature(o));
    if (wanted("10")) out.push_back(check_determinism(o));
    return out;
}

bool all_mandatory_passed(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (r.mandatory && !r.passed) return false;
    return true;
}

std::string format_report(const std::vector<CheckResult>& results) {
    std::string out;
    char buf[512];
    for (const auto& r : results) {
        const char* status = r.passed ? "PASS" : (r.mandatory ? "FAIL" : "INFO-FAIL");
        std::snprintf(buf, sizeof buf, "[%s] %-6s tol=%-8.1e dev=%-11.4e time=%7.2fs  %s", status, r.id.c_str(),
                      r.tolerance, r.deviation, r.seconds, r.description.c_str());
        out += buf;
        if (r.budget_seconds > 0) {
            std::snprintf(buf, sizeof buf, " (budget %.0fs)", r.budget_seconds);
            out += buf;
        }
        if (!r.detail.empty()) out += " | " + r.detail;
        out += '\n';
    }
    std::size_t failed = 0;
    for (const auto& r : results) failed += r.mandatory && !r.passed;
    std::snprintf(buf, sizeof buf, "%s: %zu mandatory check(s) failed\n", failed == 0 ? "OK" : "FAILED", failed);
    out += buf;
    return out;
}

int cmd_verify(const std::string& report_path, std::ostream& log) {
    const auto results = run_verification();
    const std::string report = format_report(results);
    log << report;
    if (!report_path.empty()) {
        std::ofstream out(report_path, std::ios::binary);
        out << report;
        if (!out) {
            log << "error: cannot write report to " << report_path << '\n';
            return kExitConfig;
        }
    }
    return all_mandatory_passed(results) ? kExitOk : kExitVerifyFailed;
}

}  // namespace qcorr::app
