#include "qcorr/app/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <limits>
#include <mutex>
#include <ostream>
#include <thread>

#include "qcorr/channel.hpp"
#include "qcorr/teleport.hpp"

namespace qcorr::app {

void parallel_for(std::size_t n, int workers, const std::function<void(std::size_t)>& fn) {
    std::size_t threads = workers > 0 ? static_cast<std::size_t>(workers)
                                      : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min(threads, n);
    if (threads <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (std::size_t w = 0; w < threads; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < n; i = next++) {
                    try {
                        fn(i);
                    } catch (...) {
                        std::lock_guard lock(failure_mutex);
                        if (!failure) failure = std::current_exception();
                    }
                }
            });
        }
    }
    if (failure) std::rethrow_exception(failure);
}

SweepRow compute_row(const RunConfig& config, double t) {
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    const BathParams& p = config.bath;
    const ChannelVariant v = config.resolved_variant();
    const bool want_discord = config.outputs.contains(Output::Discord);
    const bool want_fidelity = config.outputs.contains(Output::Fidelity);

    SweepRow row;
    row.t = t;
    try {
        row.decoherence = evaluate_decoherence(p, config.quadrature, t);
        const ChannelState channel = channel_state(p, v, row.decoherence);
        row.kappa_eff = channel.kappa_eff;
        row.correlations = correlation_point(p, v, row.decoherence, channel, want_discord);

        if (config.placement == NoisePlacement::InputQubitDecoheres) {
            row.fav_closed = fav_closed(config.placement, p, row.decoherence);
            row.fav_oracle =
                want_fidelity ? input_dephasing_oracle(p, row.decoherence, config.sphere_order).value : nan;
        } else {
            row.fav_closed = v.kind == ChannelKind::Correlated ? fav_closed(config.placement, p, row.decoherence)
                                                               : fav_from_coherence(channel.kappa_eff);
            row.fav_oracle = want_fidelity ? average_fidelity_oracle(channel, config.sphere_order).value : nan;
        }
    } catch (const std::exception& e) {
        row.failed = true;
        row.error = e.what();
    }
    return row;
}

std::vector<SweepRow> run_sweep(const RunConfig& config) {
    config.validate();
    const auto times = config.grid.points();
    std::vector<SweepRow> rows(times.size());
    parallel_for(times.size(), config.workers, [&](std::size_t i) { rows[i] = compute_row(config, times[i]); });
    return rows;
}

std::string format_number(double v) {
    if (std::isnan(v)) return {};
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string format_csv(const RunConfig& config, const std::vector<SweepRow>& rows) {
    const bool dec = config.outputs.contains(Output::DecoherenceFunctions);
    const bool neg = config.outputs.contains(Output::Negativity);
    const bool dis = config.outputs.contains(Output::Discord);
    const bool fid = config.outputs.contains(Output::Fidelity);

    std::string out = kSweepHeader;
    out += '\n';
    for (const auto& r : rows) {
        std::vector<std::string> cells(12);
        cells[0] = format_number(r.t);
        if (!r.failed) {
            if (dec) {
                cells[1] = format_number(r.decoherence.gamma_s);
                cells[2] = format_number(r.decoherence.zeta);
                cells[3] = format_number(r.decoherence.gamma_ic);
                cells[4] = format_number(r.kappa_eff.real());
                cells[5] = format_number(r.kappa_eff.imag());
            }
            if (neg) {
                cells[6] = format_number(r.correlations.negativity_scaled);
                cells[7] = format_number(r.correlations.negativity_ppt);
            }
            if (dis) {
                cells[8] = format_number(r.correlations.discord_closed);
                cells[9] = format_number(r.correlations.discord_oracle);
            }
            if (fid) {
                cells[10] = format_number(r.fav_closed);
                cells[11] = format_number(r.fav_oracle);
            }
        }
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out += ',';
            out += cells[i];
        }
        out += '\n';
    }
    return out;
}

int cmd_sweep(const RunConfig& config, std::ostream& log) {
    const auto rows = run_sweep(config);
    const std::string csv = format_csv(config, rows);
    std::ofstream out(config.output_path, std::ios::binary | std::ios::trunc);
    if (!out) {
        log << "error: cannot write '" << config.output_path << "'\n";
        return kExitConfig;
    }
    out << csv;
    out.close();
    if (!out) {
        log << "error: write to '" << config.output_path << "' failed\n";
        return kExitConfig;
    }
    int failures = 0;
    for (const auto& r : rows) {
        if (!r.failed) continue;
        ++failures;
        log << "row t=" << format_number(r.t) << " failed: " << r.error << '\n';
    }
    log << "wrote " << rows.size() << " rows to " << config.output_path << '\n';
    return failures ? kExitNonConvergence : kExitOk;
}

}  // namespace qcorr::app
