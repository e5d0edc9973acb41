#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "qcorr/app/config.hpp"
#include "qcorr/bath.hpp"
#include "qcorr/correlations.hpp"

namespace qcorr::app {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNonConvergence = 3;

// Fixed CSV column order of a sweep.
inline constexpr const char* kSweepHeader =
    "t,gamma_s,zeta,gamma_ic,kappa_re,kappa_im,negativity_paper,negativity_ppt,"
    "discord_closed,discord_oracle,fav_closed,fav_oracle";

struct SweepRow {
    double t = 0.0;
    DecoherenceState decoherence;
    std::complex<double> kappa_eff{1.0, 0.0};
    CorrelationPoint correlations;
    double fav_closed = 0.0;
    double fav_oracle = 0.0;
    bool failed = false;
    std::string error;
};

// Runs fn(i) for i in [0, n) on `workers` threads (0 = all cores).
void parallel_for(std::size_t n, int workers, const std::function<void(std::size_t)>& fn);

SweepRow compute_row(const RunConfig& config, double t);
std::vector<SweepRow> run_sweep(const RunConfig& config);

// %.12g rendering; NaN renders as an empty field.
std::string format_number(double v);
std::string format_csv(const RunConfig& config, const std::vector<SweepRow>& rows);

// Computes the sweep and writes config.output_path. Returns an exit code.
int cmd_sweep(const RunConfig& config, std::ostream& log);

}  // namespace qcorr::app
