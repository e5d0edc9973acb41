#include <gtest/gtest.h>

#include <atomic>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "oracles/refined_quadrature.hpp"
#include "qcorr/app/sweep.hpp"

namespace qcorr::app {
namespace {

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream ls(line);
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (!line.empty() && line.back() == ',') cells.emplace_back();
        rows.push_back(std::move(cells));
    }
    return rows;
}

RunConfig small_config(int n, double t_max) {
    RunConfig c;
    c.grid = TimeGrid{0.0, t_max, n};
    return c;
}

TEST(FormatNumber, TwelveSignificantDigitsAndEmptyNaN) {
    EXPECT_EQ(format_number(1.0), "1");
    EXPECT_EQ(format_number(2.0 / 3.0), "0.666666666667");
    EXPECT_EQ(format_number(1.5e-20), "1.5e-20");
    EXPECT_EQ(format_number(std::nan("")), "");
}

TEST(Sweep, UncoupledBathKeepsEverythingAtOne) {
    RunConfig c = small_config(2, 10.0);
    c.bath.coupling_A = 0.0;
    const auto rows = parse_csv(format_csv(c, run_sweep(c)));
    ASSERT_EQ(rows.size(), 3u);
    EXPECT_EQ(rows[0].size(), 12u);
    for (int i = 1; i <= 2; ++i) {
        const auto& r = rows[static_cast<std::size_t>(i)];
        ASSERT_EQ(r.size(), 12u);
        EXPECT_EQ(r[4], "1");   // kappa_re
        EXPECT_EQ(r[5], "0");   // kappa_im
        EXPECT_EQ(r[6], "1");   // negativity_paper
        EXPECT_EQ(r[8], "1");   // discord_closed
        EXPECT_EQ(r[10], "1");  // fav_closed
        EXPECT_NEAR(std::stod(r[11]), 1.0, 1e-12);
    }
}

TEST(Sweep, FirstRowIsTheInitialState) {
    for (double beta : {0.05, 1.0, 10.0}) {
        RunConfig c = small_config(3, 5.0);
        c.bath.beta = beta;
        const auto rows = parse_csv(format_csv(c, run_sweep(c)));
        EXPECT_EQ(rows[1][0], "0");
        EXPECT_EQ(rows[1][1], "0");
        EXPECT_EQ(rows[1][10], "1");
    }
}

TEST(Sweep, HeaderAndColumnSelection) {
    RunConfig c = small_config(2, 1.0);
    c.outputs = {Output::Fidelity};
    const std::string csv = format_csv(c, run_sweep(c));
    const auto rows = parse_csv(csv);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), kSweepHeader);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        ASSERT_EQ(rows[i].size(), 12u);
        for (std::size_t col = 1; col <= 9; ++col) EXPECT_TRUE(rows[i][col].empty()) << col;
        EXPECT_FALSE(rows[i][10].empty());
        EXPECT_FALSE(rows[i][11].empty());
    }
    EXPECT_EQ(csv.find('\r'), std::string::npos);
}

TEST(Sweep, FailedRowsKeepTimeOnly) {
    RunConfig c = small_config(2, 1.0);
    SweepRow bad;
    bad.t = 0.5;
    bad.failed = true;
    bad.error = "did not converge";
    const auto rows = parse_csv(format_csv(c, {bad}));
    ASSERT_EQ(rows.size(), 2u);
    EXPECT_EQ(rows[1][0], "0.5");
    for (std::size_t col = 1; col < 12; ++col) EXPECT_TRUE(rows[1][col].empty());
}

// Refined-grid regeneration of a beta = 1, s = 1, A = 1 sweep.
TEST(Sweep, MatchesRefinedGridRegeneration) {
    RunConfig c = small_config(11, 100.0);
    const auto rows = parse_csv(format_csv(c, run_sweep(c)));
    const oracle::RefBath b{1.0L, 1.0L, 1.0L};
    const double th = std::tanh(1.0);
    ASSERT_EQ(rows.size(), 12u);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const double t = std::stod(rows[i][0]);
        const double g = oracle::ref_gamma_s(b, t);
        const double z = oracle::ref_zeta(b, t);
        const double c2 = std::cos(2 * z), s2 = std::sin(2 * z);
        const double bracket2 = c2 * c2 + s2 * s2 * th * th;
        const double k_abs = std::sqrt(bracket2) * std::exp(-g);
        const double p = 0.5 * (1 + k_abs), q = 0.5 * (1 - k_abs);
        double discord = 1.0 + p * std::log2(p);
        if (q > 0) discord += q * std::log2(q);
        const double fav = 2.0 / 3.0 + c2 * std::exp(-g) / 3.0;
        const double expected[12] = {t,
                                     g,
                                     z,
                                     -0.5 * std::log(bracket2),
                                     c2 * std::exp(-g),
                                     -th * s2 * std::exp(-g),
                                     k_abs,
                                     0.5 * k_abs,
                                     discord,
                                     discord,
                                     fav,
                                     fav};
        for (std::size_t col = 0; col < 12; ++col) {
            EXPECT_NEAR(std::stod(rows[i][col]), expected[col], 1e-9) << "t=" << t << " column " << col;
        }
    }
}

TEST(Sweep, DeterministicAcrossWorkerCounts) {
    RunConfig c = small_config(9, 40.0);
    c.workers = 1;
    const std::string one = format_csv(c, run_sweep(c));
    c.workers = 4;
    EXPECT_EQ(format_csv(c, run_sweep(c)), one);
    EXPECT_EQ(format_csv(c, run_sweep(c)), one);
}

TEST(CmdSweep, WritesFileAndReportsIoErrors) {
    const auto path = std::filesystem::temp_directory_path() / "qcorr_sweep_test.csv";
    RunConfig c = small_config(3, 2.0);
    c.output_path = path.string();
    std::ostringstream log;
    EXPECT_EQ(cmd_sweep(c, log), kExitOk);
    std::ifstream in(path);
    std::string header;
    std::getline(in, header);
    EXPECT_EQ(header, kSweepHeader);
    std::filesystem::remove(path);

    c.output_path = "/nonexistent-dir/x.csv";
    EXPECT_EQ(cmd_sweep(c, log), kExitConfig);
}

TEST(ParallelFor, VisitsEveryIndexOnceAndPropagatesErrors) {
    std::vector<std::atomic<int>> hits(100);
    parallel_for(hits.size(), 3, [&](std::size_t i) { hits[i]++; });
    for (const auto& h : hits) EXPECT_EQ(h.load(), 1);
    EXPECT_THROW(parallel_for(10, 2,
                              [](std::size_t i) {
                                  if (i == 7) throw std::runtime_error("boom");
                              }),
                 std::runtime_error);
}

}  // namespace
}  // namespace qcorr::app
