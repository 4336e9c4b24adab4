#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qptf/closedform.hpp"
#include "qptf/detect.hpp"
#include "qptf/signal.hpp"
#include "qptf/tfd.hpp"
#include "support/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <vector>

using qptf::cd;
using qptf::DetectionReport;
using qptf::LFMComponent;
using qptf::LineModel;
using qptf::ParamSet;
using qptf::Signal;
using qptf::TFKind;
using qptf::TFMap;

namespace {

const ParamSet kLine(0.0, -1.0, 0.0, 2.0, 2.0); // impulse regime, A = C
const LFMComponent kChirp{cd{1.0, 0.0}, 0.1, 0.2};

Signal chirp_signal(std::size_t n = 1024, double h = 10.0) {
    return qptf::make_lfm(kChirp, h, n);
}

double freq_bin(const TFMap& map) { return map.freq_axis[1] - map.freq_axis[0]; }

} // namespace

TEST_CASE("extract_ridge walks the impulse line of a clean chirp") {
    const TFMap map = qptf::compute_tfd(TFKind::AQWD, kLine, chirp_signal());
    const double dnu = freq_bin(map);

    const auto points = qptf::extract_ridge(map, 0.5);
    CHECK(points.size() > 100);
    for (const auto& [t, nu] : points)
        CHECK(std::abs(nu - (0.4 * t + 2.1)) <= dnu + 1e-12);

    // a gate just below the global maximum keeps only the strongest rows
    const auto peak_only = qptf::extract_ridge(map, 0.999999);
    CHECK(peak_only.size() >= 1);
    CHECK(peak_only.size() <= 3);
}

TEST_CASE("extract_ridge edge contracts") {
    Signal zero;
    zero.t0 = -1.0;
    zero.dt = 2.0 / 31.0;
    zero.samples.assign(32, cd{});
    const TFMap zmap = qptf::compute_tfd(TFKind::AQWD, kLine, zero);
    CHECK(qptf::extract_ridge(zmap, 0.5).empty());

    CHECK_THROWS_AS(qptf::extract_ridge(zmap, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(qptf::extract_ridge(zmap, 1.5), std::invalid_argument);

    TFMap empty;
    CHECK_THROWS_AS(qptf::extract_ridge(empty, 0.5), std::invalid_argument);
}

TEST_CASE("fit_line recovers exact and noisy lines") {
    std::vector<std::pair<double, double>> pts;
    for (int i = 0; i < 10; ++i) {
        const double x = static_cast<double>(i);
        pts.emplace_back(x, 0.4 * x + 2.1);
    }
    auto [line, rmse] = qptf::fit_line(pts);
    CHECK(line.slope == doctest::Approx(0.4).epsilon(1e-12));
    CHECK(line.intercept == doctest::Approx(2.1).epsilon(1e-12));
    CHECK(rmse == doctest::Approx(0.0).epsilon(1e-12));

    auto [two, rmse2] = qptf::fit_line({{0.0, 1.0}, {2.0, 5.0}});
    CHECK(two.slope == doctest::Approx(2.0));
    CHECK(two.intercept == doctest::Approx(1.0));
    CHECK(rmse2 == doctest::Approx(0.0));

    CHECK_THROWS_AS(qptf::fit_line({{0.0, 1.0}}), std::invalid_argument);
    CHECK_THROWS_AS(qptf::fit_line({{1.0, 0.0}, {1.0, 2.0}, {1.0, 4.0}}),
                    std::invalid_argument);

    qptf::testing::Rng rng(99);
    std::vector<std::pair<double, double>> jittered;
    for (int i = 0; i <= 100; ++i) {
        const double x = 0.1 * static_cast<double>(i);
        jittered.emplace_back(x, 2.0 - 0.3 * x + rng.uniform(-0.01, 0.01));
    }
    auto [jline, jrmse] = qptf::fit_line(jittered);
    CHECK(std::abs(jline.slope + 0.3) < 0.01);
    CHECK(std::abs(jline.intercept - 2.0) < 0.01);
    CHECK(jrmse < 0.01);
}

TEST_CASE("cluster_ridges separates interleaved lines") {
    // The greedy pass chains a line only while consecutive same-line points
    // move in frequency by at most join_tol (a fresh cluster predicts a
    // constant), and lines must stay separated by more than join_tol over the
    // sampled range; 0.5-wide x steps with slopes 0.4 and -0.2 honor both.
    std::vector<std::pair<double, double>> pts;
    for (int i = 0; i <= 20; ++i) {
        const double x = 0.5 * static_cast<double>(i);
        pts.emplace_back(x, 0.4 * x + 2.0);
        pts.emplace_back(x, 0.4 * x - 1.0);
        pts.emplace_back(x, -0.2 * x - 4.0);
    }
    const auto clusters = qptf::cluster_ridges(pts, 0.3);
    REQUIRE(clusters.size() == 3);
    for (const auto& rc : clusters) {
        CHECK(rc.n_points == 21);
        CHECK(rc.rmse < 1e-9);
    }
    // sorted by population; slopes recover the three generators
    std::vector<double> slopes;
    for (const auto& rc : clusters) slopes.push_back(rc.line.slope);
    std::sort(slopes.begin(), slopes.end());
    CHECK(slopes[0] == doctest::Approx(-0.2).epsilon(1e-9));
    CHECK(slopes[1] == doctest::Approx(0.4).epsilon(1e-9));
    CHECK(slopes[2] == doctest::Approx(0.4).epsilon(1e-9));

    CHECK_THROWS_AS(qptf::cluster_ridges(pts, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(qptf::cluster_ridges(pts, -1.0), std::invalid_argument);
}

TEST_CASE("estimate_lfm_params inverts the published line equations") {
    const LineModel line{0.4, 2.1};

    const qptf::LfmEstimate west = qptf::estimate_lfm_params(line, kLine, TFKind::AQWD);
    CHECK(west.xi0_hat == doctest::Approx(0.2).epsilon(1e-12));
    REQUIRE(west.nu0_hat.has_value());
    CHECK(*west.nu0_hat == doctest::Approx(0.1).epsilon(1e-12));

    const qptf::LfmEstimate aest = qptf::estimate_lfm_params(line, kLine, TFKind::AQAF);
    CHECK(aest.xi0_hat == doctest::Approx(0.2).epsilon(1e-12));
    CHECK_FALSE(aest.nu0_hat.has_value());

    // round trip through the forward ridge prediction
    const LFMComponent comp{cd{1.0, 0.0}, 0.37, -0.42};
    const ParamSet p(0.6, 1.7, 0.6, 0.2, -0.9);
    const LineModel fwd = qptf::predicted_ridge(TFKind::AQWD, p, comp);
    const qptf::LfmEstimate back = qptf::estimate_lfm_params(fwd, p, TFKind::AQWD);
    CHECK(back.xi0_hat == doctest::Approx(comp.xi0).epsilon(1e-12));
    CHECK(*back.nu0_hat == doctest::Approx(comp.nu0).epsilon(1e-12));

    CHECK_THROWS_AS(
        qptf::estimate_lfm_params(line, ParamSet(1.0, -1.0, 0.0, 0.0, 0.0), TFKind::AQWD),
        qptf::regime_error);
    CHECK_THROWS_AS(qptf::estimate_lfm_params(line, kLine, TFKind::WD),
                    std::invalid_argument);
}

TEST_CASE("run_detection on a clean chirp recovers the component") {
    const Signal f = chirp_signal();

    const DetectionReport wrep = qptf::run_detection(f, kLine, TFKind::AQWD, 0.5);
    CHECK(wrep.detected);
    CHECK(wrep.kind == TFKind::AQWD);
    CHECK(std::abs(wrep.line.slope - 0.4) < 0.01);
    CHECK(std::abs(wrep.line.intercept - 2.1) < 0.05);
    REQUIRE(wrep.xi0_hat.has_value());
    REQUIRE(wrep.nu0_hat.has_value());
    CHECK(std::abs(*wrep.xi0_hat - 0.2) < 0.01);
    CHECK(std::abs(*wrep.nu0_hat - 0.1) < 0.05);
    CHECK(wrep.n_ridges == 1);
    CHECK(wrep.peak_ratio > 50.0);

    const TFMap wmap = qptf::compute_tfd(TFKind::AQWD, kLine, f);
    CHECK(wrep.fit_rmse <= freq_bin(wmap));

    // the lag-outer map estimates the rate but not the offset
    const DetectionReport arep = qptf::run_detection(f, kLine, TFKind::AQAF, 0.5);
    CHECK(arep.detected);
    CHECK(std::abs(arep.line.slope - 0.4) < 0.01);
    CHECK(std::abs(arep.line.intercept) < 0.05);
    REQUIRE(arep.xi0_hat.has_value());
    CHECK(std::abs(*arep.xi0_hat - 0.2) < 0.01);
    CHECK_FALSE(arep.nu0_hat.has_value());

    // classical kinds run in the same sweep by ignoring the tuple
    const DetectionReport crep = qptf::run_detection(f, kLine, TFKind::WD, 0.5);
    CHECK(crep.detected);
    CHECK_FALSE(crep.params.has_value());
    REQUIRE(crep.xi0_hat.has_value());
    CHECK(std::abs(*crep.xi0_hat - 0.2) < 0.01);
    CHECK(std::abs(*crep.nu0_hat - 0.1) < 0.05);
}

TEST_CASE("a zero signal yields a failure report, not an exception") {
    Signal zero;
    zero.t0 = -10.0;
    zero.dt = 20.0 / 255.0;
    zero.samples.assign(256, cd{});
    const DetectionReport rep = qptf::run_detection(zero, kLine, TFKind::AQWD, 0.5);
    CHECK_FALSE(rep.detected);
    CHECK(rep.n_ridges == 0);
}

TEST_CASE("matched tuple concentrates the ridge more than a smeared one") {
    const Signal f = chirp_signal();
    const DetectionReport matched = qptf::run_detection(f, kLine, TFKind::AQWD, 0.5);
    const DetectionReport smeared = qptf::run_detection(
        f, ParamSet(1.0, -1.0, 0.0, 2.0, 2.0), TFKind::AQWD, 0.5);
    CHECK(matched.peak_ratio > smeared.peak_ratio);
    CHECK_FALSE(smeared.xi0_hat.has_value()); // no line regime when A != C
}

TEST_CASE("detection survives 10 dB noise") {
    const Signal noisy = qptf::add_awgn(chirp_signal(), 10.0, 4);
    const DetectionReport rep = qptf::run_detection(noisy, kLine, TFKind::AQWD, 0.5);
    REQUIRE(rep.detected);
    CHECK(std::abs(*rep.xi0_hat - 0.2) < 0.01);
    CHECK(std::abs(*rep.nu0_hat - 0.1) < 0.05);
}

TEST_CASE("snr_sweep enumerates, shares noise, and stays deterministic") {
    const Signal f = chirp_signal(256);
    const std::vector<TFKind> kinds{TFKind::AQWD, TFKind::AQAF};
    const std::vector<double> snrs{std::numeric_limits<double>::infinity(), 10.0};
    const std::vector<std::uint64_t> seeds{1, 2, 3};

    const auto rows = qptf::snr_sweep(f, kLine, kinds, snrs, seeds);
    REQUIRE(rows.size() == kinds.size() * snrs.size() * seeds.size());

    // the no-noise rows replay run_detection exactly
    const DetectionReport direct = qptf::run_detection(f, kLine, TFKind::AQWD, 0.5);
    const auto& first = rows.front();
    CHECK(std::isinf(first.snr_db));
    CHECK(first.report.kind == TFKind::AQWD);
    CHECK(first.report.line.slope == direct.line.slope);
    CHECK(first.report.line.intercept == direct.line.intercept);
    CHECK(first.report.peak_ratio == direct.peak_ratio);

    const auto rows2 = qptf::snr_sweep(f, kLine, kinds, snrs, seeds);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].report.line.slope == rows2[i].report.line.slope);
        CHECK(rows[i].report.line.intercept == rows2[i].report.line.intercept);
        CHECK(rows[i].report.detected == rows2[i].report.detected);
    }

    CHECK_THROWS_AS(qptf::snr_sweep(f, kLine, {}, snrs, seeds), std::invalid_argument);
    CHECK_THROWS_AS(qptf::snr_sweep(f, kLine, kinds, {}, seeds), std::invalid_argument);
    CHECK_THROWS_AS(qptf::snr_sweep(f, kLine, kinds, snrs, {}), std::invalid_argument);
}

TEST_CASE("two equal-rate components resolve into parallel ridge clusters") {
    // wide support makes the 0.2 rad/s offset span several frequency bins
    const Signal u = qptf::make_multicomponent(
        {LFMComponent{cd{1.0, 0.0}, 0.1, 0.2}, LFMComponent{cd{1.0, 0.0}, 0.3, 0.2}},
        60.0, 4096);
    const TFMap map = qptf::compute_tfd(TFKind::AQWD, kLine, u);
    const double dnu = freq_bin(map);

    const auto points = qptf::extract_ridge(map, 0.3);
    const auto clusters = qptf::cluster_ridges(points, 3.0 * dnu);

    std::vector<const qptf::RidgeCluster*> solid;
    for (const auto& rc : clusters)
        if (rc.n_points >= 3) solid.push_back(&rc);
    REQUIRE(solid.size() >= 2);

    bool found_pair = false;
    for (std::size_t i = 0; i < solid.size() && !found_pair; ++i)
        for (std::size_t j = i + 1; j < solid.size() && !found_pair; ++j) {
            const double gap =
                std::abs(solid[i]->line.intercept - solid[j]->line.intercept);
            found_pair = std::abs(gap - 0.2) <= 2.0 * dnu;
        }
    CHECK(found_pair);
}
