#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qptf/closedform.hpp"
#include "qptf/signal.hpp"
#include "qptf/tfd.hpp"

namespace qptf {

// Parameter estimates recovered from a fitted ridge line. The frequency
// offset is only recoverable from time-outer maps; lag-outer maps carry it
// in a pure phase and leave nu0_hat empty.
struct LfmEstimate {
    std::optional<double> nu0_hat;
    double xi0_hat = 0.0;
};

struct RidgeCluster {
    LineModel line;
    std::size_t n_points = 0;
    double rmse = 0.0;
};

struct DetectionReport {
    TFKind kind = TFKind::WD;
    std::optional<ParamSet> params;
    LineModel line;
    std::optional<double> nu0_hat;
    std::optional<double> xi0_hat;
    double peak_ratio = 0.0;
    std::size_t n_ridges = 0;
    double fit_rmse = 0.0;
    bool detected = false;
};

struct SweepRow {
    double snr_db = 0.0;
    std::uint64_t seed = 0;
    DetectionReport report;
};

// Per-row argmax of |value|, gated by threshold_frac times the global
// maximum. Returns (outer value, frequency) pairs; an all-zero map yields an
// empty list.
std::vector<std::pair<double, double>> extract_ridge(const TFMap& map,
                                                     double threshold_frac);

// Least-squares line through (x, nu) points; returns the model and the rmse
// of its residuals. Requires at least two points with distinct x.
std::pair<LineModel, double> fit_line(
    const std::vector<std::pair<double, double>>& points);

// Greedy assignment of ridge points to lines: a point joins the existing
// cluster whose prediction at its abscissa is nearest, if within join_tol;
// otherwise it seeds a new cluster. Clusters come back sorted by population.
std::vector<RidgeCluster> cluster_ridges(
    const std::vector<std::pair<double, double>>& points, double join_tol);

// Inverts the ridge-line equations of the parameterized maps. Only the
// time-frequency and lag-frequency line regimes with a = c are supported;
// a != c raises regime_error, other map kinds are rejected.
LfmEstimate estimate_lfm_params(const LineModel& line, const ParamSet& params,
                                TFKind kind);

// Ridge pipeline on an already computed map; run_detection is this plus the
// map computation. Lets stored CSV maps be re-analyzed byte-identically.
DetectionReport detect_from_map(const TFMap& map, double threshold_frac);

DetectionReport run_detection(const Signal& f,
                              const std::optional<ParamSet>& params, TFKind kind,
                              double threshold_frac);

std::vector<SweepRow> snr_sweep(const Signal& f_clean,
                                const std::optional<ParamSet>& params,
                                const std::vector<TFKind>& kinds,
                                const std::vector<double>& snrs_db,
                                const std::vector<std::uint64_t>& seeds);

} // namespace qptf
