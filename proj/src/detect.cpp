#include "qptf/detect.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qptf {

namespace {

constexpr double kSweepThreshold = 0.5;

// Ridge-line inversion for every map kind. The parameterized time-outer and
// lag-outer maps use the published line equations; the plain and
// kernel-weighted maps use the classical instantaneous-frequency lines.
LfmEstimate invert_line(TFKind kind, const std::optional<ParamSet>& params,
                        const LineModel& line) {
    switch (kind) {
    case TFKind::WD:
        return {line.intercept, 0.5 * line.slope};
    case TFKind::AF:
        return {std::nullopt, 0.5 * line.slope};
    case TFKind::QWD: {
        const ParamSet& p = *params;
        return {-p.b * line.intercept - p.d, -0.5 * p.b * line.slope};
    }
    case TFKind::QAF: {
        const ParamSet& p = *params;
        return {std::nullopt, -0.5 * p.b * line.slope};
    }
    case TFKind::AQWD:
    case TFKind::AQAF:
        return estimate_lfm_params(line, *params, kind);
    }
    throw std::invalid_argument("unknown map kind");
}

struct ClusterBuild {
    std::vector<std::pair<double, double>> pts;
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;

    void add(double x, double y) {
        pts.emplace_back(x, y);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    double predict(double x) const {
        const double n = static_cast<double>(pts.size());
        const double det = n * sxx - sx * sx;
        if (pts.size() < 2 || std::abs(det) < 1e-12 * std::max(1.0, n * sxx))
            return sy / n;
        const double slope = (n * sxy - sx * sy) / det;
        return slope * x + (sy - slope * sx) / n;
    }
};

double median_of(std::vector<double>& v) {
    const std::size_t h = v.size() / 2;
    std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(h), v.end());
    double m = v[h];
    if (v.size() % 2 == 0) {
        std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(h) - 1,
                         v.begin() + static_cast<std::ptrdiff_t>(h));
        m = 0.5 * (m + v[h - 1]);
    }
    return m;
}

} // namespace

std::vector<std::pair<double, double>> extract_ridge(const TFMap& map,
                                                     double threshold_frac) {
    if (map.rows() == 0 || map.cols() == 0)
        throw std::invalid_argument("cannot extract a ridge from an empty map");
    if (!std::isfinite(threshold_frac) || threshold_frac <= 0.0 ||
        threshold_frac > 1.0)
        throw std::invalid_argument("threshold_frac must lie in (0, 1]");

    double global_max = 0.0;
    for (const cd& v : map.values)
        global_max = std::max(global_max, std::abs(v));

    std::vector<std::pair<double, double>> points;
    if (global_max == 0.0)
        return points;

    const double gate = threshold_frac * global_max;
    for (std::size_t r = 0; r < map.rows(); ++r) {
        double best = -1.0;
        std::size_t best_c = 0;
        for (std::size_t c = 0; c < map.cols(); ++c) {
            const double mag = std::abs(map.at(r, c));
            if (mag > best) {
                best = mag;
                best_c = c;
            }
        }
        if (best >= gate)
            points.emplace_back(map.outer_axis[r], map.freq_axis[best_c]);
    }
    return points;
}

std::pair<LineModel, double> fit_line(
    const std::vector<std::pair<double, double>>& points) {
    if (points.size() < 2)
        throw std::invalid_argument("line fit needs at least two points");

    const double n = static_cast<double>(points.size());
    double mx = 0.0, my = 0.0;
    for (const auto& [x, y] : points) {
        mx += x;
        my += y;
    }
    mx /= n;
    my /= n;

    double sxx = 0.0, sxy = 0.0;
    for (const auto& [x, y] : points) {
        sxx += (x - mx) * (x - mx);
        sxy += (x - mx) * (y - my);
    }
    if (sxx <= 0.0)
        throw std::invalid_argument("line fit needs distinct abscissae");

    LineModel line;
    line.slope = sxy / sxx;
    line.intercept = my - line.slope * mx;

    double ss = 0.0;
    for (const auto& [x, y] : points) {
        const double r = y - (line.slope * x + line.intercept);
        ss += r * r;
    }
    return {line, std::sqrt(ss / n)};
}

std::vector<RidgeCluster> cluster_ridges(
    const std::vector<std::pair<double, double>>& points, double join_tol) {
    if (!std::isfinite(join_tol) || join_tol <= 0.0)
        throw std::invalid_argument("join tolerance must be positive");

    std::vector<ClusterBuild> builds;
    for (const auto& [x, y] : points) {
        ClusterBuild* best = nullptr;
        double best_dist = join_tol;
        for (ClusterBuild& cb : builds) {
            const double d = std::abs(y - cb.predict(x));
            if (d <= best_dist) {
                best_dist = d;
                best = &cb;
            }
        }
        if (best)
            best->add(x, y);
        else {
            builds.emplace_back();
            builds.back().add(x, y);
        }
    }

    std::vector<RidgeCluster> out;
    out.reserve(builds.size());
    for (const ClusterBuild& cb : builds) {
        RidgeCluster rc;
        rc.n_points = cb.pts.size();
        bool distinct_x = false;
        for (std::size_t i = 1; i < cb.pts.size(); ++i)
            distinct_x = distinct_x || cb.pts[i].first != cb.pts[0].first;
        if (cb.pts.size() >= 2 && distinct_x) {
            auto [line, rmse] = fit_line(cb.pts);
            rc.line = line;
            rc.rmse = rmse;
        } else {
            rc.line.slope = 0.0;
            rc.line.intercept = cb.sy / static_cast<double>(cb.pts.size());
            rc.rmse = 0.0;
        }
        out.push_back(rc);
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const RidgeCluster& a, const RidgeCluster& b) {
                         return a.n_points > b.n_points;
                     });
    return out;
}

LfmEstimate estimate_lfm_params(const LineModel& line, const ParamSet& params,
                                TFKind kind) {
    if (kind != TFKind::AQWD && kind != TFKind::AQAF)
        throw std::invalid_argument(
            "line inversion is defined for the aqwd and aqaf maps");
    if (params.a != params.c)
        throw regime_error("ridge-line inversion requires a = c");

    LfmEstimate est;
    est.xi0_hat = -0.5 * params.b * line.slope - params.a;
    if (kind == TFKind::AQWD)
        est.nu0_hat = -params.b * line.intercept - 0.5 * (params.d + params.e);
    return est;
}

DetectionReport detect_from_map(const TFMap& map, double threshold_frac) {
    DetectionReport rep;
    rep.kind = map.kind;
    rep.params = map.params;

    const auto points = extract_ridge(map, threshold_frac);
    if (points.size() < 2)
        return rep; // nothing to fit: detection failure, not an error

    auto [line, rmse] = fit_line(points);
    rep.line = line;
    rep.fit_rmse = rmse;
    rep.detected = true;

    const double dnu = map.freq_axis[1] - map.freq_axis[0];
    const auto clusters = cluster_ridges(points, 3.0 * dnu);
    for (const RidgeCluster& rc : clusters)
        if (rc.n_points >= 3)
            ++rep.n_ridges;

    try {
        const LfmEstimate est = invert_line(map.kind, map.params, line);
        rep.nu0_hat = est.nu0_hat;
        rep.xi0_hat = est.xi0_hat;
    } catch (const regime_error&) {
        // No line regime for this parameter set; magnitudes below still tell
        // the concentration story.
    }

    double global_max = 0.0;
    std::vector<double> off_ridge;
    off_ridge.reserve(map.values.size());
    for (std::size_t r = 0; r < map.rows(); ++r) {
        const double predicted =
            line.slope * map.outer_axis[r] + line.intercept;
        for (std::size_t c = 0; c < map.cols(); ++c) {
            const double mag = std::abs(map.at(r, c));
            global_max = std::max(global_max, mag);
            if (std::abs(map.freq_axis[c] - predicted) > 3.0 * dnu)
                off_ridge.push_back(mag);
        }
    }
    if (!off_ridge.empty()) {
        const double med = median_of(off_ridge);
        rep.peak_ratio = global_max / std::max(med, 1e-300);
    }
    return rep;
}

DetectionReport run_detection(const Signal& f,
                              const std::optional<ParamSet>& params, TFKind kind,
                              double threshold_frac) {
    // A tuple supplied alongside an unparameterized kind is simply unused, so
    // one sweep can compare wd/af against the parameterized maps.
    const std::optional<ParamSet> used =
        kind_requires_params(kind) ? params : std::nullopt;
    return detect_from_map(compute_tfd(kind, used, f), threshold_frac);
}

std::vector<SweepRow> snr_sweep(const Signal& f_clean,
                                const std::optional<ParamSet>& params,
                                const std::vector<TFKind>& kinds,
                                const std::vector<double>& snrs_db,
                                const std::vector<std::uint64_t>& seeds) {
    if (kinds.empty() || snrs_db.empty() || seeds.empty())
        throw std::invalid_argument("sweep needs nonempty kind, snr, and seed lists");

    std::vector<SweepRow> rows;
    rows.reserve(kinds.size() * snrs_db.size() * seeds.size());
    for (double snr : snrs_db) {
        for (std::uint64_t seed : seeds) {
            // One noise draw per (snr, seed) cell group, shared by every map
            // kind, so kinds are compared on the same noisy signal.
            const Signal noisy = add_awgn(f_clean, snr, seed);
            for (TFKind kind : kinds) {
                SweepRow row;
                row.snr_db = snr;
                row.seed = seed;
                try {
                    row.report = run_detection(noisy, params, kind, kSweepThreshold);
                } catch (const std::exception&) {
                    row.report.kind = kind;
                    row.report.params = params;
                    row.report.detected = false;
                }
                rows.push_back(std::move(row));
            }
        }
    }
    return rows;
}

} // namespace qptf
