#include "qptf/tfd.hpp"

#include "qptf/fft.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>

namespace qptf {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

struct EngineSpec {
    bool lag_rows;  // true: rows are time, inner sum over lag (WD family)
    double delta;   // inner-sum step weight: 2*dt (lag family) or dt
    double beff;    // |B| for parameterised kinds, 1 otherwise
    int sigma;      // DFT exponent sign
};

EngineSpec engine_spec(TFKind kind, const std::optional<ParamSet>& params, double dt) {
    EngineSpec s;
    s.lag_rows = (kind == TFKind::WD || kind == TFKind::QWD || kind == TFKind::AQWD);
    s.delta = s.lag_rows ? 2.0 * dt : dt;
    if (kind_requires_params(kind)) {
        s.beff = std::abs(params->b);
        s.sigma = params->b > 0.0 ? +1 : -1;
    } else {
        s.beff = 1.0;
        s.sigma = -1;
    }
    return s;
}

void validate_inputs(TFKind kind, const std::optional<ParamSet>& params, const Signal& f) {
    if (kind_requires_params(kind) && !params)
        throw std::invalid_argument("this distribution kind needs a parameter tuple");
    if (!kind_requires_params(kind) && params)
        throw std::invalid_argument("classical distributions take no parameter tuple");
    if (f.samples.size() < 8)
        throw std::invalid_argument("signal too short for a distribution (need N >= 8)");
}

// Per-column scale applied after the row DFT: quadrature weight plus the
// frequency-dependent outer factor of the defining equation.
std::vector<cd> column_factors(TFKind kind, const std::optional<ParamSet>& params,
                               const Signal& f, const std::vector<double>& freq,
                               double delta) {
    std::vector<cd> fac(freq.size());
    const double t0 = f.t0;
    for (std::size_t c = 0; c < freq.size(); ++c) {
        const double nu = freq[c];
        cd v{delta, 0.0};
        switch (kind) {
        case TFKind::WD:
            break;
        case TFKind::AF:
            v *= std::polar(1.0, -nu * t0);
            break;
        case TFKind::QWD:
        case TFKind::QAF: {
            const cd root = std::sqrt(cd{0.0, -params->b}) / std::sqrt(kTwoPi);
            v *= root * std::polar(1.0, params->c * nu * nu + params->e * nu);
            if (kind == TFKind::QAF)
                v *= std::polar(1.0, params->b * nu * t0);
            break;
        }
        case TFKind::AQWD:
        case TFKind::AQAF: {
            const double phi = (params->a - params->c) * nu * nu + (params->d - params->e) * nu;
            v *= std::abs(params->b) * std::polar(1.0, phi);
            if (kind == TFKind::AQAF)
                v *= std::polar(1.0, params->b * nu * t0);
            break;
        }
        }
        fac[c] = v;
    }
    return fac;
}

TFMap run_engine(TFKind kind, const std::optional<ParamSet>& params,
                 const Signal& f, const Signal& g, int threads) {
    validate_inputs(kind, params, f);
    if (g.samples.size() != f.samples.size() || g.t0 != f.t0 || g.dt != f.dt)
        throw grid_error("cross distribution requires identical sampling grids");

    const std::size_t N = f.samples.size();
    const std::size_t M = N;
    const std::ptrdiff_t kmin = -static_cast<std::ptrdiff_t>(M / 2);
    const EngineSpec spec = engine_spec(kind, params, f.dt);

    TFMap map;
    map.kind = kind;
    map.params = params;
    std::tie(map.outer_axis, map.freq_axis) = tf_axes(kind, params, f);
    map.src_n = N;
    map.src_dt = f.dt;
    map.values.assign(map.rows() * M, cd{0.0, 0.0});

    // Window-chirp slots of the bilinear product. The parameterised Wigner
    // kinds keep the raw product and fold their lag/time chirp into the
    // premultiplier below; the fully modulated kinds bake (C,E)/(A,D) in here.
    const bool modulated = (kind == TFKind::AQWD || kind == TFKind::AQAF);
    const Signal left = modulated ? chirp_modulate(f, params->c, params->e) : f;
    const Signal right = modulated ? chirp_modulate(g, params->a, params->d) : g;

    const std::vector<cd> colfac = column_factors(kind, params, f, map.freq_axis, spec.delta);
    const DftPlan plan(M, spec.sigma);

    const std::size_t n_rows = map.rows();

    auto run_rows = [&](std::size_t row_begin, std::size_t row_end) {
        std::vector<cd> x(M);
        for (std::size_t r = row_begin; r < row_end; ++r) {
            std::fill(x.begin(), x.end(), cd{0.0, 0.0});
            if (spec.lag_rows) {
                const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(r);
                const std::ptrdiff_t L =
                    std::min<std::ptrdiff_t>(n, static_cast<std::ptrdiff_t>(N) - 1 - n);
                for (std::ptrdiff_t m = -L; m <= L; ++m) {
                    cd v = left.samples[n + m] * std::conj(right.samples[n - m]);
                    if (kind == TFKind::QWD) {
                        const double lag = 2.0 * f.dt * static_cast<double>(m);
                        v *= std::polar(1.0, params->a * lag * lag + params->d * lag);
                    }
                    const std::size_t slot = static_cast<std::size_t>(
                        ((m % static_cast<std::ptrdiff_t>(M)) + static_cast<std::ptrdiff_t>(M)) %
                        static_cast<std::ptrdiff_t>(M));
                    x[slot] = v;
                }
            } else {
                const std::ptrdiff_t m =
                    kmin + static_cast<std::ptrdiff_t>(r); // lag rows start at kmin = -(N/2)
                const std::ptrdiff_t am = m < 0 ? -m : m;
                for (std::ptrdiff_t n = am; n < static_cast<std::ptrdiff_t>(N) - am; ++n) {
                    cd v = left.samples[n + m] * std::conj(right.samples[n - m]);
                    if (kind == TFKind::QAF) {
                        const double t = f.time_at(static_cast<std::size_t>(n));
                        v *= std::polar(1.0, params->a * t * t + params->d * t);
                    }
                    x[static_cast<std::size_t>(n)] = v;
                }
            }
            plan.transform(x);
            for (std::size_t c = 0; c < M; ++c) {
                const std::ptrdiff_t k = kmin + static_cast<std::ptrdiff_t>(c);
                const std::size_t j = static_cast<std::size_t>(
                    ((k % static_cast<std::ptrdiff_t>(M)) + static_cast<std::ptrdiff_t>(M)) %
                    static_cast<std::ptrdiff_t>(M));
                map.values[r * M + c] = x[j] * colfac[c];
            }
        }
    };

    int n_workers = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
    if (n_workers < 1)
        n_workers = 1;
    n_workers = std::min<int>(n_workers, static_cast<int>(n_rows));

    if (n_workers <= 1) {
        run_rows(0, n_rows);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(n_workers));
        for (int w = 0; w < n_workers; ++w) {
            const std::size_t lo = n_rows * static_cast<std::size_t>(w) /
                                   static_cast<std::size_t>(n_workers);
            const std::size_t hi = n_rows * static_cast<std::size_t>(w + 1) /
                                   static_cast<std::size_t>(n_workers);
            pool.emplace_back(run_rows, lo, hi);
        }
        for (auto& th : pool)
            th.join();
    }

    return map;
}

} // namespace

bool kind_requires_params(TFKind kind) {
    return kind != TFKind::WD && kind != TFKind::AF;
}

const char* kind_name(TFKind kind) {
    switch (kind) {
    case TFKind::WD: return "wd";
    case TFKind::AF: return "af";
    case TFKind::QWD: return "qwd";
    case TFKind::QAF: return "qaf";
    case TFKind::AQWD: return "aqwd";
    case TFKind::AQAF: return "aqaf";
    }
    return "?";
}

std::optional<TFKind> kind_from_name(const std::string& name) {
    for (TFKind k : {TFKind::WD, TFKind::AF, TFKind::QWD, TFKind::QAF,
                     TFKind::AQWD, TFKind::AQAF})
        if (name == kind_name(k))
            return k;
    return std::nullopt;
}

cd lag_product(const Signal& f, const std::optional<ParamSet>& params,
               std::ptrdiff_t n, std::ptrdiff_t m) {
    const auto N = static_cast<std::ptrdiff_t>(f.samples.size());
    const std::ptrdiff_t ip = n + m;
    const std::ptrdiff_t im = n - m;
    if (ip < 0 || ip >= N || im < 0 || im >= N)
        return cd{0.0, 0.0};

    cd lhs = f.samples[static_cast<std::size_t>(ip)];
    cd rhs = std::conj(f.samples[static_cast<std::size_t>(im)]);
    if (params) {
        const double tp = f.time_at(static_cast<std::size_t>(ip));
        const double tm = f.time_at(static_cast<std::size_t>(im));
        lhs *= std::polar(1.0, params->c * tp * tp + params->e * tp);
        rhs *= std::polar(1.0, -(params->a * tm * tm + params->d * tm));
    }
    return lhs * rhs;
}

std::pair<std::vector<double>, std::vector<double>>
tf_axes(TFKind kind, const std::optional<ParamSet>& params, const Signal& f) {
    validate_inputs(kind, params, f);

    const std::size_t N = f.samples.size();
    const std::size_t M = N;
    const EngineSpec spec = engine_spec(kind, params, f.dt);

    std::vector<double> outer;
    if (spec.lag_rows) {
        outer.resize(N);
        for (std::size_t n = 0; n < N; ++n)
            outer[n] = f.time_at(n);
    } else {
        const auto half = static_cast<std::ptrdiff_t>(N / 2);
        outer.reserve(2 * static_cast<std::size_t>(half));
        for (std::ptrdiff_t m = -half; m < half; ++m)
            outer.push_back(2.0 * f.dt * static_cast<double>(m));
    }

    std::vector<double> freq(M);
    const std::ptrdiff_t kmin = -static_cast<std::ptrdiff_t>(M / 2);
    const double step = kTwoPi / (static_cast<double>(M) * spec.delta * spec.beff);
    for (std::size_t c = 0; c < M; ++c)
        freq[c] = step * static_cast<double>(kmin + static_cast<std::ptrdiff_t>(c));

    return {std::move(outer), std::move(freq)};
}

TFMap compute_tfd(TFKind kind, const std::optional<ParamSet>& params,
                  const Signal& f, int threads) {
    return run_engine(kind, params, f, f, threads);
}

TFMap compute_cross_tfd(TFKind kind, const std::optional<ParamSet>& params,
                        const Signal& f, const Signal& g, int threads) {
    return run_engine(kind, params, f, g, threads);
}

} // namespace qptf
