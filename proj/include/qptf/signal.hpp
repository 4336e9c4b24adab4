#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qptf {

using cd = std::complex<double>;

// Thrown when two signals that must share a sampling grid do not.
struct grid_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Uniformly sampled complex signal. Sample n sits at time t0 + n*dt.
struct Signal {
    std::vector<cd> samples;
    double t0 = 0.0;
    double dt = 1.0;

    std::size_t size() const { return samples.size(); }
    double time_at(std::size_t n) const { return t0 + static_cast<double>(n) * dt; }
};

// One linear-FM component: amp * exp(i*(nu0*t + xi0*t^2)).
struct LFMComponent {
    cd amp{1.0, 0.0};
    double nu0 = 0.0; // initial frequency, rad/s
    double xi0 = 0.0; // chirp rate, rad/s^2
};

// Chirp sampled on [-half_support, +half_support] with n points (both endpoints
// included, so dt = 2*half_support/(n-1) and t=0 is on-grid for odd n).
Signal make_lfm(const LFMComponent& comp, double half_support, std::size_t n);

// Pointwise sum of several chirps on the shared grid.
Signal make_multicomponent(const std::vector<LFMComponent>& comps,
                           double half_support, std::size_t n);

// Two Gaussian envelopes exp(-(t-c)^2/sqrt(2)) centred at centers.first and
// centers.second, summed. Real-valued; stored as complex samples.
Signal make_gaussian_pair(std::pair<double, double> centers,
                          double half_support, std::size_t n);

// f plus circular complex white Gaussian noise at the requested SNR, measured
// against the mean power of f over its support. Deterministic in (f, snr_db,
// seed). A positive-infinity snr_db is the no-noise sentinel.
Signal add_awgn(const Signal& f, double snr_db, std::uint64_t seed);

// Riemann inner product sum(f[n] * conj(g[n])) * dt on identical grids.
cd inner_product(const Signal& f, const Signal& g);

} // namespace qptf
