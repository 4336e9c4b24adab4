#include "qptf/signal.hpp"

#include <cmath>
#include <limits>
#include <random>

namespace qptf {

namespace {

void check_grid_args(double half_support, std::size_t n) {
    if (!(half_support > 0.0) || !std::isfinite(half_support))
        throw std::invalid_argument("signal support half-width must be positive and finite");
    if (n < 2)
        throw std::invalid_argument("signal needs at least two samples");
}

Signal blank_grid(double half_support, std::size_t n) {
    Signal s;
    s.t0 = -half_support;
    s.dt = 2.0 * half_support / static_cast<double>(n - 1);
    s.samples.assign(n, cd{0.0, 0.0});
    return s;
}

} // namespace

Signal make_lfm(const LFMComponent& comp, double half_support, std::size_t n) {
    check_grid_args(half_support, n);
    if (!std::isfinite(comp.amp.real()) || !std::isfinite(comp.amp.imag()) ||
        !std::isfinite(comp.nu0) || !std::isfinite(comp.xi0))
        throw std::invalid_argument("chirp component parameters must be finite");

    Signal s = blank_grid(half_support, n);
    for (std::size_t k = 0; k < n; ++k) {
        const double t = s.time_at(k);
        const double phase = comp.nu0 * t + comp.xi0 * t * t;
        s.samples[k] = comp.amp * std::polar(1.0, phase);
    }
    return s;
}

Signal make_multicomponent(const std::vector<LFMComponent>& comps,
                           double half_support, std::size_t n) {
    if (comps.empty())
        throw std::invalid_argument("component list is empty");
    check_grid_args(half_support, n);

    Signal sum = blank_grid(half_support, n);
    for (const auto& comp : comps) {
        Signal part = make_lfm(comp, half_support, n);
        for (std::size_t k = 0; k < n; ++k)
            sum.samples[k] += part.samples[k];
    }
    return sum;
}

Signal make_gaussian_pair(std::pair<double, double> centers,
                          double half_support, std::size_t n) {
    check_grid_args(half_support, n);
    if (!std::isfinite(centers.first) || !std::isfinite(centers.second))
        throw std::invalid_argument("beam centers must be finite");

    const double inv_s2 = 1.0 / std::sqrt(2.0);
    Signal s = blank_grid(half_support, n);
    for (std::size_t k = 0; k < n; ++k) {
        const double t = s.time_at(k);
        const double d1 = t - centers.first;
        const double d2 = t - centers.second;
        s.samples[k] = cd{std::exp(-d1 * d1 * inv_s2) + std::exp(-d2 * d2 * inv_s2), 0.0};
    }
    return s;
}

Signal add_awgn(const Signal& f, double snr_db, std::uint64_t seed) {
    if (std::isnan(snr_db))
        throw std::invalid_argument("SNR must not be NaN");
    if (std::isinf(snr_db) && snr_db > 0.0)
        return f; // noiseless sentinel

    double power = 0.0;
    for (const cd& v : f.samples)
        power += std::norm(v);
    power /= static_cast<double>(f.samples.size());
    if (!(power > 0.0))
        throw std::domain_error("SNR is undefined for a zero-energy signal");

    const double noise_power = power / std::pow(10.0, snr_db / 10.0);
    const double sigma = std::sqrt(noise_power / 2.0); // per real/imag part

    // Generate via explicit Box-Muller on raw engine output so the realization
    // is identical across standard library implementations.
    std::mt19937_64 eng(seed);
    auto uniform01 = [&eng]() {
        return (static_cast<double>(eng() >> 11) + 1.0) * 0x1.0p-53; // in (0,1]
    };

    Signal out = f;
    constexpr double two_pi = 6.283185307179586476925286766559;
    for (cd& v : out.samples) {
        const double u1 = uniform01();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        v += cd{sigma * r * std::cos(two_pi * u2), sigma * r * std::sin(two_pi * u2)};
    }
    return out;
}

cd inner_product(const Signal& f, const Signal& g) {
    if (f.samples.size() != g.samples.size() || f.t0 != g.t0 || f.dt != g.dt)
        throw grid_error("inner product requires identical sampling grids");
    cd acc{0.0, 0.0};
    for (std::size_t n = 0; n < f.samples.size(); ++n)
        acc += f.samples[n] * std::conj(g.samples[n]);
    return acc * f.dt;
}

} // namespace qptf
