#include "qptf/fft.hpp"

#include <cmath>
#include <stdexcept>

namespace qptf {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n)
        p <<= 1;
    return p;
}

} // namespace

DftPlan::DftPlan(std::size_t n, int sign) : n_(n), sign_(sign) {
    if (n == 0)
        throw std::invalid_argument("DFT length must be positive");
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("DFT sign must be +1 or -1");

    pow2_ = is_pow2(n);
    if (pow2_) {
        bitrev_.resize(n);
        std::size_t log2n = 0;
        while ((std::size_t{1} << log2n) < n)
            ++log2n;
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t r = 0;
            for (std::size_t b = 0; b < log2n; ++b)
                r |= ((i >> b) & 1u) << (log2n - 1 - b);
            bitrev_[i] = r;
        }
        roots_.resize(n / 2);
        for (std::size_t k = 0; k < n / 2; ++k) {
            const double ang = sign * 2.0 * kPi * static_cast<double>(k) / static_cast<double>(n);
            roots_[k] = cd{std::cos(ang), std::sin(ang)};
        }
        return;
    }

    // Bluestein: X[k] = c[k] * (a (*) b)[k] with a[j] = x[j]*c[j] and
    // b[m] = conj(c[m]), where c[m] = exp(sign*i*pi*m^2/n). The squared index
    // is reduced modulo 2n before the trig call so the phase argument stays
    // small and accurate for every length.
    conv_len_ = next_pow2(2 * n - 1);
    chirp_.resize(n);
    const std::size_t two_n = 2 * n;
    for (std::size_t m = 0; m < n; ++m) {
        const std::size_t q = (m * m) % two_n;
        const double ang = sign * kPi * static_cast<double>(q) / static_cast<double>(n);
        chirp_[m] = cd{std::cos(ang), std::sin(ang)};
    }

    conv_fwd_ = std::make_unique<DftPlan>(conv_len_, -1);
    conv_inv_ = std::make_unique<DftPlan>(conv_len_, +1);

    std::vector<cd> b(conv_len_, cd{0.0, 0.0});
    b[0] = std::conj(chirp_[0]);
    for (std::size_t m = 1; m < n; ++m) {
        b[m] = std::conj(chirp_[m]);
        b[conv_len_ - m] = std::conj(chirp_[m]);
    }
    conv_fwd_->transform(b);
    kernel_fft_ = std::move(b);
}

void DftPlan::transform_pow2(std::vector<cd>& data) const {
    const std::size_t n = n_;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = bitrev_[i];
        if (i < j)
            std::swap(data[i], data[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t half = len >> 1;
        const std::size_t stride = n / len;
        for (std::size_t blk = 0; blk < n; blk += len) {
            for (std::size_t k = 0; k < half; ++k) {
                const cd w = roots_[k * stride];
                const cd u = data[blk + k];
                const cd v = data[blk + k + half] * w;
                data[blk + k] = u + v;
                data[blk + k + half] = u - v;
            }
        }
    }
}

void DftPlan::transform(std::vector<cd>& data) const {
    if (data.size() != n_)
        throw std::invalid_argument("DFT buffer length does not match the plan");
    if (n_ == 1)
        return;
    if (pow2_) {
        transform_pow2(data);
        return;
    }

    std::vector<cd> a(conv_len_, cd{0.0, 0.0});
    for (std::size_t j = 0; j < n_; ++j)
        a[j] = data[j] * chirp_[j];
    conv_fwd_->transform(a);
    for (std::size_t i = 0; i < conv_len_; ++i)
        a[i] *= kernel_fft_[i];
    conv_inv_->transform(a);
    const double scale = 1.0 / static_cast<double>(conv_len_);
    for (std::size_t k = 0; k < n_; ++k)
        data[k] = chirp_[k] * a[k] * scale;
}

} // namespace qptf
