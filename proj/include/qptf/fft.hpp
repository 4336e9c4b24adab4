#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <vector>

namespace qptf {

using cd = std::complex<double>;

// Precomputed plan for a fixed-length DFT
//
//   X[k] = sum_j x[j] * exp(sign * 2*pi*i * j*k / n)
//
// with sign = -1 (conventional forward) or +1. Power-of-two lengths run an
// iterative radix-2 transform; every other length goes through Bluestein's
// chirp-z reduction onto a power-of-two convolution. transform() is const and
// keeps its scratch local, so one plan can serve many threads at once.
class DftPlan {
public:
    DftPlan(std::size_t n, int sign);

    std::size_t size() const { return n_; }
    int sign() const { return sign_; }

    // In-place transform of a length-n buffer.
    void transform(std::vector<cd>& data) const;

private:
    void transform_pow2(std::vector<cd>& data) const;

    std::size_t n_ = 0;
    int sign_ = -1;
    bool pow2_ = false;

    // radix-2 tables (pow2 lengths, and the internal Bluestein convolver)
    std::vector<std::size_t> bitrev_;
    std::vector<cd> roots_; // roots_[k] = exp(sign * 2*pi*i * k / n), k < n/2

    // Bluestein tables (non-pow2 lengths)
    std::size_t conv_len_ = 0;
    std::vector<cd> chirp_;        // chirp_[m] = exp(sign * i*pi * m^2 / n)
    std::vector<cd> kernel_fft_;   // forward FFT of the wrapped conjugate chirp
    std::unique_ptr<DftPlan> conv_fwd_;
    std::unique_ptr<DftPlan> conv_inv_;
};

} // namespace qptf
