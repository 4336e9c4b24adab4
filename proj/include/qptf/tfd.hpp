#pragma once

#include "qptf/qpft.hpp"
#include "qptf/signal.hpp"

#include <optional>
#include <vector>

namespace qptf {

// The six bilinear distributions. wd/af take no parameter tuple; the other
// four require one.
enum class TFKind { WD, AF, QWD, QAF, AQWD, AQAF };

bool kind_requires_params(TFKind kind);
const char* kind_name(TFKind kind);
std::optional<TFKind> kind_from_name(const std::string& name);

// Dense time-frequency (or lag-frequency) map. Rows follow outer_axis: the
// signal's time grid for WD-family kinds, the even-lag grid for AF-family
// kinds. Columns follow freq_axis in ascending order.
struct TFMap {
    TFKind kind = TFKind::WD;
    std::optional<ParamSet> params;
    std::vector<double> outer_axis;
    std::vector<double> freq_axis;
    std::vector<cd> values; // row-major, rows() x cols()
    std::size_t src_n = 0;  // originating signal length
    double src_dt = 0.0;    // originating signal step

    std::size_t rows() const { return outer_axis.size(); }
    std::size_t cols() const { return freq_axis.size(); }
    const cd& at(std::size_t r, std::size_t c) const { return values[r * cols() + c]; }
    cd& at(std::size_t r, std::size_t c) { return values[r * cols() + c]; }
};

// Bilinear sample product at integer half-lag: with lag 2m*dt, returns
// f_{C,E}[n+m] * conj(f_{A,D}[n-m]) for a parameter tuple, or the unmodulated
// product without one. Out-of-range indices contribute zero.
cd lag_product(const Signal& f, const std::optional<ParamSet>& params,
               std::ptrdiff_t n, std::ptrdiff_t m);

// Axes that compute_tfd will attach for this input: outer axis plus the
// frequency grid on which the engine's oscillatory factor is an exact DFT.
std::pair<std::vector<double>, std::vector<double>>
tf_axes(TFKind kind, const std::optional<ParamSet>& params, const Signal& f);

// Full distribution of one signal. threads = 0 picks a worker count
// automatically; results are identical for every thread count.
TFMap compute_tfd(TFKind kind, const std::optional<ParamSet>& params,
                  const Signal& f, int threads = 0);

// Bilinear cross map of two signals on one grid (first signal in the forward
// slot, second conjugated); used when studying interference terms.
TFMap compute_cross_tfd(TFKind kind, const std::optional<ParamSet>& params,
                        const Signal& f, const Signal& g, int threads = 0);

} // namespace qptf
