#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qptf/detect.hpp"
#include "qptf/properties.hpp"
#include "qptf/signal.hpp"
#include "qptf/tfd.hpp"

namespace qptf {

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Shortest decimal form that parses back to the identical double.
std::string format_double(double v);

// CSV layout: line 1 "# kind,A,B,C,D,E,N,dt" (parameter fields empty for the
// unparameterized kinds), line 2 the frequency axis, then one line per row:
// outer value followed by re,im pairs. Reading a written file reproduces the
// map bit for bit.
void write_tfmap_csv(const TFMap& map, const std::string& path);
TFMap read_tfmap_csv(const std::string& path);

// CSV layout: line 1 "# signal,t0,dt,N", then one "t,re,im" line per sample.
void write_signal_csv(const Signal& f, const std::string& path);
Signal read_signal_csv(const std::string& path);

// Binary 8-bit PGM of |value|, scaled so the global maximum maps to 255.
// Row 0 holds the smallest outer-axis value, column 0 the smallest frequency.
// contour_levels = 0 writes the continuous scale; k >= 2 posterizes to k
// gray levels. An all-zero map writes all-zero pixels.
void write_heatmap(const TFMap& map, const std::string& path,
                   int contour_levels = 0);

void write_sweep_csv(const std::vector<SweepRow>& rows, const std::string& path);

void write_residual_csv(const std::vector<ResidualReport>& reports,
                        const std::string& path);

} // namespace qptf
