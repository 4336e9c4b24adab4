#pragma once

#include "qptf/signal.hpp"

#include <vector>

namespace qptf {

// Parameter tuple (A, B, C, D, E) of the quadratic-phase kernel; B must be
// nonzero and every entry finite.
struct ParamSet {
    double a, b, c, d, e;

    ParamSet(double a_, double b_, double c_, double d_, double e_);
};

// Derived parameter tuples that the bilinear-distribution identities swap in,
// plus the classical tuple and the reducibility test for plain QPFT slices.
enum class ParamMapKind {
    HAT,                     // (C, B, A, E, D)
    TILDE,                   // (C, -B, A, E, D)
    PRIME_WD_MARGINAL,       // (C, B, A, E, D)
    PRIME_AF_MARGINAL,       // (A, B/2, C, D, E)
    DOUBLEPRIME_AF_MARGINAL, // (C, -B/2, A, E, D)
    CLASSICAL,               // (0, -1, 0, 0, 0), input ignored
    QPFT_REDUCTION,          // identity; see satisfies_qpft_reduction
};

ParamSet apply_map(ParamMapKind kind, const ParamSet& p);

// True when A = C and D = E, the regime where the parameterised distributions
// collapse onto single-transform expressions.
bool satisfies_qpft_reduction(const ParamSet& p);

// Quadratic-phase kernel sqrt(B/i) * exp(i*(A*nu^2 + B*t*nu + C*t^2 + D*nu + E*t)),
// with the square root on the principal branch. |kernel| = sqrt(|B|).
cd kernel(const ParamSet& p, double nu, double t);

// Riemann sum of (1/sqrt(2*pi)) * integral f(t) K(nu, t) dt over the sample grid,
// evaluated directly for each requested frequency.
std::vector<cd> qpft_forward(const ParamSet& p, const Signal& f,
                             const std::vector<double>& nu_grid);

// Multiply samplewise by exp(i*(p*t^2 + q*t)) on the signal's own grid.
Signal chirp_modulate(const Signal& f, double p, double q);

} // namespace qptf
