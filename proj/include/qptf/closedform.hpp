#pragma once

#include "qptf/qpft.hpp"
#include "qptf/signal.hpp"
#include "qptf/tfd.hpp"

#include <stdexcept>

namespace qptf {

// Requested outside the parameter regime in which the result is defined.
struct regime_error : std::domain_error {
    using std::domain_error::domain_error;
};

// Straight line nu = slope * x + intercept in the (outer axis, frequency) plane.
struct LineModel {
    double slope = 0.0;
    double intercept = 0.0;
};

// Oscillatory segment integral of exp(i*(alpha*x^2 + beta*x)) over [a, b].
// alpha = 0 evaluates the exact sinc expression; otherwise composite
// Gauss-Legendre panels sized so the phase advances at most pi/4 per panel.
cd fresnel_segment(double alpha, double beta, double a, double b);

// Closed-form auto-term of one chirp component observed through a rectangular
// aperture of length T in the integration variable (lag for AQWD and QWD, time
// for AQAF), evaluated at point = (x, nu) where x is time (AQWD, QWD) or lag
// (AQAF). On a sampled map the aperture varies by row; pass the row's
// effective aperture when comparing against engine output.
cd lfm_auto_analytic(TFKind kind, const ParamSet& params, const LFMComponent& comp,
                     double T, double x, double nu);

// Closed-form interference term between two chirp components through the same
// rectangular aperture, comp1 in the forward slot and comp2 conjugated.
// AQWD and AQAF only.
cd cross_term_analytic(TFKind kind, const ParamSet& params,
                       const LFMComponent& comp1, const LFMComponent& comp2,
                       double T, double x, double nu);

// Impulse line of the auto-term in the impulse regime A = C; throws
// regime_error otherwise.
LineModel predicted_ridge(TFKind kind, const ParamSet& params, const LFMComponent& comp);

} // namespace qptf
