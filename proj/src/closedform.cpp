#include "qptf/closedform.hpp"

#include <cmath>

namespace qptf {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

double sinc(double x) {
    if (std::abs(x) < 1e-8) {
        const double x2 = x * x;
        return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
    }
    return std::sin(x) / x;
}

// 8-point Gauss-Legendre rule on [-1, 1].
constexpr double kGlNode[8] = {
    -0.9602898564975362, -0.7966664774136267, -0.5255324099163290,
    -0.1834346424956498, 0.1834346424956498, 0.5255324099163290,
    0.7966664774136267, 0.9602898564975362};
constexpr double kGlWeight[8] = {
    0.1012285362903763, 0.2223810344533745, 0.3137066458778873,
    0.3626837833783620, 0.3626837833783620, 0.3137066458778873,
    0.2223810344533745, 0.1012285362903763};

} // namespace

cd fresnel_segment(double alpha, double beta, double a, double b) {
    if (!std::isfinite(alpha) || !std::isfinite(beta) || !std::isfinite(a) || !std::isfinite(b))
        throw std::invalid_argument("fresnel segment arguments must be finite");
    if (a == b)
        return cd{0.0, 0.0};
    if (a > b)
        return -fresnel_segment(alpha, beta, b, a);

    if (alpha == 0.0) {
        const double half = 0.5 * (b - a);
        const double mid = 0.5 * (a + b);
        return (b - a) * sinc(beta * half) * std::polar(1.0, beta * mid);
    }

    // |d/dx (alpha x^2 + beta x)| is largest at an endpoint, so sizing panels
    // by the endpoint rate keeps the phase advance per panel below pi/4.
    const double rate = std::max(std::abs(2.0 * alpha * a + beta),
                                 std::abs(2.0 * alpha * b + beta));
    const double max_panel = rate > 0.0 ? (kPi / 4.0) / rate : (b - a);
    std::size_t panels = static_cast<std::size_t>(std::ceil((b - a) / std::max(max_panel, 1e-12)));
    if (panels < 1)
        panels = 1;

    const double w = (b - a) / static_cast<double>(panels);
    cd acc{0.0, 0.0};
    for (std::size_t p = 0; p < panels; ++p) {
        const double lo = a + w * static_cast<double>(p);
        const double mid = lo + 0.5 * w;
        const double half = 0.5 * w;
        cd panel{0.0, 0.0};
        for (int q = 0; q < 8; ++q) {
            const double x = mid + half * kGlNode[q];
            panel += kGlWeight[q] * std::polar(1.0, (alpha * x + beta) * x);
        }
        acc += panel * half;
    }
    return acc;
}

cd lfm_auto_analytic(TFKind kind, const ParamSet& params, const LFMComponent& comp,
                     double T, double x, double nu) {
    if (T < 0.0 || !std::isfinite(T))
        throw std::invalid_argument("support length must be nonnegative and finite");
    if (T == 0.0)
        return cd{0.0, 0.0};

    const double A = params.a, B = params.b, C = params.c, D = params.d, E = params.e;
    const double nu0 = comp.nu0, xi0 = comp.xi0;
    const double amp2 = std::norm(comp.amp);

    switch (kind) {
    case TFKind::AQWD: {
        const double t = x;
        const double pre_phase = (A - C) * (nu * nu - t * t) + (D - E) * (nu - t);
        const double beta = (2.0 * xi0 + C + A) * t + B * nu + nu0 + 0.5 * (D + E);
        return amp2 * std::abs(B) * std::polar(1.0, pre_phase) *
               fresnel_segment(0.25 * (C - A), beta, -0.5 * T, 0.5 * T);
    }
    case TFKind::AQAF: {
        const double lag = x;
        const double pre_phase = (A - C) * (nu * nu - 0.25 * lag * lag) + (D - E) * nu +
                                 (nu0 + 0.5 * (D + E)) * lag;
        const double beta = (2.0 * xi0 + C + A) * lag + B * nu + E - D;
        return amp2 * std::abs(B) * std::polar(1.0, pre_phase) *
               fresnel_segment(C - A, beta, -0.5 * T, 0.5 * T);
    }
    case TFKind::QWD: {
        const double t = x;
        const cd root = std::sqrt(cd{0.0, -B}) / std::sqrt(2.0 * kPi);
        const double beta = 2.0 * xi0 * t + B * nu + nu0 + D;
        return amp2 * root * std::polar(1.0, C * nu * nu + E * nu) *
               fresnel_segment(A, beta, -0.5 * T, 0.5 * T);
    }
    default:
        throw std::invalid_argument("no closed-form auto-term for this kind");
    }
}

cd cross_term_analytic(TFKind kind, const ParamSet& params,
                       const LFMComponent& comp1, const LFMComponent& comp2,
                       double T, double x, double nu) {
    if (T < 0.0 || !std::isfinite(T))
        throw std::invalid_argument("support length must be nonnegative and finite");
    if (T == 0.0)
        return cd{0.0, 0.0};

    const double A = params.a, B = params.b, C = params.c, D = params.d, E = params.e;
    const double nu1 = comp1.nu0, xi1 = comp1.xi0;
    const double nu2 = comp2.nu0, xi2 = comp2.xi0;
    const cd amps = comp1.amp * std::conj(comp2.amp);

    switch (kind) {
    case TFKind::AQWD: {
        const double t = x;
        const double pre_phase = (A - C) * (nu * nu - t * t) + (D - E) * (nu - t) +
                                 (xi1 - xi2) * t * t + (nu1 - nu2) * t;
        const double alpha = 0.25 * (xi1 - xi2 + C - A);
        const double beta = (xi1 + xi2 + A + C) * t + B * nu + 0.5 * (nu1 + nu2) +
                            0.5 * (D + E);
        return amps * std::abs(B) * std::polar(1.0, pre_phase) *
               fresnel_segment(alpha, beta, -0.5 * T, 0.5 * T);
    }
    case TFKind::AQAF: {
        const double lag = x;
        const double pre_phase = (A - C) * nu * nu + (D - E) * nu +
                                 0.25 * (xi1 - xi2 + C - A) * lag * lag +
                                 0.5 * (nu1 + nu2 + D + E) * lag;
        const double alpha = xi1 - xi2 + C - A;
        const double beta = (xi1 + xi2 + A + C) * lag + B * nu + (nu1 - nu2) + E - D;
        return amps * std::abs(B) * std::polar(1.0, pre_phase) *
               fresnel_segment(alpha, beta, -0.5 * T, 0.5 * T);
    }
    default:
        throw std::invalid_argument("no closed-form interference term for this kind");
    }
}

LineModel predicted_ridge(TFKind kind, const ParamSet& params, const LFMComponent& comp) {
    if (params.a != params.c)
        throw regime_error("impulse-line prediction needs A = C");

    const double B = params.b;
    LineModel line;
    line.slope = -(2.0 * comp.xi0 + 2.0 * params.a) / B;
    switch (kind) {
    case TFKind::AQWD:
        line.intercept = -(comp.nu0 + 0.5 * (params.d + params.e)) / B;
        break;
    case TFKind::AQAF:
        line.intercept = -(params.e - params.d) / B;
        break;
    default:
        throw std::invalid_argument("ridge prediction covers the fully modulated kinds only");
    }
    return line;
}

} // namespace qptf
