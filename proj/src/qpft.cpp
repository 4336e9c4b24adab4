#include "qptf/qpft.hpp"

#include <cmath>
#include <stdexcept>

namespace qptf {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

ParamSet::ParamSet(double a_, double b_, double c_, double d_, double e_)
    : a(a_), b(b_), c(c_), d(d_), e(e_) {
    if (!(std::isfinite(a) && std::isfinite(b) && std::isfinite(c) &&
          std::isfinite(d) && std::isfinite(e)))
        throw std::invalid_argument("parameter tuple entries must be finite");
    if (b == 0.0)
        throw std::invalid_argument("parameter B must be nonzero");
}

ParamSet apply_map(ParamMapKind kind, const ParamSet& p) {
    switch (kind) {
    case ParamMapKind::HAT:
    case ParamMapKind::PRIME_WD_MARGINAL:
        return ParamSet(p.c, p.b, p.a, p.e, p.d);
    case ParamMapKind::TILDE:
        return ParamSet(p.c, -p.b, p.a, p.e, p.d);
    case ParamMapKind::PRIME_AF_MARGINAL:
        return ParamSet(p.a, p.b / 2.0, p.c, p.d, p.e);
    case ParamMapKind::DOUBLEPRIME_AF_MARGINAL:
        return ParamSet(p.c, -p.b / 2.0, p.a, p.e, p.d);
    case ParamMapKind::CLASSICAL:
        return ParamSet(0.0, -1.0, 0.0, 0.0, 0.0);
    case ParamMapKind::QPFT_REDUCTION:
        return p; // reducibility predicate, not a remapping
    }
    throw std::invalid_argument("unknown parameter map");
}

bool satisfies_qpft_reduction(const ParamSet& p) {
    return p.a == p.c && p.d == p.e;
}

cd kernel(const ParamSet& p, double nu, double t) {
    // sqrt(B/i) = principal sqrt of -i*B
    const cd root = std::sqrt(cd{0.0, -p.b});
    const double phase = p.a * nu * nu + p.b * t * nu + p.c * t * t + p.d * nu + p.e * t;
    return root * std::polar(1.0, phase);
}

std::vector<cd> qpft_forward(const ParamSet& p, const Signal& f,
                             const std::vector<double>& nu_grid) {
    for (double nu : nu_grid)
        if (!std::isfinite(nu))
            throw std::invalid_argument("frequency grid entries must be finite");

    const cd root = std::sqrt(cd{0.0, -p.b});
    const double norm = 1.0 / std::sqrt(kTwoPi);

    std::vector<cd> out(nu_grid.size());
    for (std::size_t k = 0; k < nu_grid.size(); ++k) {
        const double nu = nu_grid[k];
        cd acc{0.0, 0.0};
        for (std::size_t n = 0; n < f.samples.size(); ++n) {
            const double t = f.time_at(n);
            const double phase =
                p.a * nu * nu + p.b * t * nu + p.c * t * t + p.d * nu + p.e * t;
            acc += f.samples[n] * std::polar(1.0, phase);
        }
        out[k] = acc * root * (norm * f.dt);
    }
    return out;
}

Signal chirp_modulate(const Signal& f, double p, double q) {
    if (!std::isfinite(p) || !std::isfinite(q))
        throw std::invalid_argument("chirp modulation parameters must be finite");
    Signal out = f;
    for (std::size_t n = 0; n < out.samples.size(); ++n) {
        const double t = out.time_at(n);
        out.samples[n] *= std::polar(1.0, p * t * t + q * t);
    }
    return out;
}

} // namespace qptf
