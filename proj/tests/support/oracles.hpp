#pragma once

#include "qptf/closedform.hpp"
#include "qptf/qpft.hpp"
#include "qptf/signal.hpp"
#include "qptf/tfd.hpp"

#include <complex>
#include <cstdint>
#include <optional>

// Independent reference implementations used only by the tests. Everything in
// here recomputes its result from the defining integrals with direct
// summation, deliberately avoiding the library's FFT factorization, column
// prefactor algebra, and closed-form reductions, so an agreement between the
// two routes is meaningful evidence rather than a tautology.
namespace qptf::testing {

// Deterministic pseudo-random helpers (plain xorshift scaling; the standard
// distributions are implementation-defined and would tie test values to one
// standard library).
class Rng {
public:
    explicit Rng(std::uint64_t seed);
    double uniform(double lo, double hi); // in [lo, hi)
    std::uint64_t next();

private:
    std::uint64_t state_;
};

Signal random_signal(std::size_t n, double half_support, std::uint64_t seed);

// Random tuple with |B| in [0.6, 2.4] and the other entries in [-2, 2].
ParamSet random_params(std::uint64_t seed);

// Brute-force double-loop quadrature of the defining integral of each kind,
// on exactly the axes the engine would attach (the axes are rebuilt here from
// the documented grid formulas, not queried from the engine).
TFMap oracle_tfd(TFKind kind, const std::optional<ParamSet>& params, const Signal& f);

// Reduced special forms, written out as printed rather than routed through the
// generic parameterization. The first requires A = C and D = E. The second
// takes the (a, b, d) chirp parameters of the linear canonical transform and
// evaluates the reduced integral in those variables directly.
TFMap oracle_reduced_qpft_domain(TFKind kind, const ParamSet& p, const Signal& f);
TFMap oracle_lct_domain(TFKind kind, double a, double b, double d, const Signal& f);

// The tuple the engine should be handed to land on the same reduction.
ParamSet lct_param_set(double a, double b, double d);

// integral of exp(i*(alpha*x^2 + beta*x)) over [lo, hi] by composite Simpson,
// bisected until two successive refinements agree to tol. min_panels lets the
// caller force a floor (the fresnel cross-checks use >= 2^20 panels).
cd oracle_oscillatory_integral(double alpha, double beta, double lo, double hi,
                               double tol, std::size_t min_panels = 64);

// Direct quadrature of one auto/cross term of two chirps at a single (x, nu)
// point, the inner variable integrated over a rectangular aperture of length T
// (lag for AQWD/QWD, time for AQAF): comp2 rides in the conjugated slot; pass
// comp1 twice for the auto term. Supports AQWD, AQAF, and QWD (auto only).
cd oracle_lfm_term(TFKind kind, const ParamSet& p, const LFMComponent& c1,
                   const LFMComponent& c2, double T, double x, double nu,
                   double tol);

// Continuous transform of exp(-t^2/2) under the quadratic-phase kernel,
// via the closed Gaussian integral.
cd gaussian_qpft_analytic(const ParamSet& p, double nu);

// ||got - want||_F / max(||want||_F, tiny).
double frobenius_rel_error(const TFMap& got, const TFMap& want);

} // namespace qptf::testing
