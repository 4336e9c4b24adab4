#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qptf/qpft.hpp"
#include "qptf/signal.hpp"
#include "support/oracles.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <vector>

using qptf::cd;
using qptf::ParamMapKind;
using qptf::ParamSet;
using qptf::Signal;

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;

bool same_tuple(const ParamSet& p, double a, double b, double c, double d, double e) {
    return p.a == a && p.b == b && p.c == c && p.d == d && p.e == e;
}
} // namespace

TEST_CASE("parameter tuple validation") {
    CHECK_THROWS_AS(ParamSet(0.0, 0.0, 0.0, 0.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(
        ParamSet(std::numeric_limits<double>::quiet_NaN(), 1.0, 0.0, 0.0, 0.0),
        std::invalid_argument);
    CHECK_THROWS_AS(
        ParamSet(0.0, std::numeric_limits<double>::infinity(), 0.0, 0.0, 0.0),
        std::invalid_argument);
    CHECK_NOTHROW(ParamSet(0.0, -1.0, 0.0, 0.0, 0.0));
}

TEST_CASE("kernel pins the principal branch and the quadratic phase") {
    const cd k0 = qptf::kernel(ParamSet(0.0, -1.0, 0.0, 0.0, 0.0), 0.0, 0.0);
    CHECK(std::abs(k0 - std::polar(1.0, kPi / 4.0)) < 1e-15);

    const cd k1 = qptf::kernel(ParamSet(1.0, -2.0, 1.0, 2.0, 1.0), 1.0, 1.0);
    const cd want = std::sqrt(2.0) * std::polar(1.0, kPi / 4.0) * std::polar(1.0, 3.0);
    CHECK(std::abs(k1 - want) < 1e-14);
}

TEST_CASE("kernel modulus squared equals |B|") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        const ParamSet p = qptf::testing::random_params(seed);
        qptf::testing::Rng rng(seed);
        const double nu = rng.uniform(-3.0, 3.0);
        const double t = rng.uniform(-3.0, 3.0);
        CHECK(std::norm(qptf::kernel(p, nu, t)) ==
              doctest::Approx(std::abs(p.b)).epsilon(1e-12));
    }
}

TEST_CASE("parameter maps permute the tuple as documented") {
    const ParamSet p(1.0, -2.0, 3.0, 4.0, 5.0);
    CHECK(same_tuple(qptf::apply_map(ParamMapKind::HAT, p), 3.0, -2.0, 1.0, 5.0, 4.0));
    CHECK(same_tuple(qptf::apply_map(ParamMapKind::TILDE, p), 3.0, 2.0, 1.0, 5.0, 4.0));
    CHECK(same_tuple(qptf::apply_map(ParamMapKind::PRIME_WD_MARGINAL, p),
                     3.0, -2.0, 1.0, 5.0, 4.0));
    CHECK(same_tuple(qptf::apply_map(ParamMapKind::PRIME_AF_MARGINAL, p),
                     1.0, -1.0, 3.0, 4.0, 5.0));
    CHECK(same_tuple(qptf::apply_map(ParamMapKind::DOUBLEPRIME_AF_MARGINAL, p),
                     3.0, 1.0, 1.0, 5.0, 4.0));
    CHECK(same_tuple(qptf::apply_map(ParamMapKind::CLASSICAL, p),
                     0.0, -1.0, 0.0, 0.0, 0.0));

    // hat is an involution
    const ParamSet hh = qptf::apply_map(ParamMapKind::HAT,
                                        qptf::apply_map(ParamMapKind::HAT, p));
    CHECK(same_tuple(hh, p.a, p.b, p.c, p.d, p.e));
}

TEST_CASE("reduction predicate needs A = C and D = E") {
    CHECK(qptf::satisfies_qpft_reduction(ParamSet(1.0, -2.0, 1.0, 2.0, 2.0)));
    CHECK(qptf::satisfies_qpft_reduction(ParamSet(0.0, -1.0, 0.0, 0.0, 0.0)));
    CHECK_FALSE(qptf::satisfies_qpft_reduction(ParamSet(1.0, -2.0, 0.0, 2.0, 2.0)));
    CHECK_FALSE(qptf::satisfies_qpft_reduction(ParamSet(1.0, -2.0, 1.0, 2.0, 1.0)));
}

TEST_CASE("forward transform of the zero signal is zero") {
    Signal zero;
    zero.t0 = -1.0;
    zero.dt = 2.0 / 63.0;
    zero.samples.assign(64, cd{});
    const auto out =
        qptf::qpft_forward(ParamSet(1.0, -2.0, 1.0, 2.0, 1.0), zero, {-1.0, 0.0, 1.0});
    REQUIRE(out.size() == 3);
    for (const cd& v : out) CHECK(std::abs(v) == 0.0);
}

TEST_CASE("forward transform is linear in the signal") {
    const Signal f = qptf::testing::random_signal(96, 4.0, 11);
    Signal af = f;
    const cd alpha{0.3, -1.2};
    for (auto& v : af.samples) v *= alpha;

    const ParamSet p(0.5, 1.3, -0.7, 0.2, -0.4);
    const std::vector<double> grid{-2.0, -0.5, 0.0, 1.7};
    const auto base = qptf::qpft_forward(p, f, grid);
    const auto scaled = qptf::qpft_forward(p, af, grid);
    for (std::size_t k = 0; k < grid.size(); ++k)
        CHECK(std::abs(scaled[k] - alpha * base[k]) < 1e-12);
}

TEST_CASE("forward transform of the unit Gaussian matches the closed form") {
    // exp(-t^2/2) decays below 1e-88 at |t| = 20, so the truncation error is
    // far beneath the quadrature error of the grid sum
    Signal f;
    const std::size_t n = 2048;
    f.t0 = -20.0;
    f.dt = 40.0 / static_cast<double>(n - 1);
    f.samples.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double t = f.time_at(j);
        f.samples[j] = cd{std::exp(-0.5 * t * t), 0.0};
    }

    const std::vector<double> grid{-1.5, -0.4, 0.0, 0.9, 2.2};
    for (const ParamSet& p : {ParamSet(0.0, -1.0, 0.0, 0.0, 0.0),
                              ParamSet(1.2, -1.7, 0.8, 0.5, -0.3),
                              ParamSet(-0.4, 2.1, 1.3, -0.8, 0.6)}) {
        const auto got = qptf::qpft_forward(p, f, grid);
        for (std::size_t k = 0; k < grid.size(); ++k) {
            const cd want = qptf::testing::gaussian_qpft_analytic(p, grid[k]);
            CHECK(std::abs(got[k] - want) < 1e-10);
        }
    }
}

TEST_CASE("forward transform rejects a non-finite frequency grid") {
    const Signal f = qptf::testing::random_signal(32, 2.0, 5);
    CHECK_THROWS_AS(qptf::qpft_forward(ParamSet(0.0, -1.0, 0.0, 0.0, 0.0), f,
                                       {std::numeric_limits<double>::quiet_NaN()}),
                    std::invalid_argument);
}

TEST_CASE("chirp modulation multiplies by the unit-modulus quadratic phase") {
    const Signal f = qptf::testing::random_signal(128, 5.0, 21);

    const Signal same = qptf::chirp_modulate(f, 0.0, 0.0);
    for (std::size_t j = 0; j < f.size(); ++j)
        CHECK(same.samples[j] == f.samples[j]);

    const Signal g = qptf::chirp_modulate(f, 0.7, -1.1);
    REQUIRE(g.size() == f.size());
    CHECK(g.t0 == f.t0);
    CHECK(g.dt == f.dt);
    for (std::size_t j = 0; j < f.size(); ++j) {
        CHECK(std::abs(std::abs(g.samples[j]) - std::abs(f.samples[j])) < 1e-14);
        const double t = f.time_at(j);
        const cd want = f.samples[j] * std::polar(1.0, 0.7 * t * t - 1.1 * t);
        CHECK(std::abs(g.samples[j] - want) < 1e-14);
    }

    // modulating a chirp shifts its component parameters
    const Signal base = qptf::make_lfm({cd{1.0, 0.0}, 0.1, 0.2}, 5.0, 128);
    const Signal shifted = qptf::make_lfm({cd{1.0, 0.0}, 0.1 - 1.1, 0.2 + 0.7}, 5.0, 128);
    const Signal made = qptf::chirp_modulate(base, 0.7, -1.1);
    for (std::size_t j = 0; j < base.size(); ++j)
        CHECK(std::abs(made.samples[j] - shifted.samples[j]) < 1e-13);

    // inverse modulation restores the input
    const Signal back = qptf::chirp_modulate(g, -0.7, 1.1);
    for (std::size_t j = 0; j < f.size(); ++j)
        CHECK(std::abs(back.samples[j] - f.samples[j]) < 1e-14);

    CHECK_THROWS_AS(
        qptf::chirp_modulate(f, std::numeric_limits<double>::quiet_NaN(), 0.0),
        std::invalid_argument);
}
