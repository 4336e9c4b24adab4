#pragma once

#include "qptf/qpft.hpp"
#include "qptf/signal.hpp"
#include "qptf/tfd.hpp"

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qptf {

// A fixture whose shifts or grid do not satisfy the exactness preconditions of
// the identity being checked. The verifier refuses rather than interpolating.
struct alignment_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class PropertyId {
    TIME_SHIFT_WD,
    TIME_SHIFT_AF,
    FREQ_SHIFT_WD,
    FREQ_SHIFT_AF,
    JOINT_SHIFT_WD,
    JOINT_SHIFT_AF,
    CONJ_WD,
    CONJ_AF,
    SYMM_WD,
    SYMM_AF,
    MARGINAL_WD,
    MARGINAL_AF,
    ENERGY_MARGINAL,
    AF_SLICE,
    MOYAL_WD,
    MOYAL_AF,
    RECON_WD,
    RECON_AF,
};

const char* property_name(PropertyId id);
std::optional<PropertyId> property_from_name(const std::string& name);
const std::vector<PropertyId>& all_properties();

// Inputs for one identity check. t0/u0 feed the shift identities and must land
// on the grid lattices (see verify_property). The optional analytic closure
// supplies the signal's true value at off-grid times; the slice and
// reconstruction checks need it on grids that lack a t = 0 sample.
struct VerifierFixture {
    Signal f = {};
    std::optional<Signal> g = std::nullopt; // second signal, Moyal checks only
    ParamSet params;
    double t0 = 0.0;
    double u0 = 0.0;
    std::optional<std::function<cd(double)>> analytic = std::nullopt;
};

struct GridMeta {
    std::size_t n = 0;
    double dt = 0.0;
    std::size_t m = 0; // transform length (columns)
};

// Residuals of one identity on one fixture. rel_error is
// ||LHS-RHS|| / max(||LHS||, ||RHS||, 1e-12) over all compared cells; for
// identities with several printed readings, variant_errors holds each labelled
// reading's error and rel_error is the smallest of them.
struct ResidualReport {
    PropertyId property = PropertyId::TIME_SHIFT_WD;
    double lhs_norm = 0.0;
    double rhs_norm = 0.0;
    double rel_error = 0.0;
    std::vector<std::pair<std::string, double>> variant_errors;
    GridMeta grid_meta;

    // Label of the smallest-error variant, empty when there are none.
    std::string best_variant() const;
};

ResidualReport verify_property(PropertyId id, const VerifierFixture& fixture);

// Inverts a lag-family map back to signal samples on the doubled time grid:
// row t yields f(2t), using the conjugated value of f at zero, which must be
// nonzero.
Signal reconstruct_from_aqwd(const TFMap& wmap, cd f0_conj, const ParamSet& params);

// Inverts a lag-row map to the raw half-lag products p(lag) = f(lag/2) *
// conj(f(-lag/2)), one value per lag row.
std::vector<cd> reconstruct_from_aqaf(const TFMap& amap, const ParamSet& params);

} // namespace qptf
