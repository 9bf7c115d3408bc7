#pragma once

#include <vector>

#include "fadres/threebody.hpp"

namespace fadres::enhancement {

using numerics::Complex;
using numerics::QuadratureSpec;
using threebody::Separation;
using twobody::Coupling;

// The free indices of the enhancement-factor contraction are not fixed by
// the matrix form; all three readings are supported and `summed` is the
// default (it reproduces the published sign pattern at the reference
// parameters).
enum class Variant { summed, diagonal, off_diagonal };

const char* variant_name(Variant v);

struct EnhancementFactor {
    Complex value;
    Variant variant;
    double lambda;
    double t0;
    double rho;
};

// xi together with the variant's resonance denominator:
// |1 - J*eta| for summed, |1 - J^2 eta^2| for the other two.
struct XiPoint {
    Complex xi;
    double denom_abs;
};

struct AggregateFactor {
    Complex value;
    double t0_lo;
    double t0_hi;
    std::vector<double> excluded; // singular t0 nodes skipped on the path
};

enum class Regime { amplified_attraction, suppressed, repulsive };

const char* regime_name(Regime r);

// Enhancement factor xi = 1 + I(t0) eta_i (delta_ij + M_ij eta_j),
// evaluated through the explicit 2x2 contraction.  Closed reductions:
//   summed       1 + I*eta/(1 - J*eta)
//   diagonal     1 + I*eta/(1 - J^2 eta^2)
//   off_diagonal 1 + I*eta^2 M+
EnhancementFactor xi(const Coupling& c, double t0, const Separation& rho,
                     Variant variant = Variant::summed);

XiPoint xi_with_denominator(const Coupling& c, double t0,
                            const Separation& rho, Variant variant);
XiPoint xi_with_denominator(const twobody::TwoBodyDress& dress, double t0,
                            const Separation& rho, Variant variant);

// Aggregate factor Xi(rho): mean of xi(t0, rho) over a t0 interval
// (default [0.001, 0.6]).  Set mean = false for the raw integral, which
// differs only by the factor (b - a).  Singular t0 nodes are excluded and
// reported in the result.
AggregateFactor big_xi(const Coupling& c, const Separation& rho,
                       double t0_lo, double t0_hi,
                       const QuadratureSpec& spec,
                       Variant variant = Variant::summed,
                       bool mean = true);

// Regime from Re(xi): > 1 amplified attraction, < 0 repulsive, the closed
// interval [0, 1] (boundaries included) suppressed.
Regime classify(const EnhancementFactor& factor);

} // namespace fadres::enhancement
