#pragma once

#include <cmath>

#include "fadres/errors.hpp"
#include "fadres/threebody.hpp"

namespace fadres::units {

// Inverse-length potential parameter beta in cm^-1.  All dimensionless
// quantities map linearly: r = rho/beta, p0 = t0*beta.
struct PhysicalScale {
    double beta_inv_cm;

    explicit PhysicalScale(double beta) : beta_inv_cm(beta) {
        if (!(beta > 0.0) || !std::isfinite(beta))
            throw DomainError("beta must be positive and finite");
    }
};

struct Distance {
    double r_cm; // half-separation
    double d_cm; // body separation, d = 2r
};

inline Distance rho_to_distance(const threebody::Separation& s,
                                const PhysicalScale& scale) {
    const double r = s.rho / scale.beta_inv_cm;
    return {r, 2.0 * r};
}

inline threebody::Separation distance_to_rho(double r_cm,
                                             const PhysicalScale& scale) {
    return threebody::Separation(r_cm * scale.beta_inv_cm);
}

inline double t0_to_momentum(double t0, const PhysicalScale& scale) {
    if (t0 < 0.0) throw DomainError("t0 must be nonnegative");
    return t0 * scale.beta_inv_cm;
}

inline double momentum_to_t0(double p0_inv_cm, const PhysicalScale& scale) {
    if (p0_inv_cm < 0.0) throw DomainError("p0 must be nonnegative");
    return p0_inv_cm / scale.beta_inv_cm;
}

} // namespace fadres::units
