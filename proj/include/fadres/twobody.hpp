#pragma once

#include "fadres/numerics.hpp"

namespace fadres::twobody {

using numerics::Complex;
using numerics::QuadratureSpec;
using numerics::RootFindSpec;

// Dimensionless strength of the dark-heavy pair force.  Negative values
// are attractive; zero is the free limit and is accepted everywhere.
struct Coupling {
    double lambda = 0.0;

    void validate() const;
};

// Dressed two-body quantities at a given dimensionless momentum t0:
// the loop integral I(t0) and the amplification coefficient
// eta = lambda / (1 + lambda*I).
struct TwoBodyDress {
    Complex loop;
    Complex eta;
    Coupling coupling;
};

enum class PoleKind { bound, virtual_state, resonance, threshold };

const char* pole_kind_name(PoleKind k);

// Pole of the two-body amplitude in the complex t0 plane.  tau_linear is
// the near-threshold estimate tau = -(1 + lambda); the exact pole solves
// tau^2 + 2*tau*(1+lambda) + (1+lambda) = 0 and the two generally differ
// away from lambda = -1, so both are reported.
struct PairPole {
    Complex location;
    PoleKind kind = PoleKind::threshold;
    double tau_linear = 0.0;
};

// Reduced S-wave form factor t/(1+t^2); the overall normalization is
// absorbed so that the loop integral obeys I(0) = 1.
double form_factor(double t);

// Closed form of the loop integral, I(t0) = (1 - 2i*t0)/(1 - i*t0)^2,
// valid on the principal branch Re(1 - i*t0) > 0.
Complex propagator_loop(Complex t0);

// Independent quadrature route for I at real t0 > 0:
//   I = -(4/pi) * int_0^inf t^4 / [(1+t^2)^2 (t0^2 - t^2 + i*gamma)] dt,
// evaluated as principal value plus the analytic i*pi residue term.
Complex propagator_loop_oracle(double t0, const QuadratureSpec& spec);

TwoBodyDress amplification(const Coupling& c, Complex t0);

// Locate and classify the amplitude pole 1/lambda + I(t0) = 0.  On the
// imaginary axis the condition reduces to a real quadratic in tau which
// seeds a complex Newton refinement.
PairPole find_pair_pole(const Coupling& c, const RootFindSpec& spec);

} // namespace fadres::twobody
