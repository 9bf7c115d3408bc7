#pragma once

#include "fadres/twobody.hpp"

namespace fadres::threebody {

using numerics::Complex;
using numerics::QuadratureSpec;
using twobody::TwoBodyDress;

// Smallest admissible half-separation; the exchange kernel diverges as
// rho -> 0.
inline constexpr double rho_min = 1e-6;

// Dimensionless half-distance between the heavy bodies, rho = r*beta with
// r = d/2.  User-facing output also reports the full separation d = 2r.
struct Separation {
    double rho;

    explicit Separation(double rho_);
};

// Off-diagonal channel structure Lambda of the Faddeev kernel for the two
// dark-heavy channels.  The diagonal is identically zero; the constructor
// rejects anything else, since a nonzero diagonal would break compactness
// of the kernel.
struct LambdaMatrix {
    Complex m[2][2];

    LambdaMatrix(Complex l22, Complex l23, Complex l32, Complex l33);
    static LambdaMatrix symmetric(Complex j);
};

// Channel matrix K_ij = sum_l Lambda_il eta Lambda_lj(-r); diagonal
// (J^2 eta, J^2 eta) for two identical S-wave channels.
struct ChannelMatrix {
    Complex m[2][2];
};

// Connected amplitudes attached to delta(r + r') and delta(r - r'),
// together with det(I - K*eta).
struct MAmplitudes {
    Complex m_plus;
    Complex m_minus;
    Complex denominator;
};

// Closed form of the exchange kernel,
//   J(rho,t0) = e^{-rho}(1 - 2/rho)/(1+t0^2)
//             - (2/rho) [e^{-rho} + t0^2 e^{i t0 rho}]/(1+t0^2)^2,
// real whenever t0 = 0.
Complex exchange_kernel(const Separation& rho, double t0);

// Quadrature route for the kernel: the radial Fourier transform
//   (1/rho) int_0^inf t sin(t rho) t^2/(1+t^2)^2 / (t0^2 - t^2 + i*gamma) dt
// with the overall constant fixed once by matching exchange_kernel at the
// reference point (rho = 2, t0 = 0.1).
Complex exchange_kernel_oracle(const Separation& rho, double t0,
                               const QuadratureSpec& spec);

// K built through the generic channel sum and returned in full 2x2 form.
ChannelMatrix channel_matrix(const Separation& rho, double t0,
                             const TwoBodyDress& dress);

// M+ and M- from the 2x2 solve of (I - K*eta); algebraically
// M+ = J/(1 - J^2 eta^2) and M- = J^2 eta/(1 - J^2 eta^2).
MAmplitudes m_amplitudes(const Separation& rho, double t0,
                         const TwoBodyDress& dress);

// Effective single-channel exchange amplitude M+ + M- = J/(1 - J*eta).
Complex effective_exchange(const MAmplitudes& m);

} // namespace fadres::threebody
