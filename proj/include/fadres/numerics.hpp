#pragma once

#include <complex>
#include <functional>

#include "fadres/errors.hpp"

namespace fadres::numerics {

using Complex = std::complex<double>;

// Tolerances for the adaptive Gauss-Kronrod integrators.  Both tolerances
// must stay above 100*eps; the budget counts interval bisections.
struct QuadratureSpec {
    double abs_tol = 1e-10;
    double rel_tol = 1e-8;
    int max_subdivisions = 2000;

    void validate() const;
};

struct RootFindSpec {
    double tol = 1e-12;
    int max_iterations = 200;

    void validate() const;
};

struct Mat2 {
    Complex m[2][2];
};

struct Vec2 {
    Complex x[2];
};

// Adaptive G7/K15 quadrature of a complex-valued integrand on [a, b].
// The returned estimate satisfies err <= max(abs_tol, rel_tol*|result|);
// otherwise NonConvergence is thrown.  Exact for polynomials well past
// degree 5 on a single panel.
Complex integrate_adaptive(const std::function<Complex(double)>& f,
                           double a, double b, const QuadratureSpec& spec);

// Same machinery on [a, inf) through the substitution t = a + u/(1-u).
// The integrand is never evaluated at the endpoint u = 1 (Kronrod nodes
// are interior), so f only needs to decay, not to be defined at infinity.
Complex integrate_semi_infinite(const std::function<Complex(double)>& f,
                                double a, const QuadratureSpec& spec);

// Cauchy principal value of  int_a^b g(t) / (pole^2 - t^2) dt  for a
// simple pole strictly inside (a, b), g smooth at the pole.  The singular
// part is subtracted analytically:
//
//   g(t)/(p^2-t^2) = [g(t)-g(p)]/(p^2-t^2) + g(p)/(p^2-t^2),
//
// the first piece is regular and integrated adaptively, the second has
// the closed form (1/2p) log[(p+b)(p-a)/((b-p)(p+a))].  The +i*gamma
// prescription's imaginary part is NOT included here; callers add the
// analytic residue term themselves.
double integrate_pv(const std::function<double(double)>& g, double pole,
                    double a, double b, const QuadratureSpec& spec);

// Bracketed root of a real function: secant/bisection hybrid that never
// leaves [a, b].  Requires a sign change; returns x with |f(x)| <= tol.
double find_root_real(const std::function<double(double)>& f,
                      double a, double b, const RootFindSpec& spec);

// Newton iteration for a simple root of an analytic function, with the
// derivative taken by central difference (step 1e-6 * max(1, |z|)).
Complex find_root_complex(const std::function<Complex(Complex)>& f,
                          Complex initial_guess, const RootFindSpec& spec);

// Direct solve of a 2x2 complex system.  Throws SingularMatrix when
// |det A| <= 1e-14 * ||A||_F^2, which downstream code treats as an exact
// resonance point.
Vec2 solve_2x2(const Mat2& a, const Vec2& b);

} // namespace fadres::numerics
