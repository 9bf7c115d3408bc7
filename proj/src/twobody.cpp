#include "fadres/twobody.hpp"

#include <cmath>
#include <numbers>

namespace fadres::twobody {

using namespace std::complex_literals;

namespace {

constexpr double pi = std::numbers::pi;

// squared reduced form factor, t^2/(1+t^2)^2
double nu2(double t) {
    const double d = 1.0 + t * t;
    return t * t / (d * d);
}

} // namespace

void Coupling::validate() const {
    if (!std::isfinite(lambda))
        throw DomainError("coupling constant must be finite");
}

const char* pole_kind_name(PoleKind k) {
    switch (k) {
        case PoleKind::bound: return "bound";
        case PoleKind::virtual_state: return "virtual";
        case PoleKind::resonance: return "resonance";
        case PoleKind::threshold: return "threshold";
    }
    return "unknown";
}

double form_factor(double t) {
    if (t < 0.0) throw DomainError("form factor argument must be >= 0");
    return t / (1.0 + t * t);
}

Complex propagator_loop(Complex t0) {
    const Complex w = 1.0 - 1i * t0;
    if (!(w.real() > 0.0))
        throw BranchError("loop integral requires Re(1 - i*t0) > 0");
    return (1.0 - 2.0i * t0) / (w * w);
}

Complex propagator_loop_oracle(double t0, const QuadratureSpec& spec) {
    if (!(t0 > 0.0)) throw DomainError("oracle requires real t0 > 0");

    auto g = [](double t) { return t * t * nu2(t); }; // t^4/(1+t^2)^2

    // principal value over [0, B] with the pole inside, plus the smooth
    // tail on [B, inf) where the integrand decays like -1/t^2
    const double cut = t0 + 3.0;
    const double pv_head = numerics::integrate_pv(g, t0, 0.0, cut, spec);
    const Complex tail = numerics::integrate_semi_infinite(
        [&g, t0](double t) -> Complex { return g(t) / (t0 * t0 - t * t); },
        cut, spec);

    const double pv = pv_head + tail.real();
    const double residue = pi * g(t0) / (2.0 * t0); // on-shell i*pi term
    return -(4.0 / pi) * Complex(pv, -residue);
}

TwoBodyDress amplification(const Coupling& c, Complex t0) {
    c.validate();
    const Complex loop = propagator_loop(t0);
    if (c.lambda == 0.0) return {loop, 0.0, c};

    const Complex denom = 1.0 + c.lambda * loop;
    if (std::abs(denom) < 1e-12) throw EtaPole(t0.real());
    return {loop, c.lambda / denom, c};
}

PairPole find_pair_pole(const Coupling& c, const RootFindSpec& spec) {
    c.validate();
    spec.validate();
    if (c.lambda == 0.0)
        throw DomainError("the free limit lambda = 0 has no amplitude pole");

    // On t0 = i*tau the pole condition 1/lambda + I = 0 becomes
    //   tau^2 + 2*tau*(1+lambda) + (1+lambda) = 0.
    const double s = 1.0 + c.lambda;
    const double tau_linear = -s;
    const double disc = s * s - s;

    PairPole pole;
    pole.tau_linear = tau_linear;

    Complex guess;
    if (s == 0.0) {
        pole.location = 0.0;
        pole.kind = PoleKind::threshold;
        return pole;
    } else if (disc >= 0.0) {
        // imaginary-axis pair; the root closer to threshold is -s + sqrt(disc),
        // positive exactly when lambda < -1 (bound state)
        const double tau = -s + std::sqrt(disc);
        guess = Complex(0.0, tau);
    } else {
        // complex pair in the lower half t0 plane; take Re t0 >= 0
        guess = Complex(std::sqrt(-disc), -s);
    }

    auto f = [&c](Complex z) { return 1.0 / c.lambda + propagator_loop(z); };
    Complex root;
    try {
        root = numerics::find_root_complex(f, guess, spec);
    } catch (const Error&) {
        throw NoPoleFound("pole refinement failed from the quadratic seed");
    }

    // Newton preserves the imaginary axis analytically; snap roundoff.
    if (std::abs(root.real()) < 1e-12 * std::max(1.0, std::abs(root)))
        root = Complex(0.0, root.imag());

    pole.location = root;
    if (std::abs(root) < 1e-10) {
        pole.kind = PoleKind::threshold;
        pole.location = 0.0;
    } else if (root.real() == 0.0) {
        pole.kind = (root.imag() > 0.0) ? PoleKind::bound : PoleKind::virtual_state;
    } else {
        pole.kind = PoleKind::resonance;
    }
    return pole;
}

} // namespace fadres::twobody
