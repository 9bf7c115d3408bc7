#include <doctest.h>

#include <cmath>
#include <random>

#include "fadres/twobody.hpp"

using namespace fadres;
using numerics::Complex;
using numerics::QuadratureSpec;
using numerics::RootFindSpec;
using twobody::Coupling;

namespace {

QuadratureSpec tight() {
    QuadratureSpec s;
    s.abs_tol = 1e-12;
    s.rel_tol = 1e-10;
    s.max_subdivisions = 4000;
    return s;
}

double im_identity(double t0) {
    const double d = 1.0 + t0 * t0;
    return 2.0 * t0 * t0 * t0 / (d * d);
}

} // namespace

TEST_CASE("form factor values and domain") {
    CHECK(twobody::form_factor(0.0) == 0.0);
    CHECK(twobody::form_factor(1.0) == 0.5); // the maximum
    CHECK(twobody::form_factor(2.0) == doctest::Approx(0.4).epsilon(1e-15));
    CHECK_THROWS_AS(twobody::form_factor(-0.1), DomainError);
}

TEST_CASE("loop integral: normalization and closed values") {
    const Complex i0 = twobody::propagator_loop(0.0);
    CHECK(i0.real() == 1.0);
    CHECK(i0.imag() == 0.0);

    const Complex i1 = twobody::propagator_loop(1.0);
    CHECK(std::abs(i1 - Complex(1.0, 0.5)) < 1e-15);

    const Complex ih = twobody::propagator_loop(0.5);
    CHECK(std::abs(ih - Complex(1.12, 0.16)) < 1e-15);

    CHECK_THROWS_AS(twobody::propagator_loop(Complex(0.0, -2.0)), BranchError);
}

TEST_CASE("loop integral: optical-theorem identity on random points") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u(1e-6, 5.0);
    for (int k = 0; k < 100; ++k) {
        const double t0 = u(rng);
        const Complex loop = twobody::propagator_loop(t0);
        CHECK(std::abs(loop.imag() - im_identity(t0)) < 1e-12);
    }
}

TEST_CASE("loop oracle: matches the closed form") {
    const QuadratureSpec s = tight();
    for (double t0 : {0.1, 0.25, 0.5, 1.0, 2.0, 4.0}) {
        const Complex oracle = twobody::propagator_loop_oracle(t0, s);
        const Complex closed = twobody::propagator_loop(t0);
        CHECK(std::abs(oracle - closed) / std::abs(closed) < 1e-6);
    }
}

TEST_CASE("loop oracle: the -(4/pi) prefactor reproduces I(0) = 1") {
    const Complex near0 = twobody::propagator_loop_oracle(1e-4, tight());
    CHECK(std::abs(near0 - 1.0) < 1e-6);
}

TEST_CASE("amplification: free limit, desk values, pole detection") {
    const twobody::TwoBodyDress free =
        twobody::amplification(Coupling{0.0}, 0.37);
    CHECK(free.eta == Complex(0.0));

    const twobody::TwoBodyDress at0 =
        twobody::amplification(Coupling{-0.95}, 0.0);
    CHECK(std::abs(at0.eta - Complex(-19.0, 0.0)) < 1e-12);

    const twobody::TwoBodyDress at12 =
        twobody::amplification(Coupling{-0.95}, 0.12);
    CHECK(std::abs(at12.eta
                   - Complex(-25.556195442693586, -2.2099535200090585))
          < 1e-11);

    // lambda = -1 at threshold: 1 + lambda*I(0) = 0 exactly
    CHECK_THROWS_AS(twobody::amplification(Coupling{-1.0}, 0.0), EtaPole);
}

TEST_CASE("amplification keeps the separable structure: 1/eta - 1/lambda = I") {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> ul(-3.0, 3.0);
    std::uniform_real_distribution<double> ut(0.0, 4.0);
    int done = 0;
    while (done < 200) {
        const double lam = ul(rng);
        const double t0 = ut(rng);
        if (std::abs(lam) < 1e-3) continue;
        twobody::TwoBodyDress d;
        try {
            d = twobody::amplification(Coupling{lam}, t0);
        } catch (const EtaPole&) {
            continue;
        }
        ++done;
        CHECK(std::abs(1.0 / d.eta - 1.0 / lam - d.loop) < 1e-12);
    }
}

TEST_CASE("complex Newton reaches the amplitude pole from afar") {
    RootFindSpec s;
    s.tol = 1e-12;

    auto pole_fn = [](double lam) {
        return [lam](Complex z) { return 1.0 / lam + twobody::propagator_loop(z); };
    };
    const Complex bound =
        numerics::find_root_complex(pole_fn(-2.0), Complex(0.0, 2.0), s);
    CHECK(std::abs(bound - Complex(0.0, 1.0 + std::sqrt(2.0))) < 1e-10);

    const Complex threshold =
        numerics::find_root_complex(pole_fn(-1.0), Complex(0.0, 0.1), s);
    CHECK(std::abs(threshold) < 1e-6);
}

TEST_CASE("pair pole: threshold, bound, resonance") {
    RootFindSpec s;
    s.tol = 1e-13;

    const twobody::PairPole th = twobody::find_pair_pole(Coupling{-1.0}, s);
    CHECK(th.kind == twobody::PoleKind::threshold);
    CHECK(std::abs(th.location) == 0.0);

    const twobody::PairPole bd = twobody::find_pair_pole(Coupling{-2.0}, s);
    CHECK(bd.kind == twobody::PoleKind::bound);
    CHECK(bd.location.real() == 0.0);
    CHECK(std::abs(bd.location.imag() - (1.0 + std::sqrt(2.0))) < 1e-10);
    CHECK(bd.tau_linear == doctest::Approx(1.0).epsilon(1e-15));

    const twobody::PairPole rs = twobody::find_pair_pole(Coupling{-0.75}, s);
    CHECK(rs.kind == twobody::PoleKind::resonance);
    CHECK(std::abs(rs.location - Complex(0.4330127018922193, -0.25)) < 1e-10);

    CHECK_THROWS_AS(twobody::find_pair_pole(Coupling{0.0}, s), DomainError);
}

TEST_CASE("pair pole: bound tau grows continuously with |lambda|") {
    RootFindSpec s;
    s.tol = 1e-13;
    double prev = 0.0;
    for (int k = 0; k < 50; ++k) {
        const double lam = -1.01 - (3.0 - 1.01) * double(k) / 49.0;
        const twobody::PairPole p = twobody::find_pair_pole(Coupling{lam}, s);
        CHECK(p.kind == twobody::PoleKind::bound);
        const double tau = p.location.imag();
        CHECK(tau > prev);
        // residual of the pole condition at the reported location
        const Complex f = 1.0 / lam + twobody::propagator_loop(p.location);
        CHECK(std::abs(f) < 1e-12);
        prev = tau;
    }
}

TEST_CASE("pair pole: repulsive couplings give a virtual state") {
    RootFindSpec s;
    s.tol = 1e-13;
    const twobody::PairPole p = twobody::find_pair_pole(Coupling{2.0}, s);
    CHECK(p.kind == twobody::PoleKind::virtual_state);
    CHECK(p.location.real() == 0.0);
    CHECK(p.location.imag() < 0.0);
    CHECK(p.location.imag() > -1.0); // stays on the principal branch
}
