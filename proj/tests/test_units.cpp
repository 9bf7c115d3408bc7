#include <doctest.h>

#include <cmath>
#include <random>

#include "fadres/units.hpp"

using namespace fadres;
using threebody::Separation;
using units::PhysicalScale;

TEST_CASE("distance map reproduces the published scales") {
    const PhysicalScale beta(1e-22);
    const units::Distance d = units::rho_to_distance(Separation(2.5), beta);
    CHECK(d.r_cm == 2.5e22);
    CHECK(d.d_cm == 5.0e22);

    CHECK(units::rho_to_distance(Separation(1.0), PhysicalScale(1.0)).r_cm
          == 1.0);
    CHECK(units::rho_to_distance(Separation(2.65), beta).r_cm
          == doctest::Approx(2.65e22).epsilon(1e-15));
}

TEST_CASE("momentum map is linear in beta") {
    const PhysicalScale beta(1e-22);
    // one rounded multiply; agreement to the last ulp
    CHECK(units::t0_to_momentum(0.1, beta)
          == doctest::Approx(1e-23).epsilon(4e-16));
    CHECK(units::t0_to_momentum(0.0, beta) == 0.0);
    CHECK(units::t0_to_momentum(0.12, beta)
          == doctest::Approx(1.2e-23).epsilon(1e-15));
    CHECK_THROWS_AS(units::t0_to_momentum(-0.2, beta), DomainError);
}

TEST_CASE("round trips and positivity") {
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> urho(1e-3, 50.0);
    std::uniform_real_distribution<double> ubeta(-25.0, 3.0);
    for (int k = 0; k < 100; ++k) {
        const double rho = urho(rng);
        const PhysicalScale beta(std::pow(10.0, ubeta(rng)));
        const units::Distance d = units::rho_to_distance(Separation(rho), beta);
        CHECK(d.r_cm > 0.0);
        const double back = units::distance_to_rho(d.r_cm, beta).rho;
        CHECK(std::abs(back - rho) <= 1e-14 * rho);

        const double p0 = units::t0_to_momentum(rho, beta);
        CHECK(units::momentum_to_t0(p0, beta)
              == doctest::Approx(rho).epsilon(1e-14));
    }
}

TEST_CASE("scale validation") {
    CHECK_THROWS_AS(PhysicalScale(0.0), DomainError);
    CHECK_THROWS_AS(PhysicalScale(-1e-22), DomainError);
}
