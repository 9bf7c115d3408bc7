#include <doctest.h>

#include <cmath>
#include <cstring>

#include "fadres/scanner.hpp"

using namespace fadres;
using enhancement::Variant;
using numerics::Complex;
using numerics::RootFindSpec;
using scanner::ScanGrid;
using twobody::Coupling;

namespace {

ScanGrid grid95(int nt = 60, int nr = 100, double rho_hi = 6.0) {
    ScanGrid g;
    g.t0_lo = 0.001;
    g.t0_hi = 0.6;
    g.n_t0 = nt;
    g.rho_lo = 1.0;
    g.rho_hi = rho_hi;
    g.n_rho = nr;
    g.lambda = Coupling{-0.95};
    g.variant = Variant::summed;
    return g;
}

} // namespace

TEST_CASE("scan grid validation") {
    ScanGrid g = grid95();
    g.n_t0 = 1;
    CHECK_THROWS_AS(scanner::scan_surface(g), DomainError);
    g = grid95();
    g.rho_lo = 0.0;
    CHECK_THROWS_AS(scanner::scan_surface(g), DomainError);
    g = grid95();
    g.t0_hi = g.t0_lo;
    CHECK_THROWS_AS(scanner::scan_surface(g), DomainError);
}

TEST_CASE("scan surface: free limit and row-major layout") {
    ScanGrid g = grid95(5, 7);
    g.lambda = Coupling{0.0};
    const auto samples = scanner::scan_surface(g);
    REQUIRE(samples.size() == 35);
    for (const auto& s : samples) {
        CHECK(s.xi == Complex(1.0));
        CHECK(s.denom_abs == 1.0);
        CHECK_FALSE(s.singular);
    }
    // t0 outer, rho inner, endpoints exact
    CHECK(samples[0].t0 == 0.001);
    CHECK(samples[0].rho == 1.0);
    CHECK(samples[6].rho == 6.0);
    CHECK(samples[34].t0 == 0.6);
    CHECK(samples[1].t0 == samples[0].t0);
    CHECK(samples[7].t0 > samples[0].t0);
}

TEST_CASE("scan surface is bit-identical across thread partitionings") {
    const ScanGrid g = grid95(40, 60);
    const auto one = scanner::scan_surface(g, 1);
    const auto three = scanner::scan_surface(g, 3);
    const auto many = scanner::scan_surface(g, 16);
    REQUIRE(one.size() == three.size());
    REQUIRE(one.size() == many.size());
    CHECK(std::memcmp(one.data(), three.data(),
                      one.size() * sizeof(scanner::ScanSample))
          == 0);
    CHECK(std::memcmp(one.data(), many.data(),
                      one.size() * sizeof(scanner::ScanSample))
          == 0);
}

TEST_CASE("scan surface: attractive ridge sits where expected") {
    const auto samples = scanner::scan_surface(grid95());
    double best = 0.0, best_rho = 0.0;
    for (const auto& s : samples)
        if (!s.singular && std::abs(s.xi) > best) {
            best = std::abs(s.xi);
            best_rho = s.rho;
        }
    CHECK(best_rho >= 2.3);
    CHECK(best_rho <= 3.0);
}

TEST_CASE("scan surface: repulsive coupling never approaches resonance") {
    ScanGrid g = grid95(50, 120, 30.0);
    g.lambda = Coupling{10.0};
    const auto samples = scanner::scan_surface(g);
    double min_den = 1e9;
    for (const auto& s : samples) {
        CHECK_FALSE(s.singular);
        min_den = std::min(min_den, s.denom_abs);
    }
    CHECK(min_den > 0.3);
}

TEST_CASE("find_resonances: the reference resonance") {
    RootFindSpec s;
    const auto recs = scanner::find_resonances(Coupling{-0.95}, 0.12, 1.0, 6.0,
                                               Variant::summed, s);
    REQUIRE(recs.size() == 1);
    const auto& r = recs[0];
    CHECK(r.lambda == -0.95);
    CHECK(r.t0 == 0.12);
    CHECK(r.rho_star == doctest::Approx(2.73167638933).epsilon(1e-5));
    CHECK(r.peak_abs_xi == doctest::Approx(152.288976525).epsilon(1e-4));
    CHECK(r.residual == doctest::Approx(0.170770920511).epsilon(1e-5));
    CHECK(r.fwhm_rho == doctest::Approx(0.35353999).epsilon(1e-3));
    CHECK(r.residual < 0.5);

    // peak consistency: |xi| at the peak beats both half-width points
    auto absxi = [](double rho) {
        return std::abs(enhancement::xi(Coupling{-0.95}, 0.12,
                                        threebody::Separation(rho))
                            .value);
    };
    CHECK(r.peak_abs_xi >= absxi(r.rho_star - r.fwhm_rho));
    CHECK(r.peak_abs_xi >= absxi(r.rho_star + r.fwhm_rho));
}

TEST_CASE("find_resonances: empty results are valid") {
    RootFindSpec s;
    CHECK(scanner::find_resonances(Coupling{0.0}, 0.12, 1.0, 6.0,
                                   Variant::summed, s)
              .empty());
    CHECK(scanner::find_resonances(Coupling{10.0}, 0.12, 1.0, 30.0,
                                   Variant::summed, s)
              .empty());
    CHECK_THROWS_AS(scanner::find_resonances(Coupling{-0.95}, 0.12, 3.0, 2.0,
                                             Variant::summed, s),
                    DomainError);
}

TEST_CASE("find_resonances: peak grows as the coupling nears threshold") {
    RootFindSpec s;
    double prev_peak = 0.0;
    double prev_rho = 0.0;
    for (double lam : {-0.90, -0.95, -0.97}) {
        const auto recs = scanner::find_resonances(Coupling{lam}, 0.12, 1.0,
                                                   8.0, Variant::summed, s);
        REQUIRE(recs.size() == 1);
        CHECK(recs[0].peak_abs_xi > prev_peak);
        CHECK(recs[0].rho_star > prev_rho); // resonance walks outward too
        prev_peak = recs[0].peak_abs_xi;
        prev_rho = recs[0].rho_star;
    }
}

TEST_CASE("resonance regions: two structures for lambda = -0.97") {
    ScanGrid g;
    g.t0_lo = 0.001;
    g.t0_hi = 0.6;
    g.n_t0 = 150;
    g.rho_lo = 1.0;
    g.rho_hi = 30.0;
    g.n_rho = 300;
    g.lambda = Coupling{-0.97};
    const auto regions = scanner::find_resonance_regions(g);
    CHECK(regions.size() >= 2);

    bool near3 = false, near20 = false;
    for (const auto& r : regions) {
        if (r.rho_lo <= 4.0 && r.rho_hi >= 2.0) near3 = true;
        if (r.rho_lo <= 26.0 && r.rho_hi >= 14.0) near20 = true;
    }
    CHECK(near3);
    CHECK(near20);
}

TEST_CASE("resonance regions: free limit yields none") {
    ScanGrid g = grid95(30, 40);
    g.lambda = Coupling{0.0};
    CHECK(scanner::find_resonance_regions(g).empty());
}

TEST_CASE("resonance regions: reference coupling covers the known peak") {
    ScanGrid g = grid95(80, 160, 30.0);
    const auto regions = scanner::find_resonance_regions(g);
    REQUIRE(!regions.empty());
    bool covers = false;
    for (const auto& r : regions)
        if (r.rho_lo <= 2.65 && 2.65 <= r.rho_hi) covers = true;
    CHECK(covers);
}
