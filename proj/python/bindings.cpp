#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fadres/enhancement.hpp"
#include "fadres/scanner.hpp"
#include "fadres/twobody.hpp"
#include "fadres/units.hpp"
#include "fadres/version.hpp"

namespace py = pybind11;
using namespace fadres;
using numerics::Complex;
using threebody::Separation;
using twobody::Coupling;

namespace {

enhancement::Variant variant_from(const std::string& name) {
    if (name == "summed") return enhancement::Variant::summed;
    if (name == "diagonal") return enhancement::Variant::diagonal;
    if (name == "offdiag" || name == "off_diagonal")
        return enhancement::Variant::off_diagonal;
    throw DomainError("unknown variant '" + name + "'");
}

numerics::QuadratureSpec quad(double tol) {
    numerics::QuadratureSpec s;
    s.abs_tol = tol;
    s.rel_tol = tol;
    s.max_subdivisions = 4000;
    return s;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "three-body resonance toolkit: loop integral, exchange kernel, "
              "enhancement factor and resonance scans";
    m.attr("__version__") = fadres::version;

    auto err = py::register_exception<Error>(m, "FadresError");
    py::register_exception<DomainError>(m, "FadresDomainError", PyExc_ValueError);
    py::register_exception<NonConvergence>(m, "NonConvergenceError", err.ptr());
    py::register_exception<EtaPole>(m, "EtaPoleError", err.ptr());
    py::register_exception<ResonanceSingularity>(m, "ResonanceSingularityError",
                                                 err.ptr());
    py::register_exception<SingularPath>(m, "SingularPathError", err.ptr());

    py::class_<twobody::TwoBodyDress>(m, "TwoBodyDress")
        .def_readonly("loop", &twobody::TwoBodyDress::loop)
        .def_readonly("eta", &twobody::TwoBodyDress::eta)
        .def_property_readonly("lam", [](const twobody::TwoBodyDress& d) {
            return d.coupling.lambda;
        })
        .def("__repr__", [](const twobody::TwoBodyDress& d) {
            return "TwoBodyDress(eta=(" + std::to_string(d.eta.real()) + ","
                   + std::to_string(d.eta.imag()) + "))";
        });

    py::class_<twobody::PairPole>(m, "PairPole")
        .def_readonly("location", &twobody::PairPole::location)
        .def_readonly("tau_linear", &twobody::PairPole::tau_linear)
        .def_property_readonly("kind", [](const twobody::PairPole& p) {
            return std::string(twobody::pole_kind_name(p.kind));
        });

    py::class_<threebody::MAmplitudes>(m, "MAmplitudes")
        .def_readonly("m_plus", &threebody::MAmplitudes::m_plus)
        .def_readonly("m_minus", &threebody::MAmplitudes::m_minus)
        .def_readonly("denominator", &threebody::MAmplitudes::denominator);

    py::class_<scanner::ScanSample>(m, "ScanSample")
        .def_readonly("t0", &scanner::ScanSample::t0)
        .def_readonly("rho", &scanner::ScanSample::rho)
        .def_readonly("xi", &scanner::ScanSample::xi)
        .def_readonly("denom_abs", &scanner::ScanSample::denom_abs)
        .def_readonly("singular", &scanner::ScanSample::singular);

    py::class_<scanner::ResonanceRecord>(m, "ResonanceRecord")
        .def_readonly("lam", &scanner::ResonanceRecord::lambda)
        .def_readonly("t0", &scanner::ResonanceRecord::t0)
        .def_readonly("rho_star", &scanner::ResonanceRecord::rho_star)
        .def_readonly("peak_abs_xi", &scanner::ResonanceRecord::peak_abs_xi)
        .def_readonly("fwhm_rho", &scanner::ResonanceRecord::fwhm_rho)
        .def_readonly("residual", &scanner::ResonanceRecord::residual)
        .def("__repr__", [](const scanner::ResonanceRecord& r) {
            return "ResonanceRecord(rho_star=" + std::to_string(r.rho_star)
                   + ", peak=" + std::to_string(r.peak_abs_xi) + ")";
        });

    py::class_<scanner::ResonanceRegion>(m, "ResonanceRegion")
        .def_readonly("t0_lo", &scanner::ResonanceRegion::t0_lo)
        .def_readonly("t0_hi", &scanner::ResonanceRegion::t0_hi)
        .def_readonly("rho_lo", &scanner::ResonanceRegion::rho_lo)
        .def_readonly("rho_hi", &scanner::ResonanceRegion::rho_hi)
        .def_readonly("max_abs_xi", &scanner::ResonanceRegion::max_abs_xi)
        .def_readonly("peak_t0", &scanner::ResonanceRegion::peak_t0)
        .def_readonly("peak_rho", &scanner::ResonanceRegion::peak_rho);

    m.def("form_factor", &twobody::form_factor, py::arg("t"));

    m.def("loop_integral",
          [](Complex t0) { return twobody::propagator_loop(t0); },
          py::arg("t0"),
          "closed-form loop integral I(t0) = (1-2i t0)/(1-i t0)^2");

    m.def("loop_integral_oracle",
          [](double t0, double tol) {
              return twobody::propagator_loop_oracle(t0, quad(tol));
          },
          py::arg("t0"), py::arg("tol") = 1e-10,
          "quadrature route for the loop integral (PV + residue)");

    m.def("amplification",
          [](double lam, Complex t0) {
              return twobody::amplification(Coupling{lam}, t0);
          },
          py::arg("lam"), py::arg("t0"));

    m.def("find_pair_pole",
          [](double lam, double tol) {
              numerics::RootFindSpec s;
              s.tol = tol;
              return twobody::find_pair_pole(Coupling{lam}, s);
          },
          py::arg("lam"), py::arg("tol") = 1e-12);

    m.def("exchange_kernel",
          [](double rho, double t0) {
              return threebody::exchange_kernel(Separation(rho), t0);
          },
          py::arg("rho"), py::arg("t0"),
          "closed-form exchange kernel J(rho, t0)");

    m.def("exchange_kernel_oracle",
          [](double rho, double t0, double tol) {
              return threebody::exchange_kernel_oracle(Separation(rho), t0,
                                                       quad(tol));
          },
          py::arg("rho"), py::arg("t0"), py::arg("tol") = 1e-10);

    m.def("m_amplitudes",
          [](double lam, double t0, double rho) {
              const auto d = twobody::amplification(Coupling{lam}, t0);
              return threebody::m_amplitudes(Separation(rho), t0, d);
          },
          py::arg("lam"), py::arg("t0"), py::arg("rho"));

    m.def("effective_exchange",
          [](double lam, double t0, double rho) {
              const auto d = twobody::amplification(Coupling{lam}, t0);
              return threebody::effective_exchange(
                  threebody::m_amplitudes(Separation(rho), t0, d));
          },
          py::arg("lam"), py::arg("t0"), py::arg("rho"),
          "M+ + M- = J/(1 - J eta)");

    m.def("xi",
          [](double lam, double t0, double rho, const std::string& variant) {
              return enhancement::xi(Coupling{lam}, t0, Separation(rho),
                                     variant_from(variant))
                  .value;
          },
          py::arg("lam"), py::arg("t0"), py::arg("rho"),
          py::arg("variant") = "summed", "enhancement factor");

    m.def("regime",
          [](double lam, double t0, double rho, const std::string& variant) {
              const auto f = enhancement::xi(Coupling{lam}, t0, Separation(rho),
                                             variant_from(variant));
              return std::string(
                  enhancement::regime_name(enhancement::classify(f)));
          },
          py::arg("lam"), py::arg("t0"), py::arg("rho"),
          py::arg("variant") = "summed");

    m.def("big_xi",
          [](double lam, double rho, double t0_lo, double t0_hi,
             const std::string& variant, double tol, bool mean) {
              const auto agg = enhancement::big_xi(
                  Coupling{lam}, Separation(rho), t0_lo, t0_hi, quad(tol),
                  variant_from(variant), mean);
              return py::make_tuple(agg.value, agg.excluded);
          },
          py::arg("lam"), py::arg("rho"), py::arg("t0_lo") = 0.001,
          py::arg("t0_hi") = 0.6, py::arg("variant") = "summed",
          py::arg("tol") = 1e-8, py::arg("mean") = true,
          "aggregate factor Xi(rho); returns (value, excluded t0 nodes)");

    m.def("scan_surface",
          [](double lam, double t0_lo, double t0_hi, int n_t0, double rho_lo,
             double rho_hi, int n_rho, const std::string& variant,
             int threads) {
              scanner::ScanGrid g;
              g.t0_lo = t0_lo;
              g.t0_hi = t0_hi;
              g.n_t0 = n_t0;
              g.rho_lo = rho_lo;
              g.rho_hi = rho_hi;
              g.n_rho = n_rho;
              g.lambda = Coupling{lam};
              g.variant = variant_from(variant);
              return scanner::scan_surface(g, threads);
          },
          py::arg("lam"), py::arg("t0_lo"), py::arg("t0_hi"), py::arg("n_t0"),
          py::arg("rho_lo"), py::arg("rho_hi"), py::arg("n_rho"),
          py::arg("variant") = "summed", py::arg("threads") = 0);

    m.def("find_resonances",
          [](double lam, double t0, double rho_lo, double rho_hi,
             const std::string& variant, double tol) {
              numerics::RootFindSpec s;
              s.tol = tol;
              return scanner::find_resonances(Coupling{lam}, t0, rho_lo,
                                              rho_hi, variant_from(variant), s);
          },
          py::arg("lam"), py::arg("t0"), py::arg("rho_lo"), py::arg("rho_hi"),
          py::arg("variant") = "summed", py::arg("tol") = 1e-12);

    m.def("find_resonance_regions",
          [](double lam, double t0_lo, double t0_hi, int n_t0, double rho_lo,
             double rho_hi, int n_rho, double percentile, int threads) {
              scanner::ScanGrid g;
              g.t0_lo = t0_lo;
              g.t0_hi = t0_hi;
              g.n_t0 = n_t0;
              g.rho_lo = rho_lo;
              g.rho_hi = rho_hi;
              g.n_rho = n_rho;
              g.lambda = Coupling{lam};
              return scanner::find_resonance_regions(g, percentile, threads);
          },
          py::arg("lam"), py::arg("t0_lo") = 0.001, py::arg("t0_hi") = 0.6,
          py::arg("n_t0") = 300, py::arg("rho_lo") = 1.0,
          py::arg("rho_hi") = 30.0, py::arg("n_rho") = 600,
          py::arg("percentile") = 2.0, py::arg("threads") = 0);

    m.def("rho_to_distance",
          [](double rho, double beta) {
              const auto d = units::rho_to_distance(Separation(rho),
                                                    units::PhysicalScale(beta));
              return py::make_tuple(d.r_cm, d.d_cm);
          },
          py::arg("rho"), py::arg("beta"),
          "returns (half-separation r, body separation d) in cm");

    m.def("t0_to_momentum",
          [](double t0, double beta) {
              return units::t0_to_momentum(t0, units::PhysicalScale(beta));
          },
          py::arg("t0"), py::arg("beta"));
}
