#pragma once

#include <vector>

#include "fadres/enhancement.hpp"

namespace fadres::scanner {

using enhancement::Variant;
using numerics::Complex;
using numerics::RootFindSpec;
using twobody::Coupling;

struct ScanGrid {
    double t0_lo = 0.001;
    double t0_hi = 0.6;
    int n_t0 = 2;
    double rho_lo = 1.0;
    double rho_hi = 6.0;
    int n_rho = 2;
    Coupling lambda;
    Variant variant = Variant::summed;

    void validate() const;
};

struct ScanSample {
    double t0;
    double rho;
    Complex xi;
    double denom_abs;
    bool singular = false;
};

struct ResonanceRecord {
    double lambda;
    double t0;
    double rho_star;
    double peak_abs_xi;
    double fwhm_rho;
    double residual; // variant denominator at rho_star
};

struct ResonanceRegion {
    double t0_lo, t0_hi;
    double rho_lo, rho_hi;
    double max_abs_xi;
    double peak_t0, peak_rho;
};

// Evaluate xi on the full grid, t0 outer and rho inner, in deterministic
// row-major order.  Samples where the evaluation hits an exact singularity
// are flagged, not dropped.  The result is bit-identical for any thread
// count (samples are written by index).  n_threads = 0 uses all cores.
std::vector<ScanSample> scan_surface(const ScanGrid& grid, int n_threads = 0);

// Locate resonances of |xi(rho)| at fixed t0: local maxima on a dense
// pre-grid (step <= 0.01), each refined by minimizing the squared variant
// denominator with a bracketed golden-section search, FWHM measured on
// |xi(rho)| around the refined peak.  Peaks whose residual denominator is
// not below 0.5 are discarded; an empty list is a valid result.
std::vector<ResonanceRecord> find_resonances(const Coupling& c, double t0,
                                             double rho_lo, double rho_hi,
                                             Variant variant,
                                             const RootFindSpec& spec);

// Connected components (4-neighbour) of grid samples whose denominator is
// below the given percentile of the grid's own distribution, reported as
// bounding windows with the peak sample.  The percentile is an artifact
// convention, default 2.
std::vector<ResonanceRegion> find_resonance_regions(const ScanGrid& grid,
                                                    double percentile = 2.0,
                                                    int n_threads = 0);

} // namespace fadres::scanner
