#include "fadres/scanner.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <deque>
#include <limits>
#include <thread>

namespace fadres::scanner {

namespace {

using enhancement::XiPoint;
using threebody::Separation;

double grid_node(double lo, double hi, int n, int k) {
    if (k == 0) return lo;
    if (k == n - 1) return hi;
    return lo + (hi - lo) * double(k) / double(n - 1);
}

int resolve_threads(int n_threads) {
    if (n_threads > 0) return n_threads;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? int(hw) : 1;
}

// |xi| and denominator at one (t0, rho) point, tolerant of exact hits
struct PointEval {
    Complex xi;
    double denom;
    bool singular;
};

PointEval eval_point(const Coupling& c, double t0, double rho, Variant variant) {
    try {
        const XiPoint p =
            enhancement::xi_with_denominator(c, t0, Separation(rho), variant);
        return {p.xi, p.denom_abs, false};
    } catch (const EtaPole&) {
        return {0.0, 0.0, true};
    } catch (const ResonanceSingularity&) {
        return {0.0, 0.0, true};
    }
}

} // namespace

void ScanGrid::validate() const {
    lambda.validate();
    if (!(t0_lo >= 0.0) || !(t0_lo < t0_hi))
        throw DomainError("t0 range must satisfy 0 <= lo < hi");
    if (!(rho_lo >= threebody::rho_min) || !(rho_lo < rho_hi))
        throw DomainError("rho range must satisfy rho_min <= lo < hi");
    if (n_t0 < 2 || n_rho < 2)
        throw DomainError("grid step counts must be >= 2");
}

std::vector<ScanSample> scan_surface(const ScanGrid& grid, int n_threads) {
    grid.validate();

    const std::size_t total = std::size_t(grid.n_t0) * std::size_t(grid.n_rho);
    std::vector<ScanSample> samples(total);

    // Samples land at fixed indices, so the output is identical for any
    // thread count or scheduling.
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t begin = next.fetch_add(256);
            if (begin >= total) return;
            const std::size_t end = std::min(begin + 256, total);
            for (std::size_t idx = begin; idx < end; ++idx) {
                const int i = int(idx / std::size_t(grid.n_rho));
                const int j = int(idx % std::size_t(grid.n_rho));
                const double t0 = grid_node(grid.t0_lo, grid.t0_hi, grid.n_t0, i);
                const double rho = grid_node(grid.rho_lo, grid.rho_hi, grid.n_rho, j);
                const PointEval p = eval_point(grid.lambda, t0, rho, grid.variant);
                samples[idx] = {t0, rho, p.xi, p.denom, p.singular};
            }
        }
    };

    const int nt = std::min<int>(resolve_threads(n_threads), 64);
    if (nt <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nt);
        for (int k = 0; k < nt; ++k) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return samples;
}

std::vector<ResonanceRecord> find_resonances(const Coupling& c, double t0,
                                             double rho_lo, double rho_hi,
                                             Variant variant,
                                             const RootFindSpec& spec) {
    c.validate();
    spec.validate();
    if (t0 < 0.0) throw DomainError("t0 must be nonnegative");
    if (!(rho_lo >= threebody::rho_min) || !(rho_lo < rho_hi))
        throw DomainError("rho range must satisfy rho_min <= lo < hi");

    // dense pre-grid, step <= 0.01
    const int n = std::max(2, int(std::ceil((rho_hi - rho_lo) / 0.01)) + 1);
    std::vector<double> rho(n), axi(n), den(n);
    for (int k = 0; k < n; ++k) {
        rho[k] = grid_node(rho_lo, rho_hi, n, k);
        const PointEval p = eval_point(c, t0, rho[k], variant);
        axi[k] = p.singular ? std::numeric_limits<double>::infinity()
                            : std::abs(p.xi);
        den[k] = p.denom;
    }

    auto denom_at = [&](double r) {
        const PointEval p = eval_point(c, t0, r, variant);
        return p.singular ? 0.0 : p.denom;
    };
    auto absxi_at = [&](double r) {
        const PointEval p = eval_point(c, t0, r, variant);
        return p.singular ? std::numeric_limits<double>::infinity()
                          : std::abs(p.xi);
    };

    std::vector<ResonanceRecord> records;
    for (int k = 1; k + 1 < n; ++k) {
        if (!(axi[k] > axi[k - 1] && axi[k] >= axi[k + 1])) continue;

        // refine by minimizing the squared denominator on the bracket
        double a = rho[k - 1], b = rho[k + 1];
        double seed_d = den[k];
        constexpr double invphi = 0.6180339887498949;
        double x1 = b - invphi * (b - a);
        double x2 = a + invphi * (b - a);
        double f1 = denom_at(x1), f2 = denom_at(x2);
        f1 *= f1;
        f2 *= f2;
        for (int it = 0; it < 200 && (b - a) > 1e-11 * std::max(1.0, b); ++it) {
            if (f1 < f2) {
                b = x2;
                x2 = x1;
                f2 = f1;
                x1 = b - invphi * (b - a);
                f1 = denom_at(x1);
                f1 *= f1;
            } else {
                a = x1;
                x1 = x2;
                f1 = f2;
                x2 = a + invphi * (b - a);
                f2 = denom_at(x2);
                f2 *= f2;
            }
        }
        double rho_star = 0.5 * (a + b);
        double residual = denom_at(rho_star);
        if (residual > seed_d) { // refinement must not regress
            rho_star = rho[k];
            residual = seed_d;
        }
        if (!(residual < 0.5)) continue; // Born-term bump, not a resonance

        ResonanceRecord rec;
        rec.lambda = c.lambda;
        rec.t0 = t0;
        rec.rho_star = rho_star;
        rec.peak_abs_xi = absxi_at(rho_star);
        rec.residual = residual;

        // FWHM on |xi(rho)| around the peak
        const double half = rec.peak_abs_xi / 2.0;
        numerics::RootFindSpec cross;
        cross.tol = 1e-9 * std::max(1.0, half);
        cross.max_iterations = 200;
        auto crossing = [&](int dir) -> double {
            int i = k;
            while (i + dir >= 0 && i + dir < n && !(axi[i + dir] < half)) i += dir;
            if (i + dir < 0 || i + dir >= n)
                return dir < 0 ? rho_lo : rho_hi; // half level not reached in range
            const double lo = std::min(rho[i], rho[i + dir]);
            const double hi = std::max(rho[i], rho[i + dir]);
            return numerics::find_root_real(
                [&](double r) { return absxi_at(r) - half; }, lo, hi, cross);
        };
        const double left = crossing(-1);
        const double right = crossing(+1);
        rec.fwhm_rho = right - left;
        if (!(rec.fwhm_rho > 0.0)) continue;

        // two seeds collapsing onto one minimum keep the deeper record
        if (!records.empty()
            && std::abs(records.back().rho_star - rec.rho_star) < 1e-6) {
            if (rec.residual < records.back().residual) records.back() = rec;
            continue;
        }
        records.push_back(rec);
    }

    std::sort(records.begin(), records.end(),
              [](const ResonanceRecord& l, const ResonanceRecord& r) {
                  return l.rho_star < r.rho_star;
              });
    return records;
}

std::vector<ResonanceRegion> find_resonance_regions(const ScanGrid& grid,
                                                    double percentile,
                                                    int n_threads) {
    if (!(percentile > 0.0 && percentile < 100.0))
        throw DomainError("percentile must lie in (0, 100)");

    const std::vector<ScanSample> samples = scan_surface(grid, n_threads);
    const std::size_t total = samples.size();

    std::vector<double> sorted(total);
    for (std::size_t i = 0; i < total; ++i) sorted[i] = samples[i].denom_abs;
    std::sort(sorted.begin(), sorted.end());
    const double threshold =
        sorted[std::size_t(percentile / 100.0 * double(total - 1))];

    const int nt = grid.n_t0, nr = grid.n_rho;
    auto at = [&](int i, int j) -> const ScanSample& {
        return samples[std::size_t(i) * nr + j];
    };
    std::vector<char> seen(total, 0);
    std::vector<ResonanceRegion> regions;

    for (int i = 0; i < nt; ++i) {
        for (int j = 0; j < nr; ++j) {
            const std::size_t idx = std::size_t(i) * nr + j;
            if (seen[idx] || !(samples[idx].denom_abs < threshold)) continue;

            ResonanceRegion reg;
            reg.t0_lo = reg.t0_hi = at(i, j).t0;
            reg.rho_lo = reg.rho_hi = at(i, j).rho;
            reg.max_abs_xi = -1.0;
            reg.peak_t0 = at(i, j).t0;
            reg.peak_rho = at(i, j).rho;

            std::deque<std::pair<int, int>> queue{{i, j}};
            seen[idx] = 1;
            while (!queue.empty()) {
                const auto [a, b] = queue.front();
                queue.pop_front();
                const ScanSample& s = at(a, b);
                reg.t0_lo = std::min(reg.t0_lo, s.t0);
                reg.t0_hi = std::max(reg.t0_hi, s.t0);
                reg.rho_lo = std::min(reg.rho_lo, s.rho);
                reg.rho_hi = std::max(reg.rho_hi, s.rho);
                const double mag = s.singular
                                       ? std::numeric_limits<double>::infinity()
                                       : std::abs(s.xi);
                if (mag > reg.max_abs_xi) {
                    reg.max_abs_xi = mag;
                    reg.peak_t0 = s.t0;
                    reg.peak_rho = s.rho;
                }
                const int di[4] = {1, -1, 0, 0};
                const int dj[4] = {0, 0, 1, -1};
                for (int q = 0; q < 4; ++q) {
                    const int na = a + di[q], nb = b + dj[q];
                    if (na < 0 || na >= nt || nb < 0 || nb >= nr) continue;
                    const std::size_t nidx = std::size_t(na) * nr + nb;
                    if (seen[nidx] || !(samples[nidx].denom_abs < threshold))
                        continue;
                    seen[nidx] = 1;
                    queue.emplace_back(na, nb);
                }
            }
            regions.push_back(reg);
        }
    }

    std::sort(regions.begin(), regions.end(),
              [](const ResonanceRegion& l, const ResonanceRegion& r) {
                  if (l.rho_lo != r.rho_lo) return l.rho_lo < r.rho_lo;
                  return l.t0_lo < r.t0_lo;
              });
    return regions;
}

} // namespace fadres::scanner
