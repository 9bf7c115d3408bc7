#include "fadres/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace fadres::numerics {

namespace {

constexpr double eps = std::numeric_limits<double>::epsilon();

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK dqk15
// constants).  Nodes are the positive half; the rule is symmetric.
constexpr double xgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double wgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr double wg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct PanelResult {
    Complex value;
    double err;
};

PanelResult gk15(const std::function<Complex(double)>& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    const Complex fc = f(center);
    Complex kronrod = wgk[7] * fc;
    Complex gauss = wg[3] * fc;

    for (int i = 0; i < 7; ++i) {
        const double dx = half * xgk[i];
        const Complex lo = f(center - dx);
        const Complex hi = f(center + dx);
        kronrod += wgk[i] * (lo + hi);
        if (i % 2 == 1) gauss += wg[i / 2] * (lo + hi);
    }

    kronrod *= half;
    gauss *= half;

    return {kronrod, std::abs(kronrod - gauss)};
}

struct Segment {
    double a, b;
    Complex value;
    double err;
};

void check_finite(const Complex& v) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw NonConvergence("integrand produced a non-finite value");
}

} // namespace

void QuadratureSpec::validate() const {
    if (!(abs_tol >= 100.0 * eps) || !(rel_tol >= 100.0 * eps))
        throw DomainError("quadrature tolerances must be >= 100*eps");
    if (max_subdivisions < 1)
        throw DomainError("max_subdivisions must be >= 1");
}

void RootFindSpec::validate() const {
    if (!(tol > 0.0)) throw DomainError("root tolerance must be positive");
    if (max_iterations < 1)
        throw DomainError("max_iterations must be >= 1");
}

Complex integrate_adaptive(const std::function<Complex(double)>& f,
                           double a, double b, const QuadratureSpec& spec) {
    spec.validate();
    if (!(a < b)) throw DomainError("integration interval requires a < b");

    std::vector<Segment> segs;
    segs.reserve(64);
    {
        PanelResult whole = gk15(f, a, b);
        check_finite(whole.value);
        segs.push_back({a, b, whole.value, whole.err});
    }

    for (int split = 0; split < spec.max_subdivisions; ++split) {
        Complex total = 0.0;
        double total_err = 0.0;
        std::size_t worst = 0;
        for (std::size_t i = 0; i < segs.size(); ++i) {
            total += segs[i].value;
            total_err += segs[i].err;
            if (segs[i].err > segs[worst].err) worst = i;
        }
        const double tol = std::max(spec.abs_tol, spec.rel_tol * std::abs(total));
        if (total_err <= tol) {
            // Left-to-right summation keeps the result independent of the
            // refinement history.
            std::sort(segs.begin(), segs.end(),
                      [](const Segment& l, const Segment& r) { return l.a < r.a; });
            Complex out = 0.0;
            for (const Segment& s : segs) out += s.value;
            return out;
        }

        Segment s = segs[worst];
        const double mid = 0.5 * (s.a + s.b);
        if (!(s.a < mid && mid < s.b))
            throw NonConvergence("interval too small to subdivide further");
        PanelResult left = gk15(f, s.a, mid);
        PanelResult right = gk15(f, mid, s.b);
        check_finite(left.value);
        check_finite(right.value);
        segs[worst] = {s.a, mid, left.value, left.err};
        segs.push_back({mid, s.b, right.value, right.err});
    }
    throw NonConvergence("quadrature subdivision budget exhausted");
}

Complex integrate_semi_infinite(const std::function<Complex(double)>& f,
                                double a, const QuadratureSpec& spec) {
    auto mapped = [&f, a](double u) -> Complex {
        const double om = 1.0 - u;
        const double t = a + u / om;
        return f(t) / (om * om);
    };
    return integrate_adaptive(mapped, 0.0, 1.0, spec);
}

double integrate_pv(const std::function<double(double)>& g, double pole,
                    double a, double b, const QuadratureSpec& spec) {
    spec.validate();
    if (!(a < pole && pole < b))
        throw PoleOutsideInterval("pole must lie strictly inside (a, b)");
    if (!(pole > 0.0) || !(a > -pole))
        throw PoleOutsideInterval("mirror pole -p must lie outside [a, b]");

    const double gp = g(pole);
    const double h = 1e-6 * std::max(1.0, std::abs(pole));
    const double dgp = (g(pole + h) - g(pole - h)) / (2.0 * h);
    const double near = 1e-8 * std::max(1.0, std::abs(pole));

    auto regular = [&](double t) -> Complex {
        // [g(t) - g(p)] / (p^2 - t^2) with the 0/0 limit spelled out
        const double quotient =
            (std::abs(t - pole) < near) ? dgp : (g(t) - gp) / (t - pole);
        return -quotient / (pole + t);
    };

    const double reg = integrate_adaptive(regular, a, b, spec).real();
    const double singular =
        gp / (2.0 * pole)
        * std::log((pole + b) * (pole - a) / ((b - pole) * (pole + a)));
    return reg + singular;
}

double find_root_real(const std::function<double(double)>& f,
                      double a, double b, const RootFindSpec& spec) {
    spec.validate();
    if (!(a < b)) throw DomainError("bracket requires a < b");

    double fa = f(a);
    double fb = f(b);
    if (std::abs(fa) <= spec.tol) return a;
    if (std::abs(fb) <= spec.tol) return b;
    if (!(fa * fb < 0.0))
        throw NoSignChange("f(a) and f(b) must have opposite signs");

    double lo = a, hi = b, flo = fa, fhi = fb;
    for (int it = 0; it < spec.max_iterations; ++it) {
        // secant proposal; fall back to bisection when it leaves the
        // bracket or stops making progress against an endpoint
        double x = lo - flo * (hi - lo) / (fhi - flo);
        const double margin = 1e-3 * (hi - lo);
        if (!(x > lo + margin && x < hi - margin)) x = 0.5 * (lo + hi);

        const double fx = f(x);
        if (std::abs(fx) <= spec.tol) return x;
        if (flo * fx < 0.0) {
            hi = x;
            fhi = fx;
        } else {
            lo = x;
            flo = fx;
        }
        if (hi - lo <= eps * std::max(1.0, std::abs(lo))) {
            const double best = (std::abs(flo) < std::abs(fhi)) ? lo : hi;
            if (std::abs(f(best)) <= spec.tol) return best;
            throw NonConvergence("bracket collapsed before |f| <= tol");
        }
    }
    throw NonConvergence("root iteration budget exhausted");
}

Complex find_root_complex(const std::function<Complex(Complex)>& f,
                          Complex initial_guess, const RootFindSpec& spec) {
    spec.validate();

    Complex z = initial_guess;
    Complex fz = f(z);
    for (int it = 0; it < spec.max_iterations; ++it) {
        if (std::abs(fz) <= spec.tol) return z;

        const double h = 1e-6 * std::max(1.0, std::abs(z));
        const Complex deriv = (f(z + h) - f(z - h)) / (2.0 * h);
        const double scale = std::max(1.0, std::abs(z));
        if (!(std::abs(deriv) > 0.0) || std::abs(fz) > 1e6 * scale * std::abs(deriv))
            throw DerivativeVanished("numerical derivative vanished at iterate");

        const Complex step = fz / deriv;
        Complex znew = z - step;
        Complex fnew = f(znew);
        // damp the step while it fails to reduce |f|
        for (int k = 0; k < 4 && std::abs(fnew) > std::abs(fz); ++k) {
            znew = z - step / double(2 << k);
            fnew = f(znew);
        }
        z = znew;
        fz = fnew;
    }
    if (std::abs(fz) <= spec.tol) return z;
    throw NonConvergence("Newton iteration budget exhausted");
}

Vec2 solve_2x2(const Mat2& a, const Vec2& b) {
    const Complex det = a.m[0][0] * a.m[1][1] - a.m[0][1] * a.m[1][0];
    double frob2 = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) frob2 += std::norm(a.m[i][j]);
    if (std::abs(det) <= 1e-14 * frob2)
        throw SingularMatrix("2x2 system is singular to working precision");

    return {{(b.x[0] * a.m[1][1] - a.m[0][1] * b.x[1]) / det,
             (a.m[0][0] * b.x[1] - b.x[0] * a.m[1][0]) / det}};
}

} // namespace fadres::numerics
