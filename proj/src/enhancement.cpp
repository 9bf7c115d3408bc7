#include "fadres/enhancement.hpp"

#include <cmath>

namespace fadres::enhancement {

const char* variant_name(Variant v) {
    switch (v) {
        case Variant::summed: return "summed";
        case Variant::diagonal: return "diagonal";
        case Variant::off_diagonal: return "offdiag";
    }
    return "unknown";
}

const char* regime_name(Regime r) {
    switch (r) {
        case Regime::amplified_attraction: return "amplified_attraction";
        case Regime::suppressed: return "suppressed";
        case Regime::repulsive: return "repulsive";
    }
    return "unknown";
}

XiPoint xi_with_denominator(const twobody::TwoBodyDress& dress, double t0,
                            const Separation& rho, Variant variant) {
    const Complex i_loop = dress.loop;
    const Complex eta = dress.eta;
    const Complex j = threebody::exchange_kernel(rho, t0);
    const threebody::MAmplitudes m = threebody::m_amplitudes(rho, t0, dress);

    // full amplitude matrix in the two channels: diagonal M-, off-diagonal M+
    const Complex mm[2][2] = {{m.m_minus, m.m_plus}, {m.m_plus, m.m_minus}};

    // contraction eta_i (delta_ij + M_ij eta_j) with the variant's index choice
    Complex contracted = 0.0;
    switch (variant) {
        case Variant::summed:
            for (int jcol = 0; jcol < 2; ++jcol)
                contracted += eta * (((jcol == 0) ? 1.0 : 0.0) + mm[0][jcol] * eta);
            break;
        case Variant::diagonal:
            contracted = eta * (1.0 + mm[0][0] * eta);
            break;
        case Variant::off_diagonal:
            contracted = eta * (mm[0][1] * eta);
            break;
    }

    const Complex jeta = j * eta;
    XiPoint out;
    out.xi = 1.0 + i_loop * contracted;
    out.denom_abs = (variant == Variant::summed)
                        ? std::abs(1.0 - jeta)
                        : std::abs(1.0 - jeta * jeta);
    return out;
}

XiPoint xi_with_denominator(const Coupling& c, double t0,
                            const Separation& rho, Variant variant) {
    if (t0 < 0.0) throw DomainError("t0 must be nonnegative");
    const twobody::TwoBodyDress dress = twobody::amplification(c, t0);
    return xi_with_denominator(dress, t0, rho, variant);
}

EnhancementFactor xi(const Coupling& c, double t0, const Separation& rho,
                     Variant variant) {
    const XiPoint p = xi_with_denominator(c, t0, rho, variant);
    return {p.xi, variant, c.lambda, t0, rho.rho};
}

AggregateFactor big_xi(const Coupling& c, const Separation& rho,
                       double t0_lo, double t0_hi,
                       const QuadratureSpec& spec, Variant variant,
                       bool mean) {
    if (!(0.0 < t0_lo && t0_lo < t0_hi))
        throw DomainError("aggregate interval requires 0 < a < b");

    AggregateFactor out;
    out.t0_lo = t0_lo;
    out.t0_hi = t0_hi;

    auto integrand = [&](double t0) -> Complex {
        // an exactly singular node is nudged aside and reported
        for (double shift : {0.0, 1e-9, -1e-9, 1e-7}) {
            try {
                return xi_with_denominator(c, t0 + shift, rho, variant).xi;
            } catch (const EtaPole&) {
            } catch (const ResonanceSingularity&) {
            }
            if (shift == 0.0) out.excluded.push_back(t0);
        }
        throw SingularPath(out.excluded);
    };

    const Complex integral = numerics::integrate_adaptive(integrand, t0_lo, t0_hi, spec);
    if (out.excluded.size() > 32) throw SingularPath(out.excluded);
    out.value = mean ? integral / (t0_hi - t0_lo) : integral;
    return out;
}

Regime classify(const EnhancementFactor& factor) {
    const double re = factor.value.real();
    if (!std::isfinite(re)) throw DomainError("cannot classify a non-finite xi");
    if (re > 1.0) return Regime::amplified_attraction;
    if (re < 0.0) return Regime::repulsive;
    return Regime::suppressed;
}

} // namespace fadres::enhancement
