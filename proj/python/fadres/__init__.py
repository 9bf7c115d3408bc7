"""Three-body resonance toolkit.

Closed-form loop integral and exchange kernel for a light particle
scattered on two heavy bodies, the enhancement factor of the effective
heavy-heavy interaction, and scans for the separations at which it
resonates.
"""

from ._core import (
    EtaPoleError,
    FadresDomainError,
    FadresError,
    MAmplitudes,
    NonConvergenceError,
    PairPole,
    ResonanceRecord,
    ResonanceRegion,
    ResonanceSingularityError,
    ScanSample,
    SingularPathError,
    TwoBodyDress,
    __version__,
    amplification,
    big_xi,
    effective_exchange,
    exchange_kernel,
    exchange_kernel_oracle,
    find_pair_pole,
    find_resonance_regions,
    find_resonances,
    form_factor,
    loop_integral,
    loop_integral_oracle,
    m_amplitudes,
    regime,
    rho_to_distance,
    scan_surface,
    t0_to_momentum,
    xi,
)

__all__ = [
    "EtaPoleError",
    "FadresDomainError",
    "FadresError",
    "MAmplitudes",
    "NonConvergenceError",
    "PairPole",
    "ResonanceRecord",
    "ResonanceRegion",
    "ResonanceSingularityError",
    "ScanSample",
    "SingularPathError",
    "TwoBodyDress",
    "__version__",
    "amplification",
    "big_xi",
    "effective_exchange",
    "exchange_kernel",
    "exchange_kernel_oracle",
    "find_pair_pole",
    "find_resonance_regions",
    "find_resonances",
    "form_factor",
    "loop_integral",
    "loop_integral_oracle",
    "m_amplitudes",
    "regime",
    "rho_to_distance",
    "scan_surface",
    "t0_to_momentum",
    "xi",
]
