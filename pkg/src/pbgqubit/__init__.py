"""Exact non-Markovian qubit dynamics near an anisotropic photonic band edge.

Closed-form fractional-calculus solutions for the excited-state amplitude,
cross-certified by two independent numerical oracles, plus the single-qubit
entropy and two-qubit concurrence observables built on top of them.
"""

from .fractional import (
    DEGENERACY_EPS,
    TIME_HORIZON,
    FracExpArg,
    IndicialRoots,
    ReservoirParams,
    SeriesConvergenceError,
    amplitude_U,
    amplitude_u,
    bound_state_frequency,
    frac_exp,
    frac_exp_series,
    indicial_roots,
    steady_probability,
)
from .oracles import (
    ContourError,
    GridSpec,
    LaplaceContour,
    invert_laplace,
    laplace_image,
    riemann_liouville_halfderiv,
    solve_fractional_kinetic,
)
from .single_qubit import (
    BlochInit,
    SingleQubitDensity,
    density_matrix,
    entropy_trace,
    excited_probability,
    is_steady,
    von_neumann_entropy,
)
from .two_qubit import (
    TwoQubitElements,
    TwoQubitInit,
    concurrence_phi,
    concurrence_psi,
    concurrence_trace,
    optimal_alpha,
    optimal_alpha_at,
    steady_concurrence,
    sudden_death_time,
    two_qubit_elements,
    x_state_concurrence,
)

__version__ = "0.1.0"

__all__ = [
    "DEGENERACY_EPS",
    "TIME_HORIZON",
    "BlochInit",
    "ContourError",
    "FracExpArg",
    "GridSpec",
    "IndicialRoots",
    "LaplaceContour",
    "ReservoirParams",
    "SeriesConvergenceError",
    "SingleQubitDensity",
    "TwoQubitElements",
    "TwoQubitInit",
    "amplitude_U",
    "amplitude_u",
    "bound_state_frequency",
    "concurrence_phi",
    "concurrence_psi",
    "concurrence_trace",
    "density_matrix",
    "entropy_trace",
    "excited_probability",
    "frac_exp",
    "frac_exp_series",
    "indicial_roots",
    "invert_laplace",
    "is_steady",
    "laplace_image",
    "optimal_alpha",
    "optimal_alpha_at",
    "riemann_liouville_halfderiv",
    "solve_fractional_kinetic",
    "steady_concurrence",
    "steady_probability",
    "sudden_death_time",
    "two_qubit_elements",
    "von_neumann_entropy",
    "x_state_concurrence",
]
