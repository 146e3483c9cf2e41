"""Two independent qubits in band-edge reservoirs: elements and concurrence.

Each qubit couples to its own reservoir, so the pair state follows from the
single-qubit amplitude alone.  For the two one-parameter families

    phi: alpha |01> + e^{i phase} sqrt(1-alpha^2) |10>
    psi: alpha |00> + e^{i phase} sqrt(1-alpha^2) |11>

the density matrix keeps an X shape in the standard basis
(|11>, |10>, |01>, |00>) and the concurrence reduces to closed expressions
in m(t) = |u_p(t)|^2.  Fractionalized decay makes m(t) settle at a nonzero
trapped value inside the gap, which is what lets entanglement survive, die
suddenly or revive depending on the family and the weight alpha.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import bisect, minimize_scalar

from .fractional import ReservoirParams, amplitude_U, steady_probability
from .oracles import GridSpec

__all__ = [
    "TwoQubitElements",
    "TwoQubitInit",
    "concurrence_phi",
    "concurrence_psi",
    "concurrence_trace",
    "optimal_alpha",
    "optimal_alpha_at",
    "steady_concurrence",
    "sudden_death_time",
    "two_qubit_elements",
    "x_state_concurrence",
]

_FAMILIES = ("phi", "psi")
_MODULUS_SLACK = 1.0e-9
_POP_TOL = 1.0e-12


@dataclass(frozen=True)
class TwoQubitInit:
    """Initial two-qubit pure state, one of the X-shaped families above.

    ``alpha`` is the weight of the first branch (|01> for phi, |00> for
    psi) and ``gamma_phase`` the relative phase of the second.
    """

    family: str
    alpha: float
    gamma_phase: float = 0.0

    def __post_init__(self):
        if self.family not in _FAMILIES:
            raise ValueError(f"two-qubit state: family must be one of {_FAMILIES}")
        if not (math.isfinite(self.alpha) and 0.0 <= self.alpha <= 1.0):
            raise ValueError("two-qubit state: alpha must lie in [0, 1]")
        if not math.isfinite(self.gamma_phase):
            raise ValueError("two-qubit state: gamma_phase must be finite")

    @property
    def gamma(self) -> complex:
        return math.sqrt(1.0 - self.alpha**2) * np.exp(1j * self.gamma_phase)


@dataclass(frozen=True)
class TwoQubitElements:
    """Nonzero elements of the X-shaped density matrix.

    Populations are real, the two coherences complex; their mirror images
    follow by Hermiticity.  Fields hold scalars or time arrays depending on
    what was evolved.
    """

    rho11: np.ndarray
    rho22: np.ndarray
    rho33: np.ndarray
    rho44: np.ndarray
    rho14: np.ndarray
    rho23: np.ndarray

    def as_matrix(self) -> np.ndarray:
        """4x4 matrix for scalar elements, basis (|11>, |10>, |01>, |00>)."""
        out = np.zeros((4, 4), dtype=complex)
        out[0, 0], out[1, 1] = complex(self.rho11), complex(self.rho22)
        out[2, 2], out[3, 3] = complex(self.rho33), complex(self.rho44)
        out[0, 3] = complex(self.rho14)
        out[3, 0] = np.conj(out[0, 3])
        out[1, 2] = complex(self.rho23)
        out[2, 1] = np.conj(out[1, 2])
        return out


def _checked_m(m):
    mm = np.asarray(m, dtype=float)
    if not np.all(np.isfinite(mm)):
        raise ValueError("two-qubit elements: m must be finite")
    if np.any(mm < 0.0) or np.any(mm > 1.0 + _MODULUS_SLACK):
        raise ValueError("two-qubit elements: m must be a squared modulus in [0, 1]")
    return np.minimum(mm, 1.0)


def two_qubit_elements(init: TwoQubitInit, m) -> TwoQubitElements:
    """Density-matrix elements at population factor m = |u_p|^2.

    Both qubits decay through identical independent channels, so every
    element of the initial projector maps through powers of m: doubly
    excited population with m^2, singly excited with m plus the cascade fed
    from |11>, and the two coherences with m.  ``m`` may be a scalar or an
    array.  A self-check verifies positivity of the populations and the
    X-state coherence bounds before returning.
    """
    mm = _checked_m(m)
    x = init.alpha**2
    w = init.alpha * math.sqrt(1.0 - x)
    phase = np.exp(1j * init.gamma_phase)
    if init.family == "phi":
        r11, r22, r33 = 0.0, 1.0 - x, x
        r14_0, r23_0 = 0.0j, w * phase
    else:
        r11, r22, r33 = 1.0 - x, 0.0, 0.0
        r14_0, r23_0 = w * phase, 0.0j

    cascade = r11 * mm * (1.0 - mm)
    rho11 = r11 * mm * mm
    rho22 = r22 * mm + cascade
    rho33 = r33 * mm + cascade
    rho44 = 1.0 - rho11 - rho22 - rho33
    rho14 = r14_0 * mm
    rho23 = r23_0 * mm

    for name, pop in (("rho11", rho11), ("rho22", rho22), ("rho33", rho33), ("rho44", rho44)):
        if np.any(np.asarray(pop) < -_POP_TOL):
            raise RuntimeError(f"two-qubit elements: population {name} went negative")
    if np.any(np.abs(rho23) ** 2 > rho22 * rho33 + _POP_TOL):
        raise RuntimeError("two-qubit elements: inner coherence bound violated")
    if np.any(np.abs(rho14) ** 2 > rho11 * rho44 + _POP_TOL):
        raise RuntimeError("two-qubit elements: outer coherence bound violated")
    return TwoQubitElements(
        rho11=rho11, rho22=rho22, rho33=rho33, rho44=rho44, rho14=rho14, rho23=rho23
    )


def x_state_concurrence(elements: TwoQubitElements):
    """Concurrence of an X-shaped state, 2 max(0, |rho23| - sqrt(rho11 rho44), |rho14| - sqrt(rho22 rho33))."""
    inner = np.abs(elements.rho23) - np.sqrt(
        np.maximum(elements.rho11 * elements.rho44, 0.0)
    )
    outer = np.abs(elements.rho14) - np.sqrt(
        np.maximum(elements.rho22 * elements.rho33, 0.0)
    )
    return 2.0 * np.maximum(0.0, np.maximum(inner, outer))


def _require_family(init: TwoQubitInit, family: str):
    if init.family != family:
        raise ValueError(
            f"concurrence: state belongs to family {init.family!r}, not {family!r}"
        )


def concurrence_phi(init: TwoQubitInit, m):
    """Concurrence of the phi family, 2 alpha sqrt(1-alpha^2) m.

    The one-excitation coherence and the product of the singly excited
    populations decay with the same power of m, so the concurrence never
    crosses zero at finite time: it decays (or traps) in direct proportion
    to the population factor.
    """
    _require_family(init, "phi")
    mm = _checked_m(m)
    w = init.alpha * math.sqrt(1.0 - init.alpha**2)
    return np.maximum(0.0, 2.0 * w * mm)


def concurrence_psi(init: TwoQubitInit, m):
    """Concurrence of the psi family, 2 sqrt(1-alpha^2) m (alpha - sqrt(1-alpha^2)(1-m)).

    The |11> branch feeds population into |10> and |01> as it drains, and
    that cascade competes with the surviving coherence.  The unclamped
    argument can turn negative and come back, which is what produces sudden
    death and revival.
    """
    _require_family(init, "psi")
    mm = _checked_m(m)
    g = math.sqrt(1.0 - init.alpha**2)
    return np.maximum(0.0, 2.0 * g * mm * (init.alpha - g * (1.0 - mm)))


def concurrence_trace(params: ReservoirParams, init: TwoQubitInit, grid: GridSpec):
    """Concurrence along a time grid, returned as (times, values)."""
    m = np.abs(amplitude_U(params, grid.times)) ** 2
    if init.family == "phi":
        return grid.times, concurrence_phi(init, m)
    return grid.times, concurrence_psi(init, m)


def steady_concurrence(params: ReservoirParams, init: TwoQubitInit) -> float:
    """Long-time concurrence, the family formula evaluated at m = P_infinity."""
    p = steady_probability(params)
    if init.family == "phi":
        return float(concurrence_phi(init, p))
    return float(concurrence_psi(init, p))


def optimal_alpha_at(family: str, p_inf: float) -> float:
    """Weight alpha^2 maximizing the steady concurrence at population p_inf.

    For phi the steady value 2 alpha sqrt(1-alpha^2) p is maximized by the
    balanced state, alpha^2 = 1/2, for every p.  For psi the maximizer
    shifts toward more vacuum weight as the trapped population drops; it is
    located by a coarse grid scan refined with golden-section search (the
    steady argument has a single interior maximum).  Accurate to 1e-6.
    """
    if family not in _FAMILIES:
        raise ValueError(f"optimal alpha: family must be one of {_FAMILIES}")
    if not (math.isfinite(p_inf) and 0.0 < p_inf <= 1.0):
        raise ValueError("optimal alpha: steady population must lie in (0, 1]")
    if family == "phi":
        return 0.5

    def negated(x):
        x = min(max(x, 0.0), 1.0)
        return -2.0 * p_inf * (math.sqrt(x * (1.0 - x)) - (1.0 - x) * (1.0 - p_inf))

    xs = np.linspace(0.0, 1.0, 1001)
    i = int(np.argmin([negated(x) for x in xs]))
    if i == 0 or i == xs.size - 1:
        return float(xs[i])
    res = minimize_scalar(
        negated,
        bracket=(xs[i - 1], xs[i], xs[i + 1]),
        method="golden",
        options={"xtol": 1.0e-7},
    )
    return float(min(max(res.x, 0.0), 1.0))


def optimal_alpha(params: ReservoirParams, family: str) -> float:
    """Weight alpha^2 maximizing the steady concurrence for these reservoir parameters."""
    p = steady_probability(params)
    if p == 0.0:
        raise ValueError(
            "optimal alpha: steady population is zero outside the gap, no "
            "steady concurrence to maximize"
        )
    return optimal_alpha_at(family, p)


def sudden_death_time(params: ReservoirParams, init: TwoQubitInit, grid: GridSpec):
    """Time after which the concurrence is zero and stays zero, if any.

    Returns 0.0 when the state carries no entanglement weight to begin with
    (alpha in {0, 1}), None when the concurrence stays positive through the
    end of the grid (including death-and-revival windows that close again),
    and otherwise the final zero crossing of the unclamped concurrence
    argument, refined by bisection to 1e-6 in beta*t.  Permanence is
    certified at the grid's resolution: dips shorter than one step can hide
    between nodes, so choose ``grid.n_steps`` accordingly.
    """
    if init.alpha in (0.0, 1.0):
        return 0.0
    if init.family == "phi":
        return None

    g = math.sqrt(1.0 - init.alpha**2)

    def argument(t):
        m = abs(amplitude_U(params, float(t))) ** 2
        return init.alpha - g * (1.0 - min(m, 1.0))

    m_grid = np.minimum(np.abs(amplitude_U(params, grid.times)) ** 2, 1.0)
    signs = init.alpha - g * (1.0 - m_grid)
    positive = np.nonzero(signs > 0.0)[0]
    if positive.size == 0:
        return 0.0
    k = int(positive[-1])
    if k == grid.n_steps:
        return None
    lo, hi = grid.times[k], grid.times[k + 1]
    if argument(hi) == 0.0:
        return float(hi)
    return float(bisect(argument, lo, hi, xtol=1.0e-6))
