"""Single-qubit state, populations and entropy under band-edge decay.

A qubit prepared in cos(theta0/2)|1> + e^{i phi0} sin(theta0/2)|0> and
coupled to the band-edge reservoir evolves inside the one-excitation
sector, so the full density matrix follows from the amplitude u(t) alone.
The reduced-state spectrum has a closed form, which keeps the entropy
trace exact at the endpoints (S(0) = 0 in floating point, S -> 0 again
whenever the population empties or traps completely).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .fractional import ReservoirParams, amplitude_u
from .oracles import GridSpec

__all__ = [
    "BlochInit",
    "SingleQubitDensity",
    "density_matrix",
    "entropy_trace",
    "excited_probability",
    "is_steady",
    "von_neumann_entropy",
]

_MODULUS_SLACK = 1.0e-9


@dataclass(frozen=True)
class BlochInit:
    """Initial Bloch angles, |psi(0)> = cos(theta0/2)|1> + e^{i phi0} sin(theta0/2)|0>."""

    theta0: float
    phi0: float = 0.0

    def __post_init__(self):
        if not (math.isfinite(self.theta0) and 0.0 <= self.theta0 <= np.pi):
            raise ValueError("initial state: theta0 must lie in [0, pi]")
        if not math.isfinite(self.phi0):
            raise ValueError("initial state: phi0 must be finite")


@dataclass(frozen=True)
class SingleQubitDensity:
    """Density matrix in the (|1>, |0>) basis plus its eigenvalues."""

    rho11: complex
    rho01: complex
    rho10: complex
    rho00: complex
    lambda_plus: float
    lambda_minus: float

    def as_matrix(self) -> np.ndarray:
        return np.array(
            [[self.rho11, self.rho01], [self.rho10, self.rho00]], dtype=complex
        )


def _modulus_sq(u_p) -> np.ndarray:
    mod = np.abs(np.asarray(u_p, dtype=complex))
    if np.any(mod > 1.0 + _MODULUS_SLACK):
        raise ValueError("density matrix: |u_p| exceeds 1, not an amplitude")
    return np.minimum(mod * mod, 1.0)


def _eigenvalues(theta0: float, m):
    """Closed-form eigenvalues 0.5*(1 +- sqrt(1 - 4 cos^4(theta0/2) m(1-m)))."""
    c2 = np.cos(0.5 * theta0) ** 2
    radicand = np.clip(1.0 - 4.0 * c2 * c2 * m * (1.0 - m), 0.0, 1.0)
    root = np.sqrt(radicand)
    lam_p = np.clip(0.5 * (1.0 + root), 0.0, 1.0)
    lam_m = np.clip(0.5 * (1.0 - root), 0.0, 1.0)
    return lam_p, lam_m


def density_matrix(u_p: complex, init: BlochInit) -> SingleQubitDensity:
    """Qubit state at the time where the amplitude equals ``u_p``.

    The excited population decays with |u_p|^2 and the coherence inherits
    the amplitude linearly, phase included.  Hermiticity is built in, and
    the eigenvalues come from the closed two-level formula (algebraically
    identical to diagonalizing the returned matrix).
    """
    m = float(_modulus_sq(u_p))
    c2 = math.cos(0.5 * init.theta0) ** 2
    rho11 = complex(m * c2)
    rho01 = 0.5 * complex(u_p) * np.exp(1j * init.phi0) * math.sin(init.theta0)
    lam_p, lam_m = _eigenvalues(init.theta0, m)
    return SingleQubitDensity(
        rho11=rho11,
        rho01=complex(rho01),
        rho10=complex(np.conj(rho01)),
        rho00=complex(1.0 - rho11),
        lambda_plus=float(lam_p),
        lambda_minus=float(lam_m),
    )


def excited_probability(u_p, init: BlochInit):
    """Excited-state population |u_p|^2 cos^2(theta0/2). Scalar or array."""
    m = _modulus_sq(u_p)
    out = m * math.cos(0.5 * init.theta0) ** 2
    return float(out) if np.ndim(u_p) == 0 else out


def _entropy_from_eigs(lam_p, lam_m):
    with np.errstate(divide="ignore", invalid="ignore"):
        terms = np.where(lam_p > 0.0, lam_p * np.log(lam_p), 0.0)
        terms = terms + np.where(lam_m > 0.0, lam_m * np.log(lam_m), 0.0)
    return -terms + 0.0  # + 0.0 turns IEEE -0.0 into +0.0


def von_neumann_entropy(state: SingleQubitDensity) -> float:
    """S = -sum lambda ln lambda in nats, with 0 ln 0 = 0."""
    return float(_entropy_from_eigs(state.lambda_plus, state.lambda_minus))


def entropy_trace(params: ReservoirParams, init: BlochInit, grid: GridSpec):
    """Population and entropy along a time grid.

    Returns (times, populations, entropies) as three real arrays over
    ``grid.times``.
    """
    u = amplitude_u(params, grid.times)
    m = _modulus_sq(u)
    pop = m * math.cos(0.5 * init.theta0) ** 2
    lam_p, lam_m = _eigenvalues(init.theta0, m)
    return grid.times, pop, _entropy_from_eigs(lam_p, lam_m)


def is_steady(values, fraction: float = 0.2, tol: float = 1.0e-3) -> bool:
    """Whether the trailing ``fraction`` of a trace has settled.

    Settled means the peak-to-peak spread over the trailing window is below
    ``tol``.  The trapped-population plateaus inside the gap pass this
    despite their residual phase rotation because the populations and the
    entropy are phase-blind.
    """
    vals = np.asarray(values, dtype=float)
    if vals.ndim != 1 or vals.shape[0] < 2:
        raise ValueError("steady check: need a 1-d trace of at least 2 values")
    if not 0.0 < fraction <= 1.0:
        raise ValueError("steady check: fraction must lie in (0, 1]")
    tail = vals[-max(2, int(math.ceil(fraction * vals.shape[0]))) :]
    return bool(np.ptp(tail) < tol)
