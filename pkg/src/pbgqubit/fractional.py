"""Fractional-exponential toolkit and band-edge emission amplitude.

A two-level emitter tuned near the edge of an anisotropic photonic band gap
has an excited-state amplitude governed by a kinetic equation of fractional
order 1/2.  The closed-form solution combines fractional exponentials
E_t(1/2, a), which this module evaluates through the scaled complementary
error function so that no parameter regime of interest overflows.

All public entry points use reduced units: times are beta*t and detunings
are delta/beta, where beta is the band-curvature frequency scale.  The
``beta`` and ``f`` fields of :class:`ReservoirParams` only matter for
quantities reported in physical units (the indicial roots and kappa).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq
from scipy.special import erfcx, rgamma

__all__ = [
    "DEGENERACY_EPS",
    "TIME_HORIZON",
    "FracExpArg",
    "IndicialRoots",
    "ReservoirParams",
    "SeriesConvergenceError",
    "amplitude_U",
    "amplitude_u",
    "bound_state_frequency",
    "frac_exp",
    "frac_exp_series",
    "indicial_roots",
    "steady_probability",
]

# Relative width of the degenerate-root window, |1/f^3 - delta/beta| below
# this is treated as a double indicial root.
DEGENERACY_EPS = 1.0e-9

# Largest beta*t the closed forms are validated for.
TIME_HORIZON = 100.0

_ROOT_PHASE = np.exp(0.25j * np.pi)  # e^{i pi/4}
_SERIES_MAX_TERMS = 300


class SeriesConvergenceError(RuntimeError):
    """Raised when the fractional-exponential power series fails to settle."""


@dataclass(frozen=True)
class FracExpArg:
    """Argument triple for the fractional exponential E_t(alpha, a).

    ``alpha`` is the fractional order, ``a`` the (possibly complex) rate and
    ``t`` the nonnegative time.
    """

    alpha: float
    a: complex
    t: float

    def __post_init__(self):
        if not math.isfinite(self.alpha):
            raise ValueError("fractional exponential: order must be finite")
        if not math.isfinite(self.t) or self.t < 0.0:
            raise ValueError("fractional exponential: time must be finite and >= 0")
        if not np.isfinite(self.a):
            raise ValueError("fractional exponential: rate must be finite")


@dataclass(frozen=True)
class ReservoirParams:
    """Reservoir and emitter parameters.

    ``delta`` is the detuning from the band edge in units of beta (negative
    means inside the gap), ``f`` the dimensionless anisotropy factor of the
    edge curvature and ``beta`` the curvature frequency scale itself.
    """

    delta: float
    f: float = 1.0
    beta: float = 1.0

    def __post_init__(self):
        if not math.isfinite(self.delta):
            raise ValueError("reservoir parameters: delta/beta must be finite")
        if not (math.isfinite(self.f) and self.f > 0.0):
            raise ValueError("reservoir parameters: f must be positive")
        if not (math.isfinite(self.beta) and self.beta > 0.0):
            raise ValueError("reservoir parameters: beta must be positive")

    @property
    def kappa(self) -> float:
        """Effective coupling rate beta^(1/2) / f^(3/2) in physical units."""
        return math.sqrt(self.beta) / self.f**1.5

    @property
    def degenerate(self) -> bool:
        """True when the two indicial roots coincide."""
        return abs(1.0 / self.f**3 - self.delta) <= DEGENERACY_EPS


@dataclass(frozen=True)
class IndicialRoots:
    """Roots of the indicial polynomial of the order-1/2 kinetic equation.

    Vieta invariants: y1 + y2 = -2*kappa*e^{i pi/4} and y1*y2 = i*delta*beta.
    """

    y1: complex
    y2: complex
    degenerate: bool


def frac_exp_series(arg: FracExpArg, tol: float = 1.0e-12) -> complex:
    """Evaluate E_t(alpha, a) = t^alpha * sum_n (a t)^n / Gamma(alpha+n+1).

    Works for any order alpha > -1 and complex rate a.  Truncation uses a
    geometric tail bound, so the returned value is accurate to roughly
    ``tol`` relative once the bound drops below it.  Raises
    :class:`SeriesConvergenceError` when the bound does not drop within
    300 terms (the series converges for every finite argument, but only
    usefully so for moderate ``|a*t|``).
    """
    if not (math.isfinite(tol) and tol > 0.0):
        raise ValueError("fractional exponential series: tol must be positive")
    if arg.alpha <= -1.0:
        raise ValueError("fractional exponential series: order must exceed -1")
    if arg.t == 0.0:
        if arg.alpha > 0.0:
            return 0.0 + 0.0j
        return complex(rgamma(arg.alpha + 1.0))

    at = complex(arg.a) * arg.t
    total = 0.0 + 0.0j
    term = complex(rgamma(arg.alpha + 1.0))
    for n in range(_SERIES_MAX_TERMS):
        total += term
        nxt = term * at / (arg.alpha + n + 1.0)
        q = abs(at) / (arg.alpha + n + 2.0)
        if q < 1.0 and abs(nxt) <= (1.0 - q) * tol * abs(total):
            return arg.t**arg.alpha * total
        term = nxt
    raise SeriesConvergenceError(
        "fractional exponential series: tail bound not below tol after "
        f"{_SERIES_MAX_TERMS} terms (|a*t| = {abs(at):.3g})"
    )


def frac_exp(arg: FracExpArg) -> complex:
    """Evaluate the order-1/2 fractional exponential E_t(1/2, a).

    Small arguments (|a*t| <= 4) go through the power series; larger ones
    use the closed form (e^{at} - erfcx(sqrt(a t))) / sqrt(a), which is the
    erf identity rearranged so nothing overflows until e^{at} itself leaves
    double range.  Principal square roots are used throughout; for t > 0
    they satisfy sqrt(a t) = sqrt(a) sqrt(t) exactly, so the two factors
    always sit on the same branch.
    """
    if arg.alpha != 0.5:
        raise ValueError(
            "fractional exponential: closed form implemented for order 1/2 only"
        )
    at = complex(arg.a) * arg.t
    if abs(at) <= 4.0:
        return frac_exp_series(arg, tol=1.0e-14)
    if at.real > 700.0:
        raise OverflowError(
            f"fractional exponential: Re(a*t) = {at.real:.3g} overflows e^(a*t)"
        )
    sqrt_a = np.sqrt(complex(arg.a))
    return complex((np.exp(at) - erfcx(np.sqrt(at))) / sqrt_a)


def indicial_roots(params: ReservoirParams) -> IndicialRoots:
    """Indicial roots y_{1,2} = e^{i pi/4} (-kappa +- sqrt(beta/f^3 - delta*beta)).

    The square root is principal, so it is real positive above the
    degeneracy point (beta/f^3 > delta*beta) and pure-imaginary positive
    below it.  Roots are reported in physical units.
    """
    disc = params.beta * (1.0 / params.f**3 - params.delta)
    root = np.sqrt(complex(disc))
    y1 = _ROOT_PHASE * (-params.kappa + root)
    y2 = _ROOT_PHASE * (-params.kappa - root)
    return IndicialRoots(y1=complex(y1), y2=complex(y2), degenerate=params.degenerate)


def _check_times(t):
    """Validate and broadcast a beta*t argument, returning (array, was_scalar)."""
    tt = np.asarray(t, dtype=float)
    scalar = tt.ndim == 0
    tt = np.atleast_1d(tt)
    if not np.all(np.isfinite(tt)) or np.any(tt < 0.0):
        raise ValueError("amplitude evaluation: beta*t must be finite and >= 0")
    if np.any(tt > TIME_HORIZON):
        raise OverflowError(
            f"amplitude evaluation: beta*t beyond the validated horizon {TIME_HORIZON:g}"
        )
    return tt, scalar


def amplitude_U(params: ReservoirParams, t):
    """Excited-state amplitude envelope U(beta*t) with U(0) = 1.

    This is the amplitude in the frame rotating at the detuning, so the
    only time dependence left is the band-edge relaxation itself.  Accepts
    a scalar or array of beta*t values in [0, 100] and returns matching
    complex values.

    Both root configurations are evaluated through erfcx in the half plane
    where it stays bounded, which keeps the result at machine precision for
    every finite detuning instead of overflowing where e^{y^2 t} grows.
    """
    tt, scalar = _check_times(t)
    reduced = ReservoirParams(params.delta, params.f, 1.0)
    roots = indicial_roots(reduced)
    st = np.sqrt(tt)
    if roots.degenerate:
        y = roots.y1
        out = (1.0 + 2.0 * y * y * tt) * erfcx(-y * st) + 2.0 * y * np.sqrt(tt / np.pi)
    else:
        y1, y2 = roots.y1, roots.y2
        out = (y1 * erfcx(-y1 * st) - y2 * erfcx(-y2 * st)) / (y1 - y2)
    out = np.asarray(out, dtype=complex)
    if not np.all(np.isfinite(out)):
        raise OverflowError(
            "amplitude evaluation: non-finite value, parameters outside the "
            "validated domain"
        )
    return complex(out[0]) if scalar else out


def amplitude_u(params: ReservoirParams, t):
    """Full excited-state amplitude u(beta*t) = e^{i delta t} U(beta*t)."""
    tt, scalar = _check_times(t)
    u = np.exp(1j * params.delta * tt) * amplitude_U(params, tt)
    return complex(u[0]) if scalar else u


def _bound_root(params: ReservoirParams) -> float:
    """Positive root w of w^2 + 2*k*w + delta = 0 in reduced units (delta < 0)."""
    k = 1.0 / params.f**1.5
    upper = k + math.sqrt(k * k + abs(params.delta)) + 1.0
    try:
        return brentq(
            lambda w: w * w + 2.0 * k * w + params.delta, 0.0, upper, xtol=1.0e-15
        )
    except ValueError as exc:  # pragma: no cover - bracket is sign-definite
        raise RuntimeError(f"steady probability: root bracketing failed ({exc})")


def bound_state_frequency(params: ReservoirParams):
    """Oscillation frequency of the trapped component, in units of beta.

    Inside the gap (delta < 0) the amplitude keeps a non-decaying piece
    rotating at this frequency; it is the location of the pure-imaginary
    pole of the Laplace image.  Returns None at or above the band edge.
    """
    if params.delta >= 0.0:
        return None
    w = _bound_root(params)
    return w * w


def steady_probability(params: ReservoirParams) -> float:
    """Long-time excited-state population P_infinity = |U(t -> inf)|^2.

    The fractionalized decay leaves a finite trapped population whenever
    the emitter sits inside the gap.  Its weight is the squared residue
    w/(w + kappa-hat) at the bound pole, with w found by bracketed root
    search.  Outside the gap there is no pole and the population drains
    to zero.
    """
    if params.delta >= 0.0:
        return 0.0
    k = 1.0 / params.f**1.5
    w = _bound_root(params)
    return (w / (w + k)) ** 2
