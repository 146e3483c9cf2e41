"""Shared test helpers.

Two independent routes used to certify package results: a brute-force
tensor-product evolution of the two-qubit state through per-qubit damping
channels, and a high-precision mpmath evaluation of the literal closed-form
amplitude (plain erf, no scaling tricks), which shares no implementation
lineage with the scipy-based package code.
"""

import mpmath as mp
import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(20260819)


def wootters_concurrence(rho):
    """Concurrence from the spin-flipped eigenvalue spectrum.

    Takes any 4x4 density matrix, no X-shape shortcuts, so it checks the
    closed formulas rather than restating them.
    """
    sy = np.array([[0.0, -1j], [1j, 0.0]])
    flip = np.kron(sy, sy)
    prod = rho @ flip @ rho.conj() @ flip
    eigs = np.sort(np.sqrt(np.clip(np.linalg.eigvals(prod).real, 0.0, None)))
    return float(max(0.0, eigs[3] - eigs[2] - eigs[1] - eigs[0]))


def family_vector(family, alpha, phase=0.0):
    """State vector of a family member in the basis (|11>, |10>, |01>, |00>)."""
    vec = np.zeros(4, dtype=complex)
    g = np.sqrt(1.0 - alpha**2) * np.exp(1j * phase)
    if family == "phi":
        vec[2] = alpha
        vec[1] = g
    elif family == "psi":
        vec[3] = alpha
        vec[0] = g
    else:
        raise ValueError(family)
    return vec


def damped_pair_state(vec, amp):
    """Evolve |vec><vec| through one amplitude-damping channel per qubit.

    ``amp`` multiplies the |1> component of each qubit; passing the complex
    amplitude gives the physical channel, passing its modulus the
    phase-stripped convention.  Kraus pair K0 = diag(amp, 1),
    K1 = sqrt(1 - |amp|^2)|0><1|, applied independently to both qubits.
    """
    m = abs(amp) ** 2
    k0 = np.array([[amp, 0.0], [0.0, 1.0]], dtype=complex)
    k1 = np.array([[0.0, 0.0], [np.sqrt(max(0.0, 1.0 - m)), 0.0]], dtype=complex)
    rho = np.outer(vec, np.conj(vec))
    out = np.zeros((4, 4), dtype=complex)
    for ka in (k0, k1):
        for kb in (k0, k1):
            op = np.kron(ka, kb)
            out += op @ rho @ op.conj().T
    return out


def literal_amplitude(delta, f, t, dps=40):
    """Closed-form amplitude via mpmath erf at ``dps`` digits.

    Evaluates the textbook form y e^{y^2 t} (1 + erf(y sqrt(t))) directly;
    the growing exponential and the error function are left to cancel in
    extended precision instead of being folded into a scaled function.
    """
    with mp.workdps(dps):
        fm = mp.mpf(f)
        k = 1 / fm ** mp.mpf("1.5")
        pre = mp.exp(1j * mp.pi / 4)
        disc = 1 / fm**3 - mp.mpf(delta)
        tt = mp.mpf(t)
        st = mp.sqrt(tt)
        if abs(disc) < mp.mpf("1e-25"):
            y = -k * pre
            val = (1 + 2 * y * y * tt) * mp.exp(y * y * tt) * (
                1 + mp.erf(y * st)
            ) + 2 * y * mp.sqrt(tt / mp.pi)
        else:
            root = mp.sqrt(mp.mpc(disc))
            y1 = pre * (-k + root)
            y2 = pre * (-k - root)
            e1 = y1 * mp.exp(y1**2 * tt) * (1 + mp.erf(y1 * st))
            e2 = y2 * mp.exp(y2**2 * tt) * (1 + mp.erf(y2 * st))
            val = (e1 - e2) / (y1 - y2)
        return complex(val)


def read_csv(path):
    """Parse one of the package's CSVs into (header list, float array)."""
    with open(path, "r", encoding="utf-8") as fh:
        lines = [line.rstrip("\n") for line in fh if line.strip()]
    header = lines[0].split(",")
    data = np.array([[float(cell) for cell in line.split(",")] for line in lines[1:]])
    return header, data
