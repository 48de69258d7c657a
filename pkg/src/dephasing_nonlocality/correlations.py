"""Concurrence and maximal CHSH-Bell value of two-qubit states."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NumericalError
from .states import TwoQubitState, XState

EIG_CLAMP_TOL = 1e-10
# eigenvalues of rho at or below this are treated as exact zeros
RANK_TOL = 1e-15

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULIS = (SIGMA_X, SIGMA_Y, SIGMA_Z)
_YY = np.kron(SIGMA_Y, SIGMA_Y)
_PAULI_PAIRS = np.array([[np.kron(si, sj) for sj in PAULIS] for si in PAULIS])


@dataclass(frozen=True)
class BellDecomposition:
    u1: float
    u2: float
    u3: float
    b1: float
    b2: float
    bmax: float


def concurrence_general(state: TwoQubitState) -> float:
    """Wootters concurrence of an arbitrary two-qubit state.

    The eigenvalues ``lam`` of ``rho (Y x Y) rho* (Y x Y)`` are computed with a
    general eigensolver and must be real and nonnegative within
    ``EIG_CLAMP_TOL``.  Their square roots are taken as the singular values of
    ``F^T (Y x Y) F`` with ``rho = F F^dagger``, which squares to the same
    spectrum but does not lose half the digits on near-zero eigenvalues.
    """
    rho = state.rho
    lam = np.linalg.eigvals(rho @ _YY @ rho.conj() @ _YY)
    if np.max(np.abs(lam.imag)) > EIG_CLAMP_TOL:
        raise NumericalError(f"Wootters product has complex eigenvalue (imag {np.max(np.abs(lam.imag)):.3e})")
    lam = np.sort(lam.real)[::-1]
    if lam[-1] < -EIG_CLAMP_TOL:
        raise NumericalError(f"Wootters product has negative eigenvalue {lam[-1]:.3e}")

    p, v = np.linalg.eigh(rho)
    keep = p > RANK_TOL
    f = v[:, keep] * np.sqrt(p[keep])
    roots = np.zeros(4)
    sv = np.linalg.svd(f.T @ _YY @ f, compute_uv=False)
    roots[: sv.size] = sv
    if np.max(np.abs(roots ** 2 - np.clip(lam, 0.0, None))) > EIG_CLAMP_TOL:
        raise NumericalError("Wootters spectrum from eigensolver and factorization disagree")
    c = roots[0] - roots[1] - roots[2] - roots[3]
    return float(min(1.0, max(0.0, c)))


def concurrence_x(x: XState) -> float:
    return 2.0 * max(
        0.0,
        abs(x.rho23) - math.sqrt(x.rho11 * x.rho44),
        abs(x.rho14) - math.sqrt(x.rho22 * x.rho33),
    )


def bell_decomposition(x: XState) -> BellDecomposition:
    """Closed-form ``u`` quantities and Bell candidates of an X state."""
    c14, c23 = abs(x.rho14), abs(x.rho23)
    u1 = 4.0 * (c14 + c23) ** 2
    u2 = (x.rho11 + x.rho44 - x.rho22 - x.rho33) ** 2
    u3 = 4.0 * (c14 - c23) ** 2
    b1 = 2.0 * math.sqrt(u1 + u2)
    b2 = 2.0 * math.sqrt(u1 + u3)
    return BellDecomposition(u1, u2, u3, b1, b2, max(b1, b2))


def correlation_matrix(state: TwoQubitState) -> np.ndarray:
    """Spin correlation matrix ``T[i, j] = Tr[rho (sigma_i x sigma_j)]``."""
    return np.einsum("ab,ijba->ij", state.rho, _PAULI_PAIRS).real


def bell_max_general(state: TwoQubitState) -> float:
    """Maximal CHSH value from the two largest eigenvalues of ``T^T T``.

    Values below the classical bound 2 are returned as is.
    """
    t = correlation_matrix(state)
    m = np.linalg.eigvalsh(t.T @ t)
    return float(2.0 * math.sqrt(max(0.0, m[2] + m[1])))


def observable_direction(theta: float, phi: float) -> np.ndarray:
    return np.array([math.sin(theta) * math.cos(phi), math.sin(theta) * math.sin(phi), math.cos(theta)])


def spin_observable(theta: float, phi: float) -> np.ndarray:
    n = observable_direction(theta, phi)
    return n[0] * SIGMA_X + n[1] * SIGMA_Y + n[2] * SIGMA_Z


def bell_value_at_angles(state: TwoQubitState, angles) -> float:
    """CHSH combination for explicit measurement settings.

    ``angles`` is ``(theta_A, phi_A, theta'_A, phi'_A, theta_B, phi_B, theta'_B, phi'_B)``
    in radians.  Each correlator is evaluated as a trace against the full matrix.
    """
    angles = [float(v) for v in angles]
    if len(angles) != 8:
        raise ValueError(f"expected 8 angles, got {len(angles)}")
    oa = spin_observable(angles[0], angles[1])
    oa_p = spin_observable(angles[2], angles[3])
    ob = spin_observable(angles[4], angles[5])
    ob_p = spin_observable(angles[6], angles[7])

    def corr(x, y):
        return np.trace(state.rho @ np.kron(x, y)).real

    return float(abs(corr(oa, ob) + corr(oa, ob_p) + corr(oa_p, ob) - corr(oa_p, ob_p)))
