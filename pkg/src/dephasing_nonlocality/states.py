"""Two-qubit states: full density matrices, X states and the EWL family.

All matrices are written in the ordered basis ``|11>, |10>, |01>, |00>``.
Single-qubit factors use the ordered basis ``(|1>, |0>)`` so that the
standard Pauli matrices apply unchanged and ``|1>`` is the ``sigma_z = +1``
state.  Qubit A is the first tensor factor.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError

HERMITIAN_TOL = 1e-12
TRACE_TOL = 1e-12
PSD_TOL = 1e-10
X_POSITIVITY_TOL = 1e-12
OFF_X_TOL = 1e-10

# (row, col) pairs that are structurally zero in an X state.
_OFF_X = [(i, j) for i in range(4) for j in range(4) if i != j and i + j != 3]


class Flavor(str, enum.Enum):
    """Which Bell-like pure part an EWL state is built on."""

    ONE_EXCITATION = "rho1"  # a|01> + b|10>
    TWO_EXCITATION = "rho2"  # a|00> + b|11>


@dataclass(frozen=True)
class TwoQubitState:
    """A validated 4x4 density matrix.

    The stored array is a private read-only copy.
    """

    rho: np.ndarray

    def __post_init__(self):
        rho = np.array(self.rho, dtype=complex)
        if rho.shape != (4, 4):
            raise DomainError(f"density matrix must be 4x4, got shape {rho.shape}")
        if not np.all(np.isfinite(rho)):
            raise DomainError("density matrix has non-finite entries")
        herm_err = np.max(np.abs(rho - rho.conj().T))
        if herm_err > HERMITIAN_TOL:
            raise DomainError(f"density matrix not Hermitian (max deviation {herm_err:.3e})")
        tr = np.trace(rho)
        if abs(tr - 1.0) > TRACE_TOL:
            raise DomainError(f"density matrix trace is {tr.real:.15g}, expected 1")
        lam_min = np.linalg.eigvalsh(0.5 * (rho + rho.conj().T))[0]
        if lam_min < -PSD_TOL:
            raise DomainError(f"density matrix not positive semidefinite (min eigenvalue {lam_min:.3e})")
        rho.setflags(write=False)
        object.__setattr__(self, "rho", rho)

    @property
    def purity(self) -> float:
        return float(np.real(np.trace(self.rho @ self.rho)))

    def __eq__(self, other):
        if not isinstance(other, TwoQubitState):
            return NotImplemented
        return bool(np.array_equal(self.rho, other.rho))

    __hash__ = None


@dataclass(frozen=True)
class XState:
    """Nonzero entries of an X-shaped density matrix.

    ``rho14`` couples ``|11>`` with ``|00>``; ``rho23`` couples ``|10>`` with ``|01>``.
    """

    rho11: float
    rho22: float
    rho33: float
    rho44: float
    rho14: complex = 0j
    rho23: complex = 0j

    def __post_init__(self):
        diag = (self.rho11, self.rho22, self.rho33, self.rho44)
        for name, value in zip(("rho11", "rho22", "rho33", "rho44"), diag):
            if not math.isfinite(value) or value < 0.0:
                raise DomainError(f"{name} must be a finite nonnegative probability, got {value!r}")
            object.__setattr__(self, name, float(value))
        if abs(math.fsum(diag) - 1.0) > TRACE_TOL:
            raise DomainError(f"diagonal sums to {math.fsum(diag):.15g}, expected 1")
        for name in ("rho14", "rho23"):
            object.__setattr__(self, name, complex(getattr(self, name)))
        if abs(self.rho14) > math.sqrt(self.rho11 * self.rho44) + X_POSITIVITY_TOL:
            raise DomainError("|rho14| exceeds sqrt(rho11*rho44); matrix would not be positive")
        if abs(self.rho23) > math.sqrt(self.rho22 * self.rho33) + X_POSITIVITY_TOL:
            raise DomainError("|rho23| exceeds sqrt(rho22*rho33); matrix would not be positive")


@dataclass(frozen=True)
class EWLParams:
    """Parameters of an extended Werner-like state.

    ``r`` is the weight of the pure part and ``a`` its real amplitude; the
    other amplitude is ``b = sqrt(1 - a**2)``.
    """

    r: float
    a: float
    flavor: Flavor = Flavor.ONE_EXCITATION

    def __post_init__(self):
        if not (0.0 <= self.r <= 1.0):
            raise DomainError(f"r must lie in [0, 1], got {self.r!r}")
        if not (0.0 <= self.a <= 1.0):
            raise DomainError(f"a must lie in [0, 1], got {self.a!r}")
        object.__setattr__(self, "flavor", Flavor(self.flavor))

    @property
    def b(self) -> float:
        return math.sqrt(1.0 - self.a * self.a)

    @classmethod
    def from_weight(cls, r: float, a2: float, flavor: Flavor | str = Flavor.ONE_EXCITATION) -> "EWLParams":
        """Build from the weight ``a**2`` instead of the amplitude."""
        if not (0.0 <= a2 <= 1.0):
            raise DomainError(f"a2 must lie in [0, 1], got {a2!r}")
        return cls(r, math.sqrt(a2), Flavor(flavor))


def make_ewl(params: EWLParams) -> XState:
    """Return ``r |psi><psi| + (1 - r)/4 * I`` as an X state."""
    r, a, b = params.r, params.a, params.b
    noise = (1.0 - r) / 4.0
    if params.flavor is Flavor.ONE_EXCITATION:
        # |10> carries amplitude b, |01> carries a.
        return XState(noise, r * b * b + noise, r * a * a + noise, noise, rho23=r * a * b)
    # |11> carries amplitude b, |00> carries a.
    return XState(r * b * b + noise, noise, noise, r * a * a + noise, rho14=r * a * b)


def purity(params: EWLParams) -> float:
    """Tr(rho^2) of the EWL state, ``(1 + 3 r^2) / 4``."""
    return (1.0 + 3.0 * params.r ** 2) / 4.0


def entanglement_bound_rbar(a: float) -> float:
    """Purity parameter above which the EWL state with amplitude ``a`` is entangled."""
    if not (0.0 < a < 1.0):
        raise DomainError(f"a must lie strictly inside (0, 1), got {a!r}: the pure part is a product state")
    return 1.0 / (1.0 + 4.0 * a * math.sqrt(1.0 - a * a))


def embed_x(x: XState) -> TwoQubitState:
    rho = np.diag(np.array([x.rho11, x.rho22, x.rho33, x.rho44], dtype=complex))
    rho[0, 3] = x.rho14
    rho[3, 0] = x.rho14.conjugate()
    rho[1, 2] = x.rho23
    rho[2, 1] = x.rho23.conjugate()
    return TwoQubitState(rho)


def project_x(state: TwoQubitState) -> XState:
    """Read the X entries of ``state``; fails if any other off-diagonal entry is nonzero."""
    rho = state.rho
    worst = max(abs(rho[i, j]) for i, j in _OFF_X)
    if worst > OFF_X_TOL:
        raise DomainError(f"state is not of X form: off-X entry of magnitude {worst:.3e}")
    return XState(
        float(rho[0, 0].real),
        float(rho[1, 1].real),
        float(rho[2, 2].real),
        float(rho[3, 3].real),
        rho14=complex(rho[0, 3]),
        rho23=complex(rho[1, 2]),
    )
