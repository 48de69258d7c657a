"""EWL states of two independent qubits under local pure dephasing.

Each qubit's coherence is multiplied by its own factor ``q(tau)``; the
populations never change.  This module turns those factors into the
concurrence and Bell-value trajectories, the concurrence level that certifies
CHSH violation, and the long-time quantities of the Ohmic-class model.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy.optimize import brentq

from . import ohmic
from .correlations import bell_decomposition
from .errors import DomainError
from .ohmic import OhmicEnv
from .states import EWLParams, Flavor, XState, make_ewl

# Root-finding brackets for sublevel sets of the asymptotic dephasing factor.
S_LEFT_EDGE = 1.0 + 1e-6
S_RIGHT_EDGE = 50.0
ROOT_XTOL = 1e-12


@dataclass(frozen=True)
class DephasingPair:
    """Baths acting on qubits A and B; ``env_b=None`` means qubit B is isolated."""

    env_a: OhmicEnv
    env_b: Optional[OhmicEnv] = None

    @property
    def n(self) -> int:
        return 1 if self.env_b is None else 2

    @classmethod
    def identical(cls, s: float, omega_c: float = 1.0) -> "DephasingPair":
        env = OhmicEnv(s, omega_c)
        return cls(env, env)

    @classmethod
    def isolated_b(cls, s: float, omega_c: float = 1.0) -> "DephasingPair":
        return cls(OhmicEnv(s, omega_c), None)

    def coherences(self, tau: float) -> tuple[float, float]:
        q_a = ohmic.coherence_factor(self.env_a, tau)
        q_b = 1.0 if self.env_b is None else ohmic.coherence_factor(self.env_b, tau)
        return q_a, q_b


@dataclass(frozen=True)
class DynamicsSample:
    tau: float
    q_a: float
    q_b: float
    concurrence: float
    bell: float

    @property
    def nonlocal_(self) -> bool:
        return self.bell > 2.0

    def as_dict(self) -> dict:
        return {
            "tau": self.tau,
            "q_a": self.q_a,
            "q_b": self.q_b,
            "concurrence": self.concurrence,
            "bell": self.bell,
            "nonlocal": self.nonlocal_,
        }


@dataclass(frozen=True)
class Interval:
    """Open interval ``(lower, upper)`` of ohmicities; both ends ``None`` when empty."""

    lower: Optional[float]
    upper: Optional[float]

    @classmethod
    def empty(cls) -> "Interval":
        return cls(None, None)

    @property
    def is_empty(self) -> bool:
        return self.lower is None

    def __contains__(self, s: float) -> bool:
        return not self.is_empty and self.lower < s < self.upper


def _pair_factor(params: EWLParams) -> float:
    return params.r * params.a * params.b


def evolve_state(params: EWLParams, pair: DephasingPair, tau: float) -> XState:
    """Initial EWL state with its single coherence scaled by ``q_A q_B``."""
    x0 = make_ewl(params)
    q_a, q_b = pair.coherences(tau)
    scale = q_a * q_b
    if params.flavor is Flavor.ONE_EXCITATION:
        return XState(x0.rho11, x0.rho22, x0.rho33, x0.rho44, rho23=x0.rho23 * scale)
    return XState(x0.rho11, x0.rho22, x0.rho33, x0.rho44, rho14=x0.rho14 * scale)


def _concurrence_from_q(params: EWLParams, qq: float) -> float:
    return 2.0 * max(0.0, _pair_factor(params) * abs(qq) - (1.0 - params.r) / 4.0)


def concurrence_t(params: EWLParams, pair: DephasingPair, tau: float) -> float:
    q_a, q_b = pair.coherences(tau)
    return _concurrence_from_q(params, q_a * q_b)


def bell_t(params: EWLParams, pair: DephasingPair, tau: float) -> float:
    """Maximal Bell value from the concurrence, ``2 sqrt(r^2 + (C + (1-r)/2)^2)``.

    Only defined while the state is entangled; after sudden death use
    :func:`dephasing_nonlocality.correlations.bell_max_general`.
    """
    c = concurrence_t(params, pair, tau)
    if c <= 0.0:
        raise DomainError(
            f"Bell-concurrence relation needs C > 0, got C = {c} at tau = {tau}; "
            "use bell_max_general on the evolved state instead"
        )
    r = params.r
    return 2.0 * math.sqrt(r * r + (c + (1.0 - r) / 2.0) ** 2)


def bell_candidates_t(params: EWLParams, pair: DephasingPair, tau: float) -> tuple[float, float]:
    """The two Bell candidates ``(B1, B2)`` along the dephasing trajectory."""
    q_a, q_b = pair.coherences(tau)
    r, a, b = params.r, params.a, params.b
    qq = abs(q_a * q_b)
    b1 = 2.0 * math.sqrt(r * r + 4.0 * r * r * a * a * b * b * qq * qq)
    b2 = 4.0 * math.sqrt(2.0) * r * a * b * qq
    return b1, b2


def nonlocality_threshold(r: float) -> float:
    """Concurrence above which an evolved EWL state with purity parameter r violates CHSH."""
    if not (0.0 <= r <= 1.0):
        raise DomainError(f"r must lie in [0, 1], got {r!r}")
    return math.sqrt(1.0 - r * r) - (1.0 - r) / 2.0


def _check_n(n: int) -> int:
    if n not in (1, 2):
        raise DomainError(f"n must be 1 (qubit B isolated) or 2 (both qubits noisy), got {n!r}")
    return n


def asymptotic_concurrence(params: EWLParams, s: float, n: int) -> float:
    """Stationary concurrence when ``n`` qubits see a bath of ohmicity ``s``."""
    _check_n(n)
    q_inf = ohmic.asymptotic_coherence(s)
    return _concurrence_from_q(params, q_inf ** n)


def asymptotic_concurrence_pair(params: EWLParams, pair: DephasingPair) -> float:
    """Stationary concurrence for possibly different baths on A and B."""
    q_a = ohmic.asymptotic_coherence(pair.env_a.s)
    q_b = 1.0 if pair.env_b is None else ohmic.asymptotic_coherence(pair.env_b.s)
    return _concurrence_from_q(params, q_a * q_b)


def _sublevel_interval(level: float) -> Interval:
    """Set of s > 1 where the asymptotic dephasing factor is below ``level``."""
    sbar, lam_min = ohmic.find_sbar()
    if not (level > lam_min):
        return Interval.empty()

    def f(s):
        return ohmic.dephasing_factor_asymptotic(s) - level

    lower = 1.0 if f(S_LEFT_EDGE) <= 0.0 else brentq(f, S_LEFT_EDGE, sbar, xtol=ROOT_XTOL)
    upper = math.inf if f(S_RIGHT_EDGE) <= 0.0 else brentq(f, sbar, S_RIGHT_EDGE, xtol=ROOT_XTOL)
    return Interval(float(lower), float(upper))


def stationary_entanglement_condition(params: EWLParams, n: int) -> Interval:
    """Ohmicities ``s > 1`` for which entanglement survives at long times."""
    _check_n(n)
    r = params.r
    ab = params.a * params.b
    if ab == 0.0 or r == 0.0:
        return Interval.empty()
    if r == 1.0:
        return Interval(1.0, math.inf)
    ratio = 4.0 * r * ab / (1.0 - r)
    if ratio <= 1.0:
        return Interval.empty()
    return _sublevel_interval(math.log(ratio) / n)


def nonlocal_s_range(params: EWLParams, n: int) -> Interval:
    """Ohmicities ``s > 1`` whose stationary concurrence exceeds the nonlocality threshold."""
    _check_n(n)
    r = params.r
    c_th = nonlocality_threshold(r)
    if params.a * params.b == 0.0 or r == 0.0:
        return Interval.empty()
    if c_th == 0.0:
        return Interval(1.0, math.inf)

    def g(s):
        return asymptotic_concurrence(params, s, n) - c_th

    sbar, _ = ohmic.find_sbar()
    if g(sbar) <= 0.0:
        return Interval.empty()
    lower = 1.0 if g(S_LEFT_EDGE) > 0.0 else brentq(g, S_LEFT_EDGE, sbar, xtol=ROOT_XTOL)
    upper = math.inf if g(S_RIGHT_EDGE) > 0.0 else brentq(g, sbar, S_RIGHT_EDGE, xtol=ROOT_XTOL)
    return Interval(float(lower), float(upper))


def purity_lower_bound(a: float, s: float, n: int) -> float:
    """Smallest purity parameter r* such that every r > r* keeps the stationary state nonlocal."""
    _check_n(n)
    if not (0.0 < a < 1.0):
        raise DomainError(f"a must lie strictly inside (0, 1), got {a!r}")
    lam_inf = ohmic.dephasing_factor_asymptotic(s)
    if math.isinf(lam_inf):
        return 1.0
    return 1.0 / math.sqrt(1.0 + 4.0 * (1.0 - a * a) * a * a * math.exp(-2.0 * n * lam_inf))


def sample_at(params: EWLParams, pair: DephasingPair, tau: float) -> DynamicsSample:
    q_a, q_b = pair.coherences(tau)
    c = concurrence_t(params, pair, tau)
    if c > 0.0:
        bell = bell_t(params, pair, tau)
    else:
        bell = bell_decomposition(evolve_state(params, pair, tau)).bmax
    return DynamicsSample(float(tau), q_a, q_b, c, bell)


def trace_dynamics(params: EWLParams, pair: DephasingPair, tau_max: float, steps: int) -> list[DynamicsSample]:
    """Sample the trajectory on ``steps`` uniformly spaced times in ``[0, tau_max]``."""
    if steps < 2:
        raise DomainError(f"steps must be >= 2, got {steps!r}")
    if not (tau_max > 0.0 and math.isfinite(tau_max)):
        raise DomainError(f"tau_max must be finite and > 0, got {tau_max!r}")
    return [sample_at(params, pair, tau) for tau in np.linspace(0.0, tau_max, steps)]
