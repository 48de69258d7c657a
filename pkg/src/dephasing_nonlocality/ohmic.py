"""Single-qubit pure dephasing by a zero-temperature Ohmic-class bosonic bath.

Times are dimensionless, ``tau = omega_c * t``, and rates are in units of
``omega_c``.  Only the spectral density depends on ``omega_c`` explicitly.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass

from scipy.integrate import quad
from scipy.optimize import minimize_scalar
from scipy.special import gamma

from .errors import DomainError, NumericalError

S_ZERO_WINDOW = 1e-8
QUAD_EPSABS = 1e-10
SBAR_BRACKET = (1.0 + 1e-6, 10.0)
SBAR_XTOL = 1e-9


@dataclass(frozen=True)
class OhmicEnv:
    """Ohmicity ``s`` and cutoff frequency ``omega_c`` of one local bath."""

    s: float
    omega_c: float = 1.0

    def __post_init__(self):
        if not (math.isfinite(self.s) and self.s >= 0.0):
            raise DomainError(f"ohmicity s must be >= 0, got {self.s!r}")
        if not (math.isfinite(self.omega_c) and self.omega_c > 0.0):
            raise DomainError(f"omega_c must be > 0, got {self.omega_c!r}")


def _check_tau(tau: float) -> float:
    tau = float(tau)
    if not (tau >= 0.0) or math.isinf(tau):
        raise DomainError(f"tau must be finite and >= 0, got {tau!r}")
    return tau


def spectral_density(env: OhmicEnv, omega: float) -> float:
    """``J(omega) = omega^s omega_c^(1-s) exp(-omega/omega_c)``."""
    if omega < 0.0:
        raise DomainError(f"omega must be >= 0, got {omega!r}")
    s, wc = env.s, env.omega_c
    if omega == 0.0:
        return wc if s == 0.0 else 0.0
    return omega ** s * wc ** (1.0 - s) * math.exp(-omega / wc)


def dephasing_rate(env: OhmicEnv, tau: float) -> float:
    """Dephasing rate gamma(tau) in units of omega_c; negative values signal backflow."""
    tau = _check_tau(tau)
    s = env.s
    theta = math.atan(tau)
    if s < S_ZERO_WINDOW:
        # Gamma(s) sin(s x) -> x as s -> 0
        return theta
    return (1.0 + tau * tau) ** (-s / 2.0) * gamma(s) * math.sin(s * theta)


def _closed_form(s: float, tau: float) -> float:
    # With R = sqrt(1 + tau^2) and theta = atan(tau) the bracket of the closed
    # form collapses to 1 - R^(1-s) cos((s-1) theta).  Splitting it as below
    # keeps full relative precision as s -> 1.
    eps = s - 1.0
    if eps == 0.0:
        return math.log1p(tau * tau)
    log_r = 0.5 * math.log1p(tau * tau)
    theta = math.atan(tau)
    decay = math.exp(-eps * log_r)
    bracket = -math.expm1(-eps * log_r) + decay * 2.0 * math.sin(0.5 * eps * theta) ** 2
    return 2.0 * gamma(s) * bracket / eps


def dephasing_factor_closed(env: OhmicEnv, tau: float) -> float:
    """Closed-form dephasing factor Lambda(tau).

    The bath with ``s = 0`` has no usable closed form and is handed to
    :func:`dephasing_factor_quadrature`.
    """
    tau = _check_tau(tau)
    if env.s < S_ZERO_WINDOW:
        return dephasing_factor_quadrature(env, tau)
    return max(0.0, _closed_form(env.s, tau))


def dephasing_factor_quadrature(env: OhmicEnv, tau: float) -> float:
    """Lambda(tau) as ``2 * integral_0^tau gamma``, by adaptive Gauss-Kronrod quadrature."""
    tau = _check_tau(tau)
    if tau == 0.0:
        return 0.0
    value, abserr, info = quad(
        lambda x: 2.0 * dephasing_rate(env, x),
        0.0,
        tau,
        epsabs=QUAD_EPSABS,
        epsrel=1e-13,
        limit=500,
        full_output=True,
    )[:3]
    if abserr > QUAD_EPSABS * max(1.0, abs(value)) * 10:
        raise NumericalError(f"quadrature of the dephasing rate did not converge (s={env.s}, tau={tau}, err={abserr:.2e})")
    return value


def dephasing_factor_asymptotic(s: float) -> float:
    """Long-time limit of Lambda: ``inf`` for ``s <= 1``, else ``2 Gamma(s)/(s-1)``."""
    if s < 0.0:
        raise DomainError(f"ohmicity s must be >= 0, got {s!r}")
    if s <= 1.0:
        return math.inf
    return 2.0 * gamma(s) / (s - 1.0)


def coherence_factor(env: OhmicEnv, tau: float) -> float:
    """Single-qubit coherence ``q(tau) = exp(-Lambda(tau))``."""
    return math.exp(-dephasing_factor_closed(env, tau))


def asymptotic_coherence(s: float) -> float:
    return math.exp(-dephasing_factor_asymptotic(s))


@functools.lru_cache(maxsize=None)
def find_sbar() -> tuple[float, float]:
    """Ohmicity that minimizes the asymptotic dephasing factor, and that minimum."""
    res = minimize_scalar(
        dephasing_factor_asymptotic,
        bounds=SBAR_BRACKET,
        method="bounded",
        options={"xatol": SBAR_XTOL},
    )
    if not res.success:
        raise NumericalError(f"minimization of the asymptotic dephasing factor failed: {res.message}")
    return float(res.x), float(res.fun)
