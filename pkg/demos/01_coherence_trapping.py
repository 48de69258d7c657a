"""Coherence trapping by an Ohmic-class bath.

A qubit in a zero-temperature bath with spectral density w^s exp(-w/wc)
loses coherence as q(tau) = exp(-Lambda(tau)).  For s <= 1 Lambda grows
without bound.  For s > 1 it saturates at Lambda_inf = 2 Gamma(s-1), so part
of the coherence is trapped forever.  The best trapping happens at sbar.

Run:  python3 demos/01_coherence_trapping.py
"""

import numpy as np

from dephasing_nonlocality import (
    OhmicEnv,
    coherence_factor,
    dephasing_factor_asymptotic,
    dephasing_factor_closed,
    dephasing_rate,
    find_sbar,
)

taus = np.array([0.0, 0.5, 1.0, 2.0, 5.0, 10.0, 100.0, 1e4])

# Lambda(tau) for a sub-Ohmic, the Ohmic and three super-Ohmic baths
print("Lambda(tau)")
print("    s  " + "".join(f"{t:>10g}" for t in taus) + "    Lambda_inf")
for s in (0.5, 1.0, 1.5, 2.46, 4.0):
    env = OhmicEnv(s)
    row = [dephasing_factor_closed(env, t) for t in taus]
    print(f"{s:5.2f}  " + "".join(f"{v:10.4f}" for v in row) + f"    {dephasing_factor_asymptotic(s):10.4f}")

# for s > 2 the rate turns negative once s atan(tau) passes pi: coherence flows back
env = OhmicEnv(3.0)
grid = np.linspace(0.0, 10.0, 2001)
rate = np.array([dephasing_rate(env, t) for t in grid])
print(f"\ns=3: gamma(tau) first negative near tau = {grid[rate < 0].min():.3f} (tan(pi/3) = {np.tan(np.pi / 3):.3f})")

# the ohmicity that traps the most coherence
sbar, lam_min = find_sbar()
print(f"\nsbar = {sbar:.6f}, Lambda_inf(sbar) = {lam_min:.6f}")
print(f"trapped coherence at sbar: q_inf = {np.exp(-lam_min):.6f}")
print(f"q(tau=1e4) at sbar        = {coherence_factor(OhmicEnv(sbar), 1e4):.6f}")
