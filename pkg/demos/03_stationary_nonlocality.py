"""Which ohmicities leave a nonlocal stationary state?

At long times the concurrence freezes at C_inf = 2 max(0, r a b q_inf^n - (1-r)/4),
with n = 1 when qubit B is shielded from noise and n = 2 when both qubits
dephase.  Comparing C_inf with C_th(r) gives a window of s where CHSH
violation survives forever.

Run:  python3 demos/03_stationary_nonlocality.py
"""

import numpy as np

from dephasing_nonlocality import (
    EWLParams,
    asymptotic_concurrence,
    nonlocal_s_range,
    nonlocality_threshold,
    stationary_entanglement_condition,
)

params = EWLParams(r=0.99, a=1 / np.sqrt(2))
c_th = nonlocality_threshold(params.r)
print(f"r = {params.r}, a^2 = {params.a ** 2:.2f}, C_th = {c_th:.5f}\n")

print("    s    C_inf(n=1)  C_inf(n=2)")
for s in np.arange(1.5, 4.01, 0.25):
    c1 = asymptotic_concurrence(params, s, 1)
    c2 = asymptotic_concurrence(params, s, 2)
    mark = "  <- nonlocal (n=1)" if c1 > c_th else ""
    print(f"{s:5.2f}    {c1:.5f}     {c2:.5f}{mark}")

for n in (1, 2):
    nl = nonlocal_s_range(params, n)
    ent = stationary_entanglement_condition(params, n)
    nl_text = "empty" if nl.is_empty else f"({nl.lower:.4f}, {nl.upper:.4f})"
    ent_text = "empty" if ent.is_empty else f"({ent.lower:.4f}, {ent.upper:.4f})"
    print(f"\nn={n}: stationary nonlocality for s in {nl_text}")
    print(f"     stationary entanglement for s in {ent_text}")
