"""How pure must the initial state be?

For every r above r*(a, s, n) the stationary state violates CHSH.  The bound
is smallest at a = 1/sqrt(2) and s = sbar, where the bath traps the most
coherence.

Run:  python3 demos/04_purity_bounds.py
"""

import numpy as np

from dephasing_nonlocality import find_sbar, purity_lower_bound

sbar, _ = find_sbar()

print(f"r* at s = sbar = {sbar:.4f}")
print("   a^2      n=1       n=2")
for a2 in np.linspace(0.1, 0.9, 9):
    a = np.sqrt(a2)
    print(f"  {a2:.2f}   {purity_lower_bound(a, sbar, 1):.6f}  {purity_lower_bound(a, sbar, 2):.6f}")

# scan (a^2, s) and confirm where the minimum sits
a2_grid = np.linspace(0.05, 0.95, 91)
s_grid = np.linspace(1.2, 5.0, 381)
table = np.array([[purity_lower_bound(np.sqrt(a2), s, 1) for s in s_grid] for a2 in a2_grid])
i, j = np.unravel_index(np.argmin(table), table.shape)
print(f"\ngrid minimum of r*(n=1): {table[i, j]:.6f} at a^2 = {a2_grid[i]:.2f}, s = {s_grid[j]:.2f}")
