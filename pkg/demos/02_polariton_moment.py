"""
Dark polaritons carry a magnetic moment
=======================================

The mixing angle sets both the group velocity and the magnetic moment. A
brute-force Fock-space calculation confirms mu_pol = 2 g_F mu_B sin^2(theta).
"""

import numpy as np

from slowlight_sg import FockSpace, PolaritonState, fock_moment, sg_deflection
from slowlight_sg.constants import MU_B

# --- From group velocity to moment ---
for vg in (3e8 / 2, 3e6, 3e3, 300.0):
    ps = PolaritonState.from_group_velocity(vg)
    print(f"v_g = {vg:10.3g} m/s  theta = {ps.theta:.6f}  mu_pol/mu_B = {ps.mu_pol / MU_B:.8f}")

# --- Exact check in a tiny Hilbert space ---
print("\n N  theta   fock / analytic - 1")
for n in (1, 3, 5, 8):
    for theta in (0.2, np.pi / 4, 1.2):
        ratio = fock_moment(FockSpace(n), theta) / PolaritonState.from_theta(theta).mu_pol
        print(f"{n:2d}  {theta:5.3f}   {ratio - 1:+.1e}")

# --- Stern-Gerlach deflection for the experimental geometry ---
ps = PolaritonState.from_group_velocity(290.0)
k = 2 * np.pi / 795e-9
alpha = sg_deflection(ps, 0.05, 9.1e-6, k)
print(f"\n5 cm cell, 290 m/s, 9.1e-6 T/m: alpha = {alpha:.3e} rad, "
      f"{alpha * 2.0 * 1e6:.1f} um on a camera 2 m away")
