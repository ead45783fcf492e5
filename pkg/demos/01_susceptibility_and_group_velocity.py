"""
EIT susceptibility and slow light
=================================

Scan the two-photon detuning across the transparency window, look at the
absorptive and dispersive parts of chi, and turn the dispersion slope into a
group velocity.
"""

import numpy as np

from slowlight_sg import MediumParams, calibrate_to_vg, eit_window, group_velocity, susceptibility
from slowlight_sg.output import write_svg

# --- A warm Rb cell on the D1 line ---
p = MediumParams()
w = eit_window(p)
print(f"EIT window Omega^2/Gamma = {w:.4g} rad/s ({w / 2 / np.pi / 1e3:.1f} kHz)")

delta = np.linspace(-4 * w, 4 * w, 801)
chi = susceptibility(p, delta).chi
print(f"Im chi at resonance {chi.imag[400]:.3e}, at 4 windows {chi.imag[0]:.3e}")

write_svg("susceptibility.svg", delta, [("Re chi", chi.real), ("Im chi", chi.imag)],
          "two-photon detuning (rad/s)", "chi", "EIT susceptibility")

# --- Group velocity from dn/domega ---
print(f"default medium: v_g = {group_velocity(p):.1f} m/s")

# the stronger the control field, the faster the light
for f in (250e3, 500e3, 1e6, 2e6):
    q = MediumParams(rabi_control=2 * np.pi * f)
    print(f"  Omega = 2 pi x {f / 1e3:6.0f} kHz -> v_g = {group_velocity(q):9.1f} m/s")

# --- Hit a target velocity by tuning the atomic density ---
q = calibrate_to_vg(p, 150.0)
print(f"calibrated to 150 m/s: coupling/Gamma = {q.coupling_strength:.3e}, v_g = {group_velocity(q):.2f} m/s")
