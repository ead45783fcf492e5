"""Physical constants (CODATA via scipy) and experiment-scale defaults."""

import numpy as np
from scipy import constants as _sc

C = _sc.c
HBAR = _sc.hbar
MU_B = _sc.physical_constants["Bohr magneton"][0]

TWO_PI = 2.0 * np.pi

# Rb D1 natural linewidth, rad/s
GAMMA_RB_D1 = TWO_PI * 5.7e6
