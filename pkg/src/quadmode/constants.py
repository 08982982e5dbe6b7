"""Physical constants (CODATA 2018), SI units."""

HBAR = 1.054571817e-34    # reduced Planck constant, J*s
K_B = 1.380649e-23        # Boltzmann constant, J/K
C_LIGHT = 2.99792458e8    # speed of light in vacuum, m/s
