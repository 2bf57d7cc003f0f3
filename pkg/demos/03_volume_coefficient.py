"""The Busemann-Hausdorff volume coefficient f(b).

f(b) compares the Finsler volume to the Riemannian one.  It is 1 when phi is
identically 1, and for Randers (phi = 1 + s) in three dimensions the
integral has a closed form, f(b) = (1 - b^2)^2.
"""

import numpy as np

from finslerlab import RIEMANNIAN, Kropina, QuadratureDivergenceError, Randers, f_of_b, fb_log_derivative

for n in range(2, 9):
    print(f"phi = 1, n = {n}: f = {f_of_b(RIEMANNIAN, 0.5, n):.15f}")

for b in (0.1, 0.3, 0.5, 0.7, 0.9):
    f = f_of_b(Randers(), b, 3)
    print(f"Randers n = 3, b = {b}: f = {f:.12f}, (1 - b^2)^2 = {(1 - b * b) ** 2:.12f}")

# The log-derivative f'(b) / (b f(b)) enters the S-curvature of a general
# (alpha, beta) metric through the distortion.  For Randers n = 3 it is
# -4 / (1 - b^2), i.e. -16/3 at b = 1/2.
print("Randers log-derivative at b = 0.5:", fb_log_derivative(Randers(), 0.5, 3))

# Kropina with even m is defined for every sign of beta except beta = 0,
# where 1 / phi^n = (b cos t)^(mn) vanishes, so the integral is finite.
for b in np.linspace(0.2, 0.8, 4):
    print(f"Kropina m = 2, n = 2, b = {b:.1f}: f = {f_of_b(Kropina(2), b, 2):.6f}")

# With m < 0 the integrand 1 / phi^n has a non-integrable pole at beta = 0.
try:
    f_of_b(Kropina(-2), 0.5, 3)
except QuadratureDivergenceError as exc:
    print("Kropina m = -2:", exc)
