"""S-curvature of a Kropina metric on the 2-d solvable group.

The Lie algebra has a single bracket [e1, e2] = e2.  We put the identity
inner product on it, take the one-form dual to v = (0.5, 0), and look at the
Kropina metric F = alpha^3 / beta^2 (m = 2).
"""

import numpy as np

from finslerlab import (HomogeneousSpec, Kropina, alpha_beta_s, bracket_pairings,
                        s_curvature_generic, s_curvature_kropina, validate_spec)

spec = HomogeneousSpec.from_structure_constants(np.eye(2), [0.5, 0.0], {(0, 1): {1: 1.0}})
print(validate_spec(spec))
print("b =", spec.b)

# At y = (1, 1): alpha = sqrt(2), beta = 1/2.  The bracket [v, y] = 0.5 e2
# pairs with y to 1/2 and with v to 0, so only the first term survives.
y = np.array([1.0, 1.0])
alpha, beta, s = alpha_beta_s(spec, y)
print(f"alpha = {alpha:.6f}, beta = {beta}, s = {s:.6f}")
print("<[v,y],y>, <[v,y],v> =", bracket_pairings(spec, y))

# Two independent routes: the closed Kropina form, and the generic
# (alpha, beta) expression with Q, Delta, Phi built from jets of phi.
S_closed = s_curvature_kropina(spec, 2.0, y)
S_generic = s_curvature_generic(spec, Kropina(2.0), y)
print(f"closed form  S = {S_closed!r}")
print(f"generic      S = {S_generic!r}")
print(f"exact 16/9     = {16 / 9!r}")

# S is positively 1-homogeneous, so doubling y doubles S.
print("S(2y) / S(y) =", s_curvature_kropina(spec, 2.0, 2 * y) / S_closed)

# Sweep the unit circle over the half-plane beta > 0.  S vanishes along v
# itself (theta = 0, where [v, y] = 0) and is even in theta here.
theta = np.linspace(-1.4, 1.4, 9)
for t in theta:
    u = np.array([np.cos(t), np.sin(t)])
    print(f"theta = {t:+.2f}  S = {s_curvature_kropina(spec, 2.0, u):+.6f}")
