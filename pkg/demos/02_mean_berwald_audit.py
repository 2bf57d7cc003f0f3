"""Mean Berwald curvature: the exact oracle against the closed forms.

E_ij is half the y-Hessian of the S-curvature.  The oracle differentiates S
along lines with second-order jets, so it is exact up to rounding.  The
expanded closed form is compared under both readings of its prefactor,
alongside the chain-rule expression derived here.
"""

import numpy as np

from finslerlab import (HomogeneousSpec, Kropina, load_spec, mean_berwald_analytic, mean_berwald_closed,
                        mean_berwald_oracle)
from finslerlab.audit import run_audit
from finslerlab.curvature import sample_directions

HERE = __file__.rsplit("/", 1)[0]
loaded = load_spec(f"{HERE}/specs/solvable2d.json")
spec, m = loaded.spec, loaded.phi.m

np.set_printoptions(precision=6, suppress=True)
y = np.array([2.0, -1.0])
oracle = mean_berwald_oracle(spec, Kropina(m), y)
print("E oracle at y = (2, -1):\n", oracle.E)
print("times 27:\n", 27 * oracle.E)  # exact value is [[-4, -8], [-8, -16]] / 27
print("E y =", oracle.E @ y)        # S is 1-homogeneous, so its Hessian annihilates y

# In 2-d with this bracket, <[v,y],v> = 0 and the closed form happens to agree.
closed = mean_berwald_closed(spec, m, y, oracle=oracle)
print("closed-form residual (solvable):", closed.residual_vs_oracle)

# A generic 3-d algebra brings the <[v,y],v> terms back.
rng = np.random.default_rng(7)
a = rng.standard_normal((3, 3))
c = rng.standard_normal((3, 3, 3))
c -= c.transpose(1, 0, 2)
metric = a @ a.T + 3 * np.eye(3)
v = rng.standard_normal(3)
v *= 0.6 / np.sqrt(v @ metric @ v)
spec3 = HomogeneousSpec(metric, c, v)
y3 = sample_directions(spec3, 1, seed=1)[0]
ref = mean_berwald_oracle(spec3, Kropina(2.0), y3)
for reading in ("omega", "a_term"):
    res = mean_berwald_closed(spec3, 2.0, y3, reading, oracle=ref)
    print(f"closed form ({reading:6}): residual {res.residual_vs_oracle:.3e}, "
          f"asymmetry {res.asymmetry:.3e}")
an = mean_berwald_analytic(spec3, 2.0, y3, oracle=ref)
print(f"chain-rule form:       residual {an.residual_vs_oracle:.3e}")

# The full audit collects every comparison over a set of sampled directions.
report = run_audit(spec3, 2.0, sample_directions(spec3, 8, seed=42))
for row in report.rows:
    print(f"  {row.label:<64} {row.value:.3e}")
