"""Which homogeneous Kropina spaces have isotropic S-curvature?

For these spaces isotropic S-curvature forces S = 0, so the classifier samples
regular directions and checks S against the size of the terms that would
have to cancel.
"""

import numpy as np

from finslerlab import HomogeneousSpec, classify_isotropy, load_spec

HERE = __file__.rsplit("/", 1)[0]

for name in ("abelian3d", "so3", "solvable2d"):
    loaded = load_spec(f"{HERE}/specs/{name}.json")
    verdict = classify_isotropy(loaded.spec, loaded.phi.m)
    print(f"{name:>11}: {verdict.label:<24} max|S| = {verdict.max_abs_s:.3e}, "
          f"term scale = {verdict.scale:.3e}")

# so(3) with a bi-invariant inner product: ad_v is skew, so <[v,y],y> = 0 and
# <[v,y],v> = 0 for every y, and S vanishes although the algebra is not abelian.
# The Heisenberg algebra is different: [e1, e2] = e3 with v = e1/2 gives
# <[v,y],y> = y2 y3 / 2, which is not identically zero.
heis = HomogeneousSpec.from_structure_constants(np.eye(3), [0.5, 0, 0], {(0, 1): {2: 1.0}})
print(" heisenberg:", classify_isotropy(heis, 2.0).label)
