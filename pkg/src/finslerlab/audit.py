"""Cross-checks of every Kropina closed form against its independent route.

Each row of an :class:`AuditReport` is the largest residual of one comparison
over a set of directions.  Residuals are reported, never asserted: a large
value documents a disagreement between an expanded closed form and the
reference computation.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import HomogeneousSpec, alpha_beta_s
from .curvature import (mean_berwald_analytic, mean_berwald_closed, mean_berwald_oracle,
                        omega_bundle, omega_y_derivatives, s_curvature_generic,
                        s_curvature_kropina)
from .phi import Kropina, ab_scalars_generic, ab_scalars_kropina

SCALAR_FIELDS = ("Q", "Qp", "Qpp", "Delta", "Phi")


def rel_residual(a: float, b: float) -> float:
    scale = max(abs(a), abs(b))
    return 0.0 if scale == 0.0 else abs(a - b) / scale


@dataclass(frozen=True)
class AuditRow:
    key: str
    label: str
    value: float


@dataclass(frozen=True)
class AuditReport:
    m: float
    directions: np.ndarray
    rows: tuple[AuditRow, ...]

    def __getitem__(self, key: str) -> float:
        for row in self.rows:
            if row.key == key:
                return row.value
        raise KeyError(key)


ROWS = (
    ("scalars", "kropina scalars vs generic jets (max rel)"),
    ("s_closed", "kropina closed-form S vs generic S (max rel)"),
    ("omega_j", "expanded dOmega/dy vs chain rule (max abs)"),
    ("omega_ij", "expanded d2Omega/dy2 vs chain rule (max abs)"),
    ("e_closed_omega", "closed-form E, A = Omega, vs oracle (max abs)"),
    ("e_closed_aterm", "closed-form E, A = Omega<[v,y],y>/alpha, vs oracle (max abs)"),
    ("e_closed_asym", "closed-form E asymmetry (max abs)"),
    ("e_analytic", "chain-rule E vs oracle (max abs)"),
    ("e_richardson", "finite-difference E vs oracle (max abs)"),
    ("oracle_euler", "oracle |E y| (max abs)"),
)


def run_audit(spec: HomogeneousSpec, m: float, directions) -> AuditReport:
    dirs = np.asarray(directions, dtype=float).reshape(-1, spec.n)
    model = Kropina(m)
    acc = dict.fromkeys((key for key, _ in ROWS), 0.0)
    for y in dirs:
        alpha, _, s = alpha_beta_s(spec, y)
        gen = ab_scalars_generic(model, s, spec.b2, spec.n)
        closed = ab_scalars_kropina(m, s, spec.b2, spec.n)
        for f in SCALAR_FIELDS:
            acc["scalars"] = max(acc["scalars"], rel_residual(getattr(gen, f), getattr(closed, f)))
        acc["s_closed"] = max(acc["s_closed"], rel_residual(s_curvature_kropina(spec, m, y),
                                                            s_curvature_generic(spec, model, y)))

        od = omega_y_derivatives(omega_bundle(m, s, spec.b2, spec.n), alpha, y, spec.v, spec.metric)
        acc["omega_j"] = max(acc["omega_j"], od.discrepancy_j)
        acc["omega_ij"] = max(acc["omega_ij"], od.discrepancy_ij)

        oracle = mean_berwald_oracle(spec, model, y)
        c_om = mean_berwald_closed(spec, m, y, "omega", oracle=oracle)
        c_at = mean_berwald_closed(spec, m, y, "a_term", oracle=oracle)
        an = mean_berwald_analytic(spec, m, y, oracle=oracle)
        fd = mean_berwald_oracle(spec, model, y, method="richardson")
        acc["e_closed_omega"] = max(acc["e_closed_omega"], c_om.residual_vs_oracle)
        acc["e_closed_aterm"] = max(acc["e_closed_aterm"], c_at.residual_vs_oracle)
        acc["e_closed_asym"] = max(acc["e_closed_asym"], c_om.asymmetry, c_at.asymmetry)
        acc["e_analytic"] = max(acc["e_analytic"], an.residual_vs_oracle)
        acc["e_richardson"] = max(acc["e_richardson"], float(np.max(np.abs(fd.E - oracle.E))))
        acc["oracle_euler"] = max(acc["oracle_euler"], float(np.max(np.abs(oracle.E @ y))))
    rows = tuple(AuditRow(key, label, acc[key]) for key, label in ROWS)
    return AuditReport(m=float(m), directions=dirs, rows=rows)
