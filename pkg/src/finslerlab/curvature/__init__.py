from .berwald import (MeanBerwaldResult, mean_berwald_analytic, mean_berwald_closed,
                      mean_berwald_oracle)
from .isotropy import IsotropyVerdict, classify_isotropy, sample_directions
from .omega import OmegaBundle, OmegaYDerivatives, omega_bundle, omega_y_derivatives
from .scurvature import (CovDerivData, kropina_omega, s_curvature_along, s_curvature_generic,
                         s_curvature_kropina, s_curvature_local)

__all__ = [
    "CovDerivData", "IsotropyVerdict", "MeanBerwaldResult", "OmegaBundle", "OmegaYDerivatives",
    "classify_isotropy", "kropina_omega", "mean_berwald_analytic", "mean_berwald_closed",
    "mean_berwald_oracle", "omega_bundle", "omega_y_derivatives", "s_curvature_along",
    "s_curvature_generic", "s_curvature_kropina", "s_curvature_local", "sample_directions",
]
