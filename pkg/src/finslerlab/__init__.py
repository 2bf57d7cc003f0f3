"""S-curvature and mean Berwald curvature of homogeneous (alpha, beta)-Finsler spaces."""

from .algebra import (HomogeneousSpec, ValidationReport, alpha_beta_s, bracket_m,
                      bracket_pairings, validate_spec)
from .curvature import (CovDerivData, IsotropyVerdict, MeanBerwaldResult, OmegaBundle,
                        classify_isotropy, mean_berwald_analytic, mean_berwald_closed,
                        mean_berwald_oracle, omega_bundle, omega_y_derivatives,
                        s_curvature_generic, s_curvature_kropina, s_curvature_local)
from .errors import (ClassificationError, DegenerateMetricError, DomainError, FinslerError,
                     InputError, NumericalError, QuadratureDivergenceError, SingularDirectionError,
                     SingularityError, SpecParseError)
from .jets import Jet, Jet2
from .phi import (RIEMANNIAN, AlphaBetaScalars, Custom, Kropina, PhiModel, Polynomial, Randers,
                  ab_scalars_generic, ab_scalars_kropina, phi_jet, validity_check)
from .specfile import load_spec, parse_spec
from .volume import BUSEMANN_HAUSDORFF, VolumeFormKind, f_of_b, fb_log_derivative, holmes_thompson

__version__ = "0.1.0"
