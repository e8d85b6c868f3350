"""Recover arc measures, distribution functions, atoms and local dimensions
of probability measures on the circle from their Fourier coefficients."""

from .arcs import (CircleArc, LimitMethod, SeriesResult, arc_measure,
                   arc_measure_theorem, autocorrelation_arc, cdf, sawtooth,
                   sawtooth_series)
from .cantor import CantorSeriesPoint, cantor_exact, cantor_series
from .coefficients import (Atomic, Cantor, CoefficientProvider, Conjugate,
                           Convolution, CosineDensity, Lebesgue, MeasureSpec,
                           Mixture, cantor_product_depth, coefficient, dirac,
                           make_provider)
from .dsl import parse_measure, unparse
from .errors import (CertificateError, DegenerateSignalError,
                     MeasureValidationError, OracleUnsupported, ParseError)
from .fejer import (KernelSample, fejer_kernel, fejer_mean_aux,
                    fejer_sup_bound_check)
from .localdim import DimensionFit, ball_measure, example_measure, local_dimension
from .oracle import capability, oracle_arc, oracle_atom, oracle_cdf
from .wiener import AtomEstimate, Window, atom_mass

__version__ = "0.1.0"
