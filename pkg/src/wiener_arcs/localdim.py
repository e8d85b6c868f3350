"""Ball measures and log-log local dimension estimates."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .arcs import CircleArc, LimitMethod, SeriesResult, arc_measure
from .coefficients import CoefficientProvider, CosineDensity, make_provider
from .errors import CertificateError, DegenerateSignalError

HYPOTHESIS_TERMS = 1_000_000
SIGNAL_FACTOR = 10.0
SERIES_SLACK = 1e-6


@dataclass(frozen=True)
class DimensionFit:
    x: float
    radii: tuple[float, ...]
    log_measures: tuple[float, ...]
    slope: float
    intercept: float
    residual: float
    hypothesis_sum: float
    hypothesis_met: bool
    hypothesis_note: str
    # |mu(B_r) - 2r| / 2r per radius; bounded by 2 * hypothesis_sum in theory
    correction_ratios: tuple[float, ...]


def ball_result(provider: CoefficientProvider, x: float, r: float,
                n_terms: int) -> SeriesResult:
    if not provider.is_continuous:
        raise CertificateError("ball measures via the fast path need a continuous measure")
    if not 0.0 < r < min(x, 1.0 - x):
        raise ValueError(f"radius {r!r} must satisfy 0 < r < min(x, 1 - x)")
    return arc_measure(provider, CircleArc(x - r, x + r), n_terms,
                       LimitMethod.SKIPPED_CONTINUOUS)


def ball_measure(provider: CoefficientProvider, x: float, r: float,
                 n_terms: int = 10_000) -> float:
    """mu(B_r(x)); the open ball and [x - r, x + r) agree for continuous mu."""
    return ball_result(provider, x, r, n_terms).value


def hypothesis_sum(provider: CoefficientProvider,
                   n_terms: int = HYPOTHESIS_TERMS) -> tuple[float, bool, str]:
    """sum_{n>=1} |mu_hat(n)|, whether it is exact, and a note.

    Exact for measures with finitely many nonzero coefficients; otherwise
    the truncated sum is only a lower bound.
    """
    if provider.bandlimit is not None:
        k = provider.bandlimit
        total = float(np.sum(np.abs(provider.coefficients(k)))) if k else 0.0
        return total, True, f"exact finite sum over {k} coefficients"
    total = float(np.sum(np.abs(provider.coefficients(n_terms))))
    return total, False, f"truncated at {n_terms} terms; lower bound only"


def local_dimension(provider: CoefficientProvider, x: float, r_max: float,
                    r_min: float, points: int = 10, n_terms: int = 10_000,
                    hypothesis_terms: int = HYPOTHESIS_TERMS) -> DimensionFit:
    """Least-squares slope of log mu(B_r(x)) against log r.

    Radii are geometric from r_max down to r_min.  Raises
    DegenerateSignalError when a ball measure does not exceed ten times its
    own tolerance (tail estimate plus 1e-6).
    """
    if not 0.0 < r_min < r_max < min(x, 1.0 - x):
        raise ValueError("need 0 < r_min < r_max < min(x, 1 - x)")
    if points < 3:
        raise ValueError("need at least 3 radii")
    radii = np.geomspace(r_max, r_min, points)
    values = []
    ratios = []
    for r in radii:
        res = ball_result(provider, x, float(r), n_terms)
        tol = res.tail_estimate + SERIES_SLACK
        if not res.value > SIGNAL_FACTOR * tol:
            raise DegenerateSignalError(
                f"ball measure {res.value:.3g} at radius {r:.6g} is below "
                f"{SIGNAL_FACTOR:g} x tolerance {tol:.3g}", float(r))
        values.append(res.value)
        ratios.append(abs(res.value - 2.0 * r) / (2.0 * r))
    log_r = np.log(radii)
    log_m = np.log(np.array(values))
    slope, intercept = np.polyfit(log_r, log_m, 1)
    fitted = slope * log_r + intercept
    residual = float(np.sqrt(np.mean((log_m - fitted) ** 2)))
    hsum, exact, note = hypothesis_sum(provider, hypothesis_terms)
    return DimensionFit(
        x=x,
        radii=tuple(float(r) for r in radii),
        log_measures=tuple(float(v) for v in log_m),
        slope=float(slope),
        intercept=float(intercept),
        residual=residual,
        hypothesis_sum=hsum,
        hypothesis_met=exact and hsum < 0.5,
        hypothesis_note=note,
        correction_ratios=tuple(ratios),
    )


def example_measure(a) -> CosineDensity:
    """Probability measure with density 1 + sum a_n cos(2 pi n t).

    Its coefficients are mu_hat(n) = a_n / 2 for n >= 1.
    """
    spec = CosineDensity(tuple(float(v) for v in a))
    make_provider(spec)  # validates sum |a_n| < 1
    return spec
