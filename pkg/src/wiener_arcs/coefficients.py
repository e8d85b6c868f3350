"""Measure descriptions and their exact Fourier coefficients.

Coefficients follow the convention mu_hat(n) = integral of e(-n x) d mu(x)
with e(x) = exp(2 pi i x) on the circle identified with [0, 1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Union

import numpy as np

from ._numerics import TWO_PI, expi
from .errors import MeasureValidationError

WEIGHT_TOL = 1e-12
CANTOR_EPS = 1e-14
MAX_INDEX = 2**31 - 1


@dataclass(frozen=True)
class Atomic:
    """Finite sum of point masses; ``atoms`` holds (position, weight)."""

    atoms: tuple[tuple[float, float], ...]


@dataclass(frozen=True)
class Lebesgue:
    pass


@dataclass(frozen=True)
class Cantor:
    """Uniform measure on the middle-thirds Cantor set."""


@dataclass(frozen=True)
class CosineDensity:
    """Density 1 + sum_k a_k cos(2 pi k t); ``coeffs`` is (a_1, ..., a_K)."""

    coeffs: tuple[float, ...]


@dataclass(frozen=True)
class Mixture:
    parts: tuple[tuple[float, "MeasureSpec"], ...]


@dataclass(frozen=True)
class Convolution:
    left: "MeasureSpec"
    right: "MeasureSpec"


@dataclass(frozen=True)
class Conjugate:
    """Reflection x -> 1 - x (mod 1) of the inner measure."""

    inner: "MeasureSpec"


MeasureSpec = Union[Atomic, Lebesgue, Cantor, CosineDensity, Mixture,
                    Convolution, Conjugate]


def dirac(p: float) -> Atomic:
    return Atomic(((float(p), 1.0),))


def validate(spec: MeasureSpec) -> None:
    """Raise MeasureValidationError unless every invariant of ``spec`` holds."""
    if isinstance(spec, Atomic):
        if not spec.atoms:
            raise MeasureValidationError("atomic measure needs at least one atom")
        seen = set()
        for p, w in spec.atoms:
            if not (math.isfinite(p) and 0.0 <= p < 1.0):
                raise MeasureValidationError(f"atom position {p!r} outside [0, 1)")
            if not (math.isfinite(w) and w > 0.0):
                raise MeasureValidationError(f"atom weight {w!r} must be positive")
            if p in seen:
                raise MeasureValidationError(f"duplicate atom position {p!r}")
            seen.add(p)
        total = math.fsum(w for _, w in spec.atoms)
        if abs(total - 1.0) > WEIGHT_TOL:
            raise MeasureValidationError(f"atom weights sum to {total!r}, not 1")
    elif isinstance(spec, (Lebesgue, Cantor)):
        pass
    elif isinstance(spec, CosineDensity):
        if not all(math.isfinite(a) for a in spec.coeffs):
            raise MeasureValidationError("non-finite cosine coefficient")
        s = math.fsum(abs(a) for a in spec.coeffs)
        if s >= 1.0:
            raise MeasureValidationError(
                f"sum of |a_k| is {s!r}; must be < 1 for a nonnegative density")
    elif isinstance(spec, Mixture):
        if not spec.parts:
            raise MeasureValidationError("mixture needs at least one part")
        for w, part in spec.parts:
            if not (math.isfinite(w) and w > 0.0):
                raise MeasureValidationError(f"mixture weight {w!r} must be positive")
            validate(part)
        total = math.fsum(w for w, _ in spec.parts)
        if abs(total - 1.0) > WEIGHT_TOL:
            raise MeasureValidationError(f"mixture weights sum to {total!r}, not 1")
    elif isinstance(spec, Convolution):
        validate(spec.left)
        validate(spec.right)
    elif isinstance(spec, Conjugate):
        validate(spec.inner)
    else:
        raise MeasureValidationError(f"unknown measure type {type(spec).__name__}")


def is_continuous(spec: MeasureSpec) -> bool:
    """Structural continuity certificate (no atoms)."""
    if isinstance(spec, Atomic):
        return not spec.atoms
    if isinstance(spec, (Lebesgue, Cantor, CosineDensity)):
        return True
    if isinstance(spec, Mixture):
        return all(is_continuous(part) for _, part in spec.parts)
    if isinstance(spec, Convolution):
        return is_continuous(spec.left) or is_continuous(spec.right)
    if isinstance(spec, Conjugate):
        return is_continuous(spec.inner)
    raise TypeError(type(spec).__name__)


def bandlimit(spec: MeasureSpec) -> int | None:
    """Largest n with possibly nonzero mu_hat(n), or None if unbounded."""
    if isinstance(spec, Lebesgue):
        return 0
    if isinstance(spec, CosineDensity):
        return len(spec.coeffs)
    if isinstance(spec, (Atomic, Cantor)):
        return None
    if isinstance(spec, Mixture):
        limits = [bandlimit(part) for _, part in spec.parts]
        return None if None in limits else max(limits)
    if isinstance(spec, Convolution):
        limits = [x for x in (bandlimit(spec.left), bandlimit(spec.right))
                  if x is not None]
        return min(limits) if limits else None
    if isinstance(spec, Conjugate):
        return bandlimit(spec.inner)
    raise TypeError(type(spec).__name__)


def cantor_product_depth(n: int, eps: float = CANTOR_EPS) -> int:
    """Smallest K with 2 pi |n| / 3**K < sqrt(2 eps).

    Every factor cos(2 pi n / 3**k) with k > K then lies within eps of 1,
    since 1 - cos(t) <= t**2 / 2.
    """
    if n == 0:
        raise ValueError("depth is undefined for n = 0")
    if eps <= 0:
        raise ValueError("eps must be positive")
    target = math.sqrt(2.0 * eps)
    n = abs(int(n))
    k = 0
    power = 1
    while TWO_PI * n / power >= target:
        k += 1
        power *= 3
    return k


def _cantor_depths(n: np.ndarray) -> np.ndarray:
    """Vector form of cantor_product_depth using the same comparisons."""
    target = math.sqrt(2.0 * CANTOR_EPS)
    depth = np.zeros(n.shape, dtype=np.int64)
    scaled = TWO_PI * n.astype(np.float64)
    power = 1
    while True:
        above = scaled / power >= target
        if not above.any():
            return depth
        depth += above
        power *= 3


def _cantor_values(n: np.ndarray) -> np.ndarray:
    """(-1)^n prod_{k<=K(n)} cos(2 pi n / 3^k) for positive int64 ``n``."""
    out = np.where(n % 2 == 0, 1.0, -1.0)
    depth = _cantor_depths(n)
    power = 1
    for k in range(1, int(depth.max()) + 1):
        power *= 3
        # exact reduction of n / 3^k modulo 1 while 3^k fits in int64
        if power < 2**62:
            frac = (n % power).astype(np.float64) / float(power)
        else:
            frac = n.astype(np.float64) / float(power)
        out = np.where(depth >= k, out * np.cos(TWO_PI * frac), out)
    return out


@dataclass(frozen=True, eq=False)
class CoefficientProvider:
    """Validated measure together with its Fourier coefficient sequence.

    Build instances through :func:`make_provider`.  The provider is
    immutable; it memoizes the longest coefficient prefix computed so far.
    """

    source: MeasureSpec
    is_continuous: bool
    bandlimit: int | None
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def coefficient(self, n: int) -> complex:
        return coefficient(self, n)

    def coefficients(self, n_terms: int) -> np.ndarray:
        """mu_hat(1), ..., mu_hat(n_terms) as a complex array (read-only)."""
        cached = self._cache.get("prefix")
        if cached is None or cached.shape[0] < n_terms:
            arr = _coefficient_array(self.source, np.arange(1, n_terms + 1,
                                                            dtype=np.int64))
            arr.setflags(write=False)
            self._cache["prefix"] = arr
            cached = arr
        return cached[:n_terms]

    @property
    def is_finite_cosine(self) -> bool:
        return self.bandlimit is not None


def make_provider(spec: MeasureSpec) -> CoefficientProvider:
    """Validate ``spec`` once and wrap it as a coefficient provider."""
    validate(spec)
    return CoefficientProvider(spec, is_continuous(spec), bandlimit(spec))


def _coefficient_array(spec: MeasureSpec, n: np.ndarray) -> np.ndarray:
    """Exact mu_hat(n) for an int64 array of nonnegative indices."""
    if isinstance(spec, Atomic):
        re = np.zeros(n.shape)
        im = np.zeros(n.shape)
        for p, w in spec.atoms:
            c, s = expi(n, p)
            re += w * c
            im -= w * s
        return re + 1j * im
    if isinstance(spec, Lebesgue):
        return np.where(n == 0, 1.0, 0.0).astype(np.complex128)
    if isinstance(spec, CosineDensity):
        a = np.concatenate(([2.0], np.asarray(spec.coeffs, dtype=np.float64)))
        out = np.zeros(n.shape, dtype=np.complex128)
        inside = n < a.shape[0]
        out[inside] = a[n[inside]] / 2.0
        return out
    if isinstance(spec, Cantor):
        out = np.ones(n.shape, dtype=np.complex128)
        nz = n != 0
        if nz.any():
            out[nz] = _cantor_values(n[nz])
        return out
    if isinstance(spec, Mixture):
        out = np.zeros(n.shape, dtype=np.complex128)
        for w, part in spec.parts:
            out += w * _coefficient_array(part, n)
        return out
    if isinstance(spec, Convolution):
        return _coefficient_array(spec.left, n) * _coefficient_array(spec.right, n)
    if isinstance(spec, Conjugate):
        return np.conj(_coefficient_array(spec.inner, n))
    raise TypeError(type(spec).__name__)


def coefficient(provider: CoefficientProvider, n: int) -> complex:
    """mu_hat(n) for any integer |n| <= 2**31 - 1."""
    n = int(n)
    if abs(n) > MAX_INDEX:
        raise ValueError(f"index {n} out of range")
    if n == 0:
        return 1.0 + 0.0j
    value = complex(_coefficient_array(provider.source,
                                       np.array([abs(n)], dtype=np.int64))[0])
    return value.conjugate() if n < 0 else value
