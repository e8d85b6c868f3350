"""Exact ground truth for arc measures, distribution functions and atoms.

Nothing here touches Fourier coefficients.  Measures are first reduced to
a canonical family (atoms, Lebesgue, Cantor, cosine density, or a mixture
of those); convolutions that do not reduce are reported unsupported.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .coefficients import (Atomic, Cantor, Conjugate, Convolution, CosineDensity,
                           Lebesgue, MeasureSpec, Mixture, validate)
from .errors import OracleUnsupported

TERNARY_DIGITS = 60


def cantor_exact(x: float) -> float:
    """Cantor function C(x) by scanning the ternary digits of ``x``.

    Digits 0 and 2 contribute bits 0 and 1; the first digit 1 contributes a
    final 1-bit and stops the scan.  The double ``x`` is expanded exactly
    with integer arithmetic.
    """
    if x <= 0.0:
        return 0.0
    if x >= 1.0:
        return 1.0
    num, den = float(x).as_integer_ratio()
    shift = den.bit_length() - 1
    mask = den - 1
    value = 0.0
    bit = 0.5
    for _ in range(TERNARY_DIGITS):
        num *= 3
        digit = num >> shift
        num &= mask
        if digit == 1:
            return value + bit
        if digit == 2:
            value += bit
        bit *= 0.5
        if num == 0:
            break
    return value


@dataclass(frozen=True)
class OracleCapability:
    spec: MeasureSpec
    supported: bool
    reason: str = ""


def _merge_atoms(pairs) -> Atomic:
    acc: dict[float, float] = {}
    for p, w in pairs:
        p = p % 1.0
        acc[p] = acc.get(p, 0.0) + w
    return Atomic(tuple(sorted(acc.items())))


def _reflect(p: float) -> float:
    return (1.0 - p) % 1.0 if p != 0.0 else 0.0


def reduce_spec(spec: MeasureSpec) -> MeasureSpec:
    """Rewrite ``spec`` without Conjugate or Convolution nodes.

    Raises OracleUnsupported for convolutions without a closed form.
    """
    if isinstance(spec, (Atomic, Lebesgue, Cantor, CosineDensity)):
        return spec
    if isinstance(spec, Mixture):
        return Mixture(tuple((w, reduce_spec(part)) for w, part in spec.parts))
    if isinstance(spec, Conjugate):
        return _conjugate(reduce_spec(spec.inner))
    if isinstance(spec, Convolution):
        return _convolve(reduce_spec(spec.left), reduce_spec(spec.right))
    raise TypeError(type(spec).__name__)


def _conjugate(spec: MeasureSpec) -> MeasureSpec:
    if isinstance(spec, Atomic):
        return _merge_atoms((_reflect(p), w) for p, w in spec.atoms)
    if isinstance(spec, (Lebesgue, CosineDensity)):
        return spec  # even densities
    if isinstance(spec, Cantor):
        # the Cantor set is symmetric under x -> 1 - x and carries no atoms
        return spec
    if isinstance(spec, Mixture):
        return Mixture(tuple((w, _conjugate(p)) for w, p in spec.parts))
    if isinstance(spec, _Shifted):
        return _Shifted(_reflect(spec.shift), _conjugate(spec.base))
    raise TypeError(type(spec).__name__)


@dataclass(frozen=True)
class _Shifted:
    """``base`` translated by ``shift`` (internal; arises from atom * measure)."""

    shift: float
    base: MeasureSpec


def _convolve(left: MeasureSpec, right: MeasureSpec) -> MeasureSpec:
    if isinstance(left, Lebesgue) or isinstance(right, Lebesgue):
        return Lebesgue()
    if isinstance(left, Mixture):
        return Mixture(tuple((w, _convolve(p, right)) for w, p in left.parts))
    if isinstance(right, Mixture):
        return Mixture(tuple((w, _convolve(left, p)) for w, p in right.parts))
    if isinstance(left, Atomic) and isinstance(right, Atomic):
        return _merge_atoms((p + q, v * w) for p, v in left.atoms
                            for q, w in right.atoms)
    if isinstance(right, (Atomic, _Shifted)):
        left, right = right, left
    if isinstance(left, _Shifted):
        return _shift(left.shift, _convolve(left.base, right))
    if isinstance(left, Atomic):
        return Mixture(tuple((w, _shift(p, right)) for p, w in left.atoms))
    if isinstance(left, CosineDensity) and isinstance(right, CosineDensity):
        k = min(len(left.coeffs), len(right.coeffs))
        return CosineDensity(tuple(left.coeffs[i] * right.coeffs[i] / 2.0
                                   for i in range(k)))
    raise OracleUnsupported(
        f"no closed form for {type(left).__name__} * {type(right).__name__}")


def _shift(p: float, spec: MeasureSpec) -> MeasureSpec:
    if isinstance(spec, Lebesgue):
        return spec
    if isinstance(spec, _Shifted):
        return _Shifted((spec.shift + p) % 1.0, spec.base)
    if p == 0.0:
        return spec
    return _Shifted(p, spec)


def capability(spec: MeasureSpec) -> OracleCapability:
    try:
        reduce_spec(spec)
    except OracleUnsupported as exc:
        return OracleCapability(spec, False, str(exc))
    return OracleCapability(spec, True)


def _cdf(spec, x: float) -> float:
    """mu[0, x) for x in [0, 1] on a reduced spec."""
    if x <= 0.0:
        return 0.0
    if isinstance(spec, Atomic):
        return math.fsum(w for p, w in spec.atoms if p < x)
    if isinstance(spec, Lebesgue):
        return min(x, 1.0)
    if isinstance(spec, Cantor):
        return cantor_exact(x)
    if isinstance(spec, CosineDensity):
        if x >= 1.0:
            return 1.0
        return x + math.fsum(a * math.sin(2.0 * math.pi * k * x) / (2.0 * math.pi * k)
                             for k, a in enumerate(spec.coeffs, start=1))
    if isinstance(spec, Mixture):
        return math.fsum(w * _cdf(p, x) for w, p in spec.parts)
    if isinstance(spec, _Shifted):
        return _arc(spec, 0.0, x)
    raise TypeError(type(spec).__name__)


def _atom(spec, x: float) -> float:
    x = x % 1.0
    if isinstance(spec, Atomic):
        return math.fsum(w for p, w in spec.atoms if p == x)
    if isinstance(spec, (Lebesgue, Cantor, CosineDensity)):
        return 0.0
    if isinstance(spec, Mixture):
        return math.fsum(w * _atom(p, x) for w, p in spec.parts)
    if isinstance(spec, _Shifted):
        return _atom(spec.base, (x - spec.shift) % 1.0)
    raise TypeError(type(spec).__name__)


def _arc(spec, a: float, b: float) -> float:
    """mu[a, b) for 0 <= a < b <= 1 on a reduced spec."""
    if isinstance(spec, _Shifted):
        # [a, b) - s splits into at most two arcs of the unshifted measure
        lo, hi = a - spec.shift, b - spec.shift
        if lo >= 0.0:
            return _arc(spec.base, lo, hi)
        if hi <= 0.0:
            return _arc(spec.base, lo + 1.0, hi + 1.0)
        return _arc(spec.base, lo + 1.0, 1.0) + _arc(spec.base, 0.0, hi)
    if isinstance(spec, Mixture):
        return math.fsum(w * _arc(p, a, b) for w, p in spec.parts)
    if isinstance(spec, Atomic):
        return math.fsum(w for p, w in spec.atoms if a <= p < b)
    return _cdf(spec, b) - _cdf(spec, a)


def _check_arc(a: float, b: float) -> None:
    if not (0.0 <= a < b <= 1.0):
        raise ValueError(f"invalid arc [{a!r}, {b!r})")


def oracle_arc(spec: MeasureSpec, a: float, b: float) -> float:
    """Exact mu[a, b); raises OracleUnsupported when no closed form exists."""
    validate(spec)
    _check_arc(a, b)
    return _arc(reduce_spec(spec), a, b)


def oracle_cdf(spec: MeasureSpec, x: float) -> float:
    """Exact D(x) = mu[0, x)."""
    validate(spec)
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"x = {x!r} outside [0, 1]")
    if x == 0.0:
        return 0.0
    return _arc(reduce_spec(spec), 0.0, x)


def oracle_atom(spec: MeasureSpec, x: float) -> float:
    """Exact mu{x}."""
    validate(spec)
    return _atom(reduce_spec(spec), x)
