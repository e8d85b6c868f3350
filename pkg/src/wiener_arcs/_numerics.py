"""Low-level numerics shared by the series modules.

Phases are reduced exactly modulo 1 before scaling by 2*pi, and long
partial-sum sequences are accumulated with compensation so that N in the
millions does not drift.
"""

from __future__ import annotations

import math

import numpy as np

TWO_PI = 2.0 * math.pi

# Fixed chunk length for compensated prefix sums; results never depend on
# anything but the input array.
CHUNK = 1024

_SPLIT_BITS = 21
_SPLIT_MASK = (1 << _SPLIT_BITS) - 1


def _dyadic(x: float) -> tuple[int, int]:
    """Return (m, e) with x == m / 2**e exactly, m >= 0, e >= 0."""
    num, den = float(x).as_integer_ratio()
    return num, den.bit_length() - 1


def frac_mul(n, x: float) -> np.ndarray:
    """frac(n * x) in [0, 1) for integer array ``n`` (|n| < 2**31).

    The double ``x`` is split into three 21-bit limbs so every product
    n * limb is an exact int64; only the final three-term sum rounds.
    """
    n = np.asarray(n, dtype=np.int64)
    if not math.isfinite(x):
        raise ValueError("non-finite phase argument")
    neg = x < 0
    x = -x if neg else x
    whole = math.floor(x)
    x = x - whole  # exact for doubles
    m, e = _dyadic(x)
    out = np.zeros(n.shape, dtype=np.float64)
    for i in range(3):
        limb = (m >> (_SPLIT_BITS * i)) & _SPLIT_MASK
        if limb == 0:
            continue
        shift = e - _SPLIT_BITS * i
        if shift <= 0:
            continue
        prod = n * limb
        if shift < 62:
            prod = np.bitwise_and(prod, (1 << shift) - 1)
        out += np.ldexp(prod.astype(np.float64), -shift)
    out -= np.floor(out)
    if neg:
        out = -out
        out -= np.floor(out)
    # floor of a value within one ulp below 1.0 can leave exactly 1.0
    out[out >= 1.0] = 0.0
    return out


def expi(n, x: float) -> tuple[np.ndarray, np.ndarray]:
    """cos and sin of 2*pi*n*x with the argument reduced first."""
    theta = TWO_PI * frac_mul(n, x)
    return np.cos(theta), np.sin(theta)


def compensated_cumsum(values: np.ndarray) -> np.ndarray:
    """Prefix sums with Kahan-compensated carries between fixed chunks.

    Within a chunk numpy's cumsum is used (error ~ CHUNK * eps); the
    running offset across chunks is carried with Kahan compensation.
    """
    values = np.asarray(values, dtype=np.float64)
    n = values.shape[0]
    if n == 0:
        return values.copy()
    out = np.empty(n, dtype=np.float64)
    total = 0.0
    comp = 0.0
    for start in range(0, n, CHUNK):
        block = np.cumsum(values[start:start + CHUNK])
        out[start:start + block.shape[0]] = block + (total - comp)
        y = float(block[-1]) - comp
        t = total + y
        comp = (t - total) - y
        total = t
    return out


def kahan_sum(values) -> float:
    """Compensated total; equals the last entry of compensated_cumsum."""
    values = np.asarray(values, dtype=np.float64)
    if values.shape[0] == 0:
        return 0.0
    return float(compensated_cumsum(values)[-1])


def block_means(partial: np.ndarray, block: int) -> np.ndarray:
    """Means of ``block`` consecutive partial sums ending at each index.

    Entry ``m`` (0-based) averages partial[m - block + 1 .. m]; entries with
    fewer than ``block`` predecessors are NaN.
    """
    partial = np.asarray(partial, dtype=np.float64)
    n = partial.shape[0]
    out = np.full(n, np.nan)
    if block < 1 or block > n:
        return out
    cs = compensated_cumsum(partial)
    out[block - 1] = cs[block - 1] / block
    if n > block:
        out[block:] = (cs[block:] - cs[:-block]) / block
    return out


def checkpoints(n_terms: int, parts: int = 10) -> np.ndarray:
    """Term counts N/parts, 2N/parts, ..., N (deduplicated, >= 1)."""
    pts = np.ceil(np.arange(1, parts + 1) * n_terms / parts).astype(np.int64)
    return np.unique(np.maximum(pts, 1))
