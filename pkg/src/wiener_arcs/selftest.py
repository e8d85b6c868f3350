"""Oracle-equivalence sweep over the reference fixtures."""

from __future__ import annotations

import numpy as np

from .arcs import CircleArc, arc_measure
from .coefficients import make_provider
from .dsl import parse_measure
from .oracle import oracle_arc

# measures with an exact oracle, written in the DSL
FIXTURES = {
    "lebesgue": "lebesgue",
    "dirac": "dirac(1/3)",
    "atoms": "atoms(0.2:0.5, 0.7:0.5)",
    "cantor": "cantor",
    "density": "density(0.4, 0.1)",
    "mix": "mix(0.5: dirac(1/3), 0.5: lebesgue)",
}

ABS_TOL = 5e-3


def random_arcs(count: int, seed: int) -> list[CircleArc]:
    rng = np.random.default_rng(seed)
    arcs = []
    while len(arcs) < count:
        a, b = sorted(float(v) for v in rng.uniform(0.0, 1.0, 2))
        if a < b:
            arcs.append(CircleArc(a, b))
    return arcs


def oracle_sweep(arcs: int = 200, n_terms: int = 100_000, seed: int = 0,
                 fixtures: dict[str, str] | None = None):
    """Yield one summary row per fixture.

    A case passes when |reconstruction - oracle| <= tail_estimate + 5e-3.
    """
    fixtures = FIXTURES if fixtures is None else fixtures
    cases = random_arcs(arcs, seed)
    for name, text in fixtures.items():
        spec = parse_measure(text)
        provider = make_provider(spec)
        failures = 0
        worst = -np.inf
        for arc in cases:
            res = arc_measure(provider, arc, n_terms)
            excess = abs(res.value - oracle_arc(spec, arc.a, arc.b)) - res.tail_estimate
            worst = max(worst, excess)
            failures += excess > ABS_TOL
        yield {"fixture": name, "cases": len(cases), "failures": failures,
               "worst_excess": float(worst), "passed": failures == 0}
