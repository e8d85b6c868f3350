import numpy as np
import pytest

from wiener_arcs import make_provider, parse_measure
from wiener_arcs.selftest import FIXTURES


@pytest.fixture(scope="session")
def fixture_specs():
    return {name: parse_measure(text) for name, text in FIXTURES.items()}


@pytest.fixture(scope="session")
def fixture_providers(fixture_specs):
    return {name: make_provider(spec) for name, spec in fixture_specs.items()}


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


_ACCEPTANCE: list[str] = []


@pytest.fixture
def report():
    """Record one PASS/FAIL line for an acceptance criterion and assert it."""

    def _report(number: int, title: str, passed: bool, detail: str) -> None:
        line = f"criterion {number:2d} {'PASS' if passed else 'FAIL'}  {title}: {detail}"
        print(line)
        _ACCEPTANCE.append(line)
        assert passed, line

    return _report


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE):
            terminalreporter.write_line(line)
