import random

import pytest
from hypothesis import strategies as st

from idealization.models import explicit_module, explicit_ring

_ACCEPTANCE = []


@pytest.fixture
def criterion(request):
    """Record one pass/fail line per acceptance criterion for the terminal summary."""
    def record(label, ok, detail=""):
        _ACCEPTANCE.append((label, bool(ok), detail))
        assert ok, f"{label}: {detail}"
    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok, detail in _ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {label}  {detail}")


def random_ring(rng: random.Random, D: int, name="R", max_coeff=9):
    edim = rng.randint(1, max_coeff)
    dim = rng.randint(0, edim - 1)
    depth = rng.randint(0, dim)
    betti = [1, edim] + [rng.randint(0, max_coeff) for _ in range(D - 1)]
    return explicit_ring(dim, depth, edim, betti, name=name)


def random_module(rng: random.Random, ring, D: int, name="M", max_coeff=9):
    betti = [rng.randint(1, max_coeff)] + [rng.randint(0, max_coeff) for _ in range(D)]
    return explicit_module(betti, rng.randint(0, ring.dim), ring, name=name)


@st.composite
def profiles(draw, max_degree=20, max_coeff=9):
    """An admissible (base ring, M, N, D) drawn from raw Betti data."""
    D = draw(st.integers(0, max_degree))
    seed = draw(st.integers(0, 2**32 - 1))
    rng = random.Random(seed)
    base = random_ring(rng, max(D, 2), max_coeff=max_coeff)
    m = random_module(rng, base, D, "M", max_coeff)
    n = random_module(rng, base, D, "N", max_coeff)
    return base, m, n, D
