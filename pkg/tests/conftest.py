import random
import sys
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from toric_lagrangian.quadrics import QuadricSystem, validate  # noqa: E402

ACCEPTANCE_LINES = []


def random_system(rng, m=None, k=None, m_max=6, entries=(-1, 0, 1, 2, 3)):
    """Random system whose rhs is ``coeffs @ y0`` for a positive ``y0``, so (a) holds."""
    if m is None:
        m = rng.randint(1, m_max)
    if k is None:
        k = rng.randint(0, m)
    rows = [[rng.choice(entries) for _ in range(m)] for _ in range(k)]
    y0 = [Fraction(rng.randint(1, 6), rng.randint(1, 3)) for _ in range(m)]
    rhs = [sum(c * y for c, y in zip(r, y0)) for r in rows]
    return QuadricSystem.from_rows(rows, rhs, m)


def validated_systems(seed, count, m_max=6, **kw):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        s = random_system(rng, m_max=m_max, **kw)
        if validate(s):
            out.append(s)
    return out


def random_pair(rng, m_max=6, entries=(0, 1, 1, 2)):
    """Gamma/delta on the same C^m sharing a positive solution ``y0``."""
    m = rng.randint(1, m_max)
    kg = rng.randint(0, m)
    kd = rng.randint(0, m - kg)
    y0 = [Fraction(rng.randint(1, 6), rng.randint(1, 3)) for _ in range(m)]

    def make(k):
        rows = [[rng.choice(entries) for _ in range(m)] for _ in range(k)]
        return QuadricSystem.from_rows(rows, [sum(c * y for c, y in zip(r, y0)) for r in rows], m)

    return make(kg), make(kd)


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
