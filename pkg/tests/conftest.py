import random
from fractions import Fraction

import pytest

from twocircles import RadiiPair


def _random_radii(seed, count, max_part=10**4):
    """Rational pairs R1 > R2 with numerators and denominators <= max_part."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        a = Fraction(rng.randint(1, max_part), rng.randint(1, max_part))
        b = Fraction(rng.randint(1, max_part), rng.randint(1, max_part))
        if a != b:
            out.append(RadiiPair(max(a, b), min(a, b)))
    return out


def _oracle_radii(seed, count):
    """R2 in [1, 10**4], ratio R1/R2 in (1, 100], so both radii lie in [1, 10**6]."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        q = rng.randint(1, 100)
        r2 = Fraction(rng.randint(q, 10**4 * q), q)
        k = rng.randint(1, 1000)
        ratio = Fraction(rng.randint(k + 1, 100 * k), k)
        out.append(RadiiPair(r2 * ratio, r2))
    return out


@pytest.fixture(scope="session")
def random_radii():
    return _random_radii


@pytest.fixture(scope="session")
def oracle_radii():
    return _oracle_radii


ACCEPTANCE_LINES = []


@pytest.fixture
def criterion():
    """Record one PASS/FAIL line per acceptance criterion, then assert."""

    def record(number, title, ok, detail=""):
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}"
        if detail:
            line += f" ({detail})"
        ACCEPTANCE_LINES.append(line)
        print(line)
        assert ok, line

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
