import math

import pytest

from twocircles import (
    InvalidInput,
    certify_irrational,
    enumerate_primitive_triples,
    search_minus_mixed,
    search_plus14,
)
from twocircles.diophantine import Equation, diagonal_quartic


def brute(form, bound, opposite_parity):
    hits = []
    for x in range(1, bound + 1):
        for y in range(1, bound + 1):
            if math.gcd(x, y) != 1 or (opposite_parity and (x + y) % 2 == 0):
                continue
            v = form(x, y)
            z = math.isqrt(v)
            if z * z == v:
                hits.append((x, y, z))
    return hits


def plus14(x, y):
    return x**4 + 14 * x * x * y * y + y**4


def minus(x, y):
    return x**4 - x * x * y * y + y**4


@pytest.mark.parametrize("bound", [1, 2, 50])
def test_plus14_small(bound):
    assert search_plus14(bound) == []
    assert search_plus14(bound) == brute(plus14, bound, True)


def test_plus14_any_parity_matches_brute_force():
    got = [(h.x, h.y, h.z) for h in search_plus14(120, any_parity=True)]
    assert got == brute(plus14, 120, False)
    assert (1, 1, 4) in got


@pytest.mark.parametrize("bound", [1, 50])
def test_minus_mixed(bound):
    hits = search_minus_mixed(bound)
    assert [(h.x, h.y, h.z) for h in hits] == [(1, 1, 1)]
    assert hits[0].equation is Equation.MINUS_MIXED
    assert [(h.x, h.y, h.z) for h in hits] == brute(minus, bound, False)


def test_bound_validation():
    with pytest.raises(InvalidInput):
        search_plus14(0)
    with pytest.raises(InvalidInput):
        search_minus_mixed(-3)


@pytest.mark.parametrize(
    "triple, raw",
    [((4, 3, 5), (52, 73)), ((12, 5, 13), (244, 601))],
)
def test_certify(triple, raw):
    cert = certify_irrational(triple)
    assert (cert.d1_radicand_raw, cert.d2_radicand_raw) == raw
    assert cert.d1_irrational and cert.d2_irrational


def test_certify_square_radicand_reports_false():
    # 3^2 + 4*2^2 = 25; not a Pythagorean pair, just the contract case
    cert = certify_irrational((3, 2, 0))
    assert cert.d1_radicand_raw == 25
    assert not cert.d1_irrational
    assert cert.d2_irrational


def test_certify_sweep():
    for t in enumerate_primitive_triples(500):
        cert = certify_irrational(t)
        assert cert.d1_irrational and cert.d2_irrational, t


def test_diagonal_quartic_identities():
    for m in range(2, 51):
        for n in range(1, m):
            if math.gcd(m, n) != 1 or (m + n) % 2 == 0:
                continue
            r1, r2 = sorted((m * m - n * n, 2 * m * n), reverse=True)
            eq, value = diagonal_quartic(m, n)
            if r1 % 2:
                assert eq is Equation.PLUS14 and r1 * r1 + 4 * r2 * r2 == value
            else:
                assert eq is Equation.MINUS_MIXED and r1 * r1 + 4 * r2 * r2 == 4 * value
