import math

import pytest

from twocircles import (
    InvalidInput,
    InvalidParams,
    InvalidTriple,
    PythTriple,
    enumerate_primitive_triples,
    square_product_decompose,
    triple_from_params,
    verify_coprimeness,
)
from twocircles.exact_arith import is_perfect_square
from twocircles.triples import COPRIMENESS_CONDITIONS, params_from_triple


def scan_primitive_triples(max_c):
    # brute force over a^2 + b^2 = c^2, independent of the (m, n) formula
    out = []
    for c in range(1, max_c + 1):
        for b in range(1, c):
            for a in range(b + 1, c):
                if a * a + b * b == c * c and math.gcd(a, b) == 1:
                    out.append((a, b, c))
    return sorted(out, key=lambda t: (t[2], t[0]))


@pytest.mark.parametrize(
    "m, n, expected",
    [(2, 1, (4, 3, 5)), (3, 2, (12, 5, 13)), (4, 1, (15, 8, 17)), (4, 3, (24, 7, 25)), (5, 2, (21, 20, 29))],
)
def test_triple_from_params(m, n, expected):
    t = triple_from_params(m, n)
    assert t == expected
    assert t.r1**2 + t.r2**2 == t.r3**2


@pytest.mark.parametrize("m, n", [(2, 2), (3, 1), (4, 2), (1, 2), (0, 1), (6, 3)])
def test_triple_from_params_rejects(m, n):
    with pytest.raises(InvalidParams):
        triple_from_params(m, n)


def test_params_round_trip():
    for m in range(2, 30):
        for n in range(1, m):
            if math.gcd(m, n) == 1 and (m + n) % 2:
                assert params_from_triple(*triple_from_params(m, n)) == (m, n)


@pytest.mark.parametrize("bad", [(3, 4, 5), (6, 8, 10), (4, 3, 6), (0, 3, 3)])
def test_params_from_triple_rejects(bad):
    with pytest.raises(InvalidTriple):
        params_from_triple(*bad)


@pytest.mark.parametrize(
    "max_r3, expected",
    [(5, [(4, 3, 5)]), (13, [(4, 3, 5), (12, 5, 13)]), (4, []), (1, [])],
)
def test_enumerate_examples(max_r3, expected):
    assert enumerate_primitive_triples(max_r3) == expected


def test_enumerate_matches_brute_force():
    assert enumerate_primitive_triples(150) == scan_primitive_triples(150)


def test_triple_invariants_sweep():
    for t in enumerate_primitive_triples(2000):
        r1, r2, r3 = t
        assert r1 > r2
        assert math.gcd(r1, r2) == 1
        assert (r1 % 2) + (r2 % 2) == 1
        assert r3 % 2 == 1
        assert (r1 * r1 - r2 * r2) % 2 == 1


@pytest.mark.parametrize(
    "a, b, expected",
    [(560, 315, (35, 4, 3)), (7, 7, (7, 1, 1)), (3, 2, None), (16, 9, (1, 4, 3)), (4, 1, (1, 2, 1)), (12, 3, (3, 2, 1))],
)
def test_square_product_decompose(a, b, expected):
    assert square_product_decompose(a, b) == expected


def test_square_product_decompose_rejects():
    with pytest.raises(InvalidInput):
        square_product_decompose(0, 3)
    with pytest.raises(InvalidInput):
        square_product_decompose(-4, 1)


def test_square_product_decompose_iff_square_product():
    for a in range(1, 201):
        for b in range(1, 201):
            split = square_product_decompose(a, b)
            assert (split is not None) == is_perfect_square(a * b), (a, b)
            if split:
                d, r1, r2 = split
                assert (a, b) == (d * r1 * r1, d * r2 * r2)
                assert math.gcd(r1, r2) == 1
                assert d * r1 * r2 == math.isqrt(a * b)


def test_square_product_decompose_round_trip():
    for r1, r2, _ in enumerate_primitive_triples(200):
        for d in range(1, 21):
            assert square_product_decompose(d * r1 * r1, d * r2 * r2) == (d, r1, r2)


def test_verify_coprimeness_examples():
    flags = verify_coprimeness(PythTriple(4, 3, 5))
    assert list(flags) == list(COPRIMENESS_CONDITIONS)
    assert all(flags.values())
    assert math.gcd(5, 96) == 1 and math.gcd(7, 384) == 1
    assert all(verify_coprimeness((12, 5, 13)).values())


def test_verify_coprimeness_exhaustive():
    for t in enumerate_primitive_triples(1000):
        assert all(verify_coprimeness(t).values()), t
