"""Cyclotomic integer ring: canonical forms, exact ops, Galois action."""

import random

import pytest

from appellfq import (
    CycInt,
    InexactDivisionError,
    cyc_one,
    cyc_zero,
    cyclotomic_poly,
    euler_phi,
    root_of_unity,
)


def _naive_cyclotomic(n, _cache={}):
    """Oracle: divide x^n - 1 by Phi_d for every proper divisor d."""
    if n in _cache:
        return _cache[n]
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            den = _naive_cyclotomic(d)
            out = [0] * (len(poly) - len(den) + 1)
            for i in range(len(poly) - 1, len(den) - 2, -1):
                c = poly[i]
                if c == 0:
                    continue
                out[i - len(den) + 1] = c
                for j, dj in enumerate(den):
                    poly[i - len(den) + 1 + j] -= c * dj
            poly = out
    _cache[n] = poly
    return poly


def test_cyclotomic_poly_known_values():
    assert cyclotomic_poly(1) == (-1, 1)  # x - 1
    assert cyclotomic_poly(2) == (1, 1)
    assert cyclotomic_poly(4) == (1, 0, 1)  # x^2 + 1
    assert cyclotomic_poly(6) == (1, -1, 1)  # x^2 - x + 1
    assert cyclotomic_poly(12) == (1, 0, -1, 0, 1)


def test_cyclotomic_poly_vs_naive_divide_down():
    for n in range(1, 41):
        assert list(cyclotomic_poly(n)) == _naive_cyclotomic(n)
        assert len(cyclotomic_poly(n)) == euler_phi(n) + 1


def test_root_of_unity_values():
    assert root_of_unity(4, 2) == CycInt(4, (-1, 0))
    assert root_of_unity(6, 3).as_integer() == -1
    for n in (1, 2, 3, 4, 6, 8, 12):
        assert root_of_unity(n, n) == cyc_one(n)
        assert root_of_unity(n, 0) == cyc_one(n)


def test_high_powers_wrap():
    for n in (4, 6, 8, 12):
        for k in range(2 * n):
            assert root_of_unity(n, k) == root_of_unity(n, k % n)


def test_phi_n_vanishes_at_zeta():
    for n in (2, 3, 4, 6, 8, 12, 15):
        poly = cyclotomic_poly(n)
        acc = cyc_zero(n)
        for i, c in enumerate(poly):
            acc = acc + root_of_unity(n, i) * c
        assert acc.is_zero


def _random_cyc(rng, n):
    phi = euler_phi(n)
    return CycInt(n, tuple(rng.randint(-50, 50) for _ in range(phi)))


def test_ring_axioms_seeded():
    rng = random.Random(20240811)
    for n in (2, 4, 6, 8, 12):
        for _ in range(60):
            a, b, c = (_random_cyc(rng, n) for _ in range(3))
            assert a + b == b + a
            assert a * b == b * a
            assert (a + b) + c == a + (b + c)
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c
            assert a + (-a) == cyc_zero(n)
            assert a * cyc_one(n) == a


def test_canonicality():
    # zeta^j with j >= phi(n) compares equal to its reduced representation
    for n in (4, 6, 8, 12):
        for j in range(n):
            weights = [0] * n
            weights[j] = 1
            assert CycInt.from_powers(n, weights) == root_of_unity(n, j)
    # Eisenstein relation: 1 + zeta_3 + zeta_3^2 = 0
    s = cyc_one(3) + root_of_unity(3, 1) + root_of_unity(3, 2)
    assert s.is_zero


def test_mul_example_n6():
    z = root_of_unity(6, 1)
    assert z * z == CycInt(6, (-1, 1))  # x^2 mod x^2 - x + 1 = x - 1


def test_exact_div_int():
    v = CycInt(4, (6, -3))
    assert v.exact_div_int(3) == CycInt(4, (2, -1))
    assert cyc_zero(4).exact_div_int(7) == cyc_zero(4)
    with pytest.raises(InexactDivisionError) as err:
        CycInt(4, (6, -4)).exact_div_int(4)
    assert err.value.index == 0
    assert err.value.coefficient == 6
    with pytest.raises(ZeroDivisionError):
        v.exact_div_int(0)


def test_scalar_roundtrip():
    rng = random.Random(7)
    for n in (2, 4, 6, 12):
        for _ in range(20):
            a = _random_cyc(rng, n)
            m = rng.choice([1, -1, 2, 3, 17])
            assert (a * m).exact_div_int(m) == a


def test_galois():
    z = root_of_unity(4, 1)
    assert z.galois(3) == -z  # complex conjugation on Z[i]
    assert CycInt.from_int(4, 9).galois(3) == 9  # integers are fixed
    rng = random.Random(99)
    for _ in range(40):
        a = _random_cyc(rng, 12)
        b = _random_cyc(rng, 12)
        for k in (1, 5, 7, 11):
            assert a.galois(k) * b.galois(k) == (a * b).galois(k)
            for kp in (5, 7):
                assert a.galois(k).galois(kp) == a.galois((k * kp) % 12)
        assert a.galois(1) == a
    with pytest.raises(ValueError):
        root_of_unity(6, 1).galois(2)


def test_as_integer():
    assert cyc_zero(4).as_integer() == 0
    assert root_of_unity(4, 1).as_integer() is None
    assert (root_of_unity(3, 1) + root_of_unity(3, 2)).as_integer() == -1


def test_mixed_ring_rejected():
    with pytest.raises(ValueError):
        root_of_unity(4, 1) + root_of_unity(6, 1)


def test_int_coercion():
    v = root_of_unity(4, 1)
    assert v + 0 == v
    assert 1 + v == v + cyc_one(4)
    assert 3 * v == v * 3
    assert v - v == 0
    assert (2 - cyc_one(4)).as_integer() == 1


def test_json_roundtrip_huge_coefficients():
    big = 10**40
    v = CycInt(8, (big, -big - 1, 3, 0))
    doc = v.to_json()
    assert doc["n"] == 8
    assert doc["coeffs"][0] == str(big)
    assert CycInt.from_json(doc) == v


def test_immutability():
    v = cyc_one(4)
    with pytest.raises(AttributeError):
        v.coeffs = (0, 0)


def test_repr_forms():
    assert "3" in repr(CycInt.from_int(6, 3))
    assert "z" in repr(root_of_unity(8, 1))
