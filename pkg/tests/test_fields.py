"""Field construction, arithmetic axioms, and table invariants."""

import itertools

import pytest

from appellfq import build_field, is_prime, prime_power_decompose
from appellfq.fields import DEFAULT_TABLE_CAP, _find_modulus

SMALL_QS = [(3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)]


@pytest.fixture(scope="module")
def fields():
    return {p**r: build_field(p, r) for p, r in SMALL_QS}


def test_build_examples(fields):
    ft3 = fields[3]
    assert ft3.generator.coeffs == (2,)
    # oracle: 2 is the first element of multiplicative order 2 in F_3
    assert pow(2, 1, 3) != 1 and pow(2, 2, 3) == 1

    ft4 = fields[4]
    assert ft4.params.modulus == (1, 1, 1)  # x^2 + x + 1, the only one

    ft5 = fields[5]
    assert ft5.generator.coeffs == (2,)
    # oracle: direct order computation of every candidate below 2
    assert pow(2, 4, 5) == 1 and pow(2, 2, 5) != 1 and pow(2, 1, 5) != 1


def test_enumeration_order(fields):
    assert [e.coeffs[0] for e in fields[3].elements] == [0, 1, 2]
    assert len(set(fields[4].elements)) == 4
    # zero first, then powers of the generator 2
    assert [e.coeffs[0] for e in fields[5].elements] == [0, 1, 2, 4, 3]


def test_element_index_and_log(fields):
    for ft in fields.values():
        assert ft.elements[0].is_zero()
        for i, el in enumerate(ft.elements):
            assert el.index == i
            if i > 0:
                assert el.log == i - 1
                assert ft.exp_table[el.log] is el


def test_field_axioms_exhaustive(fields):
    for ft in fields.values():
        els = ft.elements
        for a, b, c in itertools.product(els, repeat=3):
            assert ft.add(ft.add(a, b), c) == ft.add(a, ft.add(b, c))
            assert ft.mul(a, ft.add(b, c)) == ft.add(ft.mul(a, b), ft.mul(a, c))
        for a in els:
            assert ft.add(a, ft.neg(a)) is ft.zero
            if not a.is_zero():
                assert ft.mul(a, ft.inv(a)) is ft.one


def test_exp_log_roundtrip(fields):
    for ft in fields.values():
        for el in ft.elements[1:]:
            assert ft.exp_table[el.log] is el
        for i, j in itertools.product(range(ft.n), repeat=2):
            lhs = ft.mul(ft.exp_table[i], ft.exp_table[j])
            assert lhs is ft.exp_table[(i + j) % ft.n]


def test_generator_order_is_exact(fields):
    for ft in fields.values():
        n = ft.n
        for d in range(1, n):
            if n % d == 0:
                assert ft.pow_element(ft.generator, d) is not ft.one
        assert ft.pow_element(ft.generator, n) is ft.one


def test_frobenius(fields):
    for ft in fields.values():
        for el in ft.elements:
            assert ft.pow_element(el, ft.q) is el


def test_one_minus_and_neg_tables(fields):
    for ft in fields.values():
        for el in ft.elements:
            assert ft.one_minus(el) == ft.sub(ft.one, el)
            assert ft.elements[ft.neg_idx[el.index]] == ft.neg(el)
        assert ft.one_minus(ft.one) is ft.zero


def test_index_ops_match_element_ops(fields):
    for ft in fields.values():
        for a, b in itertools.product(ft.elements, repeat=2):
            assert ft.mul_idx(a.index, b.index) == ft.mul(a, b).index
            assert ft.add_idx(a.index, b.index) == ft.add(a, b).index
            assert ft.sub_idx(a.index, b.index) == ft.sub(a, b).index
            if not b.is_zero():
                assert ft.div_idx(a.index, b.index) == ft.div(a, b).index


def test_extension_field_mul():
    ft = build_field(2, 2)  # F_4 = F_2[x]/(x^2+x+1)
    x = ft.from_coeffs((0, 1))
    assert ft.mul(x, x) == ft.from_coeffs((1, 1))  # x^2 = x + 1


def test_one_minus_one_is_zero(fields):
    for ft in fields.values():
        assert ft.one_minus(ft.one).is_zero()


def test_mul_simple():
    ft = build_field(5, 1)
    assert ft.mul(ft.from_int(2), ft.from_int(3)) == ft.from_int(1)


def test_errors():
    with pytest.raises(ValueError):
        build_field(4, 1)  # not prime
    with pytest.raises(ValueError):
        build_field(5, 0)
    with pytest.raises(ValueError):
        build_field(2, 17)  # 2^17 over default cap
    with pytest.raises(ValueError):
        build_field(2, 5, max_q=16)
    ft = build_field(5, 1)
    with pytest.raises(ZeroDivisionError):
        ft.inv(ft.zero)
    with pytest.raises(ValueError):
        ft.from_coeffs((1, 2))  # too many coefficients


def test_q2_degenerate_warns():
    with pytest.warns(RuntimeWarning):
        ft = build_field(2, 1)
    assert ft.degenerate
    assert ft.n == 1


def test_determinism():
    a = build_field(3, 2)
    b = build_field(3, 2)
    assert a.params == b.params
    assert a.generator == b.generator
    assert [e.coeffs for e in a.elements] == [e.coeffs for e in b.elements]


def test_modulus_is_lex_first_irreducible():
    # degree-2 over F_3: enumerate in constant-term-first order and pick the
    # first with no root (degree 2 irreducible iff rootless)
    def has_root(c0, c1):
        return any((v * v + c1 * v + c0) % 3 == 0 for v in range(3))

    expected = next(
        (c0, c1, 1)
        for c0, c1 in itertools.product(range(3), repeat=2)
        if not has_root(c0, c1)
    )
    assert _find_modulus(3, 2) == expected
    assert build_field(3, 2).params.modulus == expected


def test_is_prime():
    assert [n for n in range(2, 30) if is_prime(n)] == [
        2, 3, 5, 7, 11, 13, 17, 19, 23, 29,
    ]


def test_prime_power_decompose():
    assert prime_power_decompose(4) == (2, 2)
    assert prime_power_decompose(16) == (2, 4)
    assert prime_power_decompose(25) == (5, 2)
    assert prime_power_decompose(7) == (7, 1)
    for bad in (1, 12, 100):
        with pytest.raises(ValueError):
            prime_power_decompose(bad)


def test_describe():
    doc = build_field(5, 1).describe()
    assert doc == {
        "p": 5,
        "r": 1,
        "q": 5,
        "modulus": [0, 1],
        "generator": 2,
        "characters": 4,
    }


def test_table_cap_default():
    assert DEFAULT_TABLE_CAP == 1 << 16
