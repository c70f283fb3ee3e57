import itertools
from math import gcd

import pytest
from hypothesis import given, strategies as st

from autoseq.errors import CompositeP, DivisionByZero, FieldMismatch, ReducibleModulus
from autoseq.field import inv, is_irreducible, make_field, power, power_is_bijective

from oracles import gf_product_coeffs

SMALL = [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1), (7, 1)]
SMALL_IDS = [f"F{p**s}" for p, s in SMALL]


def test_prime_field_f2():
    F = make_field(2, 1)
    assert (F.p, F.s, F.q) == (2, 1, 2)
    assert F(1) + F(1) == F(0)


def test_f4_presentation(F4, w):
    assert F4.q == 4
    assert {str(x) for x in F4.elements()} == {"0,0", "1,0", "0,1", "1,1"}
    assert w * w == w + 1


def test_reducible_modulus_rejected():
    with pytest.raises(ReducibleModulus):
        make_field(2, 2, [1, 0, 1])  # X^2 + 1 = (X + 1)^2


def test_composite_p_rejected():
    with pytest.raises(CompositeP):
        make_field(4, 1)


def test_non_monic_modulus_rejected():
    with pytest.raises(ValueError):
        make_field(3, 2, [1, 0, 2])


def test_default_moduli_are_irreducible_and_deterministic():
    for p, s in [(2, 2), (2, 3), (3, 2), (5, 2), (2, 8)]:
        F = make_field(p, s)
        assert len(F.modulus) == s + 1 and F.modulus[-1] == 1
        assert is_irreducible(F.modulus, p)
        assert make_field(p, s) is F
    assert make_field(2, 2).modulus == (1, 1, 1)
    assert make_field(2, 3).modulus == (1, 1, 0, 1)


def test_inverse_examples(F4, F5, w):
    F2 = make_field(2)
    assert inv(F2(1)) == F2(1)
    assert inv(w) == w + 1
    assert inv(F5(2)) == F5(3)
    with pytest.raises(DivisionByZero):
        inv(F5(0))
    with pytest.raises(ZeroDivisionError):
        F5(1) / 0


def test_power_examples(F4, F5, w):
    assert power(w, 2) == w + 1
    assert power(w, 3) == F4(1)
    assert power(F5(2), 3) == F5(3)
    assert power(F5(0), 0) == F5(1)
    assert w**-1 == inv(w)


def test_cross_field_is_an_error(F4, F5):
    with pytest.raises(FieldMismatch):
        F4(1) + F5(1)


def test_coercions_and_serialization(F4):
    x = F4("1,1")
    assert x == F4([1, 1]) == F4(x)
    assert str(x) == "1,1"
    assert F4(3) == F4(1)  # integers land in the prime subfield


@pytest.mark.parametrize("p,s", SMALL, ids=SMALL_IDS)
def test_products_match_independent_polynomial_arithmetic(p, s):
    F = make_field(p, s)
    for a, b in itertools.product(F.elements(), repeat=2):
        assert (a * b).coeffs == gf_product_coeffs(F, a.coeffs, b.coeffs)


@pytest.mark.parametrize("p,s", SMALL, ids=SMALL_IDS)
def test_field_axioms_exhaustive(p, s):
    F = make_field(p, s)
    els = list(F.elements())
    zero, one = F(0), F(1)
    for a in els:
        assert a + zero == a and a * one == a and a + (-a) == zero
        if a:
            assert a * a.inv() == one
    for a, b in itertools.product(els, repeat=2):
        assert a + b == b + a and a * b == b * a
    for a, b, c in itertools.product(els, repeat=3):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


@pytest.mark.parametrize("p,s", SMALL, ids=SMALL_IDS)
def test_frobenius_fixes_the_field(p, s):
    F = make_field(p, s)
    for x in F.elements():
        assert x**F.q == x
        assert x.frobenius() == x**p


@pytest.mark.parametrize("p,s", SMALL, ids=SMALL_IDS)
def test_power_map_bijective_iff_coprime(p, s):
    F = make_field(p, s)
    for g in range(1, 11):
        images = {x**g for x in F.elements()}
        assert (len(images) == F.q) == (gcd(g, F.q - 1) == 1)
        assert power_is_bijective(F, g) == (gcd(g, F.q - 1) == 1)


@given(st.sampled_from([(5, 2), (2, 4), (3, 3)]), st.data())
def test_field_axioms_random_triples_large(ps, data):
    F = make_field(*ps)
    codes = st.integers(0, F.q - 1)
    a, b, c = (F.element(data.draw(codes)) for _ in range(3))
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - b == -(b - a)
    if b:
        assert (a / b) * b == a
