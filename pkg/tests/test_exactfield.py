import random
from fractions import Fraction

import pytest

from centtype import (
    CompositeModulus,
    DivisionByZero,
    ExtensionField,
    Poly,
    ReducibleModulus,
    elem_from_json,
    elem_to_json,
    extension_field,
    field_from_descriptor,
    make_field,
    prime_field,
    rationals,
)


def test_prime_field_basics():
    F5 = prime_field(5)
    a = F5.elem(3)
    b = F5.elem(4)
    assert a + b == F5.elem(2)
    assert a * b == F5.elem(2)
    assert a - b == F5.elem(4)
    assert a / b == a * b.inverse()
    assert (a / b) * b == a
    assert F5.elem(-1) == F5.elem(4)
    assert F5.elem(12) == F5.elem(2)
    assert F5.zero + a == a
    assert F5.one * a == a
    assert F5.characteristic == 5
    assert F5.order() == 5
    assert F5.is_finite()


def test_prime_field_fraction_coercion():
    F7 = prime_field(7)
    assert F7.elem(Fraction(1, 2)) == F7.elem(4)
    assert F7.elem(Fraction(3, 5)) == F7.elem(3) / F7.elem(5)
    with pytest.raises(DivisionByZero):
        F7.elem(Fraction(1, 7))


def test_composite_modulus_rejected():
    with pytest.raises(CompositeModulus):
        prime_field(6)
    with pytest.raises(CompositeModulus):
        prime_field(1)
    with pytest.raises(CompositeModulus):
        prime_field(91)


def test_rationals():
    Q = rationals()
    a = Q.elem(Fraction(2, 4))
    assert a == Q.elem(Fraction(1, 2))
    assert a + a == Q.one
    assert not Q.is_finite()
    with pytest.raises(DivisionByZero):
        Q.one / Q.zero


def test_field_elem_division_by_zero():
    F3 = prime_field(3)
    with pytest.raises(DivisionByZero):
        F3.one / F3.zero
    with pytest.raises(DivisionByZero):
        F3.zero.inverse()


def test_char2_arithmetic():
    F2 = prime_field(2)
    assert F2.one + F2.one == F2.zero
    assert -F2.one == F2.one


def test_extension_field_f9():
    F3 = prime_field(3)
    L = extension_field(F3, Poly(F3, [1, 0, 1]))  # x^2 + 1
    assert L.order() == 9
    assert L.characteristic == 3
    a = L.generator
    assert a * a == -L.one
    # multiplicative order of the generator divides 8
    acc = L.one
    seen = set()
    for _ in range(8):
        acc = acc * a
        seen.add(acc)
    assert acc == L.one
    # every nonzero element is invertible
    for e in seen:
        assert e * e.inverse() == L.one


def test_extension_field_f8():
    F2 = prime_field(2)
    L = extension_field(F2, Poly(F2, [1, 1, 0, 1]))  # x^3 + x + 1
    assert L.order() == 8
    a = L.generator
    # the generator of F8 by this modulus is primitive
    acc = a
    powers = [acc]
    for _ in range(6):
        acc = acc * a
        powers.append(acc)
    assert len(set(powers)) == 7
    assert acc == L.one


def test_extension_rejects_reducible_modulus():
    F2 = prime_field(2)
    with pytest.raises(ReducibleModulus):
        extension_field(F2, Poly(F2, [1, 0, 1]))  # x^2 + 1 = (x+1)^2 mod 2


def test_extension_over_q():
    Q = rationals()
    L = extension_field(Q, Poly(Q, [-2, 0, 1]))  # sqrt(2)
    r = L.generator
    assert r * r == L.embed(Q.elem(2))
    half = (r * r).inverse() * r  # 1/(2) * sqrt(2) ... still in L
    assert half + half == r


def test_extension_random_field_axioms():
    rng = random.Random(7)
    F5 = prime_field(5)
    L = extension_field(F5, Poly(F5, [2, 0, 1]))  # x^2 + 2 irreducible mod 5
    elems = [L.elem([rng.randrange(5), rng.randrange(5)]) for _ in range(12)]
    for a in elems:
        for b in elems:
            assert a + b == b + a
            assert a * b == b * a
            assert (a + b) * a == a * a + b * a


def test_elem_json_roundtrip():
    Q = rationals()
    a = Q.elem(Fraction(-3, 7))
    assert elem_from_json(Q, elem_to_json(a)) == a
    F3 = prime_field(3)
    b = F3.elem(2)
    assert elem_from_json(F3, elem_to_json(b)) == b
    L = extension_field(F3, Poly(F3, [1, 0, 1]))
    c = L.generator + L.one
    assert elem_from_json(L, elem_to_json(c)) == c


def test_make_field():
    assert make_field("Q") == rationals()
    assert make_field("F2") == prime_field(2)
    assert make_field("F101") == prime_field(101)
    from centtype import CompositeModulus, ParseError

    with pytest.raises(ParseError):
        make_field("R")
    with pytest.raises(CompositeModulus):
        make_field("F0")


def test_field_descriptor_roundtrip():
    for K in (rationals(), prime_field(2), prime_field(13)):
        assert field_from_descriptor(K.descriptor()) == K
    F3 = prime_field(3)
    L = extension_field(F3, Poly(F3, [1, 0, 1]))
    assert field_from_descriptor(L.descriptor()) == L


def test_field_equality_and_interning():
    assert prime_field(5) == prime_field(5)
    assert prime_field(5) != prime_field(7)
    assert rationals() == rationals()
    F3 = prime_field(3)
    assert extension_field(F3, Poly(F3, [1, 0, 1])) == extension_field(
        F3, Poly(F3, [1, 0, 1])
    )
