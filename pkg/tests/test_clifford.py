from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from salemforge.clifford import (C4, CQ6, OMEGA, ORDER_Q, CliffordAlgebra, order_coordinates,
                                 vector_data)
from salemforge.errors import DomainError

coef = st.fractions(min_value=-3, max_value=3, max_denominator=3)


def c4_elements():
    return st.dictionaries(st.integers(0, 15), coef, max_size=5).map(C4.element)


def small_algebra_elements(alg):
    return st.dictionaries(st.integers(0, alg.dim - 1), coef, max_size=4).map(alg.element)


MIXED = CliffordAlgebra([2, -3, 5])


def test_generator_relations():
    i1, i2 = C4.gen(1), C4.gen(2)
    assert i1 * i1 == -1
    assert i1 * i2 == -(i2 * i1)
    assert CQ6.gen(1) * CQ6.gen(1) == 1
    assert MIXED.gen(3) * MIXED.gen(3) == 5


def test_omega_relation():
    # omega^2 + omega + 1 = 0
    assert OMEGA * OMEGA == -OMEGA - 1
    assert OMEGA ** 3 == 1


def test_involutions_on_blades():
    i1, i2 = C4.gen(1), C4.gen(2)
    assert (i1 * i2).reverse() == -(i1 * i2)
    assert (3 + 2 * i1).conjugate() == 3 - 2 * i1


@settings(max_examples=60)
@given(c4_elements(), c4_elements(), c4_elements())
def test_associativity_c4(x, y, z):
    assert (x * y) * z == x * (y * z)


@settings(max_examples=60)
@given(small_algebra_elements(MIXED), small_algebra_elements(MIXED), small_algebra_elements(MIXED))
def test_associativity_mixed_signature(x, y, z):
    assert (x * y) * z == x * (y * z)


@settings(max_examples=60)
@given(c4_elements(), c4_elements())
def test_reverse_is_anti_automorphism(x, y):
    assert (x * y).reverse() == y.reverse() * x.reverse()
    assert (x * y).conjugate() == y.conjugate() * x.conjugate()
    assert x.reverse().reverse() == x


@given(st.lists(coef, min_size=5, max_size=5))
def test_vector_norm_is_sum_of_squares(c):
    v = C4.vector(*c)
    assert v.norm() == sum(t * t for t in c)
    assert v * v.conjugate() == v.norm()
    if v.norm():
        assert v * v.inverse() == 1


def test_vector_data_example():
    d = vector_data(2 * C4.gen(1) + C4.gen(2))
    assert (d["is_vector"], d["trace"], d["norm"]) == (True, 0, 5)
    assert not vector_data(C4.gen(1) * C4.gen(2))["is_vector"]


def test_order_coordinates_examples():
    coords, member = order_coordinates(OMEGA)
    assert member and coords == [1 if I == 0b0100 else 0 for I in range(16)]
    coords, member = order_coordinates(C4.vector(1, 1, 1, 1) / 2)
    assert member and coords[0] == 1 and coords[0b0100] == 1 and sum(map(abs, coords)) == 2
    assert not order_coordinates(C4.gen(1) / 2)[1]


def test_order_round_trip():
    for I, b in enumerate(ORDER_Q.basis):
        coords, member = order_coordinates(b)
        assert member and coords == [int(J == I) for J in range(16)]
        assert ORDER_Q.from_coordinates(coords) == b


def test_order_closed_under_products():
    B = ORDER_Q.basis
    bad = [(I, J) for I in range(16) for J in range(16) if not ORDER_Q.contains(B[I] * B[J])]
    assert bad == []


def test_order_star_invariant():
    assert all(ORDER_Q.contains(b.reverse()) for b in ORDER_Q.basis)
    assert all(ORDER_Q.contains(b.conjugate()) for b in ORDER_Q.basis)


def test_order_sandwiched_by_integral_lattice():
    # 2Q inside C_4(Z) inside Q
    for b in ORDER_Q.basis:
        assert all(Fraction(c * 2).denominator == 1 for c in b.terms.values())
    for M in range(16):
        assert ORDER_Q.contains(C4.element({M: 1}))


def test_text_round_trip():
    x = C4.vector(Fraction(1, 2), 3) + C4.blade([1, 3], Fraction(-2, 5))
    assert C4.from_text(x.to_text()) == x
    with pytest.raises(DomainError):
        C4.from_text([[[1], "abc"]])


def test_cross_algebra_mix_rejected():
    with pytest.raises(DomainError):
        C4.gen(1) + CQ6.gen(1)
