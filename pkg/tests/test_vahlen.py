import math
from fractions import Fraction

import numpy as np
import pytest

from salemforge.clifford import C4
from salemforge.errors import DomainError, InternalError, NotLoxodromic, VahlenViolation
from salemforge.vahlen import (HPoint, VahlenMatrix, family_matrix, hyperbolic_distance, identity,
                               lemma_quartic, mobius_act, translation_length_estimate,
                               vahlen_check, vahlen_mul)

i1, i2, i3, i4 = (C4.gen(k) for k in range(1, 5))


def test_check_accepts_family_and_flags_certified():
    M = family_matrix(i1 + 2 * i3)
    assert M.gamma_certified


@pytest.mark.parametrize("entries,cond", [
    ((2, 0, 0, 1), "pseudo_determinant"),
    ((i1 * i2, 0, 0, -(i1 * i2)), "pseudo_determinant"),
    ((1, i1 * i2, 0, 1), "ab_star_vector"),
    ((1, 0, i1 * i2, 1), "cd_star_vector"),
])
def test_violations_are_named(entries, cond):
    with pytest.raises(VahlenViolation) as exc:
        vahlen_check(*entries)
    assert exc.value.condition == cond


def test_mul_inverse_and_power():
    A = family_matrix(i1)
    B = family_matrix(1 + i2 + i4)
    AB = A @ B
    assert AB @ AB.inverse() == identity()
    assert A.power(3) == A @ A @ A
    assert A.power(-2) @ A.power(2) == identity()


def test_json_round_trip():
    M = family_matrix(C4.vector(Fraction(1, 2), Fraction(1, 2), Fraction(1, 2), Fraction(1, 2)))
    assert VahlenMatrix.from_json(M.to_json()) == M
    with pytest.raises(DomainError):
        VahlenMatrix.from_json({"a": []})


def test_mobius_simple_maps():
    x = HPoint((0.3, 0.1, 0.0, -0.2, 0.4, 0.7))
    assert mobius_act(identity(), x) == x
    y = mobius_act(vahlen_check(1, 1, 0, 1), x)
    assert y.coords == pytest.approx((1.3, 0.1, 0.0, -0.2, 0.4, 0.7))
    # x -> -x^-1 on i5 is i5
    z = mobius_act(family_matrix(C4.element()), HPoint.height(2.0))
    assert z.coords == pytest.approx((0, 0, 0, 0, 0, 0.5))


def test_mobius_is_isometry():
    M = family_matrix(1 + i1 - i3)
    pts = [HPoint((0.1 * k, -0.2, 0.3, 0.0, 0.05 * k, 0.5 + 0.3 * k)) for k in range(4)]
    for p in pts:
        for q in pts:
            assert hyperbolic_distance(mobius_act(M, p), mobius_act(M, q)) == pytest.approx(
                hyperbolic_distance(p, q), abs=1e-9)


def test_distance_vertical():
    assert hyperbolic_distance(HPoint.height(1), HPoint.height(math.e)) == pytest.approx(1.0)


@pytest.mark.parametrize("v", [i1, i1 + i2, 2 * i1 + i2, C4.vector(1, 1, 0, 1),
                               C4.vector(Fraction(3, 2), Fraction(1, 2), Fraction(1, 2), Fraction(1, 2))])
def test_translation_length_matches_lemma_quartic(v):
    g = lemma_quartic(v)
    r = max(abs(np.roots([float(c) for c in g.descending()])))
    assert translation_length_estimate(family_matrix(v)) == pytest.approx(2 * math.log(r), abs=1e-9)


def test_not_loxodromic():
    with pytest.raises(NotLoxodromic):
        translation_length_estimate(vahlen_check(1, 1, 0, 1))  # parabolic
    with pytest.raises(NotLoxodromic):
        translation_length_estimate(family_matrix(C4.element()))  # elliptic, order 4
    with pytest.raises(DomainError):
        lemma_quartic(C4.element())


def test_hpoint_validation():
    with pytest.raises(DomainError):
        HPoint((0, 0, 0, 0, 0, 0))
    with pytest.raises(DomainError):
        HPoint((0, 0, 1))


def test_mul_detects_corrupted_input():
    bad = VahlenMatrix(C4.scalar(2), C4.element(), C4.element(), C4.scalar(1))
    with pytest.raises(InternalError):
        vahlen_mul(bad, identity())
