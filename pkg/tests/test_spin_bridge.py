import math
import random
from fractions import Fraction

import numpy as np
import pytest
import sympy

from salemforge import linalg
from salemforge.clifford import C4, CQ6, OMEGA
from salemforge.errors import DomainError
from salemforge.polynomials import Poly
from salemforge.spin_bridge import (F0, F1, F2, IOTA_GENS, J, U, V, SOMatrix, charpoly,
                                    deflate_cyclotomic, iota, is_so, largest_real_eigenvalue,
                                    phi, psi, so_of)
from salemforge.vahlen import family_matrix, identity, translation_length_estimate

i1, i2 = C4.gen(1), C4.gen(2)


def test_idempotents():
    assert U * U == U and V * V == V
    assert U * V == 0 and V * U == 0
    assert U + V == 1


def test_iota_examples():
    assert iota(C4.scalar(1)) == 1
    assert iota(i1) == F0 * F1 * F2 * CQ6.gen(4)
    assert iota(i1 * i2) == iota(i1) * iota(i2)


def test_iota_preserves_relations():
    for k, g in enumerate(IOTA_GENS):
        assert g * g == -1
        for h in IOTA_GENS[k + 1:]:
            assert g * h == -(h * g)


def test_iota_is_multiplicative_on_random_elements():
    rng = random.Random(5)
    for _ in range(20):
        x = C4.element({rng.randrange(16): rng.randint(-3, 3) for _ in range(3)})
        y = C4.element({rng.randrange(16): rng.randint(-3, 3) for _ in range(3)})
        assert iota(x * y) == iota(x) * iota(y)
        assert iota(x.reverse()) == iota(x).reverse()


def random_generators(rng, count):
    out = []
    for _ in range(count):
        v = C4.vector(*[Fraction(rng.randint(-4, 4), rng.choice([1, 2])) for _ in range(5)])
        out.append(family_matrix(v))
    return out


def test_psi_unital_and_multiplicative():
    assert psi(identity()) == 1
    rng = random.Random(11)
    gens = random_generators(rng, 8)
    for _ in range(100):
        A, B = rng.choice(gens), rng.choice(gens)
        assert psi(A @ B) == psi(A) * psi(B)


def test_phi_of_one_and_kernel():
    I7 = tuple(tuple(int(i == j) for j in range(7)) for i in range(7))
    assert phi(CQ6.scalar(1)).rows == I7
    s = psi(family_matrix(i1))
    assert phi(-s) == phi(s)


def test_phi_psi_lands_in_so_and_respects_inverse():
    rng = random.Random(12)
    I7 = tuple(tuple(int(i == j) for j in range(7)) for i in range(7))
    for M in random_generators(rng, 10):
        S = so_of(M)
        assert is_so(S)
        assert (S @ so_of(M.inverse())).rows == I7


def test_phi_rejects_non_spin():
    with pytest.raises(DomainError):
        phi(F0)
    with pytest.raises(DomainError):
        phi(CQ6.scalar(2))


def test_charpoly_identity_and_sympy():
    I7 = SOMatrix(tuple(tuple(int(i == j) for j in range(7)) for i in range(7)))
    assert charpoly(I7) == Poly([-1, 1]) ** 7
    S = so_of(family_matrix(1 + OMEGA))
    x = sympy.Symbol("x")
    expected = sympy.Matrix([list(r) for r in S.rows]).charpoly(x).all_coeffs()
    assert charpoly(S) == Poly.from_descending([Fraction(str(c)) for c in expected])


def test_golden_ratio_divisibility():
    cp = charpoly(so_of(family_matrix(i1)))
    assert not divmod(cp, Poly.from_descending([1, -3, 1]))[1]


def test_charpoly_reciprocal_structure():
    rng = random.Random(13)
    for M in random_generators(rng, 6):
        cp = charpoly(so_of(M))
        # det = 1 and orthogonal: p(x) = -x^7 p(1/x)
        assert cp.reciprocal() == -cp


def test_largest_eigenvalue_against_numpy_and_length():
    for v in (i1, i1 + i2, 1 + OMEGA, C4.vector(1, 1, 0, 1)):
        S = so_of(family_matrix(v))
        ev = np.linalg.eigvals(np.array([[float(x) for x in r] for r in S.rows]))
        top = max(e.real for e in ev if abs(e.imag) < 1e-9)
        lam = largest_real_eigenvalue(S)
        assert lam == pytest.approx(top, rel=1e-9)
        assert math.log(lam) == pytest.approx(translation_length_estimate(family_matrix(v)), abs=1e-3)


def test_deflation():
    p = Poly([-1, 1]) ** 3 * Poly([1, 0, 1]) * Poly.from_descending([1, -3, 1])
    assert deflate_cyclotomic(p) == Poly.from_descending([1, -3, 1])


def test_so_json_round_trip():
    S = so_of(family_matrix(1 + OMEGA))
    data = S.to_json()
    assert len(data) == 49 and all(isinstance(x, str) for x in data)
    assert SOMatrix.from_json(data) == S
    assert linalg.matmul(linalg.matmul(linalg.transpose(S.rows), J), S.rows) == J
