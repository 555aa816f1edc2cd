import json
import math

import pytest

from salemforge.clifford import C4, OMEGA
from salemforge.errors import DomainError
from salemforge.polynomials import Poly
from salemforge.realizer import (alpha_deg4, realize, realize_any_deg4, realize_deg2,
                                 realize_deg4, verify_certificate)
from salemforge.salem import SalemQuadratic, SalemQuartic, enumerate_salem, sqrt_witness
from salemforge.vahlen import vahlen_mul

i1, i2 = C4.gen(1), C4.gen(2)


def test_deg2_golden():
    c = realize_deg2(3)
    assert c.alpha == i1
    assert c.quartic == Poly([1, 0, 3, 0, 1])
    assert c.ok
    assert c.ell_numeric == pytest.approx(math.log((3 + math.sqrt(5)) / 2), abs=1e-9)
    assert c.ell_exact == pytest.approx(0.9624236501192069, abs=1e-6)


@pytest.mark.parametrize("N,v", [(4, i1 + i2), (7, 2 * i1 + i2)])
def test_deg2_vectors(N, v):
    c = realize_deg2(N)
    assert c.alpha == v and c.ok
    assert c.quotient * Poly([1, -N, 1]) == c.charpoly


def test_deg2_rejects_small_trace():
    with pytest.raises(DomainError):
        realize_deg2(2)


def test_hand_verified_instance():
    c = realize_deg4(SalemQuartic.of(-1, -3))
    assert c.alpha == 1 + OMEGA
    assert c.order_coords[3] == tuple(1 if I in (0, 0b0100) else 0 for I in range(16))
    assert c.quartic == Poly.from_descending([1, -1, 3, -1, 1])
    assert c.quotient * Poly.from_descending([1, -1, -3, -1, 1]) == c.charpoly
    assert c.alpha.trace() == 1 and c.alpha.norm() == 1


def test_square_of_smallest():
    c = realize_deg4(SalemQuartic.of(-3, 1))
    assert c.alpha == 2 + OMEGA
    assert c.ell_numeric == pytest.approx(2 * math.log(1.7220838057390426), abs=1e-9)


def test_even_l():
    c = realize_deg4(SalemQuartic.of(-2, -2))
    assert c.alpha == 1 + i1 and c.ok


@pytest.mark.parametrize("ab,exp,target", [((-1, -1), 2, (-3, 1)), ((-1, -3), 1, (-1, -3)),
                                           ((-2, -5), 1, (-2, -5))])
def test_any_deg4(ab, exp, target):
    c = realize_any_deg4(SalemQuartic.of(*ab))
    assert c.exponent == exp and (c.target.a, c.target.b) == target and c.ok
    assert c.log_lambda == pytest.approx(exp * math.log(SalemQuartic.of(*ab).value))


def test_parity_and_alpha_invariants():
    for s, sq in enumerate_salem(15):
        if not sq:
            continue
        w = sqrt_witness(s)
        assert (-s.F1) % 4 == (0 if w.l % 2 == 0 else 3)
        a = alpha_deg4(s, w)
        assert a.trace() == w.l - 2 and a.norm() == -s.a


def test_not_square_rootable_rejected():
    with pytest.raises(DomainError):
        realize_deg4(SalemQuartic.of(-1, -1))


def test_group_closure_smoke():
    mats = [realize_deg4(SalemQuartic.of(*ab)).matrix for ab in [(-1, -3), (-2, -2), (-3, 1)]]
    mats.append(realize_deg2(5).matrix)
    for A in mats:
        for B in mats:
            P = vahlen_mul(A, B)
            assert (P.a * P.b.reverse()).is_vector() and (P.c * P.d.reverse()).is_vector()


def test_certificate_round_trip():
    for s in (SalemQuartic.of(-1, -1), SalemQuartic.of(-2, -5), SalemQuadratic(11)):
        data = json.loads(json.dumps(realize(s).to_json()))
        checks = verify_certificate(data)
        assert all(checks.values())
        assert verify_certificate(data) == checks


def test_certificate_tampering_detected():
    data = realize(SalemQuartic.of(-1, -3)).to_json()
    data["charpoly"][2] = "0"
    assert not verify_certificate(data)["reproduced"]
    other = realize(SalemQuartic.of(-3, 1)).to_json()
    checks = verify_certificate(dict(data, matrix=other["matrix"]))
    assert not checks["divisibility"] and not checks["length_match"]
    # the identity matrix is not loxodromic at all
    checks = verify_certificate(dict(data, matrix=dict(data["matrix"], d=[[[], "2"]])))
    assert not checks["length_match"]
