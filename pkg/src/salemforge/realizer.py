"""Certified loxodromic elements of SL_2(Q) realizing Salem numbers.

Every realization uses the matrix ``[[0, -1], [1, v]]`` with ``v`` a vector
of C_4(Q) built from a four-square decomposition.  A certificate records the
exact evidence: order coordinates of the entries, the 7x7 matrix of
``phi(psi(.))`` in SO(q_6), its characteristic polynomial and the exact
quotient by the minimal polynomial of the realized Salem number.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .arith import four_squares
from .clifford import C4, CliffordElement, order_coordinates
from .errors import DomainError, InternalError, NotLoxodromic
from .polynomials import Poly
from .salem import (SalemQuadratic, SalemQuartic, holonomy_quartic, salem_check_deg4,
                    square_coeffs, sqrt_witness)
from .spin_bridge import SOMatrix, charpoly, is_so, largest_real_eigenvalue, so_of
from .vahlen import VahlenMatrix, family_matrix, lemma_quartic, translation_length_estimate

LENGTH_TOL = 1e-4


@dataclass(frozen=True)
class RealizationCertificate:
    """``salem`` is the input; the realized number is ``salem ** exponent``
    with minimal polynomial ``target.poly``.  ``log_lambda`` is the log of
    the realized number and ``ell_exact`` the log of the largest real
    eigenvalue of ``so_matrix``."""

    salem: SalemQuadratic | SalemQuartic
    exponent: int
    target: SalemQuadratic | SalemQuartic
    matrix: VahlenMatrix
    order_coords: tuple
    quartic: Poly
    so_matrix: SOMatrix
    charpoly: Poly
    quotient: Poly
    ell_numeric: float
    ell_exact: float
    log_lambda: float
    checks: dict

    @property
    def alpha(self) -> CliffordElement:
        return self.matrix.d

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def to_json(self) -> dict:
        return {
            "salem": self.salem.to_json(),
            "exponent": str(self.exponent),
            "target": self.target.to_json(),
            "matrix": self.matrix.to_json(),
            "alpha_coords": [str(c) for c in self.order_coords[3]],
            "order_coords": [[str(c) for c in row] for row in self.order_coords],
            "quartic": [str(c) for c in self.quartic.descending()],
            "so_matrix": self.so_matrix.to_json(),
            "charpoly": [str(c) for c in self.charpoly.descending()],
            "quotient": [str(c) for c in self.quotient.descending()],
            "ell_numeric": repr(self.ell_numeric),
            "ell_exact": repr(self.ell_exact),
            "log_lambda": repr(self.log_lambda),
            "checks": {k: str(v).lower() for k, v in self.checks.items()},
        }


def _certify(salem, exponent, target, v: CliffordElement, strict: bool = True):
    """Build a certificate; ``strict`` turns failed checks into bug traps."""
    M = family_matrix(v)
    coords = []
    member = True
    for e in M.entries:
        c, ok = order_coordinates(e)
        coords.append(tuple(c))
        member = member and ok
    S = so_of(M)
    cp = charpoly(S)
    q, r = divmod(cp, target.poly)
    eig = largest_real_eigenvalue(S)
    try:
        ell = translation_length_estimate(M)
        quartic = lemma_quartic(v)
    except (NotLoxodromic, DomainError) as exc:
        if strict:
            raise InternalError(f"constructed element is not loxodromic: {exc}") from exc
        ell, quartic = float("nan"), Poly()
    log_lam = math.log(target.value)
    checks = {
        "order_membership": member,
        "vahlen": M.gamma_certified and is_so(S),
        "divisibility": not r,
        "length_match": abs(ell - log_lam) < LENGTH_TOL,
    }
    cert = RealizationCertificate(salem, exponent, target, M, tuple(coords), quartic, S, cp, q,
                                  ell, math.log(eig) if eig else float("nan"), log_lam, checks)
    if strict and not checks["order_membership"]:
        raise InternalError(f"entries of {M.to_json()} leave the order Q")
    if strict and not checks["divisibility"]:
        raise InternalError(f"{target.poly} does not divide {cp}")
    return cert


def realize_deg2(N: int) -> RealizationCertificate:
    """``v = p_1 i_1 + ... + p_4 i_4`` with ``sum p_k^2 = N - 2``."""
    s = SalemQuadratic(N)
    v = C4.vector(0, *four_squares(N - 2))
    cert = _certify(s, 1, s, v)
    if cert.quartic != Poly([1, 0, N, 0, 1]):
        raise InternalError("degree-2 lemma quartic is not X^4 + N X^2 + 1")
    return cert


def alpha_deg4(s: SalemQuartic, w=None) -> CliffordElement:
    """``(l - 2 + p_1 i_1 + ... + p_4 i_4) / 2`` with ``sum p_k^2 = -F(1)``."""
    w = w or sqrt_witness(s)
    if w is None:
        raise DomainError(f"({s.a}, {s.b}) is not square-rootable")
    neg = -w.Delta
    if w.l % 2 == 0:
        if neg % 4:
            raise InternalError("l even but -F(1) is not divisible by 4")
        p = [2 * t for t in four_squares(neg // 4)]
    else:
        if neg % 4 != 3:
            raise InternalError("l odd but -F(1) is not 3 mod 4")
        p = list(four_squares(neg))
        evens = [t for t in p if t % 2 == 0]
        if len(evens) != 1:
            raise InternalError("expected exactly one even entry")
        p.remove(evens[0])
        p.append(evens[0])
    alpha = C4.vector(w.l - 2, *p) / 2
    if alpha.trace() != w.l - 2 or alpha.norm() != -s.a:
        raise InternalError("alpha has the wrong trace or norm")
    return alpha


def realize_deg4(s: SalemQuartic, w=None) -> RealizationCertificate:
    w = w or sqrt_witness(s)
    alpha = alpha_deg4(s, w)
    cert = _certify(s, 1, s, alpha)
    if cert.quartic != holonomy_quartic(s, w):
        raise InternalError("lemma quartic differs from the holonomy quartic")
    return cert


def realize_any_deg4(s: SalemQuartic) -> RealizationCertificate:
    """Realize ``lambda`` when square-rootable, otherwise ``lambda^2``."""
    w = sqrt_witness(s)
    if w is not None:
        return realize_deg4(s, w)
    t = square_coeffs(s)
    wt = sqrt_witness(t)
    if wt is None:
        raise InternalError(f"lambda^2 = ({t.a}, {t.b}) is not square-rootable")
    cert = realize_deg4(t, wt)
    return RealizationCertificate(s, 2, *[getattr(cert, f) for f in (
        "target", "matrix", "order_coords", "quartic", "so_matrix", "charpoly", "quotient",
        "ell_numeric", "ell_exact", "log_lambda", "checks")])


def realize(salem: SalemQuadratic | SalemQuartic) -> RealizationCertificate:
    if isinstance(salem, SalemQuadratic):
        return realize_deg2(salem.N)
    return realize_any_deg4(salem)


# -- verification -----------------------------------------------------------

def _salem_from_json(data):
    if "N" in data:
        return SalemQuadratic(int(data["N"]))
    s = salem_check_deg4(int(data["a"]), int(data["b"]))
    if not s:
        raise DomainError(f"certificate Salem input rejected: {s.reason}")
    return s


def verify_certificate(data) -> dict:
    """Re-derive every check from a certificate or its JSON form.

    Returns the check dictionary; the stored polynomials, SO matrix and
    coordinates must also match the recomputation exactly.
    """
    if isinstance(data, RealizationCertificate):
        data = data.to_json()
    try:
        salem = _salem_from_json(data["salem"])
        exponent = int(data["exponent"])
        M = VahlenMatrix.from_json(data["matrix"])
    except (KeyError, TypeError, ValueError) as exc:
        raise DomainError(f"malformed certificate: {exc}") from exc
    if exponent == 1:
        target = salem
    elif exponent == 2 and isinstance(salem, SalemQuartic):
        target = square_coeffs(salem)
    else:
        raise DomainError(f"unsupported exponent {exponent}")
    fresh = _certify(salem, exponent, target, M.d, strict=False)
    if fresh.matrix != M:
        raise DomainError("certificate matrix is not of the form [[0, -1], [1, v]]")
    out = dict(fresh.checks)
    mine = fresh.to_json()
    out["reproduced"] = all(mine[k] == data.get(k) for k in (
        "alpha_coords", "quartic", "so_matrix", "charpoly", "quotient"))
    return out
