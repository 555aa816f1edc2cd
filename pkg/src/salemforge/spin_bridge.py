"""SL_2(C_4(Q)) -> Spin(q_6)(Q) -> SO(q_6)(Q).

``q_6 = x_0^2 - x_1^2 - ... - x_6^2`` with ordered basis
``f_0, f_1, f_2, i_1, i_2, i_3, i_4``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .clifford import C4, CQ6, CliffordElement
from .errors import DomainError, InternalError
from .polynomials import Poly, isolate_real_roots
from .vahlen import VahlenMatrix

J = [[(1 if i == 0 else -1) if i == j else 0 for j in range(7)] for i in range(7)]

F0, F1, F2 = CQ6.gen(1), CQ6.gen(2), CQ6.gen(3)
_F012 = F0 * F1 * F2
# iota(i_j) = f0 f1 f2 i_j, where i_j is generator j+3 of C(q_6)
IOTA_GENS = [_F012 * CQ6.gen(j + 3) for j in range(1, 5)]

TAU0 = (F0 + F1) / 2
TAU1 = (F0 - F1) / 2
U = TAU1 * TAU0
V = TAU0 * TAU1
W0 = TAU0 * F2
W1 = TAU1 * F2

BASIS = [CQ6.gen(k) for k in range(1, 8)]


def iota(x: CliffordElement) -> CliffordElement:
    """Algebra embedding C_4(Q) -> C(q_6)."""
    if x.algebra != C4:
        raise DomainError("iota is defined on C_4(Q)")
    out = CQ6.element()
    for m, c in x.terms.items():
        blade = CQ6.scalar(c)
        for k in range(4):
            if m >> k & 1:
                blade = blade * IOTA_GENS[k]
        out = out + blade
    return out


def check_spin(s: CliffordElement) -> None:
    if s.algebra != CQ6 or not s.is_even():
        raise DomainError("spin elements live in the even part of C(q_6)")
    if s * s.reverse() != 1:
        raise DomainError("s s* != 1")


def psi(M: VahlenMatrix) -> CliffordElement:
    """``iota(a) u + iota(b) w_1 + iota(c) w_0 + iota(d) v``."""
    s = iota(M.a) * U + iota(M.b) * W1 + iota(M.c) * W0 + iota(M.d) * V
    try:
        check_spin(s)
    except DomainError as exc:
        raise InternalError(f"psi produced a non-spin element: {exc}") from exc
    return s


@dataclass(frozen=True)
class SOMatrix:
    """7x7 rational matrix preserving ``J = diag(1, -1, ..., -1)``."""

    rows: tuple

    def __post_init__(self):
        if len(self.rows) != 7 or any(len(r) != 7 for r in self.rows):
            raise DomainError("SO(q_6) matrices are 7x7")

    def __matmul__(self, other: "SOMatrix") -> "SOMatrix":
        return SOMatrix(_freeze(linalg.matmul(self.rows, other.rows)))

    def to_json(self) -> list:
        return [str(x) for row in self.rows for x in row]

    @classmethod
    def from_json(cls, data) -> "SOMatrix":
        if len(data) != 49:
            raise DomainError("SO matrix JSON needs 49 entries")
        vals = [Fraction(x) for x in data]
        return cls(_freeze([vals[7 * i:7 * i + 7] for i in range(7)]))


def _freeze(rows):
    return tuple(tuple(x.numerator if isinstance(x, Fraction) and x.denominator == 1 else x
                       for x in r) for r in rows)


def is_so(M) -> bool:
    rows = M.rows if isinstance(M, SOMatrix) else M
    Mt = linalg.transpose(rows)
    return linalg.matmul(linalg.matmul(Mt, J), rows) == J and linalg.det(rows) == 1


def phi(s: CliffordElement) -> SOMatrix:
    """Matrix of ``x -> s x s*`` on the generator span; column k is the image of g_k."""
    check_spin(s)
    star = s.reverse()
    cols = []
    for g in BASIS:
        y = s * g * star
        if not y.is_pure_vector():
            raise DomainError("conjugation leaves the generator span")
        cols.append([y.terms.get(1 << k, 0) for k in range(7)])
    M = SOMatrix(_freeze(linalg.transpose(cols)))
    if not is_so(M):
        raise InternalError("phi(s) is not in SO(q_6)")
    return M


def so_of(M: VahlenMatrix) -> SOMatrix:
    return phi(psi(M))


def charpoly(M: SOMatrix) -> Poly:
    return linalg.charpoly([list(r) for r in M.rows])


CYCLOTOMIC = [Poly([-1, 1]), Poly([1, 1]), Poly([1, 0, 1]), Poly([1, 1, 1]), Poly([1, -1, 1])]


def deflate_cyclotomic(p: Poly) -> Poly:
    """Divide out ``x-1, x+1, x^2+1, x^2+x+1, x^2-x+1`` as often as they divide."""
    for c in CYCLOTOMIC:
        while p.degree > 0:
            q, r = divmod(p, c)
            if r:
                break
            p = q
    return p


def largest_real_eigenvalue(M: SOMatrix, eps=Fraction(1, 2**40)) -> float | None:
    """Largest real root of the charpoly after exact cyclotomic deflation."""
    p = deflate_cyclotomic(charpoly(M))
    if p.degree < 1:
        return None
    roots = isolate_real_roots(p, eps)
    if not roots:
        return None
    lo, hi = roots[-1]
    return float((lo + hi) / 2)
