"""Vahlen matrices over C_4(Q) and their action on upper half-space H^6.

Exact conditions (pseudo-determinant, vector conditions) are checked with
rational arithmetic; the Moebius action and translation-length estimate run
in floating point inside C_5(R), where ``i_5`` is the height direction.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .clifford import C4, C5, CliffordElement
from .errors import DomainError, InternalError, NotLoxodromic, VahlenViolation
from .polynomials import Poly

DEGENERACY = 1e-12
DIST_CAP = 200.0


def _entry_certifiable(x: CliffordElement) -> bool:
    # 0, nonzero scalars and nonzero vectors are Clifford-group elements (or 0)
    return x.is_vector()


def _check_conditions(a, b, c, d):
    for x in (a, b, c, d):
        if x.algebra != C4:
            raise VahlenViolation("algebra", "entries must lie in C_4(Q)")
    pdet = a * d.reverse() - b * c.reverse()
    if pdet != 1:
        raise VahlenViolation("pseudo_determinant", f"ad* - bc* = {pdet!r}")
    if not (a * b.reverse()).is_vector():
        raise VahlenViolation("ab_star_vector", "ab* is not a vector")
    if not (c * d.reverse()).is_vector():
        raise VahlenViolation("cd_star_vector", "cd* is not a vector")


@dataclass(frozen=True, eq=False)
class VahlenMatrix:
    """``[[a, b], [c, d]]`` with entries in C_4(Q).

    ``gamma_certified`` records that every entry is known to lie in the
    Clifford group or be 0, either because it is a scalar/vector or because
    the matrix came from multiplying certified matrices.
    """

    a: CliffordElement
    b: CliffordElement
    c: CliffordElement
    d: CliffordElement
    gamma_certified: bool = False

    def __eq__(self, other):
        return (isinstance(other, VahlenMatrix)
                and (self.a, self.b, self.c, self.d) == (other.a, other.b, other.c, other.d))

    def __hash__(self):
        return hash((self.a, self.b, self.c, self.d))

    @property
    def entries(self):
        return (self.a, self.b, self.c, self.d)

    def __matmul__(self, other):
        return vahlen_mul(self, other)

    def inverse(self) -> "VahlenMatrix":
        a, b, c, d = self.entries
        return VahlenMatrix(d.reverse(), -b.reverse(), -c.reverse(), a.reverse(),
                            self.gamma_certified)

    def power(self, n: int) -> "VahlenMatrix":
        out = identity()
        base = self if n >= 0 else self.inverse()
        for _ in range(abs(n)):
            out = vahlen_mul(out, base)
        return out

    def to_json(self) -> dict:
        return {k: getattr(self, k).to_text() for k in "abcd"}

    @classmethod
    def from_json(cls, data) -> "VahlenMatrix":
        try:
            entries = [C4.from_text(data[k]) for k in "abcd"]
        except KeyError as exc:
            raise DomainError(f"matrix JSON missing field {exc}") from None
        return vahlen_check(*entries)


def vahlen_check(a, b, c, d) -> VahlenMatrix:
    """Validate the Vahlen conditions exactly.

    Raises :class:`VahlenViolation` naming the failed condition.
    """
    a, b, c, d = (x if isinstance(x, CliffordElement) else C4.scalar(x) for x in (a, b, c, d))
    _check_conditions(a, b, c, d)
    certified = all(_entry_certifiable(x) for x in (a, b, c, d))
    return VahlenMatrix(a, b, c, d, certified)


def identity() -> VahlenMatrix:
    return VahlenMatrix(C4.scalar(1), C4.element(), C4.element(), C4.scalar(1), True)


def family_matrix(v: CliffordElement) -> VahlenMatrix:
    """``[[0, -1], [1, v]]``."""
    return vahlen_check(C4.element(), C4.scalar(-1), C4.scalar(1), v)


def vahlen_mul(M: VahlenMatrix, N: VahlenMatrix) -> VahlenMatrix:
    a = M.a * N.a + M.b * N.c
    b = M.a * N.b + M.b * N.d
    c = M.c * N.a + M.d * N.c
    d = M.c * N.b + M.d * N.d
    try:
        _check_conditions(a, b, c, d)
    except VahlenViolation as exc:
        raise InternalError(f"product left the Vahlen group ({exc})") from exc
    return VahlenMatrix(a, b, c, d, M.gamma_certified and N.gamma_certified)


# -- floating point geometry in H^6 ----------------------------------------

def _to_c5(x: CliffordElement) -> CliffordElement:
    # C_4 blades embed in C_5 with identical bitmasks
    return CliffordElement(C5, {m: float(c) for m, c in x.terms.items()})


@dataclass(frozen=True)
class HPoint:
    """``x_0 + x_1 i_1 + ... + x_5 i_5`` with height ``x_5 > 0``."""

    coords: tuple

    def __post_init__(self):
        if len(self.coords) != 6:
            raise DomainError("points of H^6 have 6 coordinates")
        if not self.coords[5] > 0:
            raise DomainError("height coordinate must be positive")

    @classmethod
    def height(cls, h: float = 1.0) -> "HPoint":
        return cls((0.0, 0.0, 0.0, 0.0, 0.0, float(h)))

    def to_clifford(self) -> CliffordElement:
        return C5.vector(*[float(t) for t in self.coords])


def mobius_act(M: VahlenMatrix, x: HPoint) -> HPoint:
    """``(a x + b)(c x + d)^-1`` evaluated in C_5(R)."""
    a, b, c, d = (_to_c5(e) for e in M.entries)
    X = x.to_clifford()
    den = c * X + d
    bar = den.conjugate()
    nrm = (den * bar).scalar_part
    if abs(nrm) < DEGENERACY:
        raise DomainError(f"|N(cx+d)| = {abs(nrm):.3g} below degeneracy threshold")
    y = (a * X + b) * bar / nrm
    coords = [y.terms.get(0, 0.0)] + [y.terms.get(1 << k, 0.0) for k in range(5)]
    return HPoint(tuple(float(t) for t in coords))


def hyperbolic_distance(x: HPoint, y: HPoint) -> float:
    """Upper half-space distance, ``cosh d = 1 + |x-y|^2 / (2 x_5 y_5)``."""
    sq = sum((s - t) ** 2 for s, t in zip(x.coords, y.coords))
    return 2.0 * math.asinh(math.sqrt(sq) / (2.0 * math.sqrt(x.coords[5] * y.coords[5])))


def translation_length_estimate(M: VahlenMatrix, iterations: int = 64) -> float:
    """``(d(M^2n x0, x0) - d(M^n x0, x0)) / n`` with ``x0 = i_5``.

    ``n`` is ``iterations`` unless the orbit passes distance ``DIST_CAP``
    first, in which case ``n`` is half the steps taken (keeps heights above
    float underflow for long translations).

    Raises :class:`NotLoxodromic` when the displacement grows by less than
    3 between ``n`` and ``2n`` steps; parabolic orbits grow like
    ``2 log n`` (increment about 1.39) and elliptic ones stay bounded.
    """
    if iterations < 1:
        raise DomainError("iterations must be positive")
    x0 = HPoint.height(1.0)
    x = x0
    dists = []
    for _ in range(2 * iterations):
        x = mobius_act(M, x)
        dists.append(hyperbolic_distance(x, x0))
        if dists[-1] > DIST_CAP and len(dists) >= 2:
            break
    n = len(dists) // 2
    growth = dists[2 * n - 1] - dists[n - 1]
    if growth < 3.0:
        raise NotLoxodromic(f"orbit displacement grew by {growth:.3g} from n={n} to 2n")
    return growth / n


def lemma_quartic(v: CliffordElement) -> Poly:
    """``X^4 - tX^3 + (2+s)X^2 - tX + 1`` with ``t = tr(v)``, ``s = Norm(v)``.

    Its largest root modulus ``r`` gives the translation length ``2 log r`` of
    ``[[0, -1], [1, v]]``.
    """
    if not v.is_vector():
        raise DomainError("lemma quartic needs a vector")
    t, s = v.trace(), v.norm()
    if t * t - 4 * s >= 0:
        raise DomainError(f"t^2 - 4s = {t * t - 4 * s} >= 0: not a loxodromic family member")
    return Poly([1, -t, 2 + s, -t, 1])
