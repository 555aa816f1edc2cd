"""Salem numbers of degree 2 and 4.

A degree-4 Salem number is encoded by the pair ``(a, b)`` of its minimal
polynomial ``F = x^4 + a x^3 + b x^2 + a x + 1``; a degree-2 one by ``N`` in
``x^2 - N x + 1``.
"""
from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass, field

from . import linalg
from .arith import is_square, squarefree_part
from .errors import DomainError, InternalError
from .polynomials import Poly, discriminant, newton_power_sums


@dataclass(frozen=True)
class Rejection:
    reason: str

    def __bool__(self):
        return False


@dataclass(frozen=True)
class QuadraticInteger:
    """Root of ``X^2 - trace X + norm``."""

    trace: int
    norm: int

    @property
    def disc(self) -> int:
        return self.trace * self.trace - 4 * self.norm

    @property
    def minpoly(self) -> Poly:
        return Poly([self.norm, -self.trace, 1])


@dataclass(frozen=True)
class SalemQuadratic:
    N: int
    degree: int = field(default=2, init=False)

    def __post_init__(self):
        if self.N < 3:
            raise DomainError(f"x^2 - {self.N}x + 1 is not Salem (need N >= 3)")

    @property
    def F1(self) -> int:
        return 2 - self.N

    @property
    def Fm1(self) -> int:
        return 2 + self.N

    @property
    def poly(self) -> Poly:
        return Poly([1, -self.N, 1])

    @property
    def value(self) -> float:
        return (self.N + math.sqrt(self.N * self.N - 4)) / 2

    def to_json(self) -> dict:
        return {"N": str(self.N)}


@dataclass(frozen=True)
class SalemQuartic:
    """Use :func:`salem_check_deg4` or :meth:`of` to build validated instances."""

    a: int
    b: int
    degree: int = field(default=4, init=False)

    @classmethod
    def of(cls, a: int, b: int) -> "SalemQuartic":
        s = salem_check_deg4(a, b)
        if not s:
            raise DomainError(f"({a}, {b}) is not Salem: {s.reason}")
        return s

    @property
    def F1(self) -> int:
        return 2 + 2 * self.a + self.b

    @property
    def Fm1(self) -> int:
        return 2 - 2 * self.a + self.b

    @property
    def poly(self) -> Poly:
        return Poly([1, self.a, self.b, self.a, 1])

    @property
    def value(self) -> float:
        """The Salem number itself, from the real root ``y > 2`` of
        ``y^2 + a y + (b - 2)`` and ``lambda + 1/lambda = y``."""
        y = (-self.a + math.sqrt(self.a * self.a - 4 * (self.b - 2))) / 2
        return (y + math.sqrt(y * y - 4)) / 2

    def to_json(self) -> dict:
        return {"a": str(self.a), "b": str(self.b)}


def _cyclotomic_note(a: int, b: int) -> str:
    # palindromic quartics with all roots on the unit circle that are cyclotomic
    names = {(0, -1): "x^4-x^2+1", (0, 1): "x^4+x^2+1", (0, 0): "x^4+1",
             (1, 1): "x^4+x^3+x^2+x+1", (-1, 1): "x^4-x^3+x^2-x+1"}
    return f" (cyclotomic {names[(a, b)]})" if (a, b) in names else ""


def salem_check_deg4(a: int, b: int) -> SalemQuartic | Rejection:
    """Accept ``x^4+ax^3+bx^2+ax+1`` iff ``F(1) < 0 < F(-1)`` and ``F`` is irreducible."""
    a, b = int(a), int(b)
    f1, fm1 = 2 + 2 * a + b, 2 - 2 * a + b
    if f1 >= 0:
        return Rejection(f"F(1) = {f1} {'>' if f1 else '='} 0" + _cyclotomic_note(a, b))
    if fm1 <= 0:
        return Rejection(f"F(-1) = {fm1} {'<' if fm1 else '='} 0")
    # F = x^2 G(x + 1/x) with G = y^2 + a y + (b - 2)
    dG = a * a - 4 * (b - 2)
    if is_square(dG):
        return Rejection("reducible: y^2 + a y + (b-2) has rational roots")
    if a == 0 and is_square(-(b + 2)):
        c = math.isqrt(-(b + 2))
        return Rejection(f"reducible: (x^2+{c}x-1)(x^2-{c}x-1)")
    return SalemQuartic(a, b)


def salem_from_poly(F: Poly) -> SalemQuadratic | SalemQuartic | Rejection:
    """Classify an integer polynomial of degree 2 or 4."""
    if not F.is_integral() or not F.is_monic():
        return Rejection("not a monic integer polynomial")
    if not F.is_palindromic():
        return Rejection("not palindromic")
    if F.degree == 2:
        N = -F[1]
        if N < 3:
            return Rejection(f"x^2-{N}x+1 has no root > 1" if N >= 0 else "no root > 1")
        return SalemQuadratic(N)
    if F.degree == 4:
        return salem_check_deg4(F[3], F[2])
    return Rejection(f"degree {F.degree} is not 2 or 4")


# -- tau and the square-root witness ---------------------------------------

def tau_of(s: SalemQuartic) -> QuadraticInteger:
    """``tau = lambda + 1/lambda + ...``: trace ``b-2``, norm ``a^2-2b``."""
    t = QuadraticInteger(s.b - 2, s.a * s.a - 2 * s.b)
    if t.disc != (s.b + 2) ** 2 - 4 * s.a * s.a or t.disc >= 0:
        raise InternalError("tau discriminant identity failed")
    return t


@dataclass(frozen=True)
class SqrtWitness:
    k: int
    l: int
    rho_sq: int
    Delta: int

    def identity_holds(self, s: SalemQuartic) -> bool:
        """``F(x^2) == (x^4+lx^2+1)^2 - rho_sq x^2 (x^2+1)^2``."""
        lhs = s.poly.substitute_square()
        x = Poly.x()
        rhs = Poly([1, 0, self.l, 0, 1]) ** 2 - self.rho_sq * (x * x) * Poly([1, 0, 1]) ** 2
        return lhs == rhs

    def to_json(self) -> dict:
        return {k: str(getattr(self, k)) for k in ("k", "l", "rho_sq", "Delta")}


def sqrt_witness(s: SalemQuartic) -> SqrtWitness | None:
    n = s.b + 2 - 2 * s.a
    if not is_square(n):
        return None
    k = math.isqrt(n)
    l = 2 + k
    w = SqrtWitness(k, l, 2 * l - s.a, s.F1)
    if not w.identity_holds(s) or (l - 2) ** 2 + 4 * s.a != s.F1 or w.rho_sq <= 0:
        raise InternalError(f"square-root certificate failed for {s}")
    return w


def is_square_rootable(s: SalemQuartic) -> bool:
    return is_square(s.b + 2 - 2 * s.a)


def _need_witness(s, w):
    if w is None:
        w = sqrt_witness(s)
        if w is None:
            raise DomainError(f"({s.a}, {s.b}) is not square-rootable")
    return w


def sigma_of(s: SalemQuartic, w: SqrtWitness | None = None) -> QuadraticInteger:
    """Trace ``l-2``, norm ``-a``; its discriminant is ``F(1)``."""
    w = _need_witness(s, w)
    sig = QuadraticInteger(w.l - 2, -s.a)
    if sig.disc != s.F1:
        raise InternalError("sigma discriminant differs from F(1)")
    return sig


def holonomy_quartic(s: SalemQuartic, w: SqrtWitness | None = None) -> Poly:
    """``X^4 - (l-2) X^3 + (2-a) X^2 - (l-2) X + 1``."""
    w = _need_witness(s, w)
    t = w.l - 2
    return Poly([1, -t, 2 - s.a, -t, 1])


def graeffe(F: Poly) -> Poly:
    """Polynomial whose roots are the squares of the roots of ``F``.

    ``F(x) F(-x) = (-1)^n G(x^2)``.
    """
    H = F * F.compose_neg()
    if any(H[k] for k in range(1, H.degree + 1, 2)):
        raise InternalError("F(x)F(-x) is not even")
    G = Poly(H[k] for k in range(0, H.degree + 1, 2))
    return G if G.lc > 0 else -G


def square_coeffs(s: SalemQuartic) -> SalemQuartic:
    """The Salem quartic of ``lambda^2``."""
    G = graeffe(s.poly)
    if G.degree != 4 or not G.is_palindromic():
        raise InternalError("lambda^2 does not have a palindromic quartic polynomial")
    out = salem_check_deg4(G[3], G[2])
    if not out:
        raise InternalError(f"lambda^2 is not a degree-4 Salem number: {out.reason}")
    return out


# -- discriminant classes ---------------------------------------------------

def disc_class(s: SalemQuadratic | SalemQuartic) -> int:
    """``squarefree_part((-1)^m F(1) F(-1))``, checked against ``disc F``."""
    m = s.degree // 2
    cls = squarefree_part((-1) ** m * s.F1 * s.Fm1)
    check = squarefree_part(discriminant(s.poly))
    if cls != check:
        raise InternalError(f"disc class {cls} != class of discriminant {check}")
    return cls


def enumerate_salem(bound: int):
    """Yield ``(SalemQuartic, square_rootable)`` with ``|a|, |b| <= bound``.

    Order: ``a = -1, -2, ..., -bound``; within each ``a``, ``b`` by increasing
    ``|b|`` with the negative value first.  (Salem quartics always have
    ``a < 0`` because ``F(-1) - F(1) = -4a > 0``.)
    """
    for a in range(-1, -bound - 1, -1):
        for mag in range(0, bound + 1):
            for b in ((-mag, mag) if mag else (0,)):
                s = salem_check_deg4(a, b)
                if s:
                    yield s, is_square_rootable(s)


def salem_with_disc(d: int, bound: int) -> SalemQuartic | None:
    """First square-rootable Salem quartic of disc class ``-d`` with ``|a|, |b| <= bound``.

    Parametrization: ``F(-1) = k^2`` and ``F(1) = -d j^2`` give
    ``b + 2 = (k^2 - d j^2)/2`` and ``a = -(k^2 + d j^2)/4``.  Candidates are
    scanned by ``k + j`` and then by ``k``.
    """
    if d < 1 or squarefree_part(d) != d:
        raise DomainError(f"d = {d} must be a positive squarefree integer")
    total = 2
    # |a| >= (k^2 + d j^2)/4 >= ((k+j)^2 / (1 + 1/d)) / 4
    while (total * total * d) / (4 * (d + 1)) <= bound:
        for k in range(1, total):
            j = total - k
            num_a = k * k + d * j * j
            num_b = k * k - d * j * j
            if num_a % 4 or num_b % 2:
                continue
            a, b = -num_a // 4, num_b // 2 - 2
            if abs(a) > bound or abs(b) > bound:
                continue
            s = salem_check_deg4(a, b)
            if s and is_square_rootable(s) and disc_class(s) == -d:
                return s
        total += 1
    return None


def trace_form_dets(F: Poly) -> dict:
    """Gram determinants of the trace forms on the power basis of ``Q[x]/F``.

    ``twisted[i][j] = p_|i-j|`` and ``plain[i][j] = p_(i+j)`` where ``p_k`` are
    the power sums of the roots.
    """
    if not (F.is_integral() and F.is_monic() and F.is_palindromic()) or F.degree % 2:
        raise DomainError("trace forms need a monic palindromic integer polynomial of even degree")
    n = F.degree
    m = n // 2
    p = newton_power_sums(F, 2 * n - 2)
    twisted = linalg.det([[p[abs(i - j)] for j in range(n)] for i in range(n)])
    plain = linalg.det([[p[i + j] for j in range(n)] for i in range(n)])
    if twisted == 0 or plain == 0:
        raise DomainError("degenerate trace form: F is not squarefree")
    c_tw, c_pl = squarefree_part(twisted), squarefree_part(plain)
    f1f = F(1) * F(-1)
    if c_pl != squarefree_part(discriminant(F)):
        raise InternalError("plain trace form class differs from disc F")
    if c_tw != squarefree_part(f1f):
        raise InternalError("twisted trace form class differs from F(1)F(-1)")
    if c_pl != squarefree_part((-1) ** m * c_tw):
        raise InternalError("(-1)^m relation between trace forms failed")
    return {"det_twisted": twisted, "det_plain": plain,
            "class_twisted": c_tw, "class_plain": c_pl}


# -- fixtures ---------------------------------------------------------------

FIXTURE_HEADER = "a,b,squarerootable_k_or_dash,disc_class"


def fixtures_csv(bound: int) -> str:
    """CSV of every Salem quartic within ``bound`` plus a sha256 checksum line."""
    lines = [FIXTURE_HEADER]
    for s, sq in enumerate_salem(bound):
        k = str(sqrt_witness(s).k) if sq else "-"
        lines.append(f"{s.a},{s.b},{k},{disc_class(s)}")
    body = "\n".join(lines) + "\n"
    digest = hashlib.sha256(body.encode()).hexdigest()
    return body + f"# sha256 {digest}\n"


def check_fixtures_csv(text: str) -> bool:
    body, _, tail = text.rpartition("# sha256 ")
    return hashlib.sha256(body.encode()).hexdigest() == tail.strip()
