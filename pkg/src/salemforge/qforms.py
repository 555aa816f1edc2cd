"""Diagonal rational quadratic forms, quaternion Brauer classes over Q and the
local splitting tests that obstruct realizing Salem numbers in SO_q(Q).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, combinations_with_replacement

import sympy

from .arith import INF, as_fraction, check_place, hilbert_symbol, relevant_places, squarefree_part
from .errors import DomainError, InternalError
from .polynomials import Poly, count_real_roots, discriminant, factor_mod_p, reduce_mod
from .salem import SalemQuartic, holonomy_quartic, is_square_rootable, enumerate_salem
from . import polynomials as _P


def place_str(v) -> str:
    return "inf" if v == INF else str(v)


def _place_key(v):
    return (1, 0) if v == INF else (0, v)


@dataclass(frozen=True)
class BrauerClass:
    """Quaternion class over Q given by its (even) ramification set."""

    ram: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "ram", frozenset(check_place(v) for v in self.ram))
        if len(self.ram) % 2:
            raise InternalError(f"odd ramification set {self}")

    @classmethod
    def of_symbol(cls, a, b) -> "BrauerClass":
        """Class of the quaternion algebra ``(a, b / Q)``."""
        return cls(frozenset(v for v in relevant_places(a, b) if hilbert_symbol(a, b, v) == -1))

    def __mul__(self, other: "BrauerClass") -> "BrauerClass":
        return BrauerClass(self.ram ^ other.ram)

    @property
    def places(self) -> list:
        return sorted(self.ram, key=_place_key)

    def is_trivial(self) -> bool:
        return not self.ram

    def __str__(self):
        return "{" + ",".join(place_str(v) for v in self.places) + "}"


@dataclass(frozen=True)
class DiagForm:
    entries: tuple

    def __post_init__(self):
        es = tuple(as_fraction(e) for e in self.entries)
        if not es or any(e == 0 for e in es):
            raise DomainError("diagonal entries must be nonzero")
        object.__setattr__(self, "entries", tuple(
            e.numerator if e.denominator == 1 else e for e in es))

    @classmethod
    def parse(cls, text: str) -> "DiagForm":
        out = []
        for i, part in enumerate(text.split(",")):
            try:
                out.append(Fraction(part.strip()))
            except (ValueError, ZeroDivisionError):
                raise DomainError(f"bad form entry {part.strip()!r} at position {i + 1}") from None
            if out[-1] == 0:
                raise DomainError(f"form entry at position {i + 1} is zero")
        return cls(tuple(out))

    @property
    def rank(self) -> int:
        return len(self.entries)

    @property
    def det(self):
        d = Fraction(1)
        for e in self.entries:
            d *= e
        return d.numerator if d.denominator == 1 else d

    def is_admissible(self) -> bool:
        """Signature ``(1, n)``: exactly one positive entry."""
        return sum(1 for e in self.entries if e > 0) == 1

    def __str__(self):
        return "diag(" + ",".join(str(e) for e in self.entries) + ")"


def hasse_class(q: DiagForm) -> BrauerClass:
    """``prod_{i<j} (d_i, d_j)``."""
    ram = set()
    for v in relevant_places(*q.entries):
        sign = 1
        for x, y in combinations(q.entries, 2):
            sign *= hilbert_symbol(x, y, v)
        if sign == -1:
            ram.add(v)
    return BrauerClass(frozenset(ram))


def witt_class(q: DiagForm) -> BrauerClass:
    """Witt invariant from the Hasse invariant by the rank mod 8 table."""
    s = hasse_class(q)
    r = q.rank % 8
    if r in (1, 2):
        return s
    minus = BrauerClass.of_symbol(-1, -1)
    if r in (5, 6):
        return s * minus
    # (-1, det) as a product over the entries, so det itself is never factored
    with_det = BrauerClass()
    for e in q.entries:
        with_det = with_det * BrauerClass.of_symbol(-1, e)
    return s * minus * with_det if r in (3, 4) else s * with_det


def ram_at_infinity_table(q: DiagForm) -> bool:
    """Predicted ramification of ``c(q)`` at infinity for admissible ``q``,
    cross-checked against :func:`witt_class`."""
    if not q.is_admissible():
        raise DomainError(f"{q} is not admissible")
    predicted = q.rank % 8 in (4, 5, 6, 7)
    if predicted != (INF in witt_class(q).ram):
        raise InternalError(f"infinity table disagrees with witt_class for {q}")
    return predicted


def signed_det(q: DiagForm) -> int:
    r = q.rank
    return squarefree_part((-1) ** (r * (r - 1) // 2) * as_fraction(q.det))


# -- local degrees ------------------------------------------------------------

@dataclass(frozen=True)
class LocalData:
    place: object
    degrees: tuple | None  # None when undetermined
    method: str

    @property
    def splits(self) -> bool | None:
        if self.degrees is None:
            return None
        return all(d % 2 == 0 for d in self.degrees)


def _lift(coeffs) -> Poly:
    return Poly(coeffs)


def dedekind_local_degrees(f: Poly, p: int):
    """Local degrees ``e_i f_i`` above ``p`` when ``p`` does not divide the
    index ``[O_L : Z[x]/f]`` (Dedekind's criterion), else ``None``."""
    factors = factor_mod_p(f, p)
    g = Poly([1])
    h = Poly([1])
    for coeffs, e in factors:
        gi = _lift(coeffs)
        g = g * gi
        h = h * gi ** (e - 1)
    diff = g * h - f
    if any(Fraction(c).denominator != 1 or c % p for c in diff.coeffs):
        raise InternalError("g h is not congruent to f mod p")
    F = Poly(c // p for c in diff.coeffs)
    gbar, hbar, Fbar = (reduce_mod(t, p) for t in (g, h, F))
    common = _P._pgcd(_P._pgcd(gbar, hbar, p), Fbar, p) if any(Fbar) else _P._pgcd(gbar, hbar, p)
    if len(common) > 1:
        return None
    return tuple(sorted((len(c) - 1) * e for c, e in factors))


def local_data(f: Poly, v, disc=None) -> LocalData:
    v = check_place(v)
    if v == INF:
        r = count_real_roots(f)
        return LocalData(INF, tuple(sorted([1] * r + [2] * ((f.degree - r) // 2))), "sturm")
    disc = discriminant(f) if disc is None else disc
    if disc % v:
        degs = tuple(sorted(len(c) - 1 for c, e in factor_mod_p(f, v)))
        return LocalData(v, degs, "unramified")
    degs = dedekind_local_degrees(f, v)
    return LocalData(v, degs, "dedekind" if degs else "index")


@dataclass(frozen=True)
class SplitVerdict:
    verdict: str  # "splits" | "obstructed" | "indeterminate"
    place: object = None
    local: tuple = ()

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "place": None if self.place is None else place_str(self.place),
            "local_degrees": {place_str(d.place): (None if d.degrees is None
                                                   else [str(x) for x in d.degrees])
                              for d in self.local},
        }


def field_splits(f: Poly, B: BrauerClass) -> SplitVerdict:
    """Does ``L = Q[x]/f`` split ``B``?

    ``L`` splits ``B`` iff every local degree of ``L`` above every ramified
    place of ``B`` is even.  A failing place gives ``obstructed``; a place
    whose local degrees cannot be certified gives ``indeterminate``.
    """
    if not f.is_integral() or not f.is_monic():
        raise DomainError("field_splits needs a monic integer polynomial")
    if f.degree < 1 or not sympy.Poly(f.descending(), sympy.Symbol("x")).is_irreducible:
        raise DomainError(f"{f} is not irreducible over Q")
    disc = discriminant(f)
    local = tuple(local_data(f, v, disc) for v in B.places)
    for d in local:
        if d.splits is False:
            return SplitVerdict("obstructed", d.place, local)
    for d in local:
        if d.splits is None:
            return SplitVerdict("indeterminate", d.place, local)
    return SplitVerdict("splits", None, local)


# -- obstructions -------------------------------------------------------------

@dataclass(frozen=True)
class ObstructionReport:
    dim: int
    form: DiagForm
    salem: SalemQuartic
    verdict: str  # "obstructed" | "possible" | "indeterminate"
    evidence: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"dim": str(self.dim), "form": [str(e) for e in self.form.entries],
                "salem": self.salem.to_json(), "verdict": self.verdict,
                "evidence": self.evidence}


def _check_form(q: DiagForm, rank: int):
    if q.rank != rank:
        raise DomainError(f"expected a rank-{rank} form, got rank {q.rank}")
    if not q.is_admissible():
        raise DomainError(f"{q} is not admissible (signature (1,{rank - 1}))")


def obstruct_dim3(q: DiagForm, s: SalemQuartic) -> ObstructionReport:
    """Realization in SO_q(Q), rank 4, forces ``F(1)F(-1) = det q`` mod squares."""
    _check_form(q, 4)
    lhs = squarefree_part(s.F1 * s.Fm1)
    rhs = squarefree_part(as_fraction(q.det))
    verdict = "obstructed" if lhs != rhs else "possible"
    return ObstructionReport(3, q, s, verdict,
                             {"F1_Fm1_class": str(lhs), "det_class": str(rhs)})


def _split_report(dim, q, s, B, extra) -> ObstructionReport:
    if not is_square_rootable(s):
        raise DomainError(f"({s.a}, {s.b}) is not square-rootable")
    hq = holonomy_quartic(s)
    sv = field_splits(hq, B)
    verdict = {"splits": "possible", "obstructed": "obstructed",
               "indeterminate": "indeterminate"}[sv.verdict]
    evidence = {"brauer_class": str(B), "holonomy_quartic": hq.to_text(), **extra, **sv.to_json()}
    del evidence["verdict"]
    return ObstructionReport(dim, q, s, verdict, evidence)


def obstruct_dim4(q: DiagForm, s: SalemQuartic) -> ObstructionReport:
    """``L_lambda`` must split ``c(q)``."""
    _check_form(q, 5)
    return _split_report(4, q, s, witt_class(q), {})


def obstruct_dim5(q: DiagForm, s: SalemQuartic) -> ObstructionReport:
    """``L_lambda`` must split ``c(q) (delta, -1)`` with ``delta`` the signed determinant."""
    _check_form(q, 6)
    delta = signed_det(q)
    if delta <= 0:
        raise InternalError("signed determinant of a (1,5) form must be positive")
    B = witt_class(q) * BrauerClass.of_symbol(delta, -1)
    return _split_report(5, q, s, B, {"delta": str(delta)})


OBSTRUCT = {3: obstruct_dim3, 4: obstruct_dim4, 5: obstruct_dim5}


@dataclass(frozen=True)
class SearchResult:
    witness: SalemQuartic | None
    report: ObstructionReport | None
    scanned: int
    indeterminate: int


def find_obstructed(q: DiagForm, dim: int, bound: int) -> SearchResult:
    """First square-rootable Salem quartic (in :func:`enumerate_salem` order)
    whose realization in ``SO_q(Q)`` is obstructed."""
    if dim not in OBSTRUCT:
        raise DomainError("dim must be 3, 4 or 5")
    _check_form(q, dim + 1)
    scanned = indet = 0
    for s, sq in enumerate_salem(bound):
        if not sq:
            continue
        scanned += 1
        rep = OBSTRUCT[dim](q, s)
        if rep.verdict == "obstructed":
            return SearchResult(s, rep, scanned, indet)
        if rep.verdict == "indeterminate":
            indet += 1
    return SearchResult(None, None, scanned, indet)


def form_with_witt(target: BrauerClass, bound: int) -> DiagForm | None:
    """First ``diag(1, -d_1, ..., -d_4)``, ``1 <= d_1 <= ... <= d_4 <= bound``,
    with Witt class ``target``."""
    for ds in combinations_with_replacement(range(1, bound + 1), 4):
        q = DiagForm((1,) + tuple(-d for d in ds))
        if witt_class(q) == target:
            return q
    return None
