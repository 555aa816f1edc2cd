"""Exact univariate polynomials over Q, with mod-p factorization and Sturm
real-root isolation.

Coefficients are stored in ascending degree order.  The text format used
by the CLI is the reverse: comma separated integers, highest degree first
(``"1,-1,-3,-1,1"`` is x^4 - x^3 - 3x^2 - x + 1).
"""
from __future__ import annotations

import random
from math import gcd, lcm
from fractions import Fraction
from typing import Iterable, Sequence

from .arith import as_fraction, check_place
from .errors import DomainError


def _clean(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


class Poly:
    """Immutable polynomial with rational coefficients (ascending order)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_clean(as_fraction(c)) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def from_descending(cls, coeffs: Sequence) -> "Poly":
        return cls(reversed(list(coeffs)))

    @classmethod
    def parse(cls, text: str) -> "Poly":
        """Parse the comma separated, descending-degree text format."""
        parts = text.split(",")
        coeffs = []
        for i, part in enumerate(parts):
            try:
                coeffs.append(int(part.strip()))
            except ValueError:
                raise DomainError(
                    f"bad polynomial coefficient {part.strip()!r} at position {i + 1}"
                ) from None
        if not coeffs or all(c == 0 for c in coeffs):
            raise DomainError("polynomial must be nonzero")
        if coeffs[0] == 0:
            raise DomainError("leading coefficient (position 1) must be nonzero")
        return cls.from_descending(coeffs)

    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def monomial(cls, n: int, c=1) -> "Poly":
        return cls([0] * n + [c])

    # -- basic data -------------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else 0

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly([other])
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def descending(self) -> list:
        return list(reversed(self.coeffs))

    def to_text(self) -> str:
        return ",".join(str(c) for c in self.descending())

    def __repr__(self):
        return f"Poly.from_descending([{self.to_text()}])"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{'*' if mono else ''}{mono}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        head = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        return head + "".join(f" {s} {b}" for s, b in terms[1:])

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def is_monic(self) -> bool:
        return self.lc == 1

    def is_palindromic(self) -> bool:
        return self.coeffs == self.coeffs[::-1]

    # -- arithmetic -------------------------------------------------------
    def _coerce(self, other):
        return other if isinstance(other, Poly) else Poly([other])

    def __add__(self, other):
        other = self._coerce(other)
        n = max(len(self), len(other))
        return Poly(self[k] + other[k] for k in range(n))

    __radd__ = __add__

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if not self or not other:
            return Poly()
        out = [0] * (len(self) + len(other) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out, base = Poly([1]), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __divmod__(self, other):
        other = self._coerce(other)
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = [Fraction(c) for c in self.coeffs]
        q = [Fraction(0)] * max(len(self) - len(other) + 1, 0)
        lc = Fraction(other.lc)
        for k in range(len(self) - len(other), -1, -1):
            c = rem[k + other.degree] / lc
            q[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return Poly(q), Poly(rem[: other.degree] if other.degree > 0 else [])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Poly":
        return Poly(k * c for k, c in enumerate(self.coeffs) if k)

    def monic(self) -> "Poly":
        lc = Fraction(self.lc)
        return Poly(c / lc for c in self.coeffs)

    def compose_neg(self) -> "Poly":
        """``f(-x)``."""
        return Poly(c if k % 2 == 0 else -c for k, c in enumerate(self.coeffs))

    def substitute_square(self) -> "Poly":
        """``f(x^2)``."""
        out = []
        for c in self.coeffs:
            out += [c, 0]
        return Poly(out)

    def reciprocal(self) -> "Poly":
        """``x^deg f(1/x)``."""
        return Poly(reversed(self.coeffs))

    def primitive(self) -> "Poly":
        """Integral multiple with coprime integer coefficients, positive lc."""
        if not self:
            return self
        den = 1
        for c in self.coeffs:
            den = lcm(den, Fraction(c).denominator)
        ints = [int(Fraction(c) * den) for c in self.coeffs]
        g = 0
        for c in ints:
            g = gcd(g, c)
        sgn = 1 if ints[-1] > 0 else -1
        return Poly(sgn * c // g for c in ints)


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic gcd over Q."""
    while g:
        f, g = g, f % g
    return f.monic() if f else f


def squarefree_part(f: Poly) -> Poly:
    if f.degree < 1:
        return f
    g = poly_gcd(f, f.derivative())
    return (f // g).monic()


def resultant(f: Poly, g: Poly):
    """Res(f, g) by the Euclidean recursion over Q."""
    if not f or not g:
        return 0
    m, n = f.degree, g.degree
    if n == 0:
        return Fraction(g.lc) ** m
    if m == 0:
        return Fraction(f.lc) ** n
    r = f % g
    if not r:
        return 0
    k = r.degree
    sign = -1 if (m * n) % 2 else 1
    return _clean(sign * Fraction(g.lc) ** (m - k) * resultant(g, r))


def discriminant(f: Poly):
    """``(-1)^(n(n-1)/2) Res(f, f') / lc(f)``.

    >>> discriminant(Poly.from_descending([1, -3, 1]))
    5
    """
    n = f.degree
    if n < 1:
        raise DomainError("discriminant of a constant polynomial")
    if n == 1:
        return 1
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return _clean(sign * Fraction(resultant(f, f.derivative())) / f.lc)


def newton_power_sums(f: Poly, count: int) -> list[int]:
    """Power sums ``p_0..p_count`` of the roots of a monic ``f``."""
    if f.degree < 1:
        raise DomainError("power sums need degree >= 1")
    if not f.is_monic():
        raise DomainError("power sums need a monic polynomial")
    n = f.degree
    c = f.coeffs  # c[n] == 1
    p = [n]
    for k in range(1, count + 1):
        if k <= n:
            s = sum(c[n - i] * p[k - i] for i in range(1, k)) + k * c[n - k]
        else:
            s = sum(c[n - i] * p[k - i] for i in range(1, n + 1))
        p.append(_clean(-Fraction(s)))
    return p


# -- Sturm sequences --------------------------------------------------------

def sturm_sequence(f: Poly) -> list[Poly]:
    f = squarefree_part(f)
    seq = [f, f.derivative()]
    while seq[-1]:
        seq.append(-(seq[-2] % seq[-1]))
    return seq[:-1]


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _variations(signs) -> int:
    signs = [s for s in signs if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _var_at(seq, x) -> int:
    if x == "+inf":
        return _variations([_sign(p.lc) for p in seq])
    if x == "-inf":
        return _variations([_sign(p.lc) * (-1) ** p.degree for p in seq])
    return _variations([_sign(p(x)) for p in seq])


def root_bound(f: Poly) -> Fraction:
    """Cauchy bound: all roots satisfy ``|r| < bound``."""
    lc = abs(Fraction(f.lc))
    return 1 + max((abs(Fraction(c)) / lc for c in f.coeffs[:-1]), default=Fraction(0))


def count_real_roots(f: Poly, lo=None, hi=None) -> int:
    """Distinct real roots of ``f`` in ``(lo, hi]``; ``None`` means infinite."""
    if f.degree < 1:
        return 0
    seq = sturm_sequence(f)
    # a root sitting on an endpoint leaves V unchanged just to its right,
    # so V(lo) - V(hi) counts exactly the roots in (lo, hi]
    va = _var_at(seq, "-inf" if lo is None else as_fraction(lo))
    vb = _var_at(seq, "+inf" if hi is None else as_fraction(hi))
    return va - vb


def isolate_real_roots(f: Poly, eps=Fraction(1, 2**40)) -> list[tuple[Fraction, Fraction]]:
    """Disjoint rational intervals ``(a, b]`` each holding one real root,
    of width at most ``eps``, sorted left to right."""
    if f.degree < 1:
        return []
    seq = sturm_sequence(f)
    eps = as_fraction(eps)
    B = root_bound(seq[0])

    def var(x):
        return _variations([_sign(p(x)) for p in seq])

    out = []
    stack = [(-B, B, var(-B), var(B))]
    while stack:
        a, b, va, vb = stack.pop()
        n = va - vb
        if n == 0:
            continue
        if n == 1 and b - a <= eps:
            out.append((a, b))
            continue
        m = (a + b) / 2
        vm = var(m)
        stack.append((m, b, vm, vb))
        stack.append((a, m, va, vm))
    out.sort()
    return out


def largest_real_root(f: Poly, eps=Fraction(1, 2**40)):
    """Isolating interval ``(a, b]`` of the largest real root, or ``None``."""
    roots = isolate_real_roots(f, eps)
    return roots[-1] if roots else None


# -- mod-p arithmetic ------------------------------------------------------
# Polynomials mod p are plain lists of ints in [0, p), ascending, no trailing 0.

def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def reduce_mod(f: Poly, p: int) -> list[int]:
    out = []
    for c in f.coeffs:
        c = Fraction(c)
        if c.denominator % p == 0:
            raise DomainError(f"coefficient {c} is not p-integral for p={p}")
        out.append(c.numerator * pow(c.denominator, -1, p) % p)
    return _trim(out)


def _pmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def _psub(a, b, p):
    n = max(len(a), len(b))
    return _trim([((a[k] if k < len(a) else 0) - (b[k] if k < len(b) else 0)) % p
                  for k in range(n)])


def _pdivmod(a, b, p):
    a = list(a)
    if not b:
        raise ZeroDivisionError
    inv = pow(b[-1], -1, p)
    q = [0] * max(len(a) - len(b) + 1, 0)
    for k in range(len(a) - len(b), -1, -1):
        c = a[k + len(b) - 1] * inv % p
        q[k] = c
        if c:
            for j, y in enumerate(b):
                a[k + j] = (a[k + j] - c * y) % p
    return _trim(q), _trim(a[: len(b) - 1])


def _pmonic(a, p):
    inv = pow(a[-1], -1, p)
    return [x * inv % p for x in a]


def _pgcd(a, b, p):
    while b:
        a, b = b, _pdivmod(a, b, p)[1]
    return _pmonic(a, p) if a else a


def _pderiv(a, p):
    return _trim([k * c % p for k, c in enumerate(a)][1:])


def _ppowmod(base, e, mod, p):
    out = [1]
    base = _pdivmod(base, mod, p)[1]
    while e:
        if e & 1:
            out = _pdivmod(_pmul(out, base, p), mod, p)[1]
        base = _pdivmod(_pmul(base, base, p), mod, p)[1]
        e >>= 1
    return out


def _pth_root(a, p):
    # a(x) = b(x^p) in characteristic p; coefficients are fixed by Frobenius
    return [a[k] for k in range(0, len(a), p)]


def _squarefree_mod(f, p):
    """Yun-style squarefree decomposition over F_p: list of (g, multiplicity)."""
    out = []

    def rec(f, mult):
        if len(f) <= 1:
            return
        d = _pderiv(f, p)
        if not d:
            rec(_pth_root(f, p), mult * p)
            return
        c = _pgcd(f, d, p)
        w = _pdivmod(f, c, p)[0]
        i = 1
        while len(w) > 1:
            y = _pgcd(w, c, p)
            z = _pdivmod(w, y, p)[0]
            if len(z) > 1:
                out.append((_pmonic(z, p), i * mult))
            i += 1
            w = y
            c = _pdivmod(c, y, p)[0]
        if len(c) > 1:
            rec(_pth_root(c, p), mult * p)

    rec(_pmonic(f, p), 1)
    return out


def _distinct_degree(f, p):
    out = []
    h = [0, 1]
    d = 0
    f = list(f)
    while len(f) - 1 >= 2 * (d + 1):
        d += 1
        h = _ppowmod(h, p, f, p)
        g = _pgcd(f, _psub(h, [0, 1], p), p)
        if len(g) > 1:
            out.append((g, d))
            f = _pdivmod(f, g, p)[0]
            h = _pdivmod(h, f, p)[1]
    if len(f) > 1:
        out.append((f, len(f) - 1))
    return out


def _equal_degree(f, d, p, rng):
    n = len(f) - 1
    if n == d:
        return [f]
    while True:
        a = _trim([rng.randrange(p) for _ in range(n)])
        if len(a) < 2:
            continue
        if p == 2:
            t, s = a, a
            for _ in range(d - 1):
                s = _pdivmod(_pmul(s, s, p), f, p)[1]
                t = _padd(t, s, p)
            g = _pgcd(f, t, p)
        else:
            b = _ppowmod(a, (p**d - 1) // 2, f, p)
            g = _pgcd(f, _psub(b, [1], p), p)
        if 1 < len(g) < len(f):
            h = _pdivmod(f, g, p)[0]
            return _equal_degree(g, d, p, rng) + _equal_degree(_pmonic(h, p), d, p, rng)


def _padd(a, b, p):
    n = max(len(a), len(b))
    return _trim([((a[k] if k < len(a) else 0) + (b[k] if k < len(b) else 0)) % p
                  for k in range(n)])


def factor_mod_p(f: Poly, p: int) -> list[tuple[tuple[int, ...], int]]:
    """Monic irreducible factorization of ``f`` modulo the prime ``p``.

    Returns ``[(factor, multiplicity), ...]`` with each factor a tuple of
    ascending coefficients in ``[0, p)``, sorted by degree then coefficients.
    Uses squarefree decomposition, distinct-degree splitting and
    Cantor-Zassenhaus with a fixed seed, so output is deterministic.
    """
    p = check_place(p)
    if not isinstance(p, int):
        raise DomainError("factor_mod_p needs a finite prime")
    a = reduce_mod(f, p)
    if len(a) != len(f.coeffs):
        raise DomainError(f"p={p} divides the leading coefficient")
    rng = random.Random(0x5A1E)
    out: dict[tuple, int] = {}
    for g, mult in _squarefree_mod(a, p):
        for h, d in _distinct_degree(g, p):
            for irr in _equal_degree(h, d, p, rng):
                key = tuple(irr)
                out[key] = out.get(key, 0) + mult
    return sorted(out.items(), key=lambda kv: (len(kv[0]), kv[0][::-1]))


def mod_p_product(factors, p: int) -> list[int]:
    out = [1]
    for g, m in factors:
        for _ in range(m):
            out = _pmul(out, list(g), p)
    return out
