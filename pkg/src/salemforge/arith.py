"""Exact integer and rational primitives.

Squarefree parts (classes in Q^x / Q^x2), four-square decompositions and
local Hilbert symbols over Q.  Places are either a positive prime ``p`` or
``INF`` (the real place).
"""
from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational

from sympy import factorint, isprime

from .errors import DomainError

INF = math.inf

# Integers whose absolute value exceeds this are refused by anything that
# needs a full factorization.
FACTOR_LIMIT = 10**15


def as_fraction(r) -> Fraction:
    if isinstance(r, Fraction):
        return r
    if isinstance(r, (int, Rational)):
        return Fraction(r)
    if isinstance(r, str):
        return Fraction(r.strip())
    raise DomainError(f"expected an exact rational, got {r!r}")


def is_place(v) -> bool:
    return v == INF or (isinstance(v, int) and v > 1 and isprime(v))


def check_place(v):
    if v == INF:
        return INF
    if not isinstance(v, int) or v < 2 or not isprime(v):
        raise DomainError(f"{v!r} is not a prime or the infinite place")
    return v


def factorize(n: int, limit: int = FACTOR_LIMIT) -> dict[int, int]:
    """Prime factorization of ``|n|`` as ``{p: e}``."""
    n = abs(int(n))
    if n == 0:
        raise DomainError("cannot factor 0")
    if n > limit:
        raise DomainError(f"|n| = {n} exceeds factorization limit {limit}")
    return {int(p): int(e) for p, e in factorint(n).items()}


def squarefree_part(r, limit: int = FACTOR_LIMIT) -> int:
    """The squarefree integer ``d`` with ``r/d`` a rational square.

    >>> squarefree_part(-16)
    -1
    >>> squarefree_part(Fraction(3, 4))
    3
    """
    r = as_fraction(r)
    if r == 0:
        raise DomainError("squarefree part of 0 is undefined")
    # n/d and n*d agree modulo squares
    m = r.numerator * r.denominator
    d = 1
    for p, e in factorize(m, limit).items():
        if e % 2:
            d *= p
    return d if m > 0 else -d


def is_square(n: int) -> bool:
    return n >= 0 and math.isqrt(n) ** 2 == n


def four_squares(n: int) -> tuple[int, int, int, int]:
    """Deterministic Lagrange decomposition ``n = p1^2+p2^2+p3^2+p4^2``.

    Entries are nonnegative and non-increasing; the first tuple found when
    ``p1`` descends from ``isqrt(n)`` (then ``p2``, ``p3``) is returned, i.e.
    the lexicographically largest decomposition.
    """
    if n < 0:
        raise DomainError("four_squares needs n >= 0")
    p1 = math.isqrt(n)
    while p1 >= 0:
        r1 = n - p1 * p1
        p2 = min(p1, math.isqrt(r1))
        # p2 >= p3 >= p4 forces 3*p2^2 >= r1
        while p2 >= 0 and 3 * p2 * p2 >= r1:
            r2 = r1 - p2 * p2
            p3 = min(p2, math.isqrt(r2))
            while p3 >= 0 and 2 * p3 * p3 >= r2:
                r3 = r2 - p3 * p3
                p4 = math.isqrt(r3)
                if p4 * p4 == r3 and p4 <= p3:
                    return (p1, p2, p3, p4)
                p3 -= 1
            p2 -= 1
        p1 -= 1
    raise AssertionError("unreachable: Lagrange's theorem")


def _split_p(n: int, p: int) -> tuple[int, int]:
    """Write ``n = p^k * u`` with ``p`` not dividing ``u``."""
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k, n


def legendre(a: int, p: int) -> int:
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def _hilbert_int(a: int, b: int, v) -> int:
    if v == INF:
        return -1 if a < 0 and b < 0 else 1
    alpha, u = _split_p(a, v)
    beta, w = _split_p(b, v)
    if v == 2:
        eps = lambda x: ((x - 1) // 2) % 2
        omg = lambda x: ((x * x - 1) // 8) % 2
        e = eps(u) * eps(w) + alpha * omg(w) + beta * omg(u)
        return -1 if e % 2 else 1
    e = (alpha * beta * ((v - 1) // 2)) % 2
    s = -1 if e else 1
    if beta % 2:
        s *= legendre(u, v)
    if alpha % 2:
        s *= legendre(w, v)
    return s


def hilbert_symbol(a, b, v) -> int:
    """Local Hilbert symbol ``(a, b)_v`` for nonzero rationals over ``Q_v``.

    >>> hilbert_symbol(-1, -1, 2), hilbert_symbol(-1, -1, INF), hilbert_symbol(2, 3, 3)
    (-1, -1, -1)
    """
    a, b = as_fraction(a), as_fraction(b)
    if a == 0 or b == 0:
        raise DomainError("Hilbert symbol needs nonzero arguments")
    v = check_place(v)
    return _hilbert_int(a.numerator * a.denominator, b.numerator * b.denominator, v)


def relevant_places(*values) -> list:
    """``INF`` and every prime dividing 2 and the numerators/denominators."""
    primes = {2}
    for x in values:
        x = as_fraction(x)
        for part in (x.numerator, x.denominator):
            if abs(part) > 1:
                primes.update(factorize(part))
    return sorted(primes) + [INF]
