"""Clifford algebras of diagonal quadratic forms over Q.

A basis blade ``i_M`` is stored as a bitmask: bit ``k`` set means the
``(k+1)``-th generator occurs in ``M``.  Elements are sparse maps from
bitmask to coefficient.  Coefficients are exact (``int``/``Fraction``)
except in the float algebras used for the Moebius action.
"""
from __future__ import annotations

from fractions import Fraction
from functools import cached_property

from .arith import as_fraction
from .errors import DomainError
from . import linalg


def _clean(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


def _popcount(m: int) -> int:
    return bin(m).count("1")


class CliffordAlgebra:
    """Algebra generated by ``i_1..i_n`` with ``i_k^2 = squares[k-1]``."""

    def __init__(self, squares, names=None):
        self.squares = tuple(_clean(as_fraction(q)) for q in squares)
        if not self.squares or any(q == 0 for q in self.squares):
            raise DomainError("generator squares must be nonzero and nonempty")
        self.n = len(self.squares)
        self.names = tuple(names) if names else tuple(f"i{k}" for k in range(1, self.n + 1))

    def __repr__(self):
        return f"CliffordAlgebra({list(self.squares)})"

    def __eq__(self, other):
        return isinstance(other, CliffordAlgebra) and self.squares == other.squares

    def __hash__(self):
        return hash(self.squares)

    @property
    def dim(self) -> int:
        return 1 << self.n

    @cached_property
    def table(self):
        """``table[A][B]`` is the scalar ``w`` with ``i_A i_B = w i_{A^B}``."""
        size = self.dim
        out = []
        for A in range(size):
            row = []
            for B in range(size):
                # transpositions: pairs (a in A, b in B) with a > b
                swaps = 0
                b = B
                while b:
                    low = b & -b
                    swaps += _popcount(A & ~((low << 1) - 1))
                    b ^= low
                w = -1 if swaps % 2 else 1
                common = A & B
                k = 0
                while common:
                    if common & 1:
                        w *= self.squares[k]
                    common >>= 1
                    k += 1
                row.append(w)
            out.append(row)
        return out

    # -- constructors ------------------------------------------------------
    def element(self, terms=None) -> "CliffordElement":
        return CliffordElement(self, terms or {})

    def scalar(self, c) -> "CliffordElement":
        return CliffordElement(self, {0: c})

    def gen(self, k: int) -> "CliffordElement":
        """The ``k``-th generator (1-based)."""
        if not 1 <= k <= self.n:
            raise DomainError(f"generator index {k} out of range 1..{self.n}")
        return CliffordElement(self, {1 << (k - 1): 1})

    def blade(self, indices, coeff=1) -> "CliffordElement":
        """``coeff * i_{k1} i_{k2} ...`` for 1-based indices (any order)."""
        out = self.scalar(coeff)
        for k in indices:
            out = out * self.gen(k)
        return out

    def vector(self, scalar_part, *coeffs) -> "CliffordElement":
        """``scalar_part + sum coeffs[k] i_{k+1}``."""
        terms = {0: scalar_part}
        for k, c in enumerate(coeffs):
            terms[1 << k] = c
        return CliffordElement(self, terms)

    def from_text(self, data) -> "CliffordElement":
        """Parse ``[[indices, "p/q"], ...]`` (1-based generator indices)."""
        out = self.element()
        for pos, item in enumerate(data):
            try:
                idx, coeff = item
                out = out + self.blade([int(k) for k in idx], as_fraction(coeff))
            except (TypeError, ValueError) as exc:
                raise DomainError(f"bad Clifford term at position {pos}: {item!r}") from exc
        return out


class CliffordElement:
    """Immutable sparse element of a :class:`CliffordAlgebra`."""

    __slots__ = ("algebra", "terms", "_hash")

    def __init__(self, algebra: CliffordAlgebra, terms):
        self.algebra = algebra
        self.terms = {m: _clean(c) for m, c in terms.items() if c != 0}
        if any(not 0 <= m < algebra.dim for m in self.terms):
            raise DomainError("blade bitmask out of range")
        self._hash = None

    # -- structure ---------------------------------------------------------
    def _same(self, other):
        if isinstance(other, CliffordElement):
            if other.algebra != self.algebra:
                raise DomainError("elements belong to different algebras")
            return other
        return CliffordElement(self.algebra, {0: other})

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, float)):
            other = CliffordElement(self.algebra, {0: other})
        if not isinstance(other, CliffordElement):
            return NotImplemented
        return self.algebra == other.algebra and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.algebra, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=lambda m: (_popcount(m), m)):
            c = self.terms[m]
            name = "".join(self.algebra.names[k] for k in range(self.algebra.n) if m >> k & 1)
            parts.append(f"({c})" + (f"*{name}" if name else ""))
        return " + ".join(parts)

    # -- arithmetic --------------------------------------------------------
    def __add__(self, other):
        other = self._same(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return CliffordElement(self.algebra, out)

    __radd__ = __add__

    def __neg__(self):
        return CliffordElement(self.algebra, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._same(other))

    def __rsub__(self, other):
        return self._same(other) - self

    def __mul__(self, other):
        if not isinstance(other, CliffordElement):
            return CliffordElement(self.algebra, {m: c * other for m, c in self.terms.items()})
        other = self._same(other)
        table = self.algebra.table
        out = {}
        for A, x in self.terms.items():
            row = table[A]
            for B, y in other.terms.items():
                C = A ^ B
                out[C] = out.get(C, 0) + row[B] * x * y
        return CliffordElement(self.algebra, out)

    def __rmul__(self, other):
        return self * other

    def __truediv__(self, c):
        c = as_fraction(c) if not isinstance(c, float) else c
        return CliffordElement(self.algebra, {m: x / c for m, x in self.terms.items()})

    def __pow__(self, n: int):
        out = self.algebra.scalar(1)
        for _ in range(n):
            out = out * self
        return out

    # -- involutions -------------------------------------------------------
    def reverse(self) -> "CliffordElement":
        """Anti-involution ``*``: ``i_M* = (-1)^(k(k-1)/2) i_M`` with ``k = |M|``."""
        return CliffordElement(
            self.algebra,
            {m: (-c if (_popcount(m) * (_popcount(m) - 1) // 2) % 2 else c)
             for m, c in self.terms.items()},
        )

    def grade_involution(self) -> "CliffordElement":
        return CliffordElement(
            self.algebra, {m: (-c if _popcount(m) % 2 else c) for m, c in self.terms.items()}
        )

    def conjugate(self) -> "CliffordElement":
        """``x-bar = (x')*``."""
        return self.grade_involution().reverse()

    # -- grading and vectors -----------------------------------------------
    @property
    def scalar_part(self):
        return self.terms.get(0, 0)

    def grades(self) -> set[int]:
        return {_popcount(m) for m in self.terms}

    def is_even(self) -> bool:
        return all(_popcount(m) % 2 == 0 for m in self.terms)

    def is_scalar(self) -> bool:
        return all(m == 0 for m in self.terms)

    def is_vector(self) -> bool:
        """Support within ``{1, i_1, ..., i_n}``."""
        return all(_popcount(m) <= 1 for m in self.terms)

    def is_pure_vector(self) -> bool:
        """Support within the generator span (no scalar part)."""
        return all(_popcount(m) == 1 for m in self.terms)

    def vector_coords(self) -> list:
        """``[a_0, a_1, ..., a_n]`` for a vector ``a_0 + sum a_k i_k``."""
        if not self.is_vector():
            raise DomainError("element is not a vector")
        return [self.terms.get(0, 0)] + [self.terms.get(1 << k, 0) for k in range(self.algebra.n)]

    def trace(self):
        if not self.is_vector():
            raise DomainError("trace is defined for vectors")
        return 2 * self.scalar_part

    def norm(self):
        """``x x-bar``; for vectors of C_m this is the sum of squares."""
        if not self.is_vector():
            raise DomainError("norm is defined for vectors")
        return (self * self.conjugate()).scalar_part

    def inverse(self) -> "CliffordElement":
        """Inverse ``x-bar / N(x)`` when ``x x-bar`` is a nonzero scalar.

        This covers nonzero vectors of C_m and, more generally, elements of
        the Clifford group.
        """
        bar = self.conjugate()
        n = self * bar
        if not n.is_scalar() or n.scalar_part == 0:
            raise DomainError("element has no conjugate/norm inverse")
        return bar / n.scalar_part

    def to_text(self) -> list:
        out = []
        for m in sorted(self.terms, key=lambda m: (_popcount(m), m)):
            idx = [k + 1 for k in range(self.algebra.n) if m >> k & 1]
            out.append([idx, str(self.terms[m])])
        return out


def vector_data(x: CliffordElement) -> dict:
    """``is_vector``, ``trace``, ``norm`` and (when it exists) ``inverse``."""
    if not x.is_vector():
        return {"is_vector": False, "trace": None, "norm": None, "inverse": None}
    nrm = x.norm()
    return {
        "is_vector": True,
        "trace": x.trace(),
        "norm": nrm,
        "inverse": x.conjugate() / nrm if nrm != 0 else None,
    }


def clifford_C(m: int) -> CliffordAlgebra:
    """``C_m``: generators ``i_1..i_m`` squaring to -1."""
    return CliffordAlgebra([-1] * m)


C4 = clifford_C(4)
C5 = clifford_C(5)
# q_6 = x0^2 - x1^2 - ... - x6^2 with basis f0, f1, f2, i1..i4
CQ6 = CliffordAlgebra([1, -1, -1, -1, -1, -1, -1],
                      names=("f0", "f1", "f2", "i1", "i2", "i3", "i4"))

OMEGA = C4.vector(Fraction(-1, 2), Fraction(1, 2), Fraction(1, 2), Fraction(1, 2))


class OrderQ:
    """The order of C_4(Q) spanned over Z by ``x_I``, ``I`` a subset of {1,2,3,4}.

    ``x_1 = i_1, x_2 = i_2, x_3 = omega, x_4 = i_4`` and ``x_I`` is the product
    in increasing index order.  Basis index ``I`` is the bitmask of the subset.
    """

    def __init__(self):
        gens = [C4.gen(1), C4.gen(2), OMEGA, C4.gen(4)]
        self.basis = []
        for I in range(16):
            x = C4.scalar(1)
            for k in range(4):
                if I >> k & 1:
                    x = x * gens[k]
            self.basis.append(x)
        # column I holds the blade coordinates of x_I
        self.basis_change = [[self.basis[I].terms.get(M, 0) for I in range(16)]
                             for M in range(16)]
        self._inv = linalg.inverse(self.basis_change)

    def coordinates(self, x: CliffordElement) -> list:
        if x.algebra != C4:
            raise DomainError("order coordinates are defined on C_4(Q)")
        blade = [x.terms.get(M, 0) for M in range(16)]
        return [_clean(sum(self._inv[I][M] * blade[M] for M in range(16) if blade[M]))
                for I in range(16)]

    def contains(self, x: CliffordElement) -> bool:
        return all(isinstance(c, int) for c in self.coordinates(x))

    def from_coordinates(self, coords) -> CliffordElement:
        out = C4.element()
        for c, b in zip(coords, self.basis):
            if c:
                out = out + b * c
        return out


ORDER_Q = OrderQ()


def order_coordinates(x: CliffordElement) -> tuple[list, bool]:
    """Coordinates of ``x`` in the ``x_I`` basis and whether ``x`` lies in Q."""
    coords = ORDER_Q.coordinates(x)
    return coords, all(isinstance(c, int) for c in coords)
