"""Full-rank lattices in Q^n with exact rational arithmetic.

A lattice is stored as L = (1/den) * (column span of basis), where ``basis``
is an n-by-n integer matrix in canonical column Hermite form and
gcd(den, entries) = 1.  The canonical form makes equality of lattices literal
equality of the stored data.

The main constructor of interest is :func:`quotient_lattice`: the lattice
Z^n + Z*(a1/p, ..., an/p) in which the quotient of affine n-space by the
cyclic group of prime order p (acting with weights a_i) becomes a toric
variety on the positive orthant cone.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

from .intmat import IntMatrix, hermite_normal_form

RatVec = tuple[Fraction, ...]


def ratvec(v: Iterable) -> RatVec:
    """Coerce an iterable of ints/Fractions/strings into a tuple of Fractions."""
    return tuple(Fraction(x) for x in v)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for every n below 3.3e24."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class Lattice:
    """A full-rank lattice in Q^dim, canonically presented."""

    __slots__ = ("dim", "den", "basis", "_adj", "_bdet")

    def __init__(self, dim: int, den: int, generators: IntMatrix):
        """Build the lattice (1/den) * columnspan(generators), canonicalized.

        ``generators`` may have any number of columns; they must span Q^dim.
        """
        if dim < 1:
            raise ValueError("lattice dimension must be positive")
        if den < 1:
            raise ValueError("denominator must be positive")
        if generators.nrows != dim:
            raise ValueError("generator matrix has wrong height")
        H, _ = hermite_normal_form(generators)
        if any(H[i, i] == 0 for i in range(dim)) or generators.ncols < dim:
            raise ValueError("generators do not span a full-rank lattice")
        basis = H.submatrix(range(dim), range(dim))
        g = den
        for row in basis.rows:
            for x in row:
                g = math.gcd(g, x)
        if g > 1:
            den //= g
            basis = IntMatrix([[x // g for x in row] for row in basis.rows])
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "den", den)
        object.__setattr__(self, "basis", basis)
        # Integer adjugate of the basis, so coordinate conversions are plain
        # dot products: basis^-1 = adj / bdet.
        bdet = basis.det()
        adj_rows = []
        for j in range(dim):
            e = [1 if i == j else 0 for i in range(dim)]
            col = basis.inverse_times(e)
            scaled = [x * bdet for x in col]
            assert all(x.denominator == 1 for x in scaled)
            adj_rows.append([int(x) for x in scaled])
        # adj_rows[j][i] is (adj)_{i j}: transpose while freezing.
        adj = tuple(tuple(adj_rows[j][i] for j in range(dim)) for i in range(dim))
        object.__setattr__(self, "_adj", adj)
        object.__setattr__(self, "_bdet", bdet)

    def __setattr__(self, name, value):
        raise AttributeError("Lattice is immutable")

    @classmethod
    def standard(cls, n: int) -> "Lattice":
        return cls(n, 1, IntMatrix.identity(n))

    @classmethod
    def from_generators(cls, vectors: Sequence[Sequence]) -> "Lattice":
        """Lattice generated by rational vectors (rows of ``vectors``)."""
        vecs = [ratvec(v) for v in vectors]
        if not vecs:
            raise ValueError("need at least one generator")
        dim = len(vecs[0])
        den = 1
        for v in vecs:
            for x in v:
                den = den * x.denominator // math.gcd(den, x.denominator)
        cols = [[int(x * den) for x in v] for v in vecs]
        return cls(dim, den, IntMatrix.from_columns(cols))

    # -- membership and coordinates -------------------------------------

    def _coordinate_numerators(self, vv: RatVec) -> tuple[list[int], int]:
        """Exact coordinates of vv as (numerators, shared denominator)."""
        lcm = 1
        for x in vv:
            d = x.denominator
            lcm = lcm // math.gcd(lcm, d) * d
        ints = [x.numerator * (lcm // x.denominator) for x in vv]
        rng = range(self.dim)
        nums = [self.den * sum(row[j] * ints[j] for j in rng) for row in self._adj]
        return nums, self._bdet * lcm

    def try_coordinates(self, v: Sequence) -> tuple[int, ...] | None:
        """Integer coordinates of v in the canonical basis, or None if v is not in L."""
        vv = ratvec(v)
        if len(vv) != self.dim:
            raise ValueError("dimension mismatch")
        nums, denom = self._coordinate_numerators(vv)
        out = []
        for x in nums:
            q, r = divmod(x, denom)
            if r:
                return None
            out.append(q)
        return tuple(out)

    def coordinates_of(self, v: Sequence) -> tuple[int, ...]:
        c = self.try_coordinates(v)
        if c is None:
            raise ValueError(f"{v!r} is not a lattice point")
        return c

    def contains(self, v: Sequence) -> bool:
        return self.try_coordinates(v) is not None

    def from_coordinates(self, coords: Sequence[int]) -> RatVec:
        """Ambient rational vector with the given canonical-basis coordinates."""
        col = self.basis.mul_vector(list(coords))
        return tuple(Fraction(x, self.den) for x in col)

    def rational_coordinates(self, v: Sequence) -> RatVec:
        """Coordinates in the canonical basis, allowing non-lattice rational v."""
        vv = ratvec(v)
        if len(vv) != self.dim:
            raise ValueError("dimension mismatch")
        nums, denom = self._coordinate_numerators(vv)
        return tuple(Fraction(x, denom) for x in nums)

    def contains_lattice(self, other: "Lattice") -> bool:
        if other.dim != self.dim:
            return False
        return all(
            self.contains(other.from_coordinates(
                [1 if i == j else 0 for i in range(other.dim)]))
            for j in range(other.dim)
        )

    # -- bookkeeping ------------------------------------------------------

    def covolume(self) -> Fraction:
        """|det| of the lattice: covolume of a fundamental domain."""
        return abs(Fraction(self.basis.det(), self.den ** self.dim))

    def __eq__(self, other) -> bool:
        return (isinstance(other, Lattice) and self.dim == other.dim
                and self.den == other.den and self.basis == other.basis)

    def __hash__(self) -> int:
        return hash((self.dim, self.den, self.basis))

    def __repr__(self) -> str:
        return f"Lattice(dim={self.dim}, den={self.den}, basis={self.basis!r})"


def quotient_lattice(p: int, weights: Sequence[int]) -> Lattice:
    """The lattice Z^n + Z*(a1/p, ..., an/p) for a prime p.

    This is the character-dual home of the quotient of affine n-space by the
    order-p cyclic action with the given weights.  When every weight is
    divisible by p the result collapses to Z^n.

    >>> L = quotient_lattice(3, (1, 2))
    >>> L.den, L.basis.rows
    (3, ((1, 0), (2, 3)))
    >>> L.contains((Fraction(1, 3), Fraction(2, 3)))
    True
    """
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    weights = [int(w) for w in weights]
    n = len(weights)
    if n < 1:
        raise ValueError("need at least one weight")
    cols = [[p if i == j else 0 for i in range(n)] for j in range(n)]
    cols.append([w % p for w in weights])
    return Lattice(n, p, IntMatrix.from_columns(cols))


def lattice_index(sub: Lattice, sup: Lattice) -> int:
    """The index [sup : sub] of one full-rank lattice in another.

    Errors if ``sub`` is not actually contained in ``sup``.
    """
    if sub.dim != sup.dim:
        raise ValueError("dimension mismatch")
    if not sup.contains_lattice(sub):
        raise ValueError("first lattice is not contained in the second")
    idx = sub.covolume() / sup.covolume()
    assert idx.denominator == 1 and idx >= 1
    return int(idx)


def primitive_with_coordinates(v: Sequence, L: Lattice) -> tuple[RatVec, tuple[int, ...]]:
    """The primitive lattice point on the ray of v, with its basis coordinates."""
    vv = ratvec(v)
    if all(x == 0 for x in vv):
        raise ValueError("the zero vector spans no ray")
    if len(vv) != L.dim:
        raise ValueError("dimension mismatch")
    nums, denom = L._coordinate_numerators(vv)
    if denom < 0:
        nums = [-x for x in nums]
    g = math.gcd(*nums)
    coords = tuple(x // g for x in nums)
    return L.from_coordinates(coords), coords


def primitive_in_lattice(v: Sequence, L: Lattice) -> RatVec:
    """The primitive lattice point on the ray spanned by v (same direction).

    v is any nonzero rational vector; since L has full rank, every rational
    direction meets L, so this is a total function away from v = 0.

    >>> primitive_in_lattice((1, 2), quotient_lattice(3, (1, 2)))
    (Fraction(1, 3), Fraction(2, 3))
    """
    return primitive_with_coordinates(v, L)[0]


def is_primitive(v: Sequence, L: Lattice) -> bool:
    c = L.try_coordinates(v)
    return c is not None and math.gcd(*c) == 1
