"""Short-Weierstrass curves over small prime fields, used as a consistency oracle.

Everything here is exhaustive: points are found by scanning all x, the group
law is the textbook chord-tangent construction, and the order-3 symmetry
zeta(P, Q) = (Q, -P-Q) on pairs of points is applied literally.  The module
exists to cross-check the linear-algebra prediction for the rank of the
zeta-fixed subgroup on 3-torsion (the 4x4 integer matrix below) against
actual point counts, so clarity beats speed throughout; fields are capped at
q < 2^16 to keep the scans honest.
"""

from __future__ import annotations

from dataclasses import dataclass

from .intmat import IntMatrix
from .lattice import is_prime
from .tate import fixed_subgroup_rank

MAX_FIELD = 1 << 16


@dataclass(frozen=True)
class CurvePoint:
    """An affine point (x, y) or the point at infinity (both None)."""

    x: int | None
    y: int | None

    @property
    def is_infinity(self) -> bool:
        return self.x is None


INFINITY = CurvePoint(None, None)


class WeierstrassCurve:
    """y^2 = x^3 + a4*x + a6 over F_q, q an odd prime, 5 <= q < 2^16.

    >>> len(WeierstrassCurve(5, 0, 1).points())
    6
    >>> len(WeierstrassCurve(7, 0, 1).points())
    12
    >>> len(WeierstrassCurve(7, 0, 2).points())
    9
    """

    __slots__ = ("q", "a4", "a6", "_points")

    def __init__(self, q: int, a4: int, a6: int):
        if not is_prime(q) or q < 5 or q >= MAX_FIELD:
            raise ValueError(f"field size must be a prime in [5, 2^16), got {q}")
        a4 %= q
        a6 %= q
        disc = (-16 * (4 * a4 ** 3 + 27 * a6 ** 2)) % q
        if disc == 0:
            raise ValueError(f"singular curve: discriminant vanishes mod {q}")
        self.q = q
        self.a4 = a4
        self.a6 = a6
        self._points: tuple[CurvePoint, ...] | None = None

    def __repr__(self):
        return f"WeierstrassCurve(q={self.q}, a4={self.a4}, a6={self.a6})"

    def contains(self, P: CurvePoint) -> bool:
        if P.is_infinity:
            return True
        q = self.q
        return (P.y * P.y - (P.x ** 3 + self.a4 * P.x + self.a6)) % q == 0

    def points(self) -> tuple[CurvePoint, ...]:
        """All rational points: infinity first, then ascending (x, y)."""
        if self._points is None:
            q = self.q
            found = [INFINITY]
            for x in range(q):
                rhs = (x ** 3 + self.a4 * x + self.a6) % q
                for y in range(q):
                    if (y * y) % q == rhs:
                        found.append(CurvePoint(x, y))
            n = len(found)
            assert (n - q - 1) ** 2 <= 4 * q, f"point count {n} violates the Hasse bound"
            self._points = tuple(found)
        return self._points

    def negate(self, P: CurvePoint) -> CurvePoint:
        if P.is_infinity:
            return P
        return CurvePoint(P.x, (-P.y) % self.q)

    def add(self, P: CurvePoint, Q: CurvePoint) -> CurvePoint:
        if P.is_infinity:
            return Q
        if Q.is_infinity:
            return P
        q = self.q
        if P.x == Q.x and (P.y + Q.y) % q == 0:
            return INFINITY
        if P == Q:
            lam = (3 * P.x * P.x + self.a4) * pow(2 * P.y, -1, q) % q
        else:
            lam = (Q.y - P.y) * pow(Q.x - P.x, -1, q) % q
        x3 = (lam * lam - P.x - Q.x) % q
        y3 = (lam * (P.x - x3) - P.y) % q
        return CurvePoint(x3, y3)

    def multiply(self, n: int, P: CurvePoint) -> CurvePoint:
        if n < 0:
            return self.multiply(-n, self.negate(P))
        acc = INFINITY
        step = P
        while n:
            if n & 1:
                acc = self.add(acc, step)
            step = self.add(step, step)
            n >>= 1
        return acc


def zeta_apply(curve: WeierstrassCurve, pair: tuple[CurvePoint, CurvePoint]):
    """The order-3 map on pairs: (P, Q) |-> (Q, -P-Q)."""
    P, Q = pair
    return (Q, curve.negate(curve.add(P, Q)))


def fixed_points_of_zeta(curve: WeierstrassCurve) -> list[tuple[CurvePoint, CurvePoint]]:
    """Fixed pairs of zeta: exactly the diagonal pairs (T, T) with 3T = infinity."""
    out = []
    for P in curve.points():
        if curve.multiply(3, P).is_infinity:
            pair = (P, P)
            assert zeta_apply(curve, pair) == pair
            out.append(pair)
    return out


def zeta_matrix_on_three_torsion() -> IntMatrix:
    """The action of zeta on E[3] x E[3] in a basis of the 3-torsion pair.

    Writing a pair as (P, Q) with each component in a rank-2 basis of E[3],
    zeta sends (P, Q) to (Q, -P-Q), i.e. the block matrix [[0, I], [-I, -I]].
    """
    return IntMatrix([
        [0, 0, 1, 0],
        [0, 0, 0, 1],
        [-1, 0, -1, 0],
        [0, -1, 0, -1],
    ])


# Orbit statistics stay exact only while the pair count is tiny.
ORBIT_COUNT_CAP = 60


@dataclass(frozen=True)
class ConsistencyReport:
    """Curve-side counts versus the linear-algebra prediction."""

    q: int
    a4: int
    a6: int
    point_count: int
    rational_fixed_pairs: int
    geometric_fixed_pairs: int
    predicted_rank: int
    consistent: bool
    orbit_counts: dict[str, int] | None


def compare_with_prediction(curve: WeierstrassCurve) -> ConsistencyReport:
    """Count zeta-fixed pairs on the curve and compare with the matrix prediction.

    The matrix predicts a rank-2 fixed space on E[3] x E[3], i.e. 9 geometric
    fixed pairs; the rational ones form a subgroup of those, so their count
    must divide 9.
    """
    pts = curve.points()
    fixed = fixed_points_of_zeta(curve)
    n_fixed = len(fixed)
    assert n_fixed in (1, 3, 9), f"rational 3-torsion count {n_fixed} is impossible"
    rank = fixed_subgroup_rank(zeta_matrix_on_three_torsion(), 3)
    geometric = 3 ** rank
    orbit_counts = None
    if len(pts) <= ORBIT_COUNT_CAP:
        pairs = [(P, Q) for P in pts for Q in pts]
        seen = set()
        fixed_pairs = 0
        three_cycles = 0
        for pair in pairs:
            if pair in seen:
                continue
            orbit = {pair}
            cur = zeta_apply(curve, pair)
            while cur not in orbit:
                orbit.add(cur)
                cur = zeta_apply(curve, cur)
            seen |= orbit
            if len(orbit) == 1:
                fixed_pairs += 1
            else:
                assert len(orbit) == 3, "zeta has order 3, orbits have size 1 or 3"
                three_cycles += 1
        assert fixed_pairs + 3 * three_cycles == len(pairs)
        orbit_counts = {
            "fixed_pairs": fixed_pairs,
            "three_cycles": three_cycles,
            "total_orbits": fixed_pairs + three_cycles,
        }
        assert fixed_pairs == n_fixed
    return ConsistencyReport(
        q=curve.q, a4=curve.a4, a6=curve.a6,
        point_count=len(pts),
        rational_fixed_pairs=n_fixed,
        geometric_fixed_pairs=geometric,
        predicted_rank=rank,
        consistent=(geometric % n_fixed == 0),
        orbit_counts=orbit_counts,
    )
