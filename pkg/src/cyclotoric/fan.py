"""Simplicial cones, fans, and toric resolution of cyclic quotient cones.

The geometry all happens inside a home :class:`~cyclotoric.lattice.Lattice`.
A cone is an ordered tuple of primitive rays; a fan is a set of simplicial
cones given by ray-index sets.  Everything is exact: rays are tuples of
`Fraction`s, and the algorithms run on the integer coordinate vectors of the
rays in the lattice's canonical basis.

The resolution algorithm is classical stellar subdivision:

* pick the non-smooth maximal cone of largest multiplicity (ties broken by
  the lexicographically smallest ray index set);
* subdivide the whole fan at the primitive lattice point of the cone's
  half-open fundamental parallelepiped that minimizes the sum of barycentric
  coordinates (ties broken by the lexicographically smallest integer
  coordinate vector);
* repeat until every maximal cone is smooth.

Multiplicity strictly decreases for every cone touched by a subdivision,
which is asserted at runtime and guarantees termination.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .intmat import IntMatrix, integer_kernel, invariant_factors, smith_normal_form
from .lattice import (
    Lattice, RatVec, lattice_index, primitive_in_lattice,
    primitive_with_coordinates, quotient_lattice, ratvec,
)


class Cone:
    """A simplicial cone: ordered, linearly independent primitive rays.

    Rays are normalized to the primitive lattice point of their ray on
    construction, so ``Cone(L, [(2, 0)])`` stores the ray (1, 0) when L = Z^2.
    """

    __slots__ = ("lattice", "rays", "_bary_solver")

    def __init__(self, lattice: Lattice, rays: Iterable[Sequence]):
        prim = tuple(primitive_in_lattice(r, lattice) for r in rays)
        if len(set(prim)) != len(prim):
            raise ValueError("repeated rays in cone")
        object.__setattr__(self, "lattice", lattice)
        object.__setattr__(self, "rays", prim)
        object.__setattr__(self, "_bary_solver", None)
        if prim and self.coordinate_matrix().rank() != len(prim):
            raise ValueError("cone rays are linearly dependent (cone must be simplicial)")

    def __setattr__(self, name, value):
        raise AttributeError("Cone is immutable")

    @property
    def dim(self) -> int:
        return len(self.rays)

    def coordinate_matrix(self) -> IntMatrix:
        """Columns = integer coordinates of the rays in the lattice's canonical basis."""
        return IntMatrix.from_columns([self.lattice.coordinates_of(r) for r in self.rays])

    def multiplicity(self) -> int:
        """Index of the sublattice the rays generate inside its saturation.

        1 exactly when the rays extend to a basis of the home lattice, i.e.
        when the affine chart of this cone is smooth.
        """
        if not self.rays:
            return 1
        facs = invariant_factors(self.coordinate_matrix())
        out = 1
        for d in facs:
            out *= d
        return out

    def is_smooth(self) -> bool:
        return self.multiplicity() == 1

    def barycentric(self, v: Sequence) -> tuple[Fraction, ...] | None:
        """Coefficients of v in the rays, or None when v is outside their span."""
        vv = ratvec(v)
        L = self.lattice
        k = len(self.rays)
        if k == L.dim:
            # Full-dimensional: Cramer via the cached adjugate, all integers.
            solver = self._bary_solver
            if solver is None:
                cols = [L.coordinates_of(r) for r in self.rays]
                solver = (_adjugate(cols), _det(cols))
                object.__setattr__(self, "_bary_solver", solver)
            adj, det = solver
            nums, denom = L._coordinate_numerators(vv)
            d = det * denom
            rng = range(k)
            return tuple(Fraction(sum(row[i] * nums[i] for i in rng), d) for row in adj)
        cols = [L.rational_coordinates(r) for r in self.rays]
        target = list(L.rational_coordinates(vv))
        return _solve_columns_exact(cols, target)

    def contains(self, v: Sequence) -> bool:
        t = self.barycentric(v)
        return t is not None and all(x >= 0 for x in t)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Cone) and self.lattice == other.lattice
                and self.rays == other.rays)

    def __hash__(self) -> int:
        return hash((self.lattice, self.rays))

    def __repr__(self) -> str:
        return f"Cone({self.rays})"


def _solve_columns_exact(cols: Sequence[Sequence[Fraction]], target: list[Fraction]):
    """Solve sum_j x_j * cols[j] = target exactly; None when inconsistent.

    Columns must be linearly independent, so a solution is unique when it exists.
    """
    m = len(target)
    k = len(cols)
    aug = [[Fraction(cols[j][i]) for j in range(k)] + [Fraction(target[i])]
           for i in range(m)]
    pivots = []
    r = 0
    for c in range(k):
        pivot = next((i for i in range(r, m) if aug[i][c] != 0), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [x * inv for x in aug[r]]
        for i in range(m):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    if len(pivots) != k:
        raise ValueError("columns are linearly dependent")
    for i in range(r, m):
        if aug[i][k] != 0:
            return None
    sol = [Fraction(0)] * k
    for i, c in enumerate(pivots):
        sol[c] = aug[i][k]
    return tuple(sol)


class Fan:
    """A fan of simplicial cones: shared ray list + maximal cones as index sets.

    The constructor enforces the cheap structural invariants (primitive
    distinct rays, every ray used, each cone simplicial, no listed cone
    contained in another).  The quadratic pairwise-intersection check lives in
    :func:`validate_fan` because untrusted inputs need it and freshly
    subdivided fans do not.
    """

    __slots__ = ("lattice", "rays", "max_cones", "_ray_coords")

    def __init__(self, lattice: Lattice, rays: Iterable[Sequence],
                 max_cones: Iterable[Iterable[int]]):
        pairs = [primitive_with_coordinates(r, lattice) for r in rays]
        prim = tuple(pair[0] for pair in pairs)
        coords = tuple(pair[1] for pair in pairs)
        if len(set(prim)) != len(prim):
            raise ValueError("fan rays must be pairwise distinct")
        cones = sorted({tuple(sorted(set(c))) for c in max_cones})
        if not cones:
            raise ValueError("fan needs at least one maximal cone")
        used = set()
        for c in cones:
            if not c:
                raise ValueError("empty maximal cone")
            if c[0] < 0 or c[-1] >= len(prim):
                raise ValueError(f"ray index out of range in cone {c}")
            used.update(c)
        if used != set(range(len(prim))):
            raise ValueError("every ray must appear in some maximal cone")
        for i, c in enumerate(cones):
            for d in cones[i + 1:]:
                if set(c) <= set(d) or set(d) <= set(c):
                    raise ValueError(f"cone {c} is a face of listed cone {d}")
        for c in cones:
            cols = [coords[i] for i in c]
            full_rank = (_det(cols) != 0 if len(c) == lattice.dim
                         else IntMatrix.from_columns(cols).rank() == len(c))
            if not full_rank:
                raise ValueError("cone rays are linearly dependent (cone must be simplicial)")
        object.__setattr__(self, "lattice", lattice)
        object.__setattr__(self, "rays", prim)
        object.__setattr__(self, "max_cones", tuple(cones))
        object.__setattr__(self, "_ray_coords", coords)

    def __setattr__(self, name, value):
        raise AttributeError("Fan is immutable")

    def cone(self, indices: Iterable[int]) -> Cone:
        return Cone(self.lattice, [self.rays[i] for i in indices])

    def ray_coordinates(self) -> list[tuple[int, ...]]:
        return list(self._ray_coords)

    def is_smooth(self) -> bool:
        coords = self._ray_coords
        n = self.lattice.dim
        for c in self.max_cones:
            cols = [coords[i] for i in c]
            if len(c) == n:
                if abs(_det(cols)) != 1:
                    return False
            else:
                facs = invariant_factors(IntMatrix.from_columns(cols))
                if any(d != 1 for d in facs):
                    return False
        return True

    def __eq__(self, other) -> bool:
        return (isinstance(other, Fan) and self.lattice == other.lattice
                and self.rays == other.rays and self.max_cones == other.max_cones)

    def __hash__(self) -> int:
        return hash((self.lattice, self.rays, self.max_cones))

    def __repr__(self) -> str:
        return f"Fan(rays={self.rays}, max_cones={self.max_cones})"


def is_smooth_cone(cone: Cone) -> bool:
    """Do the cone's rays extend to a basis of the home lattice?

    Decided by the invariant factors of the ray coordinate matrix; for a
    full-dimensional cone this is the familiar |det| = 1 test.
    """
    return cone.is_smooth()


# ---------------------------------------------------------------------------
# Pairwise fan validation (exact, via circuits of [R | -S])
# ---------------------------------------------------------------------------

def _extreme_rays_of_intersection(coordsC: list[tuple[int, ...]],
                                  coordsD: list[tuple[int, ...]]):
    """Extreme rays of cone(C) /\\ cone(D), in integer lattice coordinates.

    The intersection is the projection of {z >= 0 : [R | -S] z = 0}; the
    extreme rays of such a cone are supported on circuits (minimal dependent
    column sets) whose 1-dimensional kernel has entries of one strict sign.
    Cone sizes here are tiny, so enumerating column subsets is fine.
    """
    n = len(coordsC[0])
    cols = list(coordsC) + [tuple(-x for x in c) for c in coordsD]
    kc = len(coordsC)
    total = len(cols)
    found: set[tuple[int, ...]] = set()
    from itertools import combinations
    for size in range(2, min(total, n + 1) + 1):
        for J in combinations(range(total), size):
            M = IntMatrix.from_columns([cols[j] for j in J])
            ker = integer_kernel(M)
            if len(ker) != 1:
                continue
            w = ker[0]
            if any(x == 0 for x in w):
                continue  # support not minimal
            if all(x > 0 for x in w) or all(x < 0 for x in w):
                if w[0] < 0:
                    w = tuple(-x for x in w)
                x = [0] * n
                for pos, j in enumerate(J):
                    if j < kc:
                        for i in range(n):
                            x[i] += w[pos] * cols[j][i]
                g = math.gcd(*x)
                assert g > 0
                found.add(tuple(v // g for v in x))
    return found


def validate_fan(fan: Fan) -> None:
    """Raise ValueError unless every pair of maximal cones meets in a common face.

    For simplicial cones C, D this holds iff every extreme ray of their
    intersection is a shared ray of both, which is checked exactly.
    """
    coords = fan.ray_coordinates()
    prim_ray_coords = set(coords)
    for a in range(len(fan.max_cones)):
        for b in range(a + 1, len(fan.max_cones)):
            ca, cb = fan.max_cones[a], fan.max_cones[b]
            shared = set(ca) & set(cb)
            ext = _extreme_rays_of_intersection([coords[i] for i in ca],
                                                [coords[i] for i in cb])
            for x in ext:
                if x not in prim_ray_coords:
                    raise ValueError(
                        f"cones {ca} and {cb} overlap off their faces "
                        f"(intersection ray {x} is not a ray of the fan)")
                idx = coords.index(x)
                if idx not in shared:
                    raise ValueError(
                        f"cones {ca} and {cb} meet along ray {idx}, "
                        f"which is not listed in both")


# ---------------------------------------------------------------------------
# Hirzebruch-Jung chains (dimension 2)
# ---------------------------------------------------------------------------

def hirzebruch_jung(p: int, a: int) -> list[RatVec]:
    """Exceptional rays of the minimal resolution of the 1/p(1, a) cone.

    The cone is the positive quadrant in the lattice Z^2 + Z*(1/p, a/p); the
    exceptional rays are the lattice points on the bounded part of the
    boundary of conv((cone /\\ lattice) - 0), ordered starting next to e2.
    They are produced by the classical recurrence u_{i+1} = b_i*u_i - u_{i-1}
    seeded with u_0 = e2 and u_1 = (1/p, a/p), where the b_i are the digits of
    the negative-regular continued fraction of p/a.

    >>> hirzebruch_jung(3, 2)
    [(Fraction(1, 3), Fraction(2, 3)), (Fraction(2, 3), Fraction(1, 3))]
    >>> hirzebruch_jung(2, 1)
    [(Fraction(1, 2), Fraction(1, 2))]
    """
    if p < 2:
        raise ValueError("p must be at least 2")
    a %= p
    if a == 0 or math.gcd(a, p) != 1:
        raise ValueError("weight must be a unit modulo p")
    digits = []
    num, den = p, a
    while den:
        b = -(-num // den)  # ceil
        digits.append(b)
        num, den = den, b * den - num
    u_prev = (Fraction(0), Fraction(1))
    u_cur = (Fraction(1, p), Fraction(a, p))
    chain = []
    for b in digits:
        chain.append(u_cur)
        u_prev, u_cur = u_cur, (b * u_cur[0] - u_prev[0], b * u_cur[1] - u_prev[1])
    assert u_cur == (Fraction(1), Fraction(0)), "chain must close up at e1"
    return chain


# ---------------------------------------------------------------------------
# Stellar resolution
# ---------------------------------------------------------------------------

def _parallelepiped_points(C: IntMatrix) -> list[tuple[tuple[int, ...], tuple[Fraction, ...]]]:
    """Nonzero lattice points of {C*t : t in [0,1)^n}, with their coefficients.

    C is the square nonsingular matrix of ray coordinates.  The points are in
    bijection with Z^n / C*Z^n; each class is reduced into the half-open box
    by taking fractional parts of the coefficients.
    """
    n = C.nrows
    S, U, _ = smith_normal_form(C)
    d = [S[i, i] for i in range(n)]
    uinv_cols = []
    for j in range(n):
        e = [1 if i == j else 0 for i in range(n)]
        col = U.inverse_times(e)
        assert all(x.denominator == 1 for x in col)
        uinv_cols.append([int(x) for x in col])
    cols = [[C[i, j] for i in range(n)] for j in range(n)]
    det = _det(cols)
    adj = _adjugate(cols)
    sign = 1 if det > 0 else -1
    detp = det * sign
    # Coefficients t of a class representative solve C*t = U^-1*y, so their
    # numerators over detp are rows of (sign * adj * U^-1) applied to y.
    num_rows = [
        [sign * sum(adj[j][i] * uinv_cols[k][i] for i in range(n)) for k in range(n)]
        for j in range(n)
    ]
    reps = [[0] * n]
    for i in range(n):
        reps = [r[:i] + [y] + r[i + 1:] for r in reps for y in range(d[i])]
    rng = range(n)
    out = []
    for y in reps:
        ms = [sum(row[k] * y[k] for k in rng) % detp for row in num_rows]
        point = []
        for i in rng:
            q, r = divmod(sum(cols[j][i] * ms[j] for j in rng), detp)
            assert r == 0
            point.append(q)
        point = tuple(point)
        if any(point):
            out.append((point, tuple(Fraction(m, detp) for m in ms)))
    return out


def _choose_subdivision_point(C: IntMatrix) -> tuple[int, ...]:
    """The primitive parallelepiped point minimizing the barycentric sum.

    Ties are broken by the lexicographically smallest integer coordinate
    vector, making the whole resolution deterministic.
    """
    best = None
    for point, frac in _parallelepiped_points(C):
        if math.gcd(*point) != 1:
            continue
        key = (sum(frac), point)
        if best is None or key < best[0]:
            best = (key, point)
    assert best is not None, "non-smooth cone must contain a primitive interior point"
    return best[1]


def _det(cols: Sequence[Sequence[int]]) -> int:
    """Determinant of a tiny integer matrix given by columns.

    Direct formulas up to 3x3 (the overwhelmingly common sizes in fan
    resolution), fraction-free Bareiss elimination beyond.
    """
    n = len(cols)
    if n == 1:
        return cols[0][0]
    if n == 2:
        (a, c), (b, d) = cols
        return a * d - b * c
    if n == 3:
        (a, d, g), (b, e, h), (c, f, i) = cols
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
    rows = [[cols[j][i] for j in range(n)] for i in range(n)]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            for r in range(k + 1, n):
                if rows[r][k]:
                    rows[k], rows[r] = rows[r], rows[k]
                    sign = -sign
                    break
            else:
                return 0
        for r in range(k + 1, n):
            for c in range(k + 1, n):
                rows[r][c] = (rows[r][c] * rows[k][k] - rows[r][k] * rows[k][c]) // prev
            rows[r][k] = 0
        prev = rows[k][k]
    return sign * rows[n - 1][n - 1]


def _adjugate(cols: Sequence[Sequence[int]]) -> list[list[int]]:
    """Adjugate (row-major) of a tiny integer matrix given by columns.

    Satisfies adj * M == det(M) * I, so Cramer solves become integer
    mat-vec products: the solution of M*t = x is (adj @ x) / det.
    """
    n = len(cols)
    if n == 1:
        return [[1]]
    if n == 2:
        (a, c), (b, d) = cols
        return [[d, -b], [-c, a]]
    if n == 3:
        (a, d, g), (b, e, h), (c, f, i) = cols
        return [
            [e * i - f * h, c * h - b * i, b * f - c * e],
            [f * g - d * i, a * i - c * g, c * d - a * f],
            [d * h - e * g, b * g - a * h, a * e - b * d],
        ]
    out = []
    for r in range(n):
        row = []
        for c in range(n):
            e = [1 if i == c else 0 for i in range(n)]
            row.append(_det([e if k == r else cols[k] for k in range(n)]))
        out.append(row)
    return out


def resolve_fan(fan: Fan) -> Fan:
    """Resolve a pure full-dimensional simplicial fan by stellar subdivisions.

    Every maximal cone of the result is smooth; the support is unchanged.
    Raises ValueError if some maximal cone is not full-dimensional (resolve a
    single lower-dimensional cone with :func:`resolve_cone` instead).
    """
    n = fan.lattice.dim
    if any(len(c) != n for c in fan.max_cones):
        raise ValueError("resolve_fan needs a pure full-dimensional fan")
    coords: list[tuple[int, ...]] = fan.ray_coordinates()
    cones: list[tuple[int, ...]] = list(fan.max_cones)
    # Signed determinant of each cone's ray columns, cached across passes.
    dets: dict[tuple[int, ...], int] = {
        c: _det([coords[i] for i in c]) for c in cones}

    while True:
        worst = None
        for c in cones:
            m = abs(dets[c])
            if m > 1:
                key = (-m, c)
                if worst is None or key < worst[0]:
                    worst = (key, c)
        if worst is None:
            break
        target = worst[1]
        v = _choose_subdivision_point(IntMatrix.from_columns([coords[i] for i in target]))
        new_index = len(coords)
        coords.append(v)
        next_cones: list[tuple[int, ...]] = []
        if n == 2:
            # Unrolled scan: replacing column j of (a, b) by v gives signed
            # determinants d0, d1, and the surviving child cones (sorted with
            # new_index last) have determinants -d0 and d1 respectively.
            v0, v1 = v
            for c in cones:
                det = dets[c]
                i0, i1 = c
                a0, a1 = coords[i0]
                b0, b1 = coords[i1]
                d0 = v0 * b1 - v1 * b0
                d1 = a0 * v1 - a1 * v0
                if det > 0:
                    if d0 < 0 or d1 < 0:
                        next_cones.append(c)
                        continue
                elif d0 > 0 or d1 > 0:
                    next_cones.append(c)
                    continue
                parent_mult = abs(det)
                assert d0 or d1, "subdivision point cannot be the origin"
                if d0:
                    child = (i1, new_index)
                    assert abs(d0) < parent_mult, "multiplicity must strictly decrease"
                    dets[child] = -d0
                    next_cones.append(child)
                if d1:
                    child = (i0, new_index)
                    assert abs(d1) < parent_mult, "multiplicity must strictly decrease"
                    dets[child] = d1
                    next_cones.append(child)
            cones = next_cones
            assert any(new_index in c for c in cones)
            continue
        for c in cones:
            det = dets[c]
            ccols = [coords[i] for i in c]
            # Barycentric coordinates of v have the sign of d_j/det where d_j
            # replaces column j by v; integer sign tests avoid Fractions.
            numerators = []
            outside = False
            for j in range(n):
                dj = _det([v if k == j else ccols[k] for k in range(n)])
                if (dj > 0) != (det > 0) and dj != 0:
                    outside = True
                    break
                numerators.append(dj)
            if outside:
                next_cones.append(c)
                continue
            parent_mult = abs(det)
            support = [pos for pos, dj in enumerate(numerators) if dj != 0]
            assert support, "subdivision point cannot be the origin"
            for pos in support:
                child = tuple(sorted(set(c) - {c[pos]} | {new_index}))
                child_det = _det([coords[i] for i in child])
                assert abs(child_det) < parent_mult, "multiplicity must strictly decrease"
                dets[child] = child_det
                next_cones.append(child)
        cones = next_cones
        assert any(new_index in c for c in cones)

    vectors = [fan.lattice.from_coordinates(c) for c in coords]
    return Fan(fan.lattice, vectors, sorted(cones))


def resolve_cone(cone: Cone) -> Fan:
    """Resolution of a single simplicial cone into smooth cones.

    Full-dimensional cones are subdivided directly; a lower-dimensional cone
    is resolved inside the saturation of its span and the result is mapped
    back, so smoothness still means "rays extend to a basis of the home
    lattice".
    """
    L = cone.lattice
    n, k = L.dim, cone.dim
    if k == 0:
        raise ValueError("cannot resolve the zero cone")
    if k == n:
        base = Fan(L, cone.rays, [tuple(range(k))])
        return resolve_fan(base)
    C = cone.coordinate_matrix()
    S, U, V = smith_normal_form(C)
    sat_basis = []  # columns: basis of (span of rays) /\ lattice, in L-coordinates
    for j in range(k):
        e = [1 if i == j else 0 for i in range(n)]
        col = U.inverse_times(e)
        assert all(x.denominator == 1 for x in col)
        sat_basis.append([int(x) for x in col])
    # Ray coordinates in that basis: rows 0..k-1 of U*C.
    UC = U * C
    local_rays = [[UC[i, j] for i in range(k)] for j in range(C.ncols)]
    local = Fan(Lattice.standard(k), local_rays, [tuple(range(k))])
    resolved = resolve_fan(local)
    ambient_rays = []
    for r in resolved.rays:
        loc = [int(x) for x in r]
        amb = [sum(sat_basis[j][i] * loc[j] for j in range(k)) for i in range(n)]
        ambient_rays.append(L.from_coordinates(amb))
    return Fan(L, ambient_rays, resolved.max_cones)


# ---------------------------------------------------------------------------
# Support checks
# ---------------------------------------------------------------------------

def check_subdivision_support(fan: Fan, original: Cone) -> None:
    """Assert that ``fan`` subdivides ``original`` exactly.

    (a) every ray of the fan lies in the original cone, and (b) the ridge
    criterion holds: every codimension-1 face of a maximal cone lies in
    exactly two maximal cones if it is interior, exactly one if it lies on
    the boundary of the original cone.
    """
    barys = {}
    for i, r in enumerate(fan.rays):
        t = original.barycentric(r)
        if t is None or any(x < 0 for x in t):
            raise ValueError(f"ray {r} escapes the subdivided cone")
        barys[i] = t
    k = original.dim
    if any(len(c) != k for c in fan.max_cones):
        raise ValueError("subdivision must be pure of the cone's dimension")
    counts: dict[tuple[int, ...], int] = {}
    for c in fan.max_cones:
        for drop in c:
            facet = tuple(i for i in c if i != drop)
            counts[facet] = counts.get(facet, 0) + 1
    for facet, cnt in counts.items():
        on_boundary = any(all(barys[i][j] == 0 for i in facet) for j in range(k))
        expected = 1 if on_boundary else 2
        if cnt != expected:
            raise ValueError(
                f"facet {facet} lies in {cnt} maximal cones, expected {expected}")


def interior_ray_indices(fan: Fan, original: Cone) -> tuple[int, ...]:
    """Indices of fan rays interior to the original cone (the exceptional set)."""
    out = []
    for i, r in enumerate(fan.rays):
        t = original.barycentric(r)
        assert t is not None and all(x >= 0 for x in t)
        if all(x > 0 for x in t):
            out.append(i)
    return tuple(out)


# ---------------------------------------------------------------------------
# Star fans
# ---------------------------------------------------------------------------

def star_fan(fan: Fan, ray_index: int) -> Fan | None:
    """The star of a ray, as a fan in the quotient lattice N / (Z * ray).

    The primitive ray is completed to a basis of N; projecting away its
    coordinate realizes the quotient as Z^(n-1).  Maximal cones of the star
    are the images of the maximal cones containing the ray.  Returns None for
    degenerate ("folded") stars in which two distinct cones project onto the
    same image -- a valid fan never does this silently.
    """
    L = fan.lattice
    n = L.dim
    c = L.coordinates_of(fan.rays[ray_index])
    col = IntMatrix.from_columns([list(c)])
    S, U, V = smith_normal_form(col)
    assert S[0, 0] == 1, "fan rays are primitive"
    W = U if V[0, 0] == 1 else -U  # W @ c == e1
    assert W.mul_vector(list(c)) == tuple([1] + [0] * (n - 1))

    image_index: dict[tuple[int, ...], int] = {}
    star_rays: list[tuple[int, ...]] = []
    star_cones: list[tuple[int, ...]] = []
    for cone_idx in fan.max_cones:
        if ray_index not in cone_idx:
            continue
        image: list[int] = []
        for j in cone_idx:
            if j == ray_index:
                continue
            w = W.mul_vector(list(L.coordinates_of(fan.rays[j])))[1:]
            g = math.gcd(*w)
            assert g > 0, "a ray proportional to the star center cannot share a cone"
            w = tuple(x // g for x in w)
            if w not in image_index:
                image_index[w] = len(star_rays)
                star_rays.append(w)
            image.append(image_index[w])
        cone = tuple(sorted(set(image)))
        if len(cone) != len(image) or cone in star_cones:
            return None  # folded star: images collapse
        star_cones.append(cone)
    if not star_cones:
        return None
    try:
        return Fan(Lattice.standard(n - 1), star_rays, star_cones)
    except ValueError:
        return None  # nested or otherwise degenerate images


# ---------------------------------------------------------------------------
# Lifting along a sublattice and the two-stage pipeline
# ---------------------------------------------------------------------------

def lift_fan(fan: Fan, cover: Lattice) -> Fan:
    """Reinterpret a fan over N inside a finite-index sublattice (the cover).

    Cone combinatorics are preserved; every ray is re-primitivized in the
    cover lattice.  Smoothness is *not* preserved in general -- that is the
    point: blowing up downstairs and upstairs commutes with the quotient, but
    the lifted fan may need further resolution.
    """
    if not fan.lattice.contains_lattice(cover):
        raise ValueError("cover must be a sublattice of the fan's lattice")
    lattice_index(cover, fan.lattice)  # also validates full rank containment
    rays = [primitive_in_lattice(r, cover) for r in fan.rays]
    return Fan(cover, rays, fan.max_cones)


@dataclass(frozen=True)
class ResolutionReport:
    """Everything the two-stage resolution produces, ready for serialization."""

    p: int
    weights: tuple[int, ...]
    quotient_lattice: Lattice
    quotient_fan: Fan
    exceptional_quotient: tuple[int, ...]
    lifted_fan: Fan
    cover_fan: Fan
    exceptional_cover: tuple[int, ...]


def resolution_pipeline(p: int, weights: Sequence[int]) -> ResolutionReport:
    """Resolve the cyclic quotient cone and its lift to the cover in one sweep.

    Stage one resolves the positive orthant in N = Z^n + Z*(weights/p); stage
    two lifts that fan to the cover lattice Z^n and resolves again.  Both
    resulting fans are smooth and subdivide the orthant exactly, which is
    asserted before the report is returned.

    >>> rep = resolution_pipeline(3, (1, 2))
    >>> sorted(tuple(int(x) for x in r) for r in rep.cover_fan.rays)
    [(0, 1), (1, 0), (1, 1), (1, 2), (2, 1)]
    """
    weights = tuple(int(w) for w in weights)
    N = quotient_lattice(p, weights)
    n = N.dim
    orthant = [[1 if i == j else 0 for i in range(n)] for j in range(n)]
    sigma_N = Cone(N, orthant)
    quotient_fan = resolve_fan(Fan(N, sigma_N.rays, [tuple(range(n))]))
    assert quotient_fan.is_smooth()
    check_subdivision_support(quotient_fan, sigma_N)
    exc_N = interior_ray_indices(quotient_fan, sigma_N)

    cover = Lattice.standard(n)
    lifted = lift_fan(quotient_fan, cover)
    sigma_Z = Cone(cover, orthant)
    cover_fan = resolve_fan(lifted)
    assert cover_fan.is_smooth()
    check_subdivision_support(cover_fan, sigma_Z)
    exc_Z = interior_ray_indices(cover_fan, sigma_Z)

    return ResolutionReport(
        p=p, weights=weights, quotient_lattice=N,
        quotient_fan=quotient_fan, exceptional_quotient=exc_N,
        lifted_fan=lifted, cover_fan=cover_fan, exceptional_cover=exc_Z,
    )
