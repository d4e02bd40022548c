"""Divisor class groups of toric charts and combinatorics of exceptional sets.

For a fan with rays v_1..
v_R in a lattice N, the divisor class group of the associated toric variety
is the cokernel of the pairing map  M -> Z^R,  m |-> (<m, v_i>)_i,  where M is
the dual lattice.  In the canonical basis of N the pairing matrix is simply
the transpose of the ray coordinate matrix, so the whole computation is one
Smith normal form.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fan import Fan, star_fan
from .intmat import IntMatrix, invariant_factors


@dataclass(frozen=True)
class GroupPresentation:
    """A finitely generated abelian group: free rank plus invariant factors."""

    free_rank: int
    torsion: tuple[int, ...]

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("free rank cannot be negative")
        for i, d in enumerate(self.torsion):
            if d < 2:
                raise ValueError("torsion invariant factors must be at least 2")
            if i and self.torsion[i] % self.torsion[i - 1] != 0:
                raise ValueError("invariant factors must form a divisibility chain")

    @property
    def torsion_order(self) -> int:
        out = 1
        for d in self.torsion:
            out *= d
        return out

    def __str__(self) -> str:
        parts = ["Z"] * self.free_rank + [f"Z/{d}" for d in self.torsion]
        return " x ".join(parts) if parts else "0"


def class_group(fan: Fan) -> GroupPresentation:
    """Divisor class group of the toric variety of the fan.

    Errors if the rays fail to span the ambient space rationally (the chart
    would have extra torus factors and the presentation a silent free part).

    >>> from cyclotoric.lattice import Lattice
    >>> complete = Fan(Lattice.standard(2), [(1, 0), (0, 1), (-1, -1)],
    ...                [(0, 1), (1, 2), (0, 2)])
    >>> class_group(complete)
    GroupPresentation(free_rank=1, torsion=())
    """
    coords = fan.ray_coordinates()
    n = fan.lattice.dim
    R = len(coords)
    pairing = IntMatrix.from_columns(coords)  # n x R
    if pairing.rank() != n:
        raise ValueError("fan rays do not span the ambient space")
    facs = invariant_factors(pairing.transpose())
    assert len(facs) == n
    free_rank = R - n
    assert free_rank + n == R
    return GroupPresentation(free_rank, tuple(d for d in facs if d > 1))


@dataclass(frozen=True)
class IndependenceCertificate:
    """SNF rank data showing whether exceptional classes are independent."""

    independent: bool
    exceptional: tuple[int, ...]
    rank_relations: int
    rank_augmented: int
    invariant_factors_relations: tuple[int, ...]
    invariant_factors_augmented: tuple[int, ...]


def exceptional_independence(fan: Fan, exceptional: tuple[int, ...] | list[int]
                             ) -> IndependenceCertificate:
    """Do the exceptional divisor classes generate a free group of full rank?

    The classes of the rays in ``exceptional`` inside the divisor class group
    are independent exactly when augmenting the relation matrix by the
    corresponding coordinate vectors raises its rank by |exceptional|; the
    returned certificate carries both Smith chains.
    """
    exc = tuple(sorted(set(int(i) for i in exceptional)))
    for i in exc:
        if not 0 <= i < len(fan.rays):
            raise ValueError(f"exceptional index {i} out of range")
    coords = fan.ray_coordinates()
    R = len(coords)
    relations = IntMatrix.from_columns(coords).transpose()  # R x n
    facs_rel = tuple(invariant_factors(relations))
    # The augmented matrix [relations | unit selector columns] reduces by
    # unimodular column operations: each selector column clears its ray's
    # relation row, leaving I_e (+) (relations with the exceptional rows
    # deleted).  Its Smith chain is therefore e ones followed by the chain
    # of the deleted-row matrix -- no R x (R-ish) reduction needed.
    if exc:
        exc_set = set(exc)
        kept_rows = [list(relations.rows[r]) for r in range(R) if r not in exc_set]
        if kept_rows:
            facs_deleted = tuple(invariant_factors(IntMatrix(kept_rows)))
        else:
            facs_deleted = ()
        facs_aug = (1,) * len(exc) + facs_deleted
    else:
        facs_aug = facs_rel
    independent = len(facs_aug) == len(facs_rel) + len(exc)
    return IndependenceCertificate(
        independent=independent, exceptional=exc,
        rank_relations=len(facs_rel), rank_augmented=len(facs_aug),
        invariant_factors_relations=facs_rel,
        invariant_factors_augmented=facs_aug,
    )


@dataclass(frozen=True)
class DualGraph:
    """Intersection graph of exceptional rays: edge = the rays share a cone."""

    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    components: int


def dual_graph(fan: Fan, exceptional: tuple[int, ...] | list[int]) -> DualGraph:
    """Dual graph of an exceptional set: vertices are ray indices, and two are
    adjacent iff some cone of the fan contains both (equivalently, some
    maximal cone does, since faces of cones are cones).
    """
    verts = tuple(sorted(set(int(i) for i in exceptional)))
    for i in verts:
        if not 0 <= i < len(fan.rays):
            raise ValueError(f"vertex index {i} out of range")
    edges = set()
    vset = set(verts)
    for cone in fan.max_cones:
        inside = sorted(vset.intersection(cone))
        for a in range(len(inside)):
            for b in range(a + 1, len(inside)):
                edges.add((inside[a], inside[b]))
    edge_tuple = tuple(sorted(edges))
    # Count connected components with a plain BFS.
    adjacency = {v: set() for v in verts}
    for a, b in edge_tuple:
        adjacency[a].add(b)
        adjacency[b].add(a)
    seen: set[int] = set()
    components = 0
    for v in verts:
        if v in seen:
            continue
        components += 1
        queue = [v]
        seen.add(v)
        while queue:
            cur = queue.pop()
            for w in adjacency[cur]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
    return DualGraph(vertices=verts, edges=edge_tuple, components=components)


def star_is_complete(fan: Fan, ray_index: int) -> bool:
    """Is the star of a ray a complete fan in N / (Z * ray)?

    Decided by the boundary-ridge criterion: the star must be nonempty, pure,
    connected through its ridges, and every codimension-1 cone must lie in
    exactly two maximal cones.  For a smooth surface fan this is the familiar
    statement that an interior ray's star is a cycle (here: two opposite
    half-lines), while a boundary ray's star is cut open.
    """
    if not 0 <= ray_index < len(fan.rays):
        raise ValueError(f"ray index {ray_index} out of range")
    if fan.lattice.dim < 2:
        raise ValueError("star completeness needs ambient dimension at least 2")
    star = star_fan(fan, ray_index)
    if star is None:
        return False
    d = star.lattice.dim
    if any(len(c) != d for c in star.max_cones):
        return False
    counts: dict[tuple[int, ...], int] = {}
    for c in star.max_cones:
        for drop in c:
            facet = tuple(i for i in c if i != drop)
            counts[facet] = counts.get(facet, 0) + 1
    if any(cnt != 2 for cnt in counts.values()):
        return False
    # Connectivity through shared ridges.
    cones = list(star.max_cones)
    facet_map: dict[tuple[int, ...], list[int]] = {}
    for idx, c in enumerate(cones):
        for drop in c:
            facet_map.setdefault(tuple(i for i in c if i != drop), []).append(idx)
    seen = {0}
    queue = [0]
    while queue:
        cur = queue.pop()
        for drop in cones[cur]:
            facet = tuple(i for i in cones[cur] if i != drop)
            for nxt in facet_map[facet]:
                if nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
    return len(seen) == len(cones)


def retraction_multiplier(t: int, n: int) -> int:
    """The inverse of t modulo n: the unique 0 < m < n with t*m = 1 (mod n).

    Degenerate case: n = 1 returns 1 (everything is 1 mod 1).

    >>> retraction_multiplier(3, 4)
    3
    >>> retraction_multiplier(9, 7)
    4
    """
    t, n = int(t), int(n)
    if t < 1 or n < 1:
        raise ValueError("both arguments must be positive")
    import math
    if math.gcd(t, n) != 1:
        raise ValueError(f"{t} is not a unit modulo {n}")
    if n == 1:
        return 1
    return pow(t, -1, n)
