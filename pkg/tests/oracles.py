"""Independent reference computations the tests check the library against.

Nothing here imports the library's linear algebra: determinants are Laplace
expansions, invariant factors come from gcds of minors, Hirzebruch-Jung
chains from an explicit convex hull, Tate cohomology from enumerating the
elements of small finite modules, and abelian group structure from order
statistics.  Slow on purpose — these are referees, not engines.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import gcd


def laplace_det(rows):
    """Determinant by first-row cofactor expansion."""
    n = len(rows)
    assert all(len(r) == n for r in rows)
    if n == 1:
        return rows[0][0]
    total = 0
    for j in range(n):
        if rows[0][j] == 0:
            continue
        minor = [[row[k] for k in range(n) if k != j] for row in rows[1:]]
        total += (-1) ** j * rows[0][j] * laplace_det(minor)
    return total


def minor_gcd_invariant_factors(rows):
    """Invariant factors via determinantal divisors: d_i = D_i / D_{i-1}.

    D_i is the gcd of all i x i minors; exponential, fine for tiny matrices.
    """
    nr, nc = len(rows), len(rows[0])
    divisors = []
    for size in range(1, min(nr, nc) + 1):
        g = 0
        for rsel in itertools.combinations(range(nr), size):
            for csel in itertools.combinations(range(nc), size):
                minor = [[rows[i][j] for j in csel] for i in rsel]
                g = gcd(g, abs(laplace_det(minor)))
        divisors.append(g)
        if g == 0:
            break
    factors = []
    prev = 1
    for d in divisors:
        if d == 0:
            break
        factors.append(d // prev)
        prev = d
    return factors


# -- Hirzebruch-Jung via the convex hull --------------------------------------


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _lower_hull(points):
    """Lower-left boundary chain, keeping lattice points interior to hull edges."""
    pts = sorted(set(points))
    hull = []
    for point in pts:
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], point) < 0:
            hull.pop()
        hull.append(point)
    return hull


def hj_boundary_rays(p, a):
    """Exceptional rays of 1/p(1,a) read off the hull of nonzero lattice points.

    Collects the points of N = Z^2 + Z*(1/p, a/p) in the first quadrant up to
    a safe radius, takes the lower convex hull from (0,1) to (1,0), and
    returns the interior chain — the definition the continued-fraction
    recurrence is supposed to reproduce.
    """
    assert 0 < a < p and gcd(a, p) == 1
    pts = set()
    bound = 2
    for k in range(p):
        base = (Fraction(k, p), Fraction(k * a % p, p))
        for i in range(bound + 1):
            for j in range(bound + 1):
                x, y = base[0] + i, base[1] + j
                if (x, y) != (0, 0) and x <= bound and y <= bound:
                    pts.add((x, y))
    far = Fraction(bound)
    chain = _lower_hull([pt for pt in pts if pt[0] <= far and pt[1] <= far])
    start = chain.index((Fraction(0), Fraction(1)))
    end = chain.index((Fraction(1), Fraction(0)))
    assert start < end, "hull must run from e2 to e1"
    return [tuple(pt) for pt in chain[start + 1:end]]


# -- finite abelian structure from order statistics ---------------------------


def _prime_factors(n):
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def structure_from_elements(elements, add, zero):
    """Invariant factors of a finite abelian group given by explicit elements.

    For each prime p, counting solutions of p^j * x = 0 recovers the p-part's
    partition (the j-th difference of log-counts is the number of cyclic
    factors of size >= p^j); aligning partitions largest-first rebuilds the
    invariant factor chain.
    """
    n = len(elements)
    if n == 1:
        return []

    def scaled(x, times):
        y = zero
        for _ in range(times):
            y = add(y, x)
        return y

    partitions = {}
    for p in _prime_factors(n):
        # logs[j] = log_p #{x : p^j x = 0} = sum_i min(j, e_i)
        logs = [0]
        while True:
            j = len(logs)
            count = sum(1 for x in elements if scaled(x, p ** j) == zero)
            e = 0
            while p ** (e + 1) <= count:
                e += 1
            assert p ** e == count, "annihilator counts must be p-powers"
            if e == logs[-1]:
                break
            logs.append(e)
        # logs[j] - logs[j-1] = number of cyclic p-factors of size >= p^j
        at_least = [logs[j] - logs[j - 1] for j in range(1, len(logs))]
        parts = []
        for idx, copies in enumerate(at_least):
            later = at_least[idx + 1] if idx + 1 < len(at_least) else 0
            parts.extend([idx + 1] * (copies - later))
        parts.sort(reverse=True)
        partitions[p] = parts
    width = max(len(v) for v in partitions.values())
    factors = []
    for slot in range(width):
        d = 1
        for p, parts in partitions.items():
            if slot < len(parts):
                d *= p ** parts[slot]
        factors.append(d)
    factors.sort()
    return factors


# -- brute-force Tate cohomology on diagonal presentations --------------------


def _mat_vec_mod(rows, vec, mods):
    return tuple(sum(rows[i][j] * vec[j] for j in range(len(vec))) % mods[i]
                 for i in range(len(rows)))


def brute_force_tate(action_rows, diagonal, p):
    """(H0 factors, H1 factors) for Z^k/diag(d) with the given order-p action.

    Enumerates every element of the finite module, forms the fixed subgroup,
    the norm image, the norm kernel, and the augmentation image literally,
    and reads off both subquotients' structures from order statistics.
    Requires the relation matrix to be diagonal so elements are plain tuples.
    """
    k = len(diagonal)
    elements = list(itertools.product(*(range(d) for d in diagonal)))
    zero = tuple([0] * k)

    def add(u, v):
        return tuple((a + b) % d for a, b, d in zip(u, v, diagonal))

    norm_rows = [[0] * k for _ in range(k)]
    power = [[1 if i == j else 0 for j in range(k)] for i in range(k)]
    for _ in range(p):
        for i in range(k):
            for j in range(k):
                norm_rows[i][j] += power[i][j]
        power = [[sum(action_rows[i][m] * power[m][j] for m in range(k))
                  for j in range(k)] for i in range(k)]

    act = lambda v: _mat_vec_mod(action_rows, v, diagonal)
    norm = lambda v: _mat_vec_mod(norm_rows, v, diagonal)
    fixed = [v for v in elements if act(v) == v]
    norm_image = {norm(v) for v in elements}
    norm_kernel = [v for v in elements if norm(v) == zero]
    aug_image = {add(v, tuple((-x) % d for x, d in zip(act(v), diagonal)))
                 for v in elements}
    assert norm_image <= set(fixed)
    assert aug_image <= set(norm_kernel)

    h0 = _quotient_structure(fixed, norm_image, add)
    h1 = _quotient_structure(norm_kernel, aug_image, add)
    return h0, h1


def _quotient_structure(group_elements, subgroup, add):
    """Invariant factors of group/subgroup, both given as explicit elements."""
    subgroup = frozenset(subgroup)
    rep_of = {}
    for x in group_elements:
        rep_of[x] = min(add(x, s) for s in subgroup)
    cosets = sorted(set(rep_of.values()))

    def coset_add(u, v):
        return rep_of[add(u, v)]

    zero_rep = min(subgroup)  # the subgroup is the zero coset
    return structure_from_elements(cosets, coset_add, zero_rep)


# -- index-p subgroups by raw functional enumeration --------------------------


def index_p_subgroups(p, b):
    """Every index-p subgroup of (Z/p)^b x Z/p as a frozenset of flat tuples.

    Runs over all p^(b+1) - 1 nonzero functionals and dedupes kernels, so it
    is independent of any normalization convention.
    """
    full = list(itertools.product(range(p), repeat=b + 1))
    out = set()
    for psi in full:
        if all(x == 0 for x in psi):
            continue
        kernel = frozenset(v for v in full
                           if sum(a * t for a, t in zip(psi, v)) % p == 0)
        out.add(kernel)
    return out
