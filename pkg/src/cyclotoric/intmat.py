"""Exact integer matrices and their normal forms.

Everything in this module runs on Python's arbitrary-precision integers; no
floating point is used anywhere.  The two normal forms are the workhorses of
the whole package:

* :func:`smith_normal_form` -- S = U*A*V with U, V unimodular and S diagonal
  with the divisibility chain d1 | d2 | ... .  Pivoting is deterministic
  (smallest nonzero absolute value, ties broken by lowest (row, col)), so the
  witnesses U and V are reproducible bit for bit.

* :func:`hermite_normal_form` -- the *column* Hermite form H = A*U.  For a
  nonsingular square input H is lower triangular with positive diagonal and,
  in every pivot row, the entries left of the pivot reduced into [0, pivot).
  Two integer matrices span the same column lattice iff their Hermite forms
  are equal, which is how lattices get a canonical representation.

>>> S, U, V = smith_normal_form(IntMatrix([[1, -1], [1, 2]]))
>>> S.rows
((1, 0), (0, 3))
>>> H, U = hermite_normal_form(IntMatrix([[2, 1], [0, 1]]))
>>> H.rows
((1, 0), (1, 2))
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended gcd: returns (g, x, y) with g = gcd(a, b) >= 0 and a*x + b*y = g."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        # Invariant: old_r == a*old_s + b*old_t and r == a*s + b*t.
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


class IntMatrix:
    """An immutable matrix of Python ints."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Iterable[int]]):
        tup = tuple(tuple(x for x in row) for row in rows)
        if tup:
            width = len(tup[0])
            for row in tup:
                if len(row) != width:
                    raise ValueError("ragged rows")
                for x in row:
                    if not isinstance(x, int) or isinstance(x, bool):
                        raise TypeError(f"matrix entries must be ints, got {x!r}")
        else:
            width = 0
        object.__setattr__(self, "rows", tup)
        object.__setattr__(self, "nrows", len(tup))
        object.__setattr__(self, "ncols", width)

    def __setattr__(self, name, value):
        raise AttributeError("IntMatrix is immutable")

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, m: int, n: int) -> "IntMatrix":
        return cls([[0] * n for _ in range(m)])

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence[int]]) -> "IntMatrix":
        if not cols:
            return cls([])
        m = len(cols[0])
        return cls([[col[i] for col in cols] for i in range(m)])

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.rows)

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self) -> "IntMatrix":
        return IntMatrix([[self.rows[i][j] for i in range(self.nrows)]
                          for j in range(self.ncols)])

    def __eq__(self, other) -> bool:
        return isinstance(other, IntMatrix) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __neg__(self) -> "IntMatrix":
        return IntMatrix([[-x for x in row] for row in self.rows])

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return IntMatrix([[a + b for a, b in zip(r1, r2)]
                          for r1, r2 in zip(self.rows, other.rows)])

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        return self + (-other)

    def __mul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch in product")
        bt = other.transpose().rows
        return IntMatrix([[sum(a * b for a, b in zip(row, col)) for col in bt]
                          for row in self.rows])

    def mul_vector(self, v: Sequence[int]) -> tuple[int, ...]:
        if len(v) != self.ncols:
            raise ValueError("length mismatch")
        return tuple(sum(a * b for a, b in zip(row, v)) for row in self.rows)

    def hstack(self, other: "IntMatrix") -> "IntMatrix":
        if self.nrows != other.nrows:
            raise ValueError("row count mismatch")
        return IntMatrix([r1 + r2 for r1, r2 in zip(self.rows, other.rows)])

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "IntMatrix":
        return IntMatrix([[self.rows[i][j] for j in cols] for i in rows])

    def det(self) -> int:
        """Determinant by the fraction-free Bareiss elimination."""
        if self.nrows != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        n = self.nrows
        if n == 0:
            return 1
        a = [list(row) for row in self.rows]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if a[k][k] == 0:
                for i in range(k + 1, n):
                    if a[i][k] != 0:
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
                a[i][k] = 0
            prev = a[k][k]
        return sign * a[n - 1][n - 1]

    def is_unimodular(self) -> bool:
        return self.nrows == self.ncols and self.det() in (1, -1)

    def rank(self) -> int:
        """Rank over the rationals (fraction-free elimination)."""
        a = [list(row) for row in self.rows]
        m, n = self.nrows, self.ncols
        r = 0
        for c in range(n):
            pivot = next((i for i in range(r, m) if a[i][c] != 0), None)
            if pivot is None:
                continue
            a[r], a[pivot] = a[pivot], a[r]
            for i in range(r + 1, m):
                if a[i][c]:
                    # Cross-multiplication keeps everything integral.
                    f1, f2 = a[r][c], a[i][c]
                    a[i] = [f1 * a[i][j] - f2 * a[r][j] for j in range(n)]
            r += 1
            if r == m:
                break
        return r

    def inverse_times(self, v: Sequence[Fraction | int]) -> tuple[Fraction, ...]:
        """Solve self * x = v exactly over the rationals (self must be nonsingular)."""
        n = self.nrows
        if self.ncols != n:
            raise ValueError("inverse_times needs a square matrix")
        a = [[Fraction(x) for x in row] + [Fraction(v[i])]
             for i, row in enumerate(self.rows)]
        for c in range(n):
            pivot = next((i for i in range(c, n) if a[i][c] != 0), None)
            if pivot is None:
                raise ValueError("singular matrix")
            a[c], a[pivot] = a[pivot], a[c]
            inv = 1 / a[c][c]
            a[c] = [x * inv for x in a[c]]
            for i in range(n):
                if i != c and a[i][c]:
                    f = a[i][c]
                    a[i] = [x - f * y for x, y in zip(a[i], a[c])]
        return tuple(a[i][n] for i in range(n))

    def __repr__(self) -> str:
        return f"IntMatrix({[list(r) for r in self.rows]})"


def _min_abs_entry(a: list[list[int]], t: int, m: int, n: int):
    """Position of the smallest nonzero |entry| of a[t:, t:], ties by (row, col)."""
    best = None
    best_val = None
    for i in range(t, m):
        row = a[i]
        for j in range(t, n):
            x = row[j]
            if x != 0:
                v = -x if x < 0 else x
                if best_val is None or v < best_val:
                    best, best_val = (i, j), v
    return best


def _smith_diagonalize(a: list[list[int]], m: int, n: int,
                       u: list[list[int]] | None = None,
                       v: list[list[int]] | None = None) -> None:
    """In-place Smith reduction of ``a``; transforms tracked when provided.

    The reduction always pivots on the entry of smallest nonzero absolute
    value (ties broken by lowest (row, col)), which makes the optional
    transform witnesses deterministic.
    """

    def swap_rows(i, k):
        a[i], a[k] = a[k], a[i]
        if u is not None:
            u[i], u[k] = u[k], u[i]

    def swap_cols(j, k):
        for row in a:
            row[j], row[k] = row[k], row[j]
        if v is not None:
            for row in v:
                row[j], row[k] = row[k], row[j]

    def add_row(dst, src, q):
        # row_dst += q * row_src
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        if u is not None:
            u[dst] = [x + q * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, q):
        for row in a:
            row[dst] += q * row[src]
        if v is not None:
            for row in v:
                row[dst] += q * row[src]

    t = 0
    while t < min(m, n):
        pos = _min_abs_entry(a, t, m, n)
        if pos is None:
            break
        while True:
            i, j = pos
            if i != t:
                swap_rows(t, i)
            if j != t:
                swap_cols(t, j)
            # One sweep of Euclidean reductions against the current pivot.
            for i in range(t + 1, m):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // a[t][t]))
            for j in range(t + 1, n):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // a[t][t]))
            pos = _min_abs_entry(a, t, m, n)
            if pos == (t, t):
                # Pivot divides nothing further in its row/column; enforce the
                # divisibility chain on the trailing block.
                bad = None
                for i in range(t + 1, m):
                    for j in range(t + 1, n):
                        if a[i][j] % a[t][t] != 0:
                            bad = i
                            break
                    if bad is not None:
                        break
                if bad is None:
                    break
                add_row(t, bad, 1)
                pos = _min_abs_entry(a, t, m, n)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            if u is not None:
                u[t] = [-x for x in u[t]]
        t += 1


def smith_normal_form(A: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Smith normal form: returns (S, U, V) with U*A*V = S.

    S is diagonal with nonnegative invariant factors in a divisibility chain
    d1 | d2 | ... ; U and V are unimodular witnesses, deterministic because
    the pivot rule is.  The unimodularity check makes this quadratic-plus in
    the matrix size; callers that only need the factors should use
    :func:`invariant_factors`, which skips the witnesses entirely.
    """
    m, n = A.nrows, A.ncols
    a = [list(row) for row in A.rows]
    u = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    v = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    _smith_diagonalize(a, m, n, u, v)
    S, U, V = IntMatrix(a), IntMatrix(u), IntMatrix(v)
    assert U.is_unimodular() and V.is_unimodular()
    assert (U * A) * V == S
    d = [S[i, i] for i in range(min(m, n))]
    for i in range(len(d) - 1):
        assert d[i] >= 0 and (d[i + 1] % d[i] == 0 if d[i] else d[i + 1] == 0)
    return S, U, V


def invariant_factors(A: IntMatrix) -> list[int]:
    """The nonzero diagonal of the Smith form (the invariant factor chain).

    Runs the same deterministic reduction as :func:`smith_normal_form` but
    skips the transform witnesses, so it stays usable on matrices with
    hundreds of rows.
    """
    m, n = A.nrows, A.ncols
    a = [list(row) for row in A.rows]
    _smith_diagonalize(a, m, n)
    d = [a[i][i] for i in range(min(m, n))]
    for i in range(len(d) - 1):
        assert d[i] >= 0 and (d[i + 1] % d[i] == 0 if d[i] else d[i + 1] == 0)
    return [x for x in d if x != 0]


def hermite_normal_form(A: IntMatrix) -> tuple[IntMatrix, IntMatrix]:
    """Column Hermite normal form: returns (H, U) with H = A*U, U unimodular.

    Convention: column echelon with pivots moving strictly down as columns
    advance, positive pivots, entries left of a pivot (in the pivot's row)
    reduced into [0, pivot), zero columns collected at the right end.  For a
    nonsingular square A this is the lower-triangular positive-diagonal form,
    and equality of Hermite forms is equality of column lattices.
    """
    m, n = A.nrows, A.ncols
    h = [list(row) for row in A.rows]
    u = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def swap_cols(j, k):
        if j == k:
            return
        for row in h:
            row[j], row[k] = row[k], row[j]
        for row in u:
            row[j], row[k] = row[k], row[j]

    def add_col(dst, src, q):
        for row in h:
            row[dst] += q * row[src]
        for row in u:
            row[dst] += q * row[src]

    def negate_col(j):
        for row in h:
            row[j] = -row[j]
        for row in u:
            row[j] = -row[j]

    c = 0
    for r in range(m):
        if c == n:
            break
        nz = [j for j in range(c, n) if h[r][j] != 0]
        if not nz:
            continue
        while True:
            j0 = min(nz, key=lambda j: (abs(h[r][j]), j))
            swap_cols(c, j0)
            for j in range(c + 1, n):
                if h[r][j]:
                    add_col(j, c, -(h[r][j] // h[r][c]))
            nz = [j for j in range(c, n) if h[r][j] != 0]
            if nz == [c]:
                break
        if h[r][c] < 0:
            negate_col(c)
        for j in range(c):
            q = h[r][j] // h[r][c]
            if q:
                add_col(j, c, -q)
        c += 1

    H, U = IntMatrix(h), IntMatrix(u)
    assert U.is_unimodular()
    assert A * U == H
    return H, U


def column_style_solve(H: IntMatrix, v: Sequence[int]):
    """Express v as an integer combination of the columns of a Hermite form H.

    Returns the coefficient tuple, or None when v is not in the column span.
    H must be in the column Hermite form produced by :func:`hermite_normal_form`.
    """
    m, n = H.nrows, H.ncols
    rem = list(v)
    coeff = [0] * n
    # Pivot row of each column: first nonzero entry going down.
    for j in range(n):
        piv = next((i for i in range(m) if H[i, j] != 0), None)
        if piv is None:
            continue
        if rem[piv] % H[piv, j] != 0:
            return None
        q = rem[piv] // H[piv, j]
        coeff[j] = q
        if q:
            for i in range(m):
                rem[i] -= q * H[i, j]
    if any(rem):
        return None
    return tuple(coeff)


def column_span_contains(A: IntMatrix, v: Sequence[int]) -> bool:
    """Is v an *integer* combination of the columns of A?"""
    H, _ = hermite_normal_form(A)
    return column_style_solve(H, v) is not None


def express_in_column_span(A: IntMatrix, v: Sequence[int]):
    """Integer coefficients x with A*x = v, or None.  (Any one solution.)"""
    H, U = hermite_normal_form(A)
    y = column_style_solve(H, v)
    if y is None:
        return None
    return U.mul_vector(y)


def integer_kernel(A: IntMatrix) -> list[tuple[int, ...]]:
    """A basis of the lattice {x integral : A*x = 0} (saturated by construction)."""
    S, _, V = smith_normal_form(A)
    rank = sum(1 for i in range(min(A.nrows, A.ncols)) if S[i, i] != 0)
    return [V.column(j) for j in range(rank, A.ncols)]


def kernel_mod_p(A: IntMatrix, p: int) -> list[tuple[int, ...]]:
    """Row-reduce A over F_p and return the canonical null-space basis.

    The basis is the usual one read off the reduced row echelon form: one
    vector per free column (ascending), with a 1 in the free coordinate.
    Entries are returned as ints in [0, p).

    >>> kernel_mod_p(IntMatrix([[1, 2], [1, 2]]), 3)
    [(1, 1)]
    """
    if p < 2:
        raise ValueError("p must be at least 2")
    m, n = A.nrows, A.ncols
    a = [[x % p for x in row] for row in A.rows]
    pivots: list[int] = []
    r = 0
    for c in range(n):
        pivot = next((i for i in range(r, m) if a[i][c] % p != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        inv = pow(a[r][c], -1, p)
        a[r] = [(x * inv) % p for x in a[r]]
        for i in range(m):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        vec = [0] * n
        vec[f] = 1
        for i, c in enumerate(pivots):
            vec[c] = (-a[i][f]) % p
        basis.append(tuple(vec))
    return basis


def nullity_mod_p(A: IntMatrix, p: int) -> int:
    return len(kernel_mod_p(A, p))
