"""Diagonal cubic surfaces ax^3 + by^3 + cz^3 and their Brauer quotient.

The quotient is Z/2 exactly when 4abc is a rational cube, so the heart of
the module is a *total* rational-cube test.  A rational number n/d in lowest
terms is a cube iff n and d both are, and integer cubeness is decided by an
exact Newton cube root — no factorization needed, so the test never stalls
on adversarial inputs.

A bounded factorization routine is kept alongside (trial division + Brent
rho): the cube test can be re-derived from exponent vectors, which gives an
independent route used by cross-checks and the audit tooling.  Rho runs
under a hard iteration cap and raises ``FactorizationBoundExceeded`` when
the cap is spent — a reported error, never a wrong answer.  The cap is
overridable via the CYCLOTORIC_FACTOR_BOUND environment variable.

Each surface also carries its associated jacobian cubic y^2 = x^3 - 144(abc)^2.
"""

from __future__ import annotations

import enum
import os
import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .lattice import is_prime

_TRIAL_LIMIT = 10 ** 6
_DEFAULT_FACTOR_BOUND = 1 << 20


class FactorizationBoundExceeded(Exception):
    """Raised when bounded factorization gives up instead of running forever."""


def _factor_bound() -> int:
    raw = os.environ.get("CYCLOTORIC_FACTOR_BOUND")
    if raw is None:
        return _DEFAULT_FACTOR_BOUND
    try:
        val = int(raw)
    except ValueError as exc:
        raise ValueError(f"CYCLOTORIC_FACTOR_BOUND must be an integer, got {raw!r}") from exc
    if val < 1:
        raise ValueError(f"CYCLOTORIC_FACTOR_BOUND must be positive, got {val}")
    return val


class _IterationBudget:
    """A shared countdown of rho iterations across one factorization call."""

    __slots__ = ("remaining",)

    def __init__(self, total: int):
        self.remaining = total

    def spend(self, amount: int = 1):
        self.remaining -= amount
        if self.remaining < 0:
            raise FactorizationBoundExceeded(
                "rho iteration cap exhausted; raise CYCLOTORIC_FACTOR_BOUND to retry")


def _brent_rho(n: int, budget: _IterationBudget) -> int:
    """A nontrivial factor of composite odd n, via Brent's cycle-finding rho.

    Deterministic (the RNG is seeded from n itself); every squaring mod n
    spends one unit of the shared iteration budget.
    """
    rng = random.Random(n)
    while True:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            budget.spend(r)
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                steps = min(m, r - k)
                budget.spend(steps)
                for _ in range(steps):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                budget.spend()
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g


def factor_bounded(n: int, max_iterations: int | None = None) -> dict[int, int]:
    """Prime factorization of |n| as {prime: exponent}, or raise past the cap.

    Trial division reaches 10^6 unconditionally; whatever composite survives
    is attacked by rho under a shared iteration budget (default 2^20, or the
    CYCLOTORIC_FACTOR_BOUND environment variable).  Spending the budget
    raises FactorizationBoundExceeded — the routine never returns a partial
    or wrong factorization.

    >>> factor_bounded(360)
    {2: 3, 3: 2, 5: 1}
    >>> factor_bounded(-7)
    {7: 1}
    """
    if n == 0:
        raise ValueError("0 has no prime factorization")
    if max_iterations is None:
        max_iterations = _factor_bound()
    budget = _IterationBudget(max_iterations)
    n = abs(n)
    out: dict[int, int] = {}
    for p in (2, 3, 5):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    d = 7
    wheel = (4, 2, 4, 2, 4, 6, 2, 6)
    i = 0
    while d * d <= n and d <= _TRIAL_LIMIT:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += wheel[i]
        i = (i + 1) % 8
    # What's left is 1, a prime, or a product of primes all > 10^6 (hence odd).
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        f = _brent_rho(m, budget)
        stack.append(f)
        stack.append(m // f)
    return dict(sorted(out.items()))


def icbrt(n: int) -> int:
    """Floor of the real cube root of n >= 0, by integer Newton iteration.

    >>> icbrt(27), icbrt(26), icbrt(0)
    (3, 2, 0)
    """
    if n < 0:
        raise ValueError("icbrt is defined for nonnegative integers")
    if n < 8:
        return 0 if n == 0 else 1
    x = 1 << ((n.bit_length() + 2) // 3)
    while True:
        y = (2 * x + n // (x * x)) // 3
        if y >= x:
            break
        x = y
    assert x ** 3 <= n < (x + 1) ** 3
    return x


def _is_integer_cube(n: int) -> bool:
    if n < 0:
        return _is_integer_cube(-n)
    r = icbrt(n)
    return r ** 3 == n


def is_rational_cube(x: Fraction) -> bool:
    """Whether x = (s)^3 for some rational s.  Total: never raises, never stalls.

    >>> is_rational_cube(Fraction(8)), is_rational_cube(Fraction(-27, 8))
    (True, True)
    >>> is_rational_cube(Fraction(4))
    False
    """
    x = Fraction(x)
    if x == 0:
        return True
    return _is_integer_cube(x.numerator) and _is_integer_cube(x.denominator)


def is_rational_cube_by_factoring(x: Fraction, max_iterations: int | None = None) -> bool:
    """The same predicate, decided from exponent vectors of a factorization.

    Independent of the cube-root route; raises FactorizationBoundExceeded on
    inputs whose factorization is out of reach.
    """
    x = Fraction(x)
    if x == 0:
        return True
    if x < 0:
        x = -x  # (-s)^3 = -s^3: sign never obstructs cubeness
    num = factor_bounded(x.numerator, max_iterations) if x.numerator != 1 else {}
    den = factor_bounded(x.denominator, max_iterations) if x.denominator != 1 else {}
    exps: dict[int, int] = dict(num)
    for p, e in den.items():
        exps[p] = exps.get(p, 0) - e
    return all(e % 3 == 0 for e in exps.values())


class BrauerQuotient(enum.Enum):
    Z_MOD_2 = "Z/2"
    TRIVIAL = "0"


@dataclass(frozen=True)
class DiagonalCubic:
    """The surface a*x^3 + b*y^3 + c*z^3 = 0 with nonzero rational coefficients."""

    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self):
        for name in ("a", "b", "c"):
            val = getattr(self, name)
            if not isinstance(val, Fraction):
                object.__setattr__(self, name, Fraction(val))
        if self.a == 0 or self.b == 0 or self.c == 0:
            raise ValueError("all three coefficients must be nonzero")


def brauer_quotient(surface: DiagonalCubic) -> BrauerQuotient:
    """Z/2 exactly when 4abc is a rational cube; otherwise trivial.

    >>> brauer_quotient(DiagonalCubic(Fraction(1), Fraction(1), Fraction(2))).value
    'Z/2'
    >>> brauer_quotient(DiagonalCubic(Fraction(1), Fraction(1), Fraction(1))).value
    '0'
    """
    if is_rational_cube(4 * surface.a * surface.b * surface.c):
        return BrauerQuotient.Z_MOD_2
    return BrauerQuotient.TRIVIAL


@dataclass(frozen=True)
class JacobianCubic:
    """The curve y^2 = x^3 + a4*x + a6 attached to a diagonal cubic surface."""

    a4: Fraction
    a6: Fraction

    def equation(self) -> str:
        def term(coef: Fraction, sym: str) -> str:
            if coef == 0:
                return ""
            sign = " - " if coef < 0 else " + "
            mag = abs(coef)
            body = sym if mag == 1 and sym else (f"{mag}*{sym}" if sym else f"{mag}")
            return sign + body

        return "y^2 = x^3" + term(self.a4, "x") + term(self.a6, "")


def associated_jacobian(surface: DiagonalCubic) -> JacobianCubic:
    """y^2 = x^3 - 144*(abc)^2 for the surface with coefficients a, b, c.

    >>> associated_jacobian(DiagonalCubic(Fraction(1), Fraction(1), Fraction(1))).a6
    Fraction(-144, 1)
    >>> associated_jacobian(DiagonalCubic(Fraction(1), Fraction(1), Fraction(2))).equation()
    'y^2 = x^3 - 576'
    """
    abc = surface.a * surface.b * surface.c
    return JacobianCubic(a4=Fraction(0), a6=-144 * abc * abc)
