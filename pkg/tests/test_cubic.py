"""Rational cube tests, bounded factorization, and the diagonal-cubic invariants."""

import random
from fractions import Fraction

import pytest

from cyclotoric.cubic import (
    BrauerQuotient,
    DiagonalCubic,
    FactorizationBoundExceeded,
    associated_jacobian,
    brauer_quotient,
    factor_bounded,
    icbrt,
    is_rational_cube,
    is_rational_cube_by_factoring,
)


def test_icbrt_edges():
    assert icbrt(27) == 3
    assert icbrt(26) == 2
    assert icbrt(0) == 0
    assert icbrt(1) == 1
    assert icbrt(7) == 1
    assert icbrt(8) == 2
    assert icbrt(10 ** 30) == 10 ** 10
    assert icbrt(10 ** 30 - 1) == 10 ** 10 - 1
    with pytest.raises(ValueError):
        icbrt(-1)


def test_icbrt_is_exact_floor_on_a_sweep():
    rng = random.Random(1)
    for _ in range(500):
        n = rng.randrange(0, 10 ** 18)
        r = icbrt(n)
        assert r ** 3 <= n < (r + 1) ** 3


def test_rational_cube_pinned():
    assert is_rational_cube(Fraction(8))
    assert is_rational_cube(Fraction(-27, 8))
    assert is_rational_cube(Fraction(0))
    assert is_rational_cube(Fraction(1))
    assert not is_rational_cube(Fraction(4))
    assert not is_rational_cube(Fraction(2))
    assert not is_rational_cube(Fraction(8, 3))
    assert not is_rational_cube(Fraction(-9))


def test_random_cubes_are_recognized():
    rng = random.Random(2)
    for _ in range(10 ** 4):
        num = rng.randrange(-200, 201)
        den = rng.randrange(1, 200)
        s = Fraction(num, den)
        assert is_rational_cube(s ** 3)


def test_near_cubes_are_rejected():
    rng = random.Random(3)
    for _ in range(2000):
        n = rng.randrange(2, 10 ** 9)
        cube = n ** 3
        assert is_rational_cube(Fraction(cube))
        assert not is_rational_cube(Fraction(cube + 1)) or _is_cube_int(cube + 1)
        assert not is_rational_cube(Fraction(cube - 1)) or _is_cube_int(cube - 1)


def _is_cube_int(m):
    r = icbrt(abs(m))
    return r ** 3 == abs(m)


def test_cube_test_routes_agree_on_factorable_range():
    rng = random.Random(4)
    for _ in range(300):
        num = rng.randrange(-5000, 5001) or 1
        den = rng.randrange(1, 5000)
        x = Fraction(num, den)
        assert is_rational_cube(x) == is_rational_cube_by_factoring(x), x
    for s in range(-20, 21):
        if s == 0:
            continue
        x = Fraction(s, 7) ** 3
        assert is_rational_cube_by_factoring(x)


def test_factor_bounded_exact_values():
    assert factor_bounded(360) == {2: 3, 3: 2, 5: 1}
    assert factor_bounded(-7) == {7: 1}
    assert factor_bounded(1) == {}
    # a semiprime whose factors both exceed the trial-division limit,
    # so rho must do the splitting
    p, q = 1000003, 1000033
    assert factor_bounded(p * q) == {p: 1, q: 1}
    with pytest.raises(ValueError):
        factor_bounded(0)


def test_factor_bounded_reconstructs_input():
    rng = random.Random(5)
    for _ in range(200):
        n = rng.randrange(2, 10 ** 12)
        fac = factor_bounded(n)
        prod = 1
        for prime, e in fac.items():
            prod *= prime ** e
        assert prod == n


def test_factorization_cap_raises_instead_of_lying():
    p, q = 1000003, 1000033
    with pytest.raises(FactorizationBoundExceeded):
        factor_bounded(p * q, max_iterations=3)
    with pytest.raises(FactorizationBoundExceeded):
        is_rational_cube_by_factoring(Fraction(p * q), max_iterations=3)


def test_brauer_quotient_pinned():
    assert brauer_quotient(DiagonalCubic(1, 1, 2)) is BrauerQuotient.Z_MOD_2
    assert brauer_quotient(DiagonalCubic(1, 1, 1)) is BrauerQuotient.TRIVIAL
    assert brauer_quotient(DiagonalCubic(2, 9, Fraction(3, 2))) is BrauerQuotient.TRIVIAL
    assert BrauerQuotient.Z_MOD_2.value == "Z/2"
    assert BrauerQuotient.TRIVIAL.value == "0"


def test_brauer_quotient_is_permutation_invariant():
    rng = random.Random(6)
    for _ in range(1000):
        coeffs = [Fraction(rng.randrange(-30, 31) or 1, rng.randrange(1, 30))
                  for _ in range(3)]
        results = set()
        for perm in ((0, 1, 2), (1, 2, 0), (2, 0, 1), (0, 2, 1), (1, 0, 2), (2, 1, 0)):
            s = DiagonalCubic(coeffs[perm[0]], coeffs[perm[1]], coeffs[perm[2]])
            results.add(brauer_quotient(s))
        assert len(results) == 1


def test_brauer_quotient_is_cube_scaling_invariant():
    # replacing a coefficient by lambda^3 * a never changes the quotient
    rng = random.Random(7)
    for _ in range(1000):
        a = Fraction(rng.randrange(-20, 21) or 1, rng.randrange(1, 20))
        b = Fraction(rng.randrange(-20, 21) or 1, rng.randrange(1, 20))
        c = Fraction(rng.randrange(-20, 21) or 1, rng.randrange(1, 20))
        lam = Fraction(rng.randrange(1, 10), rng.randrange(1, 10))
        base = brauer_quotient(DiagonalCubic(a, b, c))
        scaled = brauer_quotient(DiagonalCubic(a * lam ** 3, b, c))
        assert base is scaled


def test_diagonal_cubic_validation_and_coercion():
    with pytest.raises(ValueError):
        DiagonalCubic(0, 1, 1)
    with pytest.raises(ValueError):
        DiagonalCubic(1, Fraction(0), 1)
    s = DiagonalCubic(1, 2, Fraction(1, 3))
    assert s.a == Fraction(1) and isinstance(s.a, Fraction)
    assert s.c == Fraction(1, 3)


def test_jacobian_pinned():
    j = associated_jacobian(DiagonalCubic(1, 1, 1))
    assert j.a4 == 0
    assert j.a6 == Fraction(-144)
    assert j.equation() == "y^2 = x^3 - 144"
    j2 = associated_jacobian(DiagonalCubic(1, 1, 2))
    assert j2.a6 == Fraction(-576)
    assert j2.equation() == "y^2 = x^3 - 576"


def test_jacobian_depends_only_on_abc_squared():
    rng = random.Random(8)
    for _ in range(200):
        a = Fraction(rng.randrange(-20, 21) or 1, rng.randrange(1, 20))
        b = Fraction(rng.randrange(-20, 21) or 1, rng.randrange(1, 20))
        c = Fraction(rng.randrange(-20, 21) or 1, rng.randrange(1, 20))
        j = associated_jacobian(DiagonalCubic(a, b, c))
        assert j.a6 == -144 * (a * b * c) ** 2
        # sign of the product never matters
        j_neg = associated_jacobian(DiagonalCubic(-a, b, c))
        assert j_neg.a6 == j.a6


def test_jacobian_equation_formatting():
    from cyclotoric.cubic import JacobianCubic
    assert JacobianCubic(Fraction(0), Fraction(0)).equation() == "y^2 = x^3"
    assert JacobianCubic(Fraction(1), Fraction(0)).equation() == "y^2 = x^3 + x"
    assert JacobianCubic(Fraction(-2), Fraction(5)).equation() == "y^2 = x^3 - 2*x + 5"
    assert JacobianCubic(Fraction(1, 2), Fraction(-1, 3)).equation() == (
        "y^2 = x^3 + 1/2*x - 1/3")
