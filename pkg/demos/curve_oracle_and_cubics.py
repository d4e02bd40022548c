"""Finite-field curve checks next to the rational cubic-surface invariant.

Over a small prime field, the order-3 symmetry (x, y) -> (zeta*x, y) acting on
pairs of curve points can be enumerated outright: its fixed pairs, its matrix
on 3-torsion, and a full consistency report.  Over Q, the matching invariant
for a diagonal cubic surface a*x^3 + b*y^3 + c*z^3 = 0 is a two-element
quotient detected by one cube condition, with an elliptic curve attached.
"""

from fractions import Fraction

from cyclotoric import (
    DiagonalCubic,
    WeierstrassCurve,
    associated_jacobian,
    brauer_quotient,
    compare_with_prediction,
    fixed_points_of_zeta,
    zeta_matrix_on_three_torsion,
)


def main():
    # --- the finite-field side -------------------------------------------
    curve = WeierstrassCurve(7, 0, 1)
    pts = curve.points()
    print(f"curve y^2 = x^3 + 1 over F_7: {len(pts)} points")

    fixed = fixed_points_of_zeta(curve)
    print(f"pairs fixed by the order-3 twist: {len(fixed)}")
    for P, Q in fixed:
        left = "infinity" if P.is_infinity else f"({P.x}, {P.y})"
        right = "infinity" if Q.is_infinity else f"({Q.x}, {Q.y})"
        print(f"  ({left}, {right})")

    m = zeta_matrix_on_three_torsion()
    print(f"matrix of the twist on 3-torsion: {m.rows}")
    m3 = m * m * m
    print(f"its cube: {m3.rows} (the identity, as an order-3 action must be)")

    report = compare_with_prediction(curve)
    print("\nconsistency report over F_7:")
    print(f"  point count {report.point_count}, "
          f"rational fixed pairs {report.rational_fixed_pairs}, "
          f"geometric fixed pairs {report.geometric_fixed_pairs}")
    print(f"  predicted rank {report.predicted_rank}, "
          f"consistent={report.consistent}")
    if report.orbit_counts is not None:
        print(f"  orbit sizes: {dict(report.orbit_counts)}")

    # --- the rational side -----------------------------------------------
    print("\ndiagonal cubic surfaces a*x^3 + b*y^3 + c*z^3 = 0:")
    samples = [
        (1, 1, 1),    # 4abc = 4, not a cube
        (1, 1, 2),    # 4abc = 8 = 2^3
        (2, 3, 4),    # 4abc = 96, not a cube
        (1, 2, 8),    # 4abc = 64 = 4^3
        (Fraction(1, 2), 1, Fraction(1, 4)),  # 4abc = 1/2, not a cube
    ]
    for a, b, c in samples:
        surf = DiagonalCubic(Fraction(a), Fraction(b), Fraction(c))
        quot = brauer_quotient(surf)
        print(f"  (a, b, c) = ({a}, {b}, {c}):  quotient {quot.value}")

    surf = DiagonalCubic(Fraction(1), Fraction(1), Fraction(1))
    jac = associated_jacobian(surf)
    print(f"\njacobian attached to the Fermat cubic: {jac.equation()}")
    jac2 = associated_jacobian(DiagonalCubic(Fraction(1), Fraction(2), Fraction(3)))
    print(f"jacobian for (1, 2, 3):               {jac2.equation()}")


if __name__ == "__main__":
    main()
