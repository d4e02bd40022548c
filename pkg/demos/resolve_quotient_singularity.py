"""Walk the two-stage resolution of a cyclic quotient cone, start to finish.

The first stage resolves the positive orthant in the quotient lattice
Z^2 + Z*(1/p, a/p); the second lifts that fan back to the standard lattice
(where the same rays need not be primitive any more) and resolves again.
Both stages are compared against the negative-regular continued fraction,
which predicts the exceptional chain of the quotient stage in closed form.
"""

from fractions import Fraction

from cyclotoric import hirzebruch_jung, resolution_pipeline


def show(v):
    return "(" + ", ".join(str(x) for x in v) + ")"


def describe(p, a):
    print(f"=== 1/{p}({1}, {a}) " + "=" * 40)
    rep = resolution_pipeline(p, (1, a))

    quotient = rep.quotient_fan
    print(f"quotient stage: {len(quotient.rays)} rays, "
          f"{len(quotient.max_cones)} maximal cones, smooth={quotient.is_smooth()}")
    exceptional = [quotient.rays[i] for i in rep.exceptional_quotient]
    print("  exceptional rays (interior of the orthant):")
    for r in exceptional:
        print(f"    {show(r)}")

    chain = hirzebruch_jung(p, a)
    print(f"  continued-fraction chain ({len(chain)} rays) agrees:",
          set(chain) == set(exceptional))

    lifted = rep.lifted_fan
    relabeled = [lifted.rays[i] for i in rep.exceptional_quotient]
    print("  the same rays re-primitivized in Z^2:",
          ", ".join(show(tuple(int(x) for x in r)) for r in relabeled))
    print(f"  lifted fan smooth before the second pass: {lifted.is_smooth()}")

    cover = rep.cover_fan
    print(f"cover stage:    {len(cover.rays)} rays, "
          f"{len(cover.max_cones)} maximal cones, smooth={cover.is_smooth()}")
    print(f"  exceptional over Z^2: {len(rep.exceptional_cover)} rays")
    print()


def main():
    # The worked 1/3(1,2) example: two exceptional rays downstairs, and the
    # final fan over Z^2 uses exactly five rays.
    describe(3, 2)
    rep = resolution_pipeline(3, (1, 2))
    assert {rep.quotient_fan.rays[i] for i in rep.exceptional_quotient} == {
        (Fraction(1, 3), Fraction(2, 3)), (Fraction(2, 3), Fraction(1, 3))}
    assert set(rep.cover_fan.rays) == {(1, 0), (2, 1), (1, 1), (1, 2), (0, 1)}

    # A longer chain, and a three-dimensional quotient for contrast.
    describe(11, 7)

    rep3 = resolution_pipeline(3, (1, 1, 2))
    print(f"=== 1/3(1, 1, 2) in dimension 3 " + "=" * 28)
    print(f"quotient stage: {len(rep3.quotient_fan.rays)} rays, "
          f"{len(rep3.quotient_fan.max_cones)} maximal cones, "
          f"smooth={rep3.quotient_fan.is_smooth()}")
    print(f"cover stage:    {len(rep3.cover_fan.rays)} rays, "
          f"{len(rep3.cover_fan.max_cones)} maximal cones, "
          f"smooth={rep3.cover_fan.is_smooth()}")


if __name__ == "__main__":
    main()
