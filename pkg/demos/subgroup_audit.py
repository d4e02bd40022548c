"""Classify every index-p subgroup of T x Z/p and audit the bookkeeping.

Subgroups of index p in (Z/p)^b x Z/p are cut out by nonzero functionals up
to scalar; each one lands in exactly one of three classes (contains the extra
factor, splits off it, or meets it diagonally), and each carries ramification
data read off from the functional.  The audit recomputes every count two ways
and issues a verdict only if they agree.
"""

from cyclotoric import subgroup_elements, torsion_audit


def run(p, b, show_cases):
    report = torsion_audit(p, b)
    print(f"=== audit of T x Z/{p} with T = (Z/{p})^{b} " + "=" * 20)
    print(f"torsion group: {report.torsion}  (order {report.torsion.order})")
    print(f"index-{p} subgroups found: {report.subgroup_count}")
    for tag, n in sorted(report.counts.items()):
        print(f"  {tag:>9}: {n}")
    print(f"verdict: {report.verdict}")

    if show_cases:
        print("\nper-subgroup detail:")
        header = f"  {'functional':>22}  {'class':>9}  {'ramification':>22}  order"
        print(header)
        for case in report.cases:
            f = case.functional
            label = f"(phi={f.phi}, c={f.c})"
            print(f"  {label:>22}  {case.tag.value:>9}  "
                  f"{case.ramification.value:>22}  {case.ramification_order:>5}")

        # Spot-check one subgroup by listing its elements directly.
        case = report.cases[0]
        elems = subgroup_elements(case.functional, b)
        print(f"\nfirst subgroup has {len(elems)} elements "
              f"(index {p**(b + 1) // len(elems)} in a group of order {p**(b + 1)})")
    print()


def main():
    # The fully worked small case: 13 subgroups in three classes.
    run(3, 2, show_cases=True)

    # A larger torsion part and a different prime, counts only.
    run(3, 3, show_cases=False)
    run(5, 2, show_cases=False)


if __name__ == "__main__":
    main()
