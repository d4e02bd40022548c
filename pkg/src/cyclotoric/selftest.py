"""The embedded self-check suite behind `cyclotoric selftest`.

Seven named suites re-run the package's cornerstone computations — the
worked 1/3(1,2) resolution against its golden file, the dual graph, a
seeded Herbrand sweep, the (3,2) torsion audit, the curve oracle, the
diagonal-cubic pins, and a miniature smoothness sweep — and produce a
deterministic JSON report: same seed in, same bytes out.
"""

from __future__ import annotations

import random
from fractions import Fraction

from . import _data, jsonio
from .classgroup import class_group, dual_graph, exceptional_independence
from .cubic import (DiagonalCubic, associated_jacobian, brauer_quotient,
                    is_rational_cube, is_rational_cube_by_factoring)
from .curves import WeierstrassCurve, compare_with_prediction, zeta_apply
from .fan import hirzebruch_jung, resolution_pipeline
from .goursat import torsion_audit
from .intmat import IntMatrix
from .tate import CyclicModule, tate_h0, tate_h1

DEFAULT_SEED = 0
HERBRAND_SWEEP_SIZE = 100

# One check is a (name, ok, detail) triple; details must be deterministic
# strings so the final report is byte-stable.
Check = tuple[str, bool, str]


def _check(name: str, ok: bool, detail: str = "") -> Check:
    return (name, bool(ok), detail)


def _random_unimodular(rng: random.Random, k: int, steps: int = 8) -> IntMatrix:
    """A determinant-±1 matrix built from random elementary row operations."""
    m = IntMatrix.identity(k)
    rows = [list(r) for r in m.rows]
    for _ in range(steps):
        i, j = rng.randrange(k), rng.randrange(k)
        if i == j:
            continue
        c = rng.choice((-2, -1, 1, 2))
        rows[i] = [a + c * b for a, b in zip(rows[i], rows[j])]
    if rng.random() < 0.5:
        i = rng.randrange(k)
        rows[i] = [-a for a in rows[i]]
    out = IntMatrix(rows)
    assert out.is_unimodular()
    return out


def _unimodular_inverse(u: IntMatrix) -> IntMatrix:
    k = u.nrows
    cols = []
    for j in range(k):
        x = u.inverse_times([1 if i == j else 0 for i in range(k)])
        assert all(f.denominator == 1 for f in x)
        cols.append([int(f) for f in x])
    return IntMatrix.from_columns(cols)


def random_finite_cyclic_module(rng: random.Random, p: int | None = None) -> CyclicModule:
    """A random finite module with a valid order-p action, up to isomorphism twist.

    Blocks are drawn from three families that are easy to make correct —
    trivial actions, coordinate shifts on (Z/d)^p, and the companion matrix
    of 1 + x + ... + x^(p-1) on (Z/d)^(p-1) — then direct-summed and
    conjugated by a random unimodular matrix, which changes the presentation
    but not the module.
    """
    if p is None:
        p = rng.choice((3, 5))
    blocks: list[tuple[IntMatrix, list[int]]] = []
    for _ in range(rng.randrange(1, 3)):
        d = rng.choice((2, 3, 4, 5, 8, 9))
        kind = rng.randrange(3)
        if kind == 0:
            size = rng.randrange(1, 3)
            blocks.append((IntMatrix.identity(size), [d] * size))
        elif kind == 1:
            shift = IntMatrix([[1 if j == (i + 1) % p else 0 for j in range(p)]
                               for i in range(p)])
            blocks.append((shift, [d] * p))
        else:
            size = p - 1
            comp = [[0] * size for _ in range(size)]
            for i in range(1, size):
                comp[i][i - 1] = 1
            for i in range(size):
                comp[i][size - 1] = -1
            blocks.append((IntMatrix(comp), [d] * size))
    k = sum(len(ds) for _, ds in blocks)
    action_rows = [[0] * k for _ in range(k)]
    diag: list[int] = []
    offset = 0
    for mat, ds in blocks:
        for i in range(mat.nrows):
            for j in range(mat.ncols):
                action_rows[offset + i][offset + j] = mat[i, j]
        diag.extend(ds)
        offset += len(ds)
    action = IntMatrix(action_rows)
    relations = IntMatrix([[diag[i] if i == j else 0 for j in range(k)]
                           for i in range(k)])
    u = _random_unimodular(rng, k)
    return CyclicModule(relations=u * relations,
                        action=u * action * _unimodular_inverse(u),
                        p=p)


# -- suites ----------------------------------------------------------------


def _suite_example_exE() -> list[Check]:
    checks = []
    report = resolution_pipeline(3, (1, 2))
    doc = jsonio.resolution_report_to_doc(report)
    exc_q = {report.quotient_fan.rays[i] for i in report.exceptional_quotient}
    want_q = {(Fraction(1, 3), Fraction(2, 3)), (Fraction(2, 3), Fraction(1, 3))}
    checks.append(_check("quotient-exceptional-rays", exc_q == want_q,
                         f"got {sorted(str(r) for r in exc_q)}"))
    lifted = {tuple(int(x) for x in report.lifted_fan.rays[i])
              for i in report.exceptional_quotient}
    checks.append(_check("lifted-exceptional-rays", lifted == {(1, 2), (2, 1)},
                         f"got {sorted(lifted)}"))
    cover = {tuple(int(x) for x in r) for r in report.cover_fan.rays}
    want_cover = {(1, 0), (2, 1), (1, 1), (1, 2), (0, 1)}
    checks.append(_check("cover-fan-rays", cover == want_cover,
                         f"got {sorted(cover)}"))
    try:
        golden = jsonio.load_json(str(_data.golden_path("resolution_3_1_2.json")))
        same = jsonio.dumps_stable(doc) == jsonio.dumps_stable(golden)
        checks.append(_check("golden-resolution-report", same,
                             "" if same else "report differs from golden file"))
    except Exception as exc:
        checks.append(_check("golden-resolution-report", False,
                             f"golden file unusable: {exc}"))
    return checks


def _suite_dual_graph() -> list[Check]:
    checks = []
    report = resolution_pipeline(3, (1, 2))
    graph = dual_graph(report.quotient_fan, report.exceptional_quotient)
    checks.append(_check("two-vertices", len(graph.vertices) == 2,
                         f"got {len(graph.vertices)}"))
    checks.append(_check("one-edge", len(graph.edges) == 1,
                         f"got {len(graph.edges)}"))
    checks.append(_check("connected", graph.components == 1,
                         f"got {graph.components}"))
    try:
        golden = jsonio.load_json(str(_data.golden_path("dualgraph_3_1_2.json")))
        doc = jsonio.dual_graph_to_doc(graph)
        same = jsonio.dumps_stable(doc) == jsonio.dumps_stable(golden)
        checks.append(_check("golden-dual-graph", same,
                             "" if same else "graph differs from golden file"))
    except Exception as exc:
        checks.append(_check("golden-dual-graph", False,
                             f"golden file unusable: {exc}"))
    return checks


def _suite_herbrand(seed: int) -> list[Check]:
    rng = random.Random(seed)
    failures = []
    for i in range(HERBRAND_SWEEP_SIZE):
        mod = random_finite_cyclic_module(rng)
        h0, h1 = tate_h0(mod), tate_h1(mod)
        if h0.order != h1.order:
            failures.append(f"module #{i}: |H0|={h0.order} |H1|={h1.order}")
    return [_check("herbrand-equality", not failures,
                   failures[0] if failures else
                   f"{HERBRAND_SWEEP_SIZE} modules, all |H0| = |H1|")]


def _suite_goursat_audit() -> list[Check]:
    checks = []
    report = torsion_audit(3, 2)
    checks.append(_check("torsion-order-27", report.torsion.order == 27,
                         f"got {report.torsion.order}"))
    checks.append(_check("case-counts-1-4-8",
                         report.counts == {"KERNEL_T": 1, "SPLIT": 4, "NONSPLIT": 8},
                         f"got {report.counts}"))
    checks.append(_check("certified", report.verdict == "TORSION_FREE_CERTIFIED",
                         report.verdict))
    try:
        golden = jsonio.load_json(str(_data.golden_path("audit_3_2.json")))
        doc = jsonio.audit_to_doc(report)
        same = jsonio.dumps_stable(doc) == jsonio.dumps_stable(golden)
        checks.append(_check("golden-audit", same,
                             "" if same else "audit differs from golden file"))
    except Exception as exc:
        checks.append(_check("golden-audit", False, f"golden file unusable: {exc}"))
    return checks


def _suite_oracle_curves() -> list[Check]:
    checks = []
    expected = {(5, 0, 1): (6, 3), (7, 0, 1): (12, 3), (7, 0, 2): (9, 9)}
    for (q, a4, a6), (n_points, n_fixed) in sorted(expected.items()):
        curve = WeierstrassCurve(q, a4, a6)
        rep = compare_with_prediction(curve)
        label = f"q{q}-a4_{a4}-a6_{a6}"
        checks.append(_check(f"{label}-order", rep.point_count == n_points,
                             f"got {rep.point_count}"))
        checks.append(_check(f"{label}-fixed", rep.rational_fixed_pairs == n_fixed,
                             f"got {rep.rational_fixed_pairs}"))
        checks.append(_check(f"{label}-consistent", rep.consistent, ""))
    curve = WeierstrassCurve(5, 0, 1)
    pts = curve.points()
    ok = all(
        zeta_apply(curve, zeta_apply(curve, zeta_apply(curve, (P, Q)))) == (P, Q)
        for P in pts for Q in pts)
    checks.append(_check("zeta-cubed-identity", ok, ""))
    return checks


def _suite_brauer_cubic() -> list[Check]:
    checks = []
    one = Fraction(1)
    checks.append(_check(
        "quotient-112",
        brauer_quotient(DiagonalCubic(one, one, Fraction(2))).value == "Z/2", ""))
    checks.append(_check(
        "quotient-111",
        brauer_quotient(DiagonalCubic(one, one, one)).value == "0", ""))
    jac = associated_jacobian(DiagonalCubic(one, one, one))
    checks.append(_check("jacobian-111", jac.equation() == "y^2 = x^3 - 144",
                         jac.equation()))
    cubes = [Fraction(8), Fraction(-27, 8), Fraction(0)]
    noncubes = [Fraction(4), Fraction(2), Fraction(9, 2)]
    ok = (all(is_rational_cube(x) for x in cubes)
          and not any(is_rational_cube(x) for x in noncubes))
    checks.append(_check("cube-test-pins", ok, ""))
    agree = all(is_rational_cube(x) == is_rational_cube_by_factoring(x)
                for x in cubes + noncubes)
    checks.append(_check("factorization-route-agrees", agree, ""))
    return checks


def _suite_smoothness_mini() -> list[Check]:
    bad = []
    for p in (2, 3, 5, 7, 11, 13):
        for a in range(1, p):
            report = resolution_pipeline(p, (1, a))
            if not (report.quotient_fan.is_smooth() and report.cover_fan.is_smooth()):
                bad.append(f"1/{p}(1,{a}) not smooth")
                continue
            hj = {tuple(v) for v in hirzebruch_jung(p, a)}
            got = {tuple(report.quotient_fan.rays[i])
                   for i in report.exceptional_quotient}
            if hj != got:
                bad.append(f"1/{p}(1,{a}) HJ mismatch")
            cert = exceptional_independence(report.cover_fan, report.exceptional_cover)
            if not cert.independent:
                bad.append(f"1/{p}(1,{a}) exceptional classes dependent")
    return [_check("smoothness-sweep-p13", not bad,
                   bad[0] if bad else "all pipelines smooth, HJ-consistent, independent")]


SUITES = {
    "example-exE": lambda seed: _suite_example_exE(),
    "dual-graph": lambda seed: _suite_dual_graph(),
    "herbrand": _suite_herbrand,
    "goursat-audit": lambda seed: _suite_goursat_audit(),
    "oracle-curves": lambda seed: _suite_oracle_curves(),
    "brauer-cubic": lambda seed: _suite_brauer_cubic(),
    "smoothness-mini": lambda seed: _suite_smoothness_mini(),
}


def run_selftest(only: str | None = None, seed: int = DEFAULT_SEED) -> dict:
    """Run the named suite (or all of them) and return the report document."""
    if only is not None and only not in SUITES:
        raise ValueError(
            f"unknown suite {only!r}; available: {', '.join(sorted(SUITES))}")
    names = [only] if only else sorted(SUITES)
    suites_doc = []
    total_pass = total_fail = 0
    for name in names:
        try:
            checks = SUITES[name](seed)
        except Exception as exc:  # a crashed suite is a failed suite
            checks = [_check("suite-crashed", False, f"{type(exc).__name__}: {exc}")]
        passed = sum(1 for _, ok, _ in checks if ok)
        failed = len(checks) - passed
        total_pass += passed
        total_fail += failed
        suites_doc.append({
            "name": name,
            "passed": passed,
            "failed": failed,
            "checks": [{"name": n, "ok": ok, "detail": d} for n, ok, d in checks],
        })
    return {
        "seed": seed,
        "suites": suites_doc,
        "passed": total_pass,
        "failed": total_fail,
        "ok": total_fail == 0,
    }
