"""Acceptance suite: the nine go/no-go checks for the whole package.

Each criterion is one test, so ``pytest -v`` prints exactly one PASSED or
FAILED line per criterion; each test also prints an ``ACCEPTANCE n PASS``
summary line for logs that capture stdout.  Criteria 3 and 4 share the same
sweep of resolution pipelines through a module-scoped fixture, and criterion
3's wall-clock budget covers the pipeline construction time.
"""

import math
import os
import random
import subprocess
import sys
import time
from fractions import Fraction

import pytest

import oracles
from test_tate import _diag_module, _fixture_battery
from cyclotoric.classgroup import dual_graph, exceptional_independence
from cyclotoric.cubic import (BrauerQuotient, DiagonalCubic, associated_jacobian,
                              brauer_quotient)
from cyclotoric.curves import (INFINITY, WeierstrassCurve, fixed_points_of_zeta,
                               zeta_apply, zeta_matrix_on_three_torsion)
from cyclotoric.fan import hirzebruch_jung, is_smooth_cone, resolution_pipeline
from cyclotoric.goursat import subgroup_elements, torsion_audit
from cyclotoric.intmat import IntMatrix
from cyclotoric.selftest import random_finite_cyclic_module
from cyclotoric.tate import (CyclicModule, FiniteAbelianGroup, TRIVIAL_GROUP,
                             fixed_subgroup_rank, tate_h0, tate_h1)

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))

PRIMES_TO_97 = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47,
                53, 59, 61, 67, 71, 73, 79, 83, 89, 97)

SWEEP_BUDGET_SECONDS = 60.0


@pytest.fixture(scope="module")
def pipeline_sweep():
    """Every resolution pipeline for primes p <= 97, with its wall-clock cost.

    Built once and shared: criterion 3 checks smoothness and the continued
    fraction oracle on these outputs (and owns the time budget), criterion 4
    checks independence certificates on the same outputs.
    """
    start = time.monotonic()
    reports = {}
    for p in PRIMES_TO_97:
        for a in range(1, p):
            if math.gcd(a, p) != 1:
                continue
            reports[(p, a)] = resolution_pipeline(p, (1, a))
    elapsed = time.monotonic() - start
    return reports, elapsed


def test_criterion_1_golden_resolution_example():
    """resolution_pipeline(3,(1,2)) reproduces the pinned two-stage example."""
    start = time.monotonic()
    rep = resolution_pipeline(3, (1, 2))
    elapsed = time.monotonic() - start

    exc_quotient = {rep.quotient_fan.rays[i] for i in rep.exceptional_quotient}
    assert exc_quotient == {
        (Fraction(1, 3), Fraction(2, 3)),
        (Fraction(2, 3), Fraction(1, 3)),
    }
    lifted = {rep.lifted_fan.rays[i] for i in rep.exceptional_quotient}
    assert lifted == {(1, 2), (2, 1)}
    cover_rays = set(rep.cover_fan.rays)
    assert cover_rays == {(1, 0), (2, 1), (1, 1), (1, 2), (0, 1)}
    assert elapsed < 1.0, f"golden example took {elapsed:.3f}s, budget is 1s"
    print(f"\nACCEPTANCE 1 PASS: golden example exact in {elapsed:.3f}s")


def test_criterion_2_dual_graph_two_vertices_one_edge():
    """The quotient-side exceptional dual graph for (3,(1,2)) is an edge."""
    rep = resolution_pipeline(3, (1, 2))
    graph = dual_graph(rep.quotient_fan, rep.exceptional_quotient)
    assert len(graph.vertices) == 2
    assert len(graph.edges) == 1
    assert set(graph.edges[0]) == set(graph.vertices)
    assert graph.components == 1
    print("\nACCEPTANCE 2 PASS: dual graph is two vertices joined by one edge")


def test_criterion_3_smoothness_sweep_under_budget(pipeline_sweep):
    """All primes p <= 97, all valid weights: smooth fans, continued-fraction
    agreement on exceptional rays, inside the 60 s budget."""
    reports, build_seconds = pipeline_sweep
    start = time.monotonic()
    count = 0
    for (p, a), rep in reports.items():
        for fan in (rep.quotient_fan, rep.cover_fan):
            for cone_indices in fan.max_cones:
                assert is_smooth_cone(fan.cone(cone_indices)), (p, a)
        chain = hirzebruch_jung(p, a)
        exceptional = {rep.quotient_fan.rays[i] for i in rep.exceptional_quotient}
        assert exceptional == set(chain), (p, a)
        count += 1
    check_seconds = time.monotonic() - start
    total = build_seconds + check_seconds
    assert count == len(reports) and count >= 1000
    assert total < SWEEP_BUDGET_SECONDS, (
        f"sweep took {total:.1f}s, budget is {SWEEP_BUDGET_SECONDS:.0f}s")
    print(f"\nACCEPTANCE 3 PASS: {count} pipelines smooth + chain-checked "
          f"in {total:.1f}s (< {SWEEP_BUDGET_SECONDS:.0f}s)")


def test_criterion_4_exceptional_independence_certificates(pipeline_sweep):
    """Exceptional classes are independent, with a full-rank certificate, for
    every pipeline output of the criterion-3 sweep (both stages)."""
    reports, _ = pipeline_sweep
    checked = 0
    for (p, a), rep in reports.items():
        for fan, exceptional in ((rep.quotient_fan, rep.exceptional_quotient),
                                 (rep.cover_fan, rep.exceptional_cover)):
            cert = exceptional_independence(fan, exceptional)
            assert cert.independent, (p, a)
            assert cert.rank_augmented == cert.rank_relations + len(cert.exceptional), (p, a)
            checked += 1
    assert checked == 2 * len(reports)
    print(f"\nACCEPTANCE 4 PASS: {checked} full-rank independence certificates")


def test_criterion_5_tate_cohomology():
    """Pinned rotation module, Herbrand equality on 100+ random finite
    modules, and brute-force agreement on the whole small-order fixture set."""
    zeta = IntMatrix([[0, -1], [1, -1]])
    mod = CyclicModule(IntMatrix.zeros(2, 0), zeta, 3)
    assert tate_h0(mod) == TRIVIAL_GROUP
    assert tate_h1(mod) == FiniteAbelianGroup((3,))

    rng = random.Random(97)
    herbrand_checked = 0
    for _ in range(120):
        m = random_finite_cyclic_module(rng)
        assert tate_h0(m).order == tate_h1(m).order, m
        herbrand_checked += 1
    assert herbrand_checked >= 100

    battery = _fixture_battery()
    assert len(battery) >= 15
    for action, diagonal, p in battery:
        order = 1
        for d in diagonal:
            order *= d
        assert order <= 512
        m = _diag_module(action, diagonal, p)
        h0_oracle, h1_oracle = oracles.brute_force_tate(action.rows, diagonal, p)
        assert tate_h0(m).invariant_factors == tuple(h0_oracle), (diagonal, p)
        assert tate_h1(m).invariant_factors == tuple(h1_oracle), (diagonal, p)
    print(f"\nACCEPTANCE 5 PASS: pinned module exact, Herbrand on "
          f"{herbrand_checked} random modules, {len(battery)} brute-force fixtures")


def test_criterion_6_torsion_audit_cross_checked():
    """audit(3,2): order-27 torsion, case counts (1,4,8), nonempty
    ramification everywhere, certified; subgroups cross-checked exhaustively."""
    report = torsion_audit(3, 2)
    assert report.torsion.order == 27 == 3 ** (2 + 1)
    assert report.torsion.invariant_factors == (3, 3, 3)
    assert report.counts == {"KERNEL_T": 1, "SPLIT": 4, "NONSPLIT": 8}
    assert sum(report.counts.values()) == 13 == report.subgroup_count
    for case in report.cases:
        assert case.ramification_order >= 1
        assert case.ramification_elements, case
    assert report.verdict == "TORSION_FREE_CERTIFIED"

    ours = {
        frozenset(x + (y,) for x, y in subgroup_elements(case.functional, 2))
        for case in report.cases
    }
    exhaustive = oracles.index_p_subgroups(3, 2)
    assert ours == exhaustive
    assert len(ours) == 13
    print("\nACCEPTANCE 6 PASS: audit(3,2) certified and matches "
          "exhaustive subgroup enumeration")


def _coordinate_pair(pair):
    P, Q = pair
    return ((P.x, P.y), (Q.x, Q.y))


def test_criterion_7_oracle_consistency():
    """Finite-field oracle: fixed pairs = diagonal 3-torsion by full scan,
    zeta cubes to the identity, Hasse bounds hold, block action has rank 2."""
    for q in (5, 7):
        curve = WeierstrassCurve(q, 0, 1)
        pts = curve.points()
        fixed = {_coordinate_pair(pair) for pair in fixed_points_of_zeta(curve)}
        scan = {
            _coordinate_pair((P, Q))
            for P in pts for Q in pts
            if zeta_apply(curve, (P, Q)) == (P, Q)
        }
        diagonal = {
            _coordinate_pair((P, P))
            for P in pts if curve.multiply(3, P).is_infinity
        }
        assert fixed == scan == diagonal, q

    hasse_checked = 0
    for q in (5, 7, 11, 13, 17, 19, 23, 29):
        curve = WeierstrassCurve(q, 0, 1)
        pts = curve.points()
        assert abs(len(pts) - (q + 1)) <= 2 * math.isqrt(q) + 1
        hasse_checked += 1
        for P in pts:
            for Q in pts:
                pair = (P, Q)
                for _ in range(3):
                    pair = zeta_apply(curve, pair)
                assert pair == (P, Q), (q, P, Q)

    block = zeta_matrix_on_three_torsion()
    assert fixed_subgroup_rank(block, 3) == 2
    fixed_vectors = 0
    for code in range(81):
        v = [(code // 3 ** i) % 3 for i in range(4)]
        w = [sum(block[i, j] * v[j] for j in range(4)) % 3 for i in range(4)]
        if w == v:
            fixed_vectors += 1
    assert fixed_vectors == 3 ** 2
    print(f"\nACCEPTANCE 7 PASS: fixed pairs scanned on F_5/F_7, zeta^3 = id "
          f"on {hasse_checked} fields, 81-vector rank check gives b = 2")


def test_criterion_8_cubic_application():
    """Brauer quotient pins, invariance over 10^3 random triples, and the
    pinned Jacobian equation."""
    assert brauer_quotient(DiagonalCubic(1, 1, 2)) is BrauerQuotient.Z_MOD_2
    assert brauer_quotient(DiagonalCubic(1, 1, 1)) is BrauerQuotient.TRIVIAL

    rng = random.Random(20260817)

    def random_nonzero():
        num = rng.choice([n for n in range(-60, 61) if n])
        den = rng.randrange(1, 40)
        return Fraction(num, den)

    perms = [(0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)]
    for _ in range(1000):
        triple = (random_nonzero(), random_nonzero(), random_nonzero())
        base = brauer_quotient(DiagonalCubic(*triple))
        for perm in perms:
            shuffled = tuple(triple[i] for i in perm)
            assert brauer_quotient(DiagonalCubic(*shuffled)) is base, triple
        lam = random_nonzero()
        scaled_one = (triple[0] * lam ** 3, triple[1], triple[2])
        assert brauer_quotient(DiagonalCubic(*scaled_one)) is base, (triple, lam)
        scaled_all = tuple(x * lam for x in triple)
        assert brauer_quotient(DiagonalCubic(*scaled_all)) is base, (triple, lam)

    jac = associated_jacobian(DiagonalCubic(1, 1, 1))
    assert jac.a4 == 0
    assert jac.a6 == -144
    assert jac.equation() == "y^2 = x^3 - 144"
    print("\nACCEPTANCE 8 PASS: quotient pins, 1000-triple invariance, "
          "Jacobian y^2 = x^3 - 144")


def test_criterion_9_selftest_determinism():
    """Two selftest runs produce byte-identical JSON and exit 0."""
    env = {k: v for k, v in os.environ.items()
           if k not in ("CYCLOTORIC_FACTOR_BOUND", "CYCLOTORIC_DATA_DIR")}
    outputs = []
    for _ in range(2):
        proc = subprocess.run(
            [sys.executable, "-m", "cyclotoric.cli", "selftest"],
            capture_output=True, cwd=ROOT, env=env,
        )
        assert proc.returncode == 0, proc.stderr.decode()
        outputs.append(proc.stdout)
    assert outputs[0] == outputs[1]
    assert outputs[0].endswith(b"\n")
    print("\nACCEPTANCE 9 PASS: selftest byte-identical across two runs")
