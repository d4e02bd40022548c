"""JSON documents for every value the tools exchange.

One convention throughout: rationals are "num/den" strings (plain "num" when
integral), so documents are exact and language-neutral; matrices are
row-major lists of integer rows; a lattice is {"dim", "den", "basis"} with
the basis columns in canonical Hermite order.  ``dumps_stable`` fixes key
order and layout so identical values are byte-identical on disk, and
``atomic_write`` guarantees no partial files.
"""

from __future__ import annotations

import json
import os
import tempfile
from fractions import Fraction
from typing import Any

from .classgroup import DualGraph
from .curves import ConsistencyReport, CurvePoint, WeierstrassCurve, fixed_points_of_zeta
from .fan import Fan, ResolutionReport
from .goursat import AuditReport, GoursatTag
from .intmat import IntMatrix, smith_normal_form
from .lattice import Lattice
from .tate import CyclicModule, FiniteAbelianGroup


def rational_to_str(x) -> str:
    """Exact string form of a rational: "8", "-27/8".

    >>> rational_to_str(Fraction(-27, 8))
    '-27/8'
    >>> rational_to_str(Fraction(8))
    '8'
    """
    return str(Fraction(x))


def rational_from_str(s) -> Fraction:
    """Parse "num/den" (or an integer literal / JSON number) exactly."""
    if isinstance(s, bool):
        raise ValueError(f"not a rational: {s!r}")
    if isinstance(s, int):
        return Fraction(s)
    if isinstance(s, str):
        try:
            return Fraction(s)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational: {s!r}") from exc
    raise ValueError(f"not a rational: {s!r}")


def matrix_to_doc(m: IntMatrix) -> list[list[int]]:
    return [list(row) for row in m.rows]


def matrix_from_doc(doc: Any) -> IntMatrix:
    if (not isinstance(doc, list) or not doc
            or any(not isinstance(row, list) for row in doc)):
        raise ValueError("matrix must be a nonempty list of rows")
    for row in doc:
        for x in row:
            if isinstance(x, bool) or not isinstance(x, int):
                raise ValueError(f"matrix entries must be integers, got {x!r}")
    return IntMatrix(doc)


def lattice_to_doc(L: Lattice) -> dict:
    return {"dim": L.dim, "den": L.den, "basis": matrix_to_doc(L.basis)}


def lattice_from_doc(doc: Any) -> Lattice:
    if not isinstance(doc, dict):
        raise ValueError("lattice document must be an object")
    missing = {"dim", "den", "basis"} - set(doc)
    if missing:
        raise ValueError(f"lattice document missing fields: {sorted(missing)}")
    dim, den = doc["dim"], doc["den"]
    if isinstance(dim, bool) or not isinstance(dim, int):
        raise ValueError("lattice dim must be an integer")
    if isinstance(den, bool) or not isinstance(den, int):
        raise ValueError("lattice den must be an integer")
    return Lattice(dim, den, matrix_from_doc(doc["basis"]))


def fan_to_doc(fan: Fan) -> dict:
    return {
        "lattice": lattice_to_doc(fan.lattice),
        "rays": [[rational_to_str(x) for x in ray] for ray in fan.rays],
        "max_cones": [list(c) for c in fan.max_cones],
    }


def fan_from_doc(doc: Any) -> Fan:
    """Rebuild a fan document; the constructor re-runs all structural checks."""
    if not isinstance(doc, dict):
        raise ValueError("fan document must be an object")
    missing = {"lattice", "rays", "max_cones"} - set(doc)
    if missing:
        raise ValueError(f"fan document missing fields: {sorted(missing)}")
    lattice = lattice_from_doc(doc["lattice"])
    rays = [[rational_from_str(x) for x in ray] for ray in doc["rays"]]
    cones = doc["max_cones"]
    if not isinstance(cones, list) or any(not isinstance(c, list) for c in cones):
        raise ValueError("max_cones must be a list of index lists")
    for c in cones:
        for i in c:
            if isinstance(i, bool) or not isinstance(i, int):
                raise ValueError(f"cone indices must be integers, got {i!r}")
    return Fan(lattice, rays, [tuple(c) for c in cones])


def group_to_doc(g: FiniteAbelianGroup) -> list[int]:
    return list(g.invariant_factors)


def resolution_report_to_doc(report: ResolutionReport) -> dict:
    return {
        "p": report.p,
        "weights": list(report.weights),
        "quotient_lattice": lattice_to_doc(report.quotient_lattice),
        "quotient_fan": fan_to_doc(report.quotient_fan),
        "exceptional_quotient": list(report.exceptional_quotient),
        "lifted_fan": fan_to_doc(report.lifted_fan),
        "cover_fan": fan_to_doc(report.cover_fan),
        "exceptional_cover": list(report.exceptional_cover),
    }


def dual_graph_to_doc(graph: DualGraph) -> dict:
    return {
        "vertices": list(graph.vertices),
        "edges": [list(e) for e in graph.edges],
        "components": graph.components,
    }


def class_group_doc(fan: Fan) -> dict:
    """Class-group document: the pairing matrix and its Smith data.

    The relation matrix has one row per dual-lattice basis vector and one
    column per ray; its cokernel is the divisor class group.
    """
    coords = fan.ray_coordinates()
    n = fan.lattice.dim
    pairing = IntMatrix([[coords[j][i] for j in range(len(coords))] for i in range(n)])
    s, _, _ = smith_normal_form(pairing.transpose())
    factors = [s[i, i] for i in range(min(s.nrows, s.ncols)) if s[i, i] != 0]
    return {
        "n_rays": len(coords),
        "relation_matrix": matrix_to_doc(pairing),
        "invariant_factors": factors,
        "free_rank": len(coords) - len(factors),
        "torsion": [d for d in factors if d > 1],
    }


def module_to_doc(mod: CyclicModule) -> dict:
    return {
        "relations": matrix_to_doc(mod.relations),
        "action": matrix_to_doc(mod.action),
        "p": mod.p,
    }


def module_from_doc(doc: Any) -> CyclicModule:
    if not isinstance(doc, dict):
        raise ValueError("module document must be an object")
    missing = {"relations", "action", "p"} - set(doc)
    if missing:
        raise ValueError(f"module document missing fields: {sorted(missing)}")
    p = doc["p"]
    if isinstance(p, bool) or not isinstance(p, int):
        raise ValueError("module p must be an integer")
    return CyclicModule(relations=matrix_from_doc(doc["relations"]),
                        action=matrix_from_doc(doc["action"]), p=p)


def audit_to_doc(report: AuditReport) -> dict:
    """Torsion-audit document; element lists stay in memory, not on disk."""
    return {
        "p": report.p,
        "b": report.b,
        "torsion_order": report.torsion.order,
        "torsion": group_to_doc(report.torsion),
        "subgroup_count": report.subgroup_count,
        "cases": {
            "kernel_T": report.counts[GoursatTag.KERNEL_T.value],
            "split": report.counts[GoursatTag.SPLIT.value],
            "nonsplit": report.counts[GoursatTag.NONSPLIT.value],
        },
        "certified": report.verdict == "TORSION_FREE_CERTIFIED",
        "verdict": report.verdict,
        "subgroups": [
            {
                "phi": list(case.functional.phi),
                "c": case.functional.c,
                "tag": case.tag.value,
                "ramification": case.ramification.value,
                "ramification_order": case.ramification_order,
                "witness": list(case.nonsplit_witness) if case.nonsplit_witness else None,
            }
            for case in report.cases
        ],
    }


def point_to_doc(P: CurvePoint) -> list[int] | None:
    return None if P.is_infinity else [P.x, P.y]


def oracle_to_doc(curve: WeierstrassCurve, report: ConsistencyReport) -> dict:
    fixed_pairs = fixed_points_of_zeta(curve)
    return {
        "q": report.q,
        "a4": report.a4,
        "a6": report.a6,
        "order": report.point_count,
        "fixed_points": [[point_to_doc(P), point_to_doc(Q)] for P, Q in fixed_pairs],
        "three_torsion": report.rational_fixed_pairs,
        "geometric_fixed_pairs": report.geometric_fixed_pairs,
        "predicted_rank": report.predicted_rank,
        "consistent": report.consistent,
        "orbit_counts": report.orbit_counts,
    }


def dumps_stable(doc: Any) -> str:
    """Canonical text form: sorted keys, two-space indent, trailing newline."""
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def atomic_write(path: str, text: str) -> None:
    """Write text to path with no partially-written intermediate state."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=".json")
    try:
        with os.fdopen(fd, "w") as handle:
            handle.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def load_json(path: str) -> Any:
    with open(path) as handle:
        return json.load(handle)
