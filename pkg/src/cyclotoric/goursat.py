"""Index-p subgroups of T x Z/p and the torsion audit.

T = (Z/p)^b.  Every index-p subgroup of T x Z/p is the kernel of a nonzero
functional (x, y) |-> phi(x) + c*y with (phi, c) taken up to scalar; we
normalize so the first nonzero entry of the concatenation (phi | c) is 1.
That yields exactly (p^(b+1) - 1)/(p - 1) subgroups, split into three kinds:

* phi = 0          -- the subgroup is T x 0 itself (tag KERNEL_T);
* phi != 0, c = 0  -- ker(phi) x Z/p, a split extension (tag SPLIT);
* phi != 0, c != 0 -- the graph {(x, -phi(x)/c)}, nonsplit over ker(phi)
                      (tag NONSPLIT).

Each case records where the corresponding degree-p cover ramifies, as a
subset of T: all of T, the complement of ker(phi), or ker(phi).  The audit
assembles the full classification and checks every ramification locus is
nonempty, which is what certifies the relevant torsion-freeness downstream.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass

from .lattice import is_prime
from .tate import FiniteAbelianGroup, pic_torsion_order


class GoursatTag(enum.Enum):
    KERNEL_T = "KERNEL_T"
    SPLIT = "SPLIT"
    NONSPLIT = "NONSPLIT"


class RamificationKind(enum.Enum):
    ALL_OF_T = "ALL_OF_T"
    COMPLEMENT_OF_KERNEL = "COMPLEMENT_OF_KERNEL"
    KERNEL_OF_PHI = "KERNEL_OF_PHI"


# Explicit element lists are attached only while |T| stays small.
ELEMENT_LIST_CAP = 3 ** 6


@dataclass(frozen=True)
class SubgroupFunctional:
    """A normalized functional (phi | c) on T x Z/p, up-to-scalar unique."""

    phi: tuple[int, ...]
    c: int
    p: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"p must be prime, got {self.p}")
        if any(not 0 <= x < self.p for x in self.phi) or not 0 <= self.c < self.p:
            raise ValueError("entries must be reduced modulo p")
        concat = self.phi + (self.c,)
        first = next((x for x in concat if x), None)
        if first is None:
            raise ValueError("the zero functional cuts out no index-p subgroup")
        if first != 1:
            raise ValueError("functional must be normalized (first nonzero entry 1)")

    def value(self, x: tuple[int, ...], y: int) -> int:
        return (sum(a * t for a, t in zip(self.phi, x)) + self.c * y) % self.p


@dataclass(frozen=True)
class GoursatCase:
    """One classified subgroup with its ramification data."""

    functional: SubgroupFunctional
    tag: GoursatTag
    ramification: RamificationKind
    ramification_order: int
    ramification_elements: tuple[tuple[int, ...], ...] | None
    nonsplit_witness: tuple[int, ...] | None


def enumerate_index_p(p: int, b: int) -> list[SubgroupFunctional]:
    """All normalized functionals on (Z/p)^b x Z/p, in lexicographic order.

    >>> len(enumerate_index_p(3, 1))
    4
    >>> len(enumerate_index_p(3, 2))
    13
    """
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if b < 0:
        raise ValueError("rank b cannot be negative")
    out = []
    for concat in itertools.product(range(p), repeat=b + 1):
        first = next((x for x in concat if x), None)
        if first == 1:
            out.append(SubgroupFunctional(phi=concat[:b], c=concat[b], p=p))
    assert len(out) == (p ** (b + 1) - 1) // (p - 1)
    return out


def _kernel_elements(phi: tuple[int, ...], p: int) -> list[tuple[int, ...]]:
    b = len(phi)
    return [x for x in itertools.product(range(p), repeat=b)
            if sum(a * t for a, t in zip(phi, x)) % p == 0]


def classify(f: SubgroupFunctional, b: int) -> GoursatCase:
    """Sort one functional into its Goursat case, with ramification locus.

    ``b`` is the rank of T and must match the functional's length.
    """
    p = f.p
    if len(f.phi) != b:
        raise ValueError(f"functional has rank {len(f.phi)}, expected {b}")
    phi_zero = all(x == 0 for x in f.phi)
    small = p ** b <= ELEMENT_LIST_CAP
    if phi_zero:
        # Only the functional y |-> y: the subgroup is T x 0.
        tag, kind = GoursatTag.KERNEL_T, RamificationKind.ALL_OF_T
        order = p ** b
        elements = tuple(itertools.product(range(p), repeat=b)) if small else None
        witness = None
    elif f.c == 0:
        tag, kind = GoursatTag.SPLIT, RamificationKind.COMPLEMENT_OF_KERNEL
        order = p ** b - p ** (b - 1)
        if small:
            ker = set(_kernel_elements(f.phi, p))
            elements = tuple(x for x in itertools.product(range(p), repeat=b)
                             if x not in ker)
        else:
            elements = None
        witness = None
    else:
        tag, kind = GoursatTag.NONSPLIT, RamificationKind.KERNEL_OF_PHI
        order = p ** (b - 1)
        elements = tuple(_kernel_elements(f.phi, p)) if small else None
        # Canonical witness: lexicographically smallest a in T with phi(a) != 0.
        witness = next(x for x in itertools.product(range(p), repeat=b)
                       if sum(a * t for a, t in zip(f.phi, x)) % p != 0)
    assert order >= 1, "every case ramifies somewhere"
    if elements is not None:
        assert len(elements) == order
    return GoursatCase(functional=f, tag=tag, ramification=kind,
                       ramification_order=order, ramification_elements=elements,
                       nonsplit_witness=witness)


def subgroup_elements(f: SubgroupFunctional, b: int) -> frozenset:
    """The subgroup cut out by the functional, as explicit (x, y) pairs.

    Exponential in b; meant for cross-checks and small audits.
    """
    p = f.p
    if len(f.phi) != b:
        raise ValueError(f"functional has rank {len(f.phi)}, expected {b}")
    return frozenset(
        (x, y) for x in itertools.product(range(p), repeat=b) for y in range(p)
        if f.value(x, y) == 0)


@dataclass(frozen=True)
class AuditReport:
    """Full classification of the index-p subgroups plus the torsion bookkeeping."""

    p: int
    b: int
    torsion: FiniteAbelianGroup
    subgroup_count: int
    counts: dict[str, int]
    cases: tuple[GoursatCase, ...]
    verdict: str


def torsion_audit(p: int, b: int) -> AuditReport:
    """Classify every index-p subgroup and certify all ramification loci are nonempty.

    The case counts must come out as 1, (p^b - 1)/(p - 1), and p^b - 1 for
    KERNEL_T, SPLIT and NONSPLIT respectively; the torsion group audited is
    (Z/p)^(b+1).

    >>> report = torsion_audit(3, 2)
    >>> report.subgroup_count, report.counts
    (13, {'KERNEL_T': 1, 'SPLIT': 4, 'NONSPLIT': 8})
    """
    functionals = enumerate_index_p(p, b)
    cases = tuple(classify(f, b) for f in functionals)
    counts = {tag.value: 0 for tag in GoursatTag}
    for case in cases:
        counts[case.tag.value] += 1
    expected = {
        GoursatTag.KERNEL_T.value: 1,
        GoursatTag.SPLIT.value: (p ** b - 1) // (p - 1),
        GoursatTag.NONSPLIT.value: p ** b - 1,
    }
    assert counts == expected, (counts, expected)
    assert all(case.ramification_order >= 1 for case in cases)
    return AuditReport(
        p=p, b=b, torsion=pic_torsion_order(p, b),
        subgroup_count=len(cases), counts=counts, cases=cases,
        verdict="TORSION_FREE_CERTIFIED",
    )
