"""Divisor class groups, independence certificates, and dual graphs."""

import random

import pytest

from cyclotoric.classgroup import (
    DualGraph,
    GroupPresentation,
    class_group,
    dual_graph,
    exceptional_independence,
    retraction_multiplier,
    star_is_complete,
)
from cyclotoric.fan import (
    Cone,
    Fan,
    hirzebruch_jung,
    interior_ray_indices,
    resolution_pipeline,
    resolve_cone,
)
from cyclotoric.lattice import Lattice, quotient_lattice

from oracles import minor_gcd_invariant_factors


def _projective_plane_fan():
    return Fan(Lattice.standard(2), [(1, 0), (0, 1), (-1, -1)],
               [(0, 1), (1, 2), (0, 2)])


def test_group_presentation_validation():
    with pytest.raises(ValueError):
        GroupPresentation(-1, ())
    with pytest.raises(ValueError):
        GroupPresentation(0, (1,))
    with pytest.raises(ValueError):
        GroupPresentation(0, (2, 3))  # 3 is not a multiple of 2
    assert str(GroupPresentation(1, (3,))) == "Z x Z/3"
    assert str(GroupPresentation(0, ())) == "0"
    assert GroupPresentation(0, (2, 4)).torsion_order == 8


def test_class_group_projective_plane_is_Z():
    g = class_group(_projective_plane_fan())
    assert g.free_rank == 1
    assert g.torsion == ()


def test_class_group_affine_plane_is_trivial():
    Z2 = Lattice.standard(2)
    g = class_group(Fan(Z2, [(1, 0), (0, 1)], [(0, 1)]))
    assert g.free_rank == 0
    assert g.torsion == ()
    assert str(g) == "0"


def test_class_group_quotient_chart_is_cyclic():
    # the chart of the orthant in Z^2 + Z*(1,a)/p has class group Z/p
    for p, a in [(3, 2), (5, 3), (7, 4), (11, 6), (13, 9)]:
        N = quotient_lattice(p, (1, a))
        g = class_group(Fan(N, [(1, 0), (0, 1)], [(0, 1)]))
        assert g.free_rank == 0
        assert g.torsion == (p,), (p, a)
        assert g.torsion_order == p


def test_class_group_requires_spanning_rays():
    Z2 = Lattice.standard(2)
    with pytest.raises(ValueError):
        class_group(Fan(Z2, [(1, 0)], [(0,)]))


def test_class_group_agrees_with_minor_gcd_oracle():
    # recompute the invariant factors of the pairing matrix independently
    rng = random.Random(5)
    for _ in range(20):
        p = rng.choice([3, 5, 7])
        a = rng.randrange(1, p)
        N = quotient_lattice(p, (1, a))
        fan = Fan(N, [(1, 0), (0, 1)], [(0, 1)])
        g = class_group(fan)
        pairing_t = [list(col) for col in fan.ray_coordinates()]
        facs = minor_gcd_invariant_factors(pairing_t)
        assert tuple(d for d in facs if d > 1) == g.torsion


def test_smooth_resolutions_have_free_class_group():
    for p, weights in [(3, (1, 2)), (5, (1, 3)), (7, (1, 5)), (5, (1, 2, 3))]:
        rep = resolution_pipeline(p, weights)
        n = len(weights)
        for fan in (rep.quotient_fan, rep.cover_fan):
            g = class_group(fan)
            assert g.torsion == (), (p, weights)
            assert g.free_rank == len(fan.rays) - n


def test_exceptional_independence_on_pipelines():
    for p, weights in [(3, (1, 2)), (5, (1, 2)), (7, (1, 3)), (3, (1, 1, 2))]:
        rep = resolution_pipeline(p, weights)
        for fan, exc in ((rep.quotient_fan, rep.exceptional_quotient),
                         (rep.cover_fan, rep.exceptional_cover)):
            cert = exceptional_independence(fan, exc)
            assert cert.independent, (p, weights)
            assert cert.exceptional == tuple(sorted(exc))
            assert cert.rank_augmented == cert.rank_relations + len(exc)


def test_exceptional_independence_detects_dependence():
    # on the projective plane every ray class equals the hyperplane class, so
    # any two ray classes are dependent
    fan = _projective_plane_fan()
    cert = exceptional_independence(fan, (0, 1))
    assert not cert.independent
    assert cert.rank_augmented < cert.rank_relations + 2
    single = exceptional_independence(fan, (0,))
    assert single.independent


def test_exceptional_independence_empty_set():
    rep = resolution_pipeline(3, (1, 2))
    cert = exceptional_independence(rep.quotient_fan, ())
    assert cert.independent
    assert cert.rank_augmented == cert.rank_relations


def test_exceptional_independence_bad_index():
    rep = resolution_pipeline(3, (1, 2))
    with pytest.raises(ValueError):
        exceptional_independence(rep.quotient_fan, (99,))


def test_dual_graph_pinned_two_vertex_chain():
    rep = resolution_pipeline(3, (1, 2))
    g = dual_graph(rep.quotient_fan, rep.exceptional_quotient)
    assert len(g.vertices) == 2
    assert len(g.edges) == 1
    assert g.components == 1


def test_dual_graph_of_hj_chain_is_a_path():
    # the exceptional curves of a cyclic surface quotient meet in a chain
    for p, a in [(5, 2), (7, 3), (11, 7), (13, 5), (17, 11), (19, 12)]:
        N = quotient_lattice(p, (1, a))
        cone = Cone(N, [(1, 0), (0, 1)])
        resolved = resolve_cone(cone)
        exc = interior_ray_indices(resolved, cone)
        assert len(exc) == len(hirzebruch_jung(p, a))
        g = dual_graph(resolved, exc)
        k = len(g.vertices)
        assert k == len(exc)
        assert len(g.edges) == k - 1, (p, a)
        assert g.components == 1
        # a path: at most two vertices of degree 1, the rest of degree 2
        degree = {v: 0 for v in g.vertices}
        for u, w in g.edges:
            degree[u] += 1
            degree[w] += 1
        assert all(d <= 2 for d in degree.values())


def test_dual_graph_empty_and_errors():
    rep = resolution_pipeline(3, (1, 2))
    g = dual_graph(rep.quotient_fan, ())
    assert g == DualGraph(vertices=(), edges=(), components=0)
    with pytest.raises(ValueError):
        dual_graph(rep.quotient_fan, (42,))


def test_dual_graph_disconnected_components():
    # two exceptional rays that never share a cone: take the two corners of a
    # resolved chain with at least 3 interior rays and drop the middle
    N = quotient_lattice(11, (1, 7))
    cone = Cone(N, [(1, 0), (0, 1)])
    resolved = resolve_cone(cone)
    exc = interior_ray_indices(resolved, cone)
    assert len(exc) >= 3
    chain = dual_graph(resolved, exc)
    degree = {v: 0 for v in chain.vertices}
    for u, w in chain.edges:
        degree[u] += 1
        degree[w] += 1
    ends = sorted(v for v in chain.vertices if degree[v] == 1)
    assert len(ends) == 2
    g = dual_graph(resolved, ends)
    assert g.components == 2
    assert g.edges == ()


def test_star_completeness_separates_interior_from_boundary():
    for p, a in [(3, 2), (5, 2), (7, 5), (11, 4)]:
        N = quotient_lattice(p, (1, a))
        cone = Cone(N, [(1, 0), (0, 1)])
        resolved = resolve_cone(cone)
        exc = set(interior_ray_indices(resolved, cone))
        for i in range(len(resolved.rays)):
            assert star_is_complete(resolved, i) == (i in exc), (p, a, i)


def test_star_completeness_in_dimension_three():
    rep = resolution_pipeline(3, (1, 1, 2))
    exc = set(rep.exceptional_quotient)
    fan = rep.quotient_fan
    for i in range(len(fan.rays)):
        assert star_is_complete(fan, i) == (i in exc), i


def test_star_completeness_errors():
    rep = resolution_pipeline(3, (1, 2))
    with pytest.raises(ValueError):
        star_is_complete(rep.quotient_fan, 99)
    one_dim = Fan(Lattice.standard(1), [(1,)], [(0,)])
    with pytest.raises(ValueError):
        star_is_complete(one_dim, 0)


def test_retraction_multiplier_pinned():
    assert retraction_multiplier(3, 4) == 3
    assert retraction_multiplier(9, 7) == 4
    assert retraction_multiplier(5, 1) == 1
    assert retraction_multiplier(1, 1) == 1


def test_retraction_multiplier_is_modular_inverse():
    rng = random.Random(7)
    import math
    for _ in range(200):
        n = rng.randrange(2, 500)
        t = rng.randrange(1, 5 * n)
        if math.gcd(t, n) != 1:
            with pytest.raises(ValueError):
                retraction_multiplier(t, n)
            continue
        m = retraction_multiplier(t, n)
        assert 0 < m < max(n, 2)
        assert (t * m) % n == 1 % n


def test_retraction_multiplier_rejects_bad_input():
    with pytest.raises(ValueError):
        retraction_multiplier(0, 5)
    with pytest.raises(ValueError):
        retraction_multiplier(3, 0)
    with pytest.raises(ValueError):
        retraction_multiplier(2, 4)
