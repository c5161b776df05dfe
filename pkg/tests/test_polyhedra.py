import pytest
from hypothesis import given, strategies as st

from bottsamelson.errors import RankMismatch
from bottsamelson.polyhedra import RationalCone, contains, dual_cone, extremal_flags, extremal_rays, reduce_to_extremal


def _extremal_by_exclusion(cone):
    # a ray is redundant iff it lies in the cone of the others
    out = []
    for k, r in enumerate(cone.rays):
        rest = RationalCone(cone.ambient_dim, cone.rays[:k] + cone.rays[k + 1 :])
        if not (rest.rays and contains(rest, r)):
            out.append(r)
    return set(out)


def test_dual_of_planar_cone():
    c = RationalCone(2, [(1, 0), (1, 2)])
    assert set(dual_cone(c).rays) == {(0, 1), (2, -1)}
    assert dual_cone(dual_cone(c)) == c


def test_orthant_self_dual():
    c = RationalCone(3, [(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    assert dual_cone(c) == c


def test_redundant_ray_dropped():
    c = RationalCone(2, [(1, 0), (0, 1), (1, 1)])
    assert set(extremal_rays(c)) == {(1, 0), (0, 1)}
    assert extremal_flags(c, [(1, 0), (0, 1), (2, 2)]) == [True, True, False]


def test_lineality_returned_as_pairs():
    c = RationalCone(3, [(1, 0, 0)])
    d = dual_cone(c)
    assert {(0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1), (1, 0, 0)} == set(d.rays)
    assert not d.is_pointed()


def test_pairing_matrix_dual():
    c = RationalCone(2, [(1, 0)])
    g = [[0, 1], [1, 0]]
    d = dual_cone(c, g)
    assert contains(d, (0, 1)) and not contains(d, (0, -1))


def test_dimension_errors():
    with pytest.raises(RankMismatch):
        RationalCone(2, [(1, 0, 0)])
    with pytest.raises(ValueError):
        RationalCone(2, [(0, 0)])
    with pytest.raises(RankMismatch):
        contains(RationalCone(2, [(1, 0)]), (1, 0, 0))


def test_rays_are_primitive_and_deduplicated():
    c = RationalCone(2, [(2, 4), (1, 2), (3, 0)])
    assert c.rays == ((1, 2), (1, 0))


vec = st.lists(st.integers(-3, 3), min_size=3, max_size=3).filter(any)


@given(st.lists(vec, min_size=1, max_size=7))
def test_double_dual_contains_and_is_contained(rays):
    c = RationalCone(3, rays)
    dd = dual_cone(dual_cone(c))
    assert all(contains(dd, r) for r in c.rays)
    assert all(contains(c, r) for r in dd.rays)


@given(st.lists(vec, min_size=1, max_size=7))
def test_extremal_rays_agree_with_exclusion_test(rays):
    c = RationalCone(3, rays)
    if c.is_pointed():
        assert set(extremal_rays(c)) == _extremal_by_exclusion(c)
    assert reduce_to_extremal(c) == RationalCone(3, extremal_rays(c))


@given(st.lists(vec, min_size=1, max_size=6), vec)
def test_membership_matches_duality(rays, v):
    c = RationalCone(3, rays)
    inside = contains(c, v)
    d = dual_cone(c)
    assert inside == all(sum(a * b for a, b in zip(h, v)) >= 0 for h in d.rays)
