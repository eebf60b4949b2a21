from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

import oracles
from tvpi.polyhedral import Cone, Fan, PolyhedralError, Polyhedron, dot, minkowski_sum

F = Fraction


def cone_strategy(max_rank=3):
    return st.integers(1, max_rank).flatmap(
        lambda n: st.lists(st.lists(st.integers(-3, 3), min_size=n, max_size=n), min_size=1, max_size=5).map(
            lambda g: (n, g)
        )
    )


def test_quadrant_dual_and_faces():
    c = Cone.from_generators([[1, 0], [0, 1]], 2)
    assert c.rays == ((0, 1), (1, 0))
    assert c.dual == c
    assert len(c.proper_faces()) == 3
    assert len(c.faces()) == 4


def test_rank2_dual():
    c = Cone.from_generators([[-1, 1], [11, 8]], 2)
    assert set(c.dual.rays) == {(-8, 11), (1, 1)}


def test_redundant_generators_dropped():
    c = Cone.from_generators([[1, 0], [0, 1], [1, 1], [2, 4]], 2)
    assert set(c.rays) == {(1, 0), (0, 1)}


def test_lineality():
    c = Cone.from_generators([[1, 0], [-1, 0], [0, 1]], 2)
    assert not c.is_pointed
    assert c.lineality == ((1, 0),)
    assert c.rays == ((0, 1),)
    assert Cone.from_generators([[1, 0], [-1, 0], [0, 1], [0, -1]], 2) == Cone.full_space(2)
    assert Cone.full_space(2).dual == Cone.zero(2)


def test_simplicial_3_cone_faces():
    c = Cone.from_generators([[1, 0, 0], [0, 1, 0], [0, 0, 1]], 3)
    assert len(c.proper_faces()) == 7


def test_square_pyramid_faces():
    c = Cone.from_generators([[1, 0, 1], [0, 1, 1], [-1, 0, 1], [0, -1, 1]], 3)
    # apex, 4 rays, 4 two-dimensional facets
    assert len(c.proper_faces()) == 9
    assert c.is_full_dimensional


@given(cone_strategy())
@settings(max_examples=120, deadline=None)
def test_dual_is_involution(ng):
    n, gens = ng
    c = Cone.from_generators(gens, n)
    assert c.dual.dual == c


@given(cone_strategy(), st.lists(st.integers(-4, 4), min_size=3, max_size=3))
@settings(max_examples=120, deadline=None)
def test_membership_against_caratheodory(ng, x):
    n, gens = ng
    x = x[:n]
    c = Cone.from_generators(gens, n)
    assert c.contains(x) == oracles.in_cone(x, [g for g in gens if any(g)])


@given(cone_strategy())
@settings(max_examples=80, deadline=None)
def test_rays_generate_and_are_extreme(ng):
    n, gens = ng
    c = Cone.from_generators(gens, n)
    for g in gens:
        assert c.contains(g)
    for r in c.rays:
        others = [s for s in c.generators if s != r]
        if c.is_pointed:
            assert not oracles.in_cone(r, others)


@given(cone_strategy())
@settings(max_examples=60, deadline=None)
def test_faces_are_supported(ng):
    n, gens = ng
    c = Cone.from_generators(gens, n)
    assume(c.is_pointed)
    for f in c.faces():
        # some u in the dual vanishes exactly on the face's rays
        u = [sum(col) for col in zip(*[d for d in c.dual.generators if all(dot(d, r) == 0 for r in f.rays)])] or [0] * n
        for r in c.rays:
            assert (dot(u, r) == 0) == (r in f.rays)


def test_polyhedron_vertices_and_support():
    tail = Cone.from_generators([[-1, 1], [11, 8]], 2)
    p = Polyhedron(2, ((0, 0), (1, 0)), tail)
    assert p.vertices() == ((F(0), F(0)), (F(1), F(0)))
    assert p.support_min((1, 1)) == 0
    assert p.support_min((-8, 11)) == -8
    with pytest.raises(PolyhedralError, match="unbounded below"):
        p.support_min((1, 0))


def test_interior_points_are_not_vertices():
    p = Polyhedron(2, ((0, 0), (2, 0), (0, 2), (F(1, 2), F(1, 2))))
    assert len(p.vertices()) == 3


rat = st.fractions(min_value=-3, max_value=3, max_denominator=5)


@given(
    st.lists(st.tuples(rat, rat), min_size=1, max_size=3),
    st.lists(st.tuples(rat, rat), min_size=1, max_size=3),
    st.tuples(st.integers(-5, 5), st.integers(-5, 5)),
)
@settings(max_examples=80, deadline=None)
def test_support_function_is_additive(a, b, u):
    tail = Cone.from_generators([[1, 0], [1, 2]], 2)
    pa, pb = Polyhedron(2, tuple(a), tail), Polyhedron(2, tuple(b), tail)
    assume(tail.dual.contains(u))
    assert minkowski_sum(pa, pb).support_min(u) == pa.support_min(u) + pb.support_min(u)


def test_minkowski_point_operand():
    tail = Cone.from_generators([[1]], 1)
    p = Polyhedron(1, ((0,),), tail)
    q = minkowski_sum(p, Polyhedron.point((F(1, 2),)))
    assert q.points == ((F(1, 2),),)
    assert q.tail == tail


def test_equals_tail():
    tail = Cone.from_generators([[1, 0], [0, 1]], 2)
    assert Polyhedron(2, ((0, 0), (1, 0)), tail).equals_tail()
    assert not Polyhedron(2, ((1, 0),), tail).equals_tail()


def test_fan_face_closure():
    f = Fan.from_generators(2, [[[1, 0], [0, 1]], [[0, 1], [-1, -1]]])
    # two 2-cones, three rays, the origin
    assert len(f.face_closure()) == 6
    with pytest.raises(PolyhedralError):
        Fan.from_generators(1, [[[1], [-1]]]).require_pointed()


def test_floats_rejected():
    with pytest.raises((TypeError, PolyhedralError)):
        Cone.from_generators([[0.5, 1]], 2)
