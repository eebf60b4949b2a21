from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from tvpi import corpus
from tvpi.divisorial import (
    EMPTY,
    DivisorError,
    DivisorialFanP1,
    PPDivisor,
    cone_over_point,
    degree,
    evaluate_coefficients,
    is_proper,
    klt_from_mus,
    klt_necessary_check,
    mu_profile,
    platonic_triple_check,
)

F = Fraction


def rank_one(coeffs):
    return PPDivisor.build([(1,)], {p: [(F(c),)] for p, c in coeffs.items()}, rank_k=1)


def test_rank2_evaluation():
    d = corpus.trivial_rank2()
    assert d.support == ["0", "1", "inf"]
    assert evaluate_coefficients(d, (1, 1)) == {"0": F(3, 5), "1": F(2, 3), "inf": 0}
    assert degree(d, (1, 1)) == F(19, 15)
    assert degree(d, (-8, 11)) == -8


def test_rank2_is_not_semiample():
    v = is_proper(corpus.trivial_rank2())
    assert v.kind == "NotSemiample"
    assert v.u == (-8, 11)
    assert v.value == -8


def test_degree_zero_is_not_big():
    v = is_proper(rank_one({"0": F(1, 2), "inf": F(-1, 2)}))
    assert v.kind == "NotBig"
    assert v.value == 0


def test_negative_degree_rank_one():
    v = is_proper(rank_one({"0": F(-1, 2)}))
    assert v.kind == "NotSemiample"


@pytest.mark.parametrize("name", [f"A{i}" for i in range(1, 9)] + [f"D{i}" for i in range(4, 9)] + ["E6", "E7", "E8"])
def test_du_val_proper(name):
    assert is_proper(corpus.duval(name)).is_proper


def test_evaluation_outside_dual():
    with pytest.raises(DivisorError, match="unbounded below"):
        evaluate_coefficients(corpus.duval("A1"), (-1,))


def test_empty_coefficient():
    d = PPDivisor.build([(1,)], {"0": [(F(1, 2),)], "inf": EMPTY}, rank_k=1)
    assert d.support == ["0", "inf"]
    assert not d.has_complete_locus
    assert is_proper(d).is_proper
    with pytest.raises(DivisorError):
        degree(d, (1,))
    with pytest.raises(DivisorError, match="complete locus"):
        klt_necessary_check(d)


def test_klt_needs_good_action():
    d = PPDivisor.build([(1, 0)], {"0": [(F(1, 2), 0)]}, rank_k=2)
    with pytest.raises(DivisorError, match="good-action"):
        klt_necessary_check(d)


def test_cone_over_point():
    d = corpus.trivial_rank2()
    assert set(cone_over_point(d, "0").rays) == {(0, -1, 1), (0, 11, 8), (5, 2, 1)}
    assert set(cone_over_point(d, "1").rays) == {(0, -1, 1), (0, 11, 8), (3, 1, 1)}
    assert set(cone_over_point(d, "inf").rays) == {(0, -1, 1), (0, 11, 8), (1, 0, 0), (1, 1, 0)}


def test_mu_profile():
    assert mu_profile(corpus.trivial_rank2()) == {"0": 5, "1": 3, "inf": 1}
    assert mu_profile(corpus.duval("E8")) == {"0": 3, "1": 5, "inf": 2}


@pytest.mark.parametrize("m", [(2, 3, 3), (2, 3, 4), (2, 3, 5), (2, 2, 7), (1, 4, 9)])
def test_klt_passes_platonic(m):
    v = klt_necessary_check(corpus.logterminal(m))
    assert v.passed
    assert v.total < 2
    assert platonic_triple_check(m)


def test_klt_fails_237():
    v = klt_necessary_check(corpus.logterminal((2, 3, 7)))
    assert not v.passed
    assert v.total == F(85, 42)
    assert not platonic_triple_check((2, 3, 7))


def test_klt_boundary_is_exact():
    passed, total, margin = klt_from_mus([2, 3, 6])
    assert total == 2 and not passed and margin == 0
    passed, total, _ = klt_from_mus([2, 4, 4])
    assert total == 2 and not passed


def test_platonic_permutations():
    assert platonic_triple_check((5, 2, 3))
    assert platonic_triple_check((9, 2, 2))
    assert not platonic_triple_check((3, 3, 3))
    assert not platonic_triple_check((2, 3))


rat = st.fractions(min_value=-2, max_value=2, max_denominator=6)


@given(
    st.lists(st.lists(st.tuples(rat, rat), min_size=1, max_size=3), min_size=1, max_size=4),
    st.tuples(st.integers(0, 6), st.integers(0, 6)),
    st.tuples(st.integers(0, 6), st.integers(0, 6)),
)
@settings(max_examples=80, deadline=None)
def test_evaluation_is_superadditive(coeffs, a, b):
    tail_gens = [(1, 0), (1, 3)]
    d = PPDivisor.build(tail_gens, {str(i): pts for i, pts in enumerate(coeffs)})
    ua = (a[0] * 3 - a[1], a[1])
    ub = (b[0] * 3 - b[1], b[1])
    assume(d.tail.dual.contains(ua) and d.tail.dual.contains(ub))
    sa, sb = evaluate_coefficients(d, ua), evaluate_coefficients(d, ub)
    s = evaluate_coefficients(d, tuple(x + y for x, y in zip(ua, ub)))
    for p in s:
        assert s[p] >= sa[p] + sb[p]
    assert degree(d, tuple(2 * x for x in ua)) == 2 * degree(d, ua)


def test_fan_warnings_and_points():
    a = rank_one({"0": F(1, 2), "inf": F(1, 3)})
    b = PPDivisor.build([(-1,)], {"1": [(F(1, 2),)]}, rank_k=1)
    f = DivisorialFanP1(1, (a, b))
    assert f.points == ["0", "inf", "1"]
    assert any("not verified" in w for w in f.warnings)
    with pytest.raises(DivisorError):
        DivisorialFanP1(1, ())


def test_tail_mismatch_rejected():
    from tvpi.polyhedral import Cone, Polyhedron

    tail = Cone.from_generators([(1,)], 1)
    other = Cone.from_generators([(-1,)], 1)
    with pytest.raises(DivisorError):
        PPDivisor(1, tail, {"0": Polyhedron(1, ((0,),), other)})
