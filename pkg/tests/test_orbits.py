import pytest
from hypothesis import given, strategies as st

from satake_gl2.orbits import (
    DominantGL2Coweight, OrbitLabel, check_support_dimension_conditions,
    closure_intersection, fixed_point_bijection_check, iota, iota_preimage, orbit,
    pair_from_s_set, s_set,
)
from satake_gl2.rep import CoweightPair

pairs = st.integers(0, 8).flatmap(
    lambda l: st.integers(-6, 6).map(lambda k: CoweightPair(l, l + 2 * k)))
coweights = st.tuples(st.integers(-5, 5), st.integers(0, 5)).map(
    lambda t: DominantGL2Coweight(t[0] + t[1], t[0]))


def test_labels():
    with pytest.raises(ValueError):
        OrbitLabel(0, 1)
    o = orbit(1, -1)
    assert (o.dim, o.stabilizer_level) == (3, 3)
    assert o.supports(3) and not o.supports(4)


def test_iota_frozen():
    # iota(k, (n1, n2)) = (-n2, -k - n1 - n2)
    assert iota(1, (1, 0)) == OrbitLabel(0, -2)
    assert iota(2, (0, 0)) == OrbitLabel(0, -2)
    assert orbit(0, -2).dim == 2


def test_s_set_examples():
    assert s_set((2, 0)) == [-2, 0, 2]
    assert s_set((0, 4)) == [4]
    assert closure_intersection((0, 0), (0, 2)) is None
    assert closure_intersection((2, 0), (1, 1)) == CoweightPair(1, 1)


def test_bijection():
    assert fixed_point_bijection_check(8)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_support_conditions(k):
    r = check_support_dimension_conditions(k, 3)
    assert r["ok"], r["failures"][:3]
    assert r["dim_X0"] == k


@given(pairs, pairs)
def test_closure_intersection_commutes(p, q):
    assert closure_intersection(p, q) == closure_intersection(q, p)


@given(pairs, pairs)
def test_closure_intersection_is_set_intersection(p, q):
    r = closure_intersection(p, q)
    common = sorted(set(s_set(p)) & set(s_set(q)))
    assert (r is None and not common) or s_set(r) == common


@given(pairs)
def test_s_set_round_trip(p):
    assert pair_from_s_set(s_set(p)) == p


@given(st.integers(1, 5), coweights)
def test_iota_inverse_and_dimension(k, lam):
    label = iota(k, lam)
    assert iota_preimage(k, label) == lam
    assert orbit(label.m, label.l).dim == k + lam.gr_dim
