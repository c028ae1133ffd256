from fractions import Fraction

from hypothesis import given, strategies as st

from satake_gl2.coherent import (
    FULL, V_ZERO, Z_V, InvariantSupportLabel, ORBIT_CLOSURES, PEquivFreeModule,
    PGroupData, apply_lie_p, classify_invariant_support, descends_to_line,
    equivariant_hom_graded, equivariant_hom_piece, gl2_invariants_bidegree,
    invariants_of_Z_quotient, lie_p_action, orbit_of_point, pairing,
    stabilizer_check, support_lattice, tangent_span_check, tilde_F,
)
from satake_gl2.exact import PolyA
from satake_gl2.modules import hom_oracle, standard_module
from satake_gl2.rep import CoweightPair

pairs = st.integers(0, 3).flatmap(
    lambda l: st.integers(-2, 2).map(lambda k: CoweightPair(l, l + 2 * k)))
small = st.integers(-3, 3)


def test_lie_action_examples():
    assert apply_lie_p((0, 0), 1, 0, {(0, 1, 0): 1}) == {(1, 0, 0): -1}
    assert apply_lie_p((0, 0), 0, 1, {(0, 2, 0): 1}) == {(0, 2, 0): -2}
    assert apply_lie_p((0, 0), 3, 5, {(1, 0, 0): 1}) == {}


def test_point_action_matches_vector_field():
    assert PGroupData.point_action(1, 0, (2, -1)) == (0, -2)
    # U-direction at (2a, -1) with v = 2a u vanishes
    assert PGroupData.point_action(1, 4, (4, -1)) == (0, 0)


@given(pairs, small, small, small, small)
def test_lie_action_is_anti_hom(p, u1, v1, u2, v2):
    # [A, B] for A, B in Lie(P): [[0,u1],[0,v1]], [[0,u2],[0,v2]] -> [[0, u1 v2 - u2 v1], [0, 0]]
    n = 2
    _, A = lie_p_action(p, u1, v1, n)
    _, B = lie_p_action(p, u2, v2, n)
    _, C = lie_p_action(p, u1 * v2 - u2 * v1, 0, n)
    size = len(A)
    AB = [[sum(A[i][k] * B[k][j] for k in range(size)) for j in range(size)] for i in range(size)]
    BA = [[sum(B[i][k] * A[k][j] for k in range(size)) for j in range(size)] for i in range(size)]
    assert [[x - y for x, y in zip(r1, r2)] for r1, r2 in zip(AB, BA)] == [[-x for x in r] for r in C]


def test_hom_examples():
    assert equivariant_hom_graded((0, 0), (0, 0), 10) == {d: 1 for d in range(0, 11, 2)}
    assert equivariant_hom_graded((0, 0), (0, 2), 10) == {}
    oracle = hom_oracle(standard_module((1, 1)), standard_module((1, -1)), 10).dims
    assert equivariant_hom_graded((1, 1), (1, -1), 10) == oracle


@given(pairs, pairs)
def test_hom_agrees_with_oracle(p, q):
    oracle = hom_oracle(standard_module(p), standard_module(q), 12).dims
    assert equivariant_hom_graded(p, q, 12) == {d: v for d, v in oracle.items() if d <= 12}


def test_tilde_F_examples():
    M = tilde_F((1, 1))
    a = PolyA.a()
    assert M.C() == [[PolyA(), PolyA.const(1)], [PolyA(), 2 * a]]
    assert tilde_F((0, 0)).C() == [[PolyA()]]


@given(pairs)
def test_tilde_F_is_standard(p):
    assert tilde_F(p) == standard_module(p)
    assert descends_to_line(p, 2)


def test_stabilizer():
    assert stabilizer_check()
    assert stabilizer_check(0)
    assert stabilizer_check(Fraction(-7, 2))
    assert tangent_span_check() and tangent_span_check(0)


def test_gl2_invariants_examples():
    assert gl2_invariants_bidegree(0, 0)[0] == 1
    dim, basis = gl2_invariants_bidegree(1, 1)
    assert dim == 1 and basis[0] == pairing()
    assert gl2_invariants_bidegree(2, 1) == (0, [])


@given(st.integers(0, 4), st.integers(0, 4))
def test_invariants_are_powers_of_pairing(d1, d2):
    dim, basis = gl2_invariants_bidegree(d1, d2)
    assert dim == int(d1 == d2)
    if dim:
        b, p = basis[0], pairing() ** d1
        e, c = next(iter(p.items()))
        assert b * c == p * b.coeff(e)


def test_quotient_examples():
    assert sum(invariants_of_Z_quotient(1, 8).values()) == 1
    assert sum(invariants_of_Z_quotient(3, 12).values()) == 3
    assert invariants_of_Z_quotient(None, 8) == {0: 1, 2: 1, 4: 1, 6: 1, 8: 1}


def test_support_examples():
    assert classify_invariant_support(Z_V) == {"contained_in_Z": True, "intersection_with_S_dim": 0}
    assert classify_invariant_support(FULL) == {"contained_in_Z": False, "intersection_with_S_dim": 1}
    assert classify_invariant_support(V_ZERO) == {"contained_in_Z": True, "intersection_with_S_dim": -1}
    assert len(support_lattice()) == 7


def test_lattice_closed_under_union():
    labels = support_lattice()
    for x in labels:
        for y in labels:
            assert (x | y) in labels
            res = classify_invariant_support(x | y)
            assert res["contained_in_Z"] == (res["intersection_with_S_dim"] <= 0)


@given(st.tuples(small, small), st.tuples(small, small), st.integers(1, 4), small)
def test_orbits_are_invariant(v, w, beta, alpha):
    # dilating w and acting by g in GL(2) (here upper unipotent times scalar) keeps the orbit
    o = orbit_of_point(v, w)
    g_v = (v[0] + alpha * v[1], v[1])
    g_w = (w[0], w[1] - alpha * w[0])
    assert orbit_of_point(g_v, (beta * g_w[0], beta * g_w[1])) == o
    assert ORBIT_CLOSURES[o] >= {0}


def test_bad_label():
    import pytest
    with pytest.raises(ValueError):
        InvariantSupportLabel(frozenset({3}))


def test_piece_degrees_calibrated():
    m = PEquivFreeModule.of((2, 0))
    assert [m.combined_degree((0, 0, j)) for j in range(3)] == [2, 0, -2]
    assert equivariant_hom_piece((0, 0), (0, 0), 3) == [{(3, 0, 0, 0): 1}]
