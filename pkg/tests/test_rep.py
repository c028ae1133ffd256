from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from satake_gl2.exact import PolyA, mat_mul, mat_eq
from satake_gl2.rep import (
    CoweightPair, act, character, commutation_ok, group_lower_unipotent, irrep,
    valid_pairs, verify_conjugation,
)

pairs = st.integers(0, 6).flatmap(
    lambda l: st.integers(-4, 4).map(lambda k: CoweightPair(l, l + 2 * k)))


def test_invalid_pairs():
    with pytest.raises(ValueError):
        CoweightPair(1, 0)
    with pytest.raises(ValueError):
        CoweightPair(-1, 1)


def test_defining_representation():
    rep = irrep((1, 1))
    assert rep.e == ((0, 1), (0, 0))
    assert rep.f == ((0, 0), (1, 0))
    # act is the identity map on the defining representation
    A = [[2, 3], [5, 7]]
    M = act(rep, A)
    assert [[x.coeff(0) for x in r] for r in M] == A


def test_valid_pairs_count():
    # lam in 0..2, |mu| <= 2 with matching parity: 3 + 2 + 3
    assert len(valid_pairs(2, 2)) == 8


def test_conjugation():
    assert verify_conjugation()
    assert verify_conjugation(Fraction(5, 3))


def test_character():
    ch = character(irrep((2, 0)))
    assert dict(ch.items()) == {(-2, 0): 1, (0, 0): 1, (2, 0): 1}


@given(pairs)
def test_commutation_relations(p):
    assert commutation_ok(irrep(p))


@given(pairs, st.integers(-3, 3), st.integers(-3, 3))
def test_act_is_lie_hom(p, x, y):
    rep = irrep(p)
    A = [[x, 1], [y, 2]]
    B = [[0, y], [1, x]]
    AB = [[sum(A[i][k] * B[k][j] for k in range(2)) - sum(B[i][k] * A[k][j] for k in range(2))
           for j in range(2)] for i in range(2)]
    lhs = act(rep, AB)
    rA, rB = act(rep, A), act(rep, B)
    rhs = [[u - v for u, v in zip(r1, r2)] for r1, r2 in zip(mat_mul(rA, rB), mat_mul(rB, rA))]
    assert mat_eq(lhs, rhs)


@given(pairs, st.integers(-3, 3), st.integers(-3, 3))
def test_group_unipotent_is_homomorphism(p, s, t):
    rep = irrep(p)
    lhs = mat_mul(group_lower_unipotent(rep, s), group_lower_unipotent(rep, t))
    assert mat_eq(lhs, group_lower_unipotent(rep, s + t))
