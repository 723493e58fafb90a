from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from catkit.braids import BraidWord, conjugate, jones_from_braid, stabilize
from catkit.laurent import ONE, Q, V
from catkit.sparse import SparseMat, kron
from catkit.ybrep import (EnhancedYB, HeckeParams, YBOp, braid_rep, builtin_jones,
                          check_hecke, check_hecke_algebroid, check_ybe, enhancement_checks,
                          eyb_invariant, flip_matrix, flip_op, identity_op, jones_R,
                          markov_trace)


def test_builtin_satisfies_ybe_and_hecke():
    E = builtin_jones()
    assert check_ybe(E.yb)
    assert check_hecke(E.yb, HeckeParams(1), "equal")
    R = E.yb.R
    assert R @ R == R.scale(Q - 1) + SparseMat.identity(4).scale(Q)


def test_enhancement_conditions():
    assert all(enhancement_checks(builtin_jones()).values())


def test_flip_and_identity_are_yb():
    for d in (1, 2, 3):
        assert check_ybe(flip_op(d))
        assert check_ybe(identity_op(d))
    assert check_hecke(flip_op(2), HeckeParams(1, 0), "distinct")


def test_hecke_rejects_non_quadratic():
    R = SparseMat.diagonal([1, 2, 3, 4])
    assert not check_hecke(YBOp(2, R), HeckeParams(1), "equal")
    with pytest.raises(ValueError):
        check_hecke(YBOp(2, R), HeckeParams(1), "other")


def test_scaled_flip_distinct_case():
    # (v^{rs} P)^2 = q^{rs}
    op = YBOp(2, flip_op(2).R.scale(V ** 2))
    assert check_hecke(op, HeckeParams(1, 2), "distinct")
    assert not check_hecke(op, HeckeParams(1, 1), "distinct")


def test_hecke_algebroid_two_labels():
    R = jones_R()
    dims = {"a": 2, "b": 1}
    ys = {("a", "a"): R, ("b", "b"): SparseMat.scalar(Q),
          ("a", "b"): flip_matrix(2, 1), ("b", "a"): flip_matrix(1, 2)}
    d = {("a", "a"): Q, ("b", "b"): ONE - 1, ("a", "b"): ONE, ("b", "a"): ONE}
    e = {"a": Q - 1, "b": Q}
    assert check_hecke_algebroid(ys, dims, d, e)
    ys[("a", "b")] = flip_matrix(2, 1).scale(2)
    assert not check_hecke_algebroid(ys, dims, d, e)


def test_braid_rep_is_homomorphism():
    op = builtin_jones().yb
    a, b = BraidWord(3, (1, -2)), BraidWord(3, (2, 2, 1))
    assert braid_rep(BraidWord(3, a.word + b.word), op) == braid_rep(a, op) @ braid_rep(b, op)
    assert braid_rep(BraidWord(3, (1, -1)), op) == SparseMat.identity(8)


def test_braid_relation_in_representation():
    op = builtin_jones().yb
    assert braid_rep(BraidWord(3, (1, 2, 1)), op) == braid_rep(BraidWord(3, (2, 1, 2)), op)
    far = braid_rep(BraidWord(4, (1, 3)), op)
    assert far == braid_rep(BraidWord(4, (3, 1)), op)


def test_unknot_normalization():
    E = builtin_jones()
    assert eyb_invariant(BraidWord(1, ()), E) == ONE
    assert markov_trace(BraidWord(1, ()), E) == -(V + V ** -1)


@st.composite
def braids(draw, max_strands: int = 4, max_len: int = 8):
    n = draw(st.integers(2, max_strands))
    letters = st.integers(1, n - 1).flatmap(lambda i: st.sampled_from([i, -i]))
    return BraidWord(n, tuple(draw(st.lists(letters, max_size=max_len))))


@settings(max_examples=25, deadline=None)
@given(braids())
def test_invariant_matches_oracle(b):
    assert eyb_invariant(b, builtin_jones()) == jones_from_braid(b)


@settings(max_examples=25, deadline=None)
@given(braids(), st.lists(st.integers(1, 3), max_size=3), st.sampled_from([1, -1]))
def test_markov_moves(b, cw, sign):
    E = builtin_jones()
    c = BraidWord(b.strands, tuple(x for x in cw if x < b.strands))
    base = eyb_invariant(b, E)
    assert eyb_invariant(conjugate(b, c), E) == base
    assert eyb_invariant(stabilize(b, sign), E) == base


def test_trivial_enhancement_counts_components():
    # flip with mu = 1, alpha = beta = 1: trace is d^(number of components)
    E = EnhancedYB(flip_op(2), SparseMat.identity(2), ONE, ONE)
    assert all(enhancement_checks(E).values())
    assert markov_trace(BraidWord(2, (1, 1)), E) == 4 * ONE
    assert eyb_invariant(BraidWord(3, (1, 2)), E) == ONE


def test_kron_generator_placement():
    op = builtin_jones().yb
    I = SparseMat.identity(2)
    assert braid_rep(BraidWord(3, (2,)), op) == kron(I, op.R)


def test_distinct_case_with_zero_parameters():
    assert check_hecke(identity_op(2), HeckeParams(0, 0), "distinct")
    assert check_hecke(flip_op(2), HeckeParams(0, 0), "distinct")
