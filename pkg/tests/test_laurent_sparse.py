from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from catkit.laurent import ONE, Q, V, ZERO, LaurentPoly, format_poly
from catkit.sparse import (DimensionError, SparseMat, determinant, kron, kron_all,
                           mat_inverse, partial_trace, trace)

from strategies import matrices, polys


def test_basic_arithmetic():
    p = V + V ** -1
    assert p * p == V ** 2 + 2 + V ** -2
    assert (Q - 1) * (Q + 1) == Q ** 2 - 1
    assert LaurentPoly({0: 0, 3: 0}) == ZERO
    assert not ZERO and ONE


def test_inverse_only_for_units():
    assert (-(V ** 3)).inverse() == -(V ** -3)
    with pytest.raises(ZeroDivisionError):
        (V + 1).inverse()


def test_divexact():
    assert ((V + 1) * (V ** 2 - V ** -1)).divexact(V + 1) == V ** 2 - V ** -1
    with pytest.raises(ValueError):
        (V ** 2 + 1).divexact(V + 1)


def test_eval_and_substitute():
    assert (Q + 1).eval_q(3) == 4
    assert (V ** 2 + V ** -2).substitute(-1) == V ** -2 + V ** 2
    assert V.evaluate(Fraction(1, 2)) == Fraction(1, 2)


def test_json_round_trip_and_format():
    p = V ** -2 + V ** -6 - V ** -8
    assert LaurentPoly.from_json(p.to_json()) == p
    assert LaurentPoly.from_json(3) == LaurentPoly(3)
    assert format_poly(p) == "v^-2 + v^-6 - v^-8"
    assert format_poly(ZERO) == "0"


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a - a == ZERO


@given(polys, polys)
def test_divexact_inverts_multiplication(a, b):
    if b:
        assert (a * b).divexact(b) == a


def test_kron_layout_is_row_major():
    A = SparseMat.from_dense([[1, 2], [3, 4]])
    B = SparseMat.identity(2)
    K = kron(A, B)
    assert K[(0, 2)] == LaurentPoly(2) and K[(1, 3)] == LaurentPoly(2)
    assert K[(2, 0)] == LaurentPoly(3)


def test_shape_errors():
    with pytest.raises(DimensionError):
        SparseMat.identity(2) @ SparseMat.identity(3)
    with pytest.raises(DimensionError):
        SparseMat.identity(2) + SparseMat.identity(3)


@settings(max_examples=40)
@given(st.data())
def test_kron_mixed_product(data):
    A = data.draw(matrices(max_dim=2))
    C = data.draw(matrices(nrows=A.ncols, max_dim=2))
    B = data.draw(matrices(max_dim=2))
    D = data.draw(matrices(nrows=B.ncols, max_dim=2))
    assert kron(A, B) @ kron(C, D) == kron(A @ C, B @ D)


@settings(max_examples=40)
@given(st.data())
def test_partial_trace_of_product_state(data):
    A = data.draw(matrices(nrows=2, ncols=2))
    B = data.draw(matrices(nrows=3, ncols=3))
    AB = kron(A, B)
    assert partial_trace(AB, 2, [2, 3]) == A.scale(trace(B))
    assert partial_trace(AB, 1, [2, 3]) == B.scale(trace(A))
    assert trace(AB) == trace(A) * trace(B)


def test_partial_trace_sites_are_one_based():
    with pytest.raises((ValueError, DimensionError)):
        partial_trace(SparseMat.identity(4), 0, [2, 2])


def test_inverse_of_unimodular_matrix():
    A = SparseMat.from_dense([[V, 1], [0, V ** -1]])
    assert determinant(A) == ONE
    assert A @ mat_inverse(A) == SparseMat.identity(2)


def test_inverse_needs_unit_determinant():
    with pytest.raises(ZeroDivisionError):
        mat_inverse(SparseMat.from_dense([[1, 1], [1, -1]]))


@settings(max_examples=30)
@given(matrices(nrows=3, ncols=3, max_dim=3), matrices(nrows=3, ncols=3, max_dim=3))
def test_determinant_multiplicative(A, B):
    assert determinant(A @ B) == determinant(A) * determinant(B)


def test_json_round_trip_matrix():
    A = SparseMat(2, 3, {(0, 1): V, (1, 2): Q - 1})
    assert SparseMat.from_json(A.to_json()) == A
    assert kron_all([SparseMat.identity(2)] * 3) == SparseMat.identity(8)


def test_partial_trace_identity():
    assert partial_trace(SparseMat.identity(4), 1, [2, 2]) == SparseMat.identity(2).scale(2)
