from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from catkit.braids import (BraidWord, Permutation, PlanarDiagram, braid_compose, braid_tensor,
                           braiding_gamma, conjugate, free_reduce, jones_from_braid,
                           kauffman_bracket, markov_closure, stabilize, underlying_perm, writhe)
from catkit.laurent import ONE, V


@st.composite
def braids(draw, max_strands: int = 4, max_len: int = 8):
    n = draw(st.integers(2, max_strands))
    letters = st.integers(1, n - 1).flatmap(lambda i: st.sampled_from([i, -i]))
    return BraidWord(n, tuple(draw(st.lists(letters, max_size=max_len))))


# Jones polynomials in t from standard knot tables, with t = v^-2.
JONES = {
    "unknot": (BraidWord(1, ()), ONE),
    "Hopf": (BraidWord(2, (1, 1)), -(V ** -1) - V ** -5),
    "right trefoil": (BraidWord(2, (1, 1, 1)), V ** -2 + V ** -6 - V ** -8),
    "left trefoil": (BraidWord(2, (-1, -1, -1)), V ** 2 + V ** 6 - V ** 8),
    "figure-eight": (BraidWord(3, (1, -2, 1, -2)), V ** 4 - V ** 2 + 1 - V ** -2 + V ** -4),
    "cinquefoil": (BraidWord(2, (1,) * 5),
                   V ** -4 + V ** -8 - V ** -10 + V ** -12 - V ** -14),
}


@pytest.mark.parametrize("name", sorted(JONES))
def test_jones_table(name):
    b, expected = JONES[name]
    assert jones_from_braid(b) == expected


def test_letters_validated():
    with pytest.raises(ValueError):
        BraidWord(2, (2,))
    with pytest.raises(ValueError):
        BraidWord(3, (0,))


def test_permutation_composition_order():
    s = Permutation((2, 1, 3))
    t = Permutation((1, 3, 2))
    assert (s * t)(1) == t(s(1))
    assert (s * s.inverse()) == Permutation.identity(3)
    assert Permutation((2, 3, 1)).cycle_type() == (3,)


def test_underlying_perm_and_writhe():
    b = BraidWord(3, (1, 2))
    assert underlying_perm(b) == Permutation((3, 1, 2))
    assert writhe(BraidWord(3, (1, -2, 1, -2))) == 0


def test_braiding_gamma_permutes_blocks():
    g = braiding_gamma(2, 1)
    assert g.strands == 3
    assert writhe(g) == 2


def test_free_reduce():
    assert free_reduce((1, 2, -2, -1, 1)) == (1,)
    assert free_reduce((1, -1)) == ()


@given(braids(), braids())
def test_compose_and_tensor(a, b):
    if a.strands == b.strands:
        ab = braid_compose(a, b)
        assert writhe(ab) == writhe(a) + writhe(b)
    t = braid_tensor(a, b)
    assert t.strands == a.strands + b.strands
    assert underlying_perm(t) == underlying_perm(a).block_sum(underlying_perm(b))


@given(braids())
def test_components_equal_cycles(b):
    pd = markov_closure(b)
    assert pd.num_components() == len(underlying_perm(b).cycle_type())
    assert pd.writhe() == writhe(b)


@settings(max_examples=30, deadline=None)
@given(braids(max_len=6), braids(max_len=3))
def test_oracle_markov_invariance(b, c):
    if c.strands != b.strands:
        c = BraidWord(b.strands, tuple(x for x in c.word if abs(x) < b.strands))
    base = jones_from_braid(b)
    assert jones_from_braid(conjugate(b, c)) == base
    assert jones_from_braid(stabilize(b, 1)) == base
    assert jones_from_braid(stabilize(b, -1)) == base


def test_mirror_image():
    b = BraidWord(3, (1, 1, -2, 1))
    mirror = BraidWord(3, tuple(-x for x in b.word))
    assert jones_from_braid(mirror) == jones_from_braid(b).substitute(-1)


def test_planar_diagram_json_round_trip():
    pd = markov_closure(BraidWord(3, (1, -2, 1)))
    again = PlanarDiagram.from_json(pd.to_json())
    assert kauffman_bracket(again) == kauffman_bracket(pd)


def test_identity_braid_closure_is_unlink():
    pd = markov_closure(BraidWord(3, ()))
    assert pd.num_components() == 3
    assert jones_from_braid(BraidWord(3, ())) == (-(V + V ** -1)) ** 2


def test_right_trefoil_in_q():
    from catkit.laurent import Q
    assert jones_from_braid(BraidWord(2, (1, 1, 1))) == Q ** -1 + Q ** -3 - Q ** -4
