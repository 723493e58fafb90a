from __future__ import annotations

import random
from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from catkit import groups as g
from catkit import mackey as mk

SMALL = g.small_groups(8)


def test_small_group_orders():
    assert sorted(G.order for G in SMALL) == [1, 2, 3, 4, 4, 5, 6, 6, 7, 8, 8, 8, 8, 8]
    assert len(SMALL) == 14


@pytest.mark.parametrize("name,count,classes", [("S3", 6, 4), ("D4", 10, 8), ("Q8", 6, 6),
                                                ("S4", 30, 11), ("V4", 5, 5)])
def test_subgroup_counts(name, count, classes):
    G = g.named_group(name)
    assert len(G.subgroups) == count
    assert len(G.subgroup_classes()) == classes


def test_group_from_json_forms():
    G = g.group_from_json({"permutations": [[1, 2, 0], [1, 0, 2]]})
    assert G.order == 6 and not G.is_abelian()
    H = g.group_from_json({"table": [[0, 1], [1, 0]]})
    assert H.order == 2
    with pytest.raises(g.GroupError):
        g.group_from_json({"table": [[0, 1], [0, 1]]})
    with pytest.raises(g.GroupError):
        g.named_group("nope")


def test_permutation_composition_convention():
    G = g.symmetric(3)
    p = G.perms
    for a in range(6):
        assert G.m(G.inv[a], a) == G.identity
        for b in range(6):
            # (gh)(x) = g(h(x))
            assert p[G.mul[a][b]] == tuple(p[a][p[b][i]] for i in range(3))


def test_double_cosets_partition_group():
    G = g.named_group("S4")
    for K in G.subgroups[::5]:
        for H in G.subgroups[::4]:
            reps = g.double_cosets(G, K, H)
            cells = [g.double_coset(G, K, x, H) for x in reps]
            assert sum(len(c) for c in cells) == G.order
            assert frozenset().union(*cells) == frozenset(range(G.order))


def test_gset_from_orbits_and_transversal():
    G = g.named_group("S3")
    X = g.gset_from_json(G, {"orbits": [[], list(range(6))]})
    assert X.size == 6 + 1
    assert len(X.orbits) == 2
    tr = X.transversal
    for o in X.orbits:
        assert tr[o[0]] == G.identity


@pytest.mark.parametrize("G", SMALL[:10], ids=lambda G: G.name)
def test_mackey_identity_all_pairs(G):
    for H in G.subgroups:
        chi = g.permutation_character(G, H, G.subgroups[0])
        for K in G.subgroups:
            assert g.mackey_identity_check(G, H, K, chi)


def test_induction_degree_and_frobenius():
    G = g.named_group("D4")
    for H in G.subgroups:
        ind = g.induce(G, H, {h: Fraction(1) for h in H})
        assert ind[G.identity] == G.order // len(H)
        assert g.is_class_function(G, frozenset(range(G.order)), ind)


def test_table_of_marks_c2():
    assert mk.table_of_marks(g.cyclic(2)) in ([[2, 0], [1, 1]], [[2, 1], [0, 1]])


def test_burnside_examples():
    C2 = g.cyclic(2)
    free = g.regular(C2)
    assert mk.burnside_mul(free, free) == Counter({frozenset({0}): 2})
    S3 = g.symmetric(3)
    c2 = next(H for H in S3.subgroups if len(H) == 2)
    c3 = next(H for H in S3.subgroups if len(H) == 3)
    prod = mk.burnside_mul(g.coset_space(S3, c2), g.coset_space(S3, c3))
    assert prod == Counter({frozenset({S3.identity}): 1})


def _random_gset(G, rng):
    X = g.empty_gset(G)
    for _ in range(rng.randint(1, 2)):
        X = g.disjoint_union(X, g.coset_space(G, rng.choice(G.subgroups)))
    return X


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(["C4", "V4", "S3", "D4"]), st.integers(0, 10 ** 6))
def test_burnside_vs_direct(name, seed):
    G = g.named_group(name)
    rng = random.Random(seed)
    X, Y = _random_gset(G, rng), _random_gset(G, rng)
    direct = mk.orbit_decomposition(g.product_gset(X, Y))
    assert mk.burnside_mul(X, Y) == direct
    assert mk.burnside_mul(Y, X) == direct
    assert mk.decompose_marks(G, mk.marks(X)) == mk.orbit_decomposition(X)


def test_format_orbit_types():
    C2 = g.cyclic(2)
    assert mk.format_orbit_types(C2, Counter({frozenset({0}): 1})) == "1*[G/{0}]"


def test_span_composition_and_identity():
    G = g.cyclic(2)
    X, P = g.regular(G), g.point(G)
    s = mk.Span(X, X, P, tuple(range(2)), mk.terminal_map(X))
    t = mk.Span(P, X, X, mk.terminal_map(X), tuple(range(2)))
    st_ = mk.span_compose(s, t)
    assert st_.S.size == 4
    assert mk.spans_isomorphic(mk.span_compose(mk.identity_span(X), s), s)
    assert mk.spans_isomorphic(mk.span_compose(s, mk.identity_span(P)), s)


def test_span_rejects_non_equivariant_leg():
    G = g.cyclic(2)
    X = g.regular(G)
    with pytest.raises(g.GroupError):
        mk.Span(X, X, X, (0, 0), (0, 1))


@pytest.mark.parametrize("name", ["C2", "C4", "V4", "S3", "D4", "Q8"])
def test_fixed_point_functors_are_green(name):
    G = g.named_group(name)
    for R in (g.regular(G), g.point(G)):
        rep = mk.mackey_axioms_validate(mk.fixed_point_mackey(R))
        assert rep.ok, rep.summary()


@pytest.mark.parametrize("name", ["C2", "S3", "D4"])
def test_burnside_and_trivial_functors(name):
    G = g.named_group(name)
    assert mk.mackey_axioms_validate(mk.burnside_mackey(G)).ok
    assert mk.mackey_axioms_validate(mk.trivial_mackey(G), algebra=False).ok
    assert mk.mackey_axioms_validate(mk.zero_mackey(G), algebra=False).ok


def test_corrupted_transfer_detected():
    G = g.symmetric(3)
    M = mk.fixed_point_mackey(g.regular(G))
    e = frozenset({G.identity})
    bad = mk.corrupt(M, (frozenset(range(6)), e), "t")
    rep = mk.mackey_axioms_validate(bad)
    assert not rep.ok
    assert not rep.passed("4")


def test_dress_by_point_is_identity():
    G = g.cyclic(2)
    M = mk.fixed_point_mackey(g.regular(G))
    D = mk.dress_construct(M, g.point(G))
    assert D.dims == M.dims
    assert D.t == M.t and D.r == M.r


def test_dress_by_coset_space_is_mackey():
    G = g.symmetric(3)
    c2 = next(H for H in G.subgroups if len(H) == 2)
    D = mk.dress_construct(mk.fixed_point_mackey(g.point(G)), g.coset_space(G, c2))
    assert mk.mackey_axioms_validate(D, algebra=False).ok
    # M_Z(H) = k[(G/H × Z)/G]
    for H in G.subgroups:
        X = g.product_gset(g.coset_space(G, H), g.coset_space(G, c2))
        assert D.dims[H] == len(X.orbits)


def test_box_unit_law():
    G = g.cyclic(2)
    M = mk.fixed_point_mackey(g.regular(G))
    J = mk.burnside_mackey(G)
    assert mk.box_product(J, M).dims_by_class() == M.dims_by_class()
    assert mk.box_product(M, M).dims_by_class() == [(frozenset({0}), 4), (frozenset({0, 1}), 2)]
    Z = mk.zero_mackey(G)
    assert all(d == 0 for _, d in mk.box_product(Z, M).dims_by_class())


def test_box_unit_law_s3():
    G = g.symmetric(3)
    M = mk.fixed_point_mackey(g.regular(G))
    assert mk.box_product(mk.burnside_mackey(G), M).dims_by_class() == M.dims_by_class()


def test_box_cap():
    with pytest.raises(ValueError):
        mk.box_product(mk.zero_mackey(g.dihedral(4)), mk.zero_mackey(g.dihedral(4)))
