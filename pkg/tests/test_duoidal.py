from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from catkit import duoidal as dd

CATS = dd.sample_categories()


def test_category_validation():
    with pytest.raises(dd.CategoryError):
        # f: a -> b and g: b -> c without a composite
        dd.category_from_json({"objects": ["a", "b", "c"],
                               "morphisms": {"f": ["a", "b"], "g": ["b", "c"]}})
    with pytest.raises(dd.CategoryError):
        # e∘e = 1 and e∘e = e cannot both hold; a non-associative table
        dd.category_from_json({"objects": ["a"], "morphisms": {"e": ["a", "a"], "h": ["a", "a"]},
                               "compose": [["e", "e", "h"], ["e", "h", "e"], ["h", "e", "1a"],
                                           ["h", "h", "e"]]})


def test_composition_in_composable_pair():
    cat = CATS["composable"]
    assert cat.compose("g", "f") == "gf"
    assert cat.compose("g", "1b") == "g"
    assert ("f", "g") in cat.factorizations("gf")


def test_walking_arrow_counts():
    cat = dd.walking_arrow()
    T = dd.terminal_scheme(cat)
    # (f, f) = 1_b f = f 1_a, so X ∗ X has two cells there
    assert len(dd.ds_star(T, T).at(("f", "f"))) == 2
    only_f = dd.DerivationScheme(cat, {("f", "f"): ("x",)})
    assert dd.ds_star(only_f, only_f).size() == 0
    two = dd.DerivationScheme(cat, {("f", "f"): ("x", "y")})
    assert len(dd.ds_circ(two, two).at(("f", "f"))) == 4


@pytest.mark.parametrize("name", sorted(CATS))
def test_unit_coherence(name):
    checks = dd.coherence_checks(CATS[name])
    assert all(checks.values()), checks


@pytest.mark.parametrize("name", sorted(CATS))
def test_units_and_associators_bijective(name):
    cat = CATS[name]
    rng = random.Random(len(name))
    schemes = [dd.random_scheme(cat, rng, tag=t) for t in "xyz"] + [dd.terminal_scheme(cat)]
    assert all(dd.unit_and_assoc_checks(cat, schemes).values())


def test_star_unit_is_exact():
    for cat in CATS.values():
        X = dd.terminal_scheme(cat)
        J = dd.unit_J(cat)
        assert dd.ds_star(J, X).size() == X.size() == dd.ds_star(X, J).size()
        one = dd.unit_1(cat)
        assert dd.ds_circ(one, X).size() == X.size()


@settings(max_examples=15, deadline=None)
@given(st.sampled_from(sorted(CATS)), st.integers(0, 10 ** 6))
def test_interchange_is_natural(name, seed):
    cat = CATS[name]
    rng = random.Random(seed)
    X, X2, Y, Y2 = (dd.random_scheme(cat, rng, tag=t) for t in "abcd")
    f, f2, g, g2 = (dd.random_map(S, rng, tag=t) for S, t in zip((X, X2, Y, Y2), "pqrs"))
    assert dd.interchange_natural(f, f2, g, g2)


@pytest.mark.parametrize("name", sorted(CATS))
def test_codiscrete_and_locally_discrete_are_duoids(name):
    cat = CATS[name]
    for D in (dd.codiscrete_duoid(cat, 1), dd.codiscrete_duoid(cat, 2),
              dd.locally_discrete_duoid(cat)):
        assert dd.duoid_validate(D).ok
        assert dd.two_category_check(D)


@pytest.mark.parametrize("name", ["arrow", "Z2", "composable"])
def test_broken_interchange_fails_both(name):
    D = dd.broken_interchange_duoid(CATS[name], 2)
    rep = dd.duoid_validate(D)
    assert not rep.ok
    assert "mu_v preserves products" in rep.failures
    assert not dd.two_category_check(D)


@settings(max_examples=20, deadline=None)
@given(st.sampled_from(sorted(CATS)), st.sampled_from(["mu_h", "mu_v", "eta_h", "eta_v"]),
       st.integers(0, 10 ** 6))
def test_validate_iff_two_category(name, which, seed):
    D = dd.codiscrete_duoid(CATS[name], 3)
    bad = dd.corrupt_duoid(D, which, random.Random(seed))
    assert dd.duoid_validate(bad).ok == dd.two_category_check(bad)
    assert not dd.duoid_validate(bad).ok


def test_scheme_map_validation():
    cat = dd.walking_arrow()
    X = dd.DerivationScheme(cat, {("f", "f"): ("x",)})
    with pytest.raises(dd.CategoryError):
        dd.SchemeMap(X, X, {})
    with pytest.raises(dd.CategoryError):
        dd.SchemeMap(X, X, {(("f", "f"), "x"): "nope"})
    with pytest.raises(dd.CategoryError):
        dd.DerivationScheme(cat, {("f", "1a"): ("x",)})


def test_scheme_json_round_trip():
    cat = CATS["parallel"]
    X = dd.DerivationScheme(cat, {("f", "g"): ("x", "y"), ("g", "g"): ("z",)})
    assert dd.scheme_from_json(cat, X.to_json()).same_as(X)


def test_duoid_from_json():
    cat = CATS["arrow"]
    assert dd.duoid_validate(dd.duoid_from_json(cat, {"kind": "codiscrete", "k": 2})).ok
    with pytest.raises(dd.CategoryError):
        dd.duoid_from_json(cat, {"kind": "mystery"})
