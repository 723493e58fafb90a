from __future__ import annotations

import random
from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from catkit.species import (ClassFunction, SymFunc, cauchy_product, cauchy_product_bruteforce,
                            char_map, class_size, exponential, hadamard_product, nonempty_sets,
                            partitions, plethysm, species_counts, sym_mul, z_lambda)


def test_partition_counts():
    assert [len(partitions(n)) for n in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]
    assert partitions(0) == ((),)


@pytest.mark.parametrize("n", range(7))
def test_class_sizes_and_z(n):
    assert sum(class_size(lam) for lam in partitions(n)) == factorial(n)
    assert sum(Fraction(1, z_lambda(lam)) for lam in partitions(n)) == 1


def test_z_lambda_values():
    assert z_lambda((1, 1, 1)) == 6
    assert z_lambda((2, 1)) == 2
    assert z_lambda((2, 2)) == 8


def test_constant_product_counts_invariant_subsets():
    h = cauchy_product(ClassFunction.constant(2), ClassFunction.constant(3))
    assert h((1,) * 5) == comb(5, 2)
    # a 5-cycle fixes no 2-subset
    assert h((5,)) == 0
    assert h((2, 2, 1)) == 2


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 3), st.integers(0, 2), st.integers(0, 10 ** 6))
def test_cauchy_matches_bruteforce(a, b, seed):
    rng = random.Random(seed)
    f, g = ClassFunction.random(a, rng), ClassFunction.random(b, rng)
    assert cauchy_product(f, g) == cauchy_product_bruteforce(f, g)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 3), st.integers(0, 3), st.integers(0, 10 ** 6))
def test_ch_is_multiplicative(a, b, seed):
    rng = random.Random(seed)
    f, g = ClassFunction.random(a, rng), ClassFunction.random(b, rng)
    assert char_map(cauchy_product(f, g)) == sym_mul(char_map(f), char_map(g))


def test_cauchy_commutative_and_unit():
    rng = random.Random(0)
    f, g = ClassFunction.random(2, rng), ClassFunction.random(3, rng)
    assert cauchy_product(f, g) == cauchy_product(g, f)
    assert cauchy_product(ClassFunction.unit(), f) == f


def test_hadamard_pointwise():
    s = ClassFunction.sign(3)
    assert hadamard_product(s, s) == ClassFunction.constant(3)
    with pytest.raises(ValueError):
        hadamard_product(s, ClassFunction.sign(2))


def test_ch_of_constant_is_h_n():
    E = exponential(6)
    for n in range(7):
        assert char_map(ClassFunction.constant(n), 6) == E.degree_part(n)


def test_bell_numbers():
    counts = species_counts(plethysm(exponential(), nonempty_sets()))
    assert counts == [1, 1, 2, 5, 15, 52, 203, 877, 4140]


def test_plethysm_with_singleton():
    X = SymFunc.p(1)
    E, Eplus = exponential(), nonempty_sets()
    assert plethysm(X, Eplus) == Eplus
    assert plethysm(E, X) == E
    with pytest.raises(ValueError):
        plethysm(X, E)


def test_counts_of_sets_and_linear_orders():
    assert species_counts(exponential(5)) == [1] * 6
    L = SymFunc({(1,) * n: 1 for n in range(6)}, 5)  # linear orders: sum p_1^n
    assert species_counts(L) == [factorial(n) for n in range(6)]


def test_symfunc_json_round_trip():
    F = plethysm(exponential(4), nonempty_sets(4))
    assert SymFunc.from_json(F.to_json()) == F


def test_bad_class_function_keys():
    with pytest.raises(ValueError):
        ClassFunction(3, {(2,): 1})
