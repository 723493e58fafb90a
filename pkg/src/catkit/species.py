"""Class functions on the symmetric groupoid and truncated symmetric functions.

A class function of degree ``n`` is a map from partitions of ``n`` (cycle
types) to rationals. Symmetric functions are kept in the power-sum basis,
truncated at a maximum degree.
"""
from __future__ import annotations

import itertools
import random
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, prod
from typing import Mapping

Partition = tuple[int, ...]

DEFAULT_MAXDEG = 8


@lru_cache(maxsize=None)
def partitions(n: int, largest: int | None = None) -> tuple[Partition, ...]:
    """Partitions of ``n`` in reverse lexicographic order."""
    if largest is None:
        largest = n
    if n == 0:
        return ((),)
    out = []
    for k in range(min(n, largest), 0, -1):
        for rest in partitions(n - k, k):
            out.append((k,) + rest)
    return tuple(out)


def normalize_partition(parts) -> Partition:
    p = tuple(sorted((int(x) for x in parts), reverse=True))
    if any(x < 1 for x in p):
        raise ValueError(f"partition parts must be positive: {parts}")
    return p


def multiplicities(lam: Partition) -> Counter:
    return Counter(lam)


def z_lambda(lam: Partition) -> int:
    """Size of the centralizer of a permutation with cycle type ``lam``."""
    return prod(i ** m * factorial(m) for i, m in Counter(lam).items())


def class_size(lam: Partition) -> int:
    return factorial(sum(lam)) // z_lambda(lam)


def _from_counter(c: Mapping[int, int]) -> Partition:
    return tuple(sorted((i for i, m in c.items() for _ in range(m)), reverse=True))


@dataclass(frozen=True)
class ClassFunction:
    n: int
    values: Mapping[Partition, Fraction]

    def __post_init__(self):
        vals = {normalize_partition(k): Fraction(v) for k, v in self.values.items()}
        keys = set(partitions(self.n))
        if set(vals) - keys:
            raise ValueError(f"keys {set(vals) - keys} are not partitions of {self.n}")
        object.__setattr__(self, "values", {lam: vals.get(lam, Fraction(0))
                                            for lam in partitions(self.n)})

    def __call__(self, lam: Partition) -> Fraction:
        return self.values[normalize_partition(lam)]

    def __eq__(self, other) -> bool:
        if not isinstance(other, ClassFunction):
            return NotImplemented
        return self.n == other.n and self.values == other.values

    def __add__(self, other: ClassFunction) -> ClassFunction:
        if self.n != other.n:
            raise ValueError("degree mismatch")
        return ClassFunction(self.n, {k: self.values[k] + other.values[k] for k in self.values})

    def scale(self, c) -> ClassFunction:
        return ClassFunction(self.n, {k: c * x for k, x in self.values.items()})

    @classmethod
    def constant(cls, n: int, value=1) -> ClassFunction:
        return cls(n, {lam: Fraction(value) for lam in partitions(n)})

    @classmethod
    def unit(cls) -> ClassFunction:
        return cls.constant(0)

    @classmethod
    def sign(cls, n: int) -> ClassFunction:
        return cls(n, {lam: (-1) ** (n - len(lam)) for lam in partitions(n)})

    @classmethod
    def random(cls, n: int, rng: random.Random, bound: int = 5) -> ClassFunction:
        return cls(n, {lam: Fraction(rng.randint(-bound, bound), rng.randint(1, 3))
                       for lam in partitions(n)})

    def to_json(self) -> dict:
        return {"n": self.n, "values": {",".join(map(str, k)) or "": str(v)
                                        for k, v in self.values.items()}}


def cauchy_product(f: ClassFunction, g: ClassFunction) -> ClassFunction:
    """Product induced by splitting a set into an invariant subset and its complement.

    An invariant subset of a permutation is a union of its cycles, so the sum
    runs over sub-multisets ``mu`` of the cycle multiset of ``lam``.
    """
    n = f.n + g.n
    out = {}
    for lam in partitions(n):
        m = Counter(lam)
        lengths = sorted(m)
        total = Fraction(0)
        for choice in itertools.product(*(range(m[i] + 1) for i in lengths)):
            sub = dict(zip(lengths, choice))
            if sum(i * k for i, k in sub.items()) != f.n:
                continue
            mu = _from_counter(sub)
            rest = _from_counter({i: m[i] - sub[i] for i in lengths})
            weight = prod(comb(m[i], sub[i]) for i in lengths)
            total += weight * f.values[mu] * g.values[rest]
        out[lam] = total
    return ClassFunction(n, out)


def permutation_of_type(lam: Partition) -> list[int]:
    """A permutation of ``range(n)`` with cycle type ``lam`` (cycles on consecutive blocks)."""
    perm, start = [], 0
    for k in lam:
        perm.extend(start + (j + 1) % k for j in range(k))
        start += k
    return perm


def cycle_type_on(perm: list[int], subset) -> Partition:
    subset = set(subset)
    seen, out = set(), []
    for x in subset:
        if x in seen:
            continue
        k, y = 0, x
        while y not in seen:
            seen.add(y)
            y = perm[y]
            k += 1
        out.append(k)
    return tuple(sorted(out, reverse=True))


def cauchy_product_bruteforce(f: ClassFunction, g: ClassFunction) -> ClassFunction:
    """Literal sum over all ``sigma``-invariant subsets ``S`` of an ``n``-set."""
    n = f.n + g.n
    out = {}
    for lam in partitions(n):
        sigma = permutation_of_type(lam)
        total = Fraction(0)
        for mask in range(1 << n):
            S = [i for i in range(n) if mask >> i & 1]
            if {sigma[i] for i in S} != set(S):
                continue
            if len(S) != f.n:
                continue
            comp = [i for i in range(n) if not mask >> i & 1]
            total += f(cycle_type_on(sigma, S)) * g(cycle_type_on(sigma, comp))
        out[lam] = total
    return ClassFunction(n, out)


def hadamard_product(f: ClassFunction, g: ClassFunction) -> ClassFunction:
    if f.n != g.n:
        raise ValueError(f"degree mismatch: {f.n} vs {g.n}")
    return ClassFunction(f.n, {k: f.values[k] * g.values[k] for k in f.values})


# -- symmetric functions ----------------------------------------------------


@dataclass(frozen=True)
class SymFunc:
    """``Σ c_λ p_λ`` with ``|λ| <= maxdeg``."""

    terms: Mapping[Partition, Fraction]
    maxdeg: int = DEFAULT_MAXDEG

    def __post_init__(self):
        clean = {}
        for k, v in self.terms.items():
            lam = normalize_partition(k)
            v = Fraction(v)
            if sum(lam) > self.maxdeg or not v:
                continue
            clean[lam] = clean.get(lam, Fraction(0)) + v
        object.__setattr__(self, "terms", {k: v for k, v in clean.items() if v})

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymFunc):
            return NotImplemented
        return self.terms == other.terms

    def __add__(self, other: SymFunc) -> SymFunc:
        terms = dict(self.terms)
        for k, v in other.terms.items():
            terms[k] = terms.get(k, Fraction(0)) + v
        return SymFunc(terms, min(self.maxdeg, other.maxdeg))

    def __sub__(self, other: SymFunc) -> SymFunc:
        return self + other.scale(-1)

    def scale(self, c) -> SymFunc:
        return SymFunc({k: c * v for k, v in self.terms.items()}, self.maxdeg)

    def __mul__(self, other: SymFunc) -> SymFunc:
        return sym_mul(self, other)

    def constant_term(self) -> Fraction:
        return self.terms.get((), Fraction(0))

    def degree_part(self, n: int) -> SymFunc:
        return SymFunc({k: v for k, v in self.terms.items() if sum(k) == n}, self.maxdeg)

    @classmethod
    def one(cls, maxdeg: int = DEFAULT_MAXDEG) -> SymFunc:
        return cls({(): 1}, maxdeg)

    @classmethod
    def p(cls, *parts: int, maxdeg: int = DEFAULT_MAXDEG) -> SymFunc:
        return cls({tuple(parts): 1}, maxdeg)

    def to_json(self) -> dict:
        return {"maxdeg": self.maxdeg,
                "terms": {",".join(map(str, k)): str(v) for k, v in sorted(self.terms.items())}}

    @classmethod
    def from_json(cls, data) -> SymFunc:
        maxdeg = int(data.get("maxdeg", DEFAULT_MAXDEG))
        terms = {}
        for k, v in data["terms"].items():
            key = tuple(int(x) for x in k.split(",") if x.strip()) if isinstance(k, str) else tuple(k)
            terms[key] = Fraction(v)
        return cls(terms, maxdeg)


def sym_mul(F: SymFunc, G: SymFunc) -> SymFunc:
    N = min(F.maxdeg, G.maxdeg)
    out: dict[Partition, Fraction] = {}
    for a, x in F.terms.items():
        for b, y in G.terms.items():
            if sum(a) + sum(b) > N:
                continue
            lam = normalize_partition(a + b)
            out[lam] = out.get(lam, Fraction(0)) + x * y
    return SymFunc(out, N)


def _dilate(G: SymFunc, k: int, N: int) -> SymFunc:
    """``p_k ∘ G``: replace every ``p_i`` by ``p_{ki}``."""
    return SymFunc({tuple(k * i for i in lam): c for lam, c in G.terms.items()
                    if k * sum(lam) <= N}, N)


def plethysm(F: SymFunc, G: SymFunc) -> SymFunc:
    """Substitution ``F ∘ G`` in the power-sum basis."""
    if G.constant_term():
        raise ValueError("plethysm needs an argument with zero constant term")
    N = min(F.maxdeg, G.maxdeg)
    dilated: dict[int, SymFunc] = {}
    out = SymFunc({}, N)
    for lam, c in F.terms.items():
        term = SymFunc.one(N)
        for k in lam:
            if k not in dilated:
                dilated[k] = _dilate(G, k, N)
            term = sym_mul(term, dilated[k])
            if not term.terms:
                break
        out = out + term.scale(c)
    return out


def char_map(f: ClassFunction, maxdeg: int = DEFAULT_MAXDEG) -> SymFunc:
    """``ch(f) = Σ f(λ) p_λ / z_λ``."""
    if f.n > maxdeg:
        raise ValueError(f"degree {f.n} exceeds truncation {maxdeg}")
    return SymFunc({lam: f.values[lam] / z_lambda(lam) for lam in partitions(f.n)}, maxdeg)


def exponential(maxdeg: int = DEFAULT_MAXDEG) -> SymFunc:
    """The species of sets, ``E = exp(Σ p_k / k)`` = ``Σ_λ p_λ / z_λ``."""
    return SymFunc({lam: Fraction(1, z_lambda(lam)) for n in range(maxdeg + 1)
                    for lam in partitions(n)}, maxdeg)


def nonempty_sets(maxdeg: int = DEFAULT_MAXDEG) -> SymFunc:
    E = exponential(maxdeg)
    return E - SymFunc.one(maxdeg)


def species_counts(F: SymFunc, N: int | None = None) -> list[int]:
    """Labelled structure counts ``|M[n]|`` for ``n = 0..N``."""
    N = F.maxdeg if N is None else N
    out = []
    for n in range(N + 1):
        c = F.terms.get((1,) * n, Fraction(0)) * factorial(n)
        if c.denominator != 1:
            raise ValueError(f"non-integral count {c} in degree {n}")
        out.append(int(c))
    return out


NAMED_SERIES = {
    "E": exponential,
    "E+": nonempty_sets,
    "X": lambda N=DEFAULT_MAXDEG: SymFunc.p(1, maxdeg=N),
}
