"""Finite groups given by Cayley tables, their subgroups, G-sets and characters.

Elements are the ints ``0..n-1``; ``mul[a][b]`` is the product ``ab``. Groups
built from permutations use ``(gh)(x) = g(h(x))``, so permutation actions are
left actions.
"""
from __future__ import annotations

import itertools
import json
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Mapping, Sequence

MAX_GROUP_ORDER = 24

Subgroup = frozenset


class GroupError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    mul: tuple[tuple[int, ...], ...]
    name: str = ""

    def __post_init__(self):
        n = len(self.mul)
        if n == 0 or any(len(r) != n for r in self.mul):
            raise GroupError("Cayley table must be square and non-empty")
        if any(not 0 <= x < n for r in self.mul for x in r):
            raise GroupError("table entries out of range")
        e = next((a for a in range(n) if all(self.mul[a][b] == b for b in range(n))), None)
        if e is None or any(self.mul[b][e] != b for b in range(n)):
            raise GroupError("no two-sided identity")
        for a in range(n):
            if sorted(self.mul[a]) != list(range(n)):
                raise GroupError(f"row {a} is not a permutation, so inverses fail")
        for a, b, c in itertools.product(range(n), repeat=3):
            if self.mul[self.mul[a][b]][c] != self.mul[a][self.mul[b][c]]:
                raise GroupError(f"associativity fails at {(a, b, c)}")
        object.__setattr__(self, "identity", e)

    identity: int = field(init=False, default=0)

    @property
    def order(self) -> int:
        return len(self.mul)

    @cached_property
    def inv(self) -> tuple[int, ...]:
        e = self.identity
        return tuple(next(b for b in range(self.order) if self.mul[a][b] == e)
                     for a in range(self.order))

    def elements(self) -> range:
        return range(self.order)

    def m(self, *xs: int) -> int:
        out = self.identity
        for x in xs:
            out = self.mul[out][x]
        return out

    def conj(self, g: int, x: int) -> int:
        """``g x g^-1``."""
        return self.m(g, x, self.inv[g])

    def conj_subgroup(self, g: int, H: Subgroup) -> Subgroup:
        """``gHg^-1``."""
        return frozenset(self.conj(g, h) for h in H)

    def element_order(self, g: int) -> int:
        k, x = 1, g
        while x != self.identity:
            x = self.mul[x][g]
            k += 1
        return k

    def is_abelian(self) -> bool:
        return all(self.mul[a][b] == self.mul[b][a] for a in range(self.order) for b in range(a))

    def generated(self, gens: Sequence[int]) -> Subgroup:
        out = {self.identity}
        frontier = list(out)
        while frontier:
            new = []
            for x in frontier:
                for g in gens:
                    y = self.mul[x][g]
                    if y not in out:
                        out.add(y)
                        new.append(y)
            frontier = new
        return frozenset(out)

    def is_subgroup(self, H) -> bool:
        H = set(H)
        return (self.identity in H and all(self.mul[a][b] in H for a in H for b in H)
                and all(self.inv[a] in H for a in H))

    @cached_property
    def subgroups(self) -> tuple[Subgroup, ...]:
        """All subgroups, ordered by size then by sorted elements."""
        if self.order > MAX_GROUP_ORDER:
            raise GroupError(f"order {self.order} exceeds the cap {MAX_GROUP_ORDER}")
        cyclic = {self.generated([g]) for g in self.elements()}
        found = set(cyclic)
        frontier = set(cyclic)
        while frontier:
            new = set()
            for A in frontier:
                for C in cyclic:
                    if not C <= A:
                        J = self.generated(sorted(A | C))
                        if J not in found:
                            new.add(J)
            found |= new
            frontier = new
        return tuple(sorted(found, key=lambda S: (len(S), sorted(S))))

    def subgroup_classes(self) -> list[list[Subgroup]]:
        """Subgroups grouped into conjugacy classes, in the order of ``subgroups``."""
        seen, out = set(), []
        for H in self.subgroups:
            if H in seen:
                continue
            cls = sorted({self.conj_subgroup(g, H) for g in self.elements()},
                         key=lambda S: sorted(S))
            seen.update(cls)
            out.append(cls)
        return out

    def class_rep(self, H: Subgroup) -> Subgroup:
        """The conjugate of ``H`` with the lexicographically smallest sorted elements."""
        return min((self.conj_subgroup(g, H) for g in self.elements()), key=sorted)

    def conjugacy_classes(self) -> list[frozenset[int]]:
        seen, out = set(), []
        for x in self.elements():
            if x in seen:
                continue
            c = frozenset(self.conj(g, x) for g in self.elements())
            seen |= c
            out.append(c)
        return out

    def left_cosets(self, H: Subgroup) -> list[frozenset[int]]:
        """Cosets ``gH`` ordered by smallest element; the coset ``H`` comes first."""
        seen, out = set(), []
        for g in self.elements():
            if g in seen:
                continue
            c = frozenset(self.mul[g][h] for h in H)
            seen |= c
            out.append(c)
        out.sort(key=min)
        return out

    def to_json(self) -> dict:
        return {"name": self.name, "table": [list(r) for r in self.mul]}


def group_from_json(data) -> FiniteGroup:
    if isinstance(data, str):
        data = json.loads(data)
    name = data.get("name", "")
    if "table" in data:
        return FiniteGroup(tuple(tuple(int(x) for x in r) for r in data["table"]), name)
    if "permutations" in data:
        return permutation_group(data["permutations"], name)
    if "named" in data:
        return named_group(data["named"])
    raise GroupError("group JSON needs 'table', 'permutations' or 'named'")


def permutation_group(generators: Sequence[Sequence[int]], name: str = "") -> FiniteGroup:
    """Closure of 0-based permutation tuples, with the identity as element 0."""
    gens = [tuple(g) for g in generators]
    if not gens:
        raise GroupError("need at least one generator (use the identity for the trivial group)")
    n = len(gens[0])
    if any(sorted(g) != list(range(n)) for g in gens):
        raise GroupError("generators must be permutations of the same size")
    ident = tuple(range(n))
    elems = {ident}
    frontier = [ident]
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = tuple(x[g[i]] for i in range(n))
                if y not in elems:
                    elems.add(y)
                    new.append(y)
        frontier = new
        if len(elems) > MAX_GROUP_ORDER * 5:
            raise GroupError("generated group is too large")
    order = sorted(elems)
    index = {p: i for i, p in enumerate(order)}
    table = tuple(tuple(index[tuple(g[h[i]] for i in range(n))] for h in order) for g in order)
    G = FiniteGroup(table, name)
    object.__setattr__(G, "perms", tuple(order))
    return G


def cyclic(n: int) -> FiniteGroup:
    return FiniteGroup(tuple(tuple((a + b) % n for b in range(n)) for a in range(n)), f"C{n}")


def dihedral(n: int) -> FiniteGroup:
    """Symmetries of the ``n``-gon, order ``2n``."""
    rot = tuple((i + 1) % n for i in range(n))
    ref = tuple((-i) % n for i in range(n))
    if n == 2:
        return direct_product(cyclic(2), cyclic(2), name="D2")
    return permutation_group([rot, ref], f"D{n}")


def symmetric(n: int) -> FiniteGroup:
    if n == 1:
        return cyclic(1)
    gens = [tuple([1, 0] + list(range(2, n)))]
    if n > 2:
        gens.append(tuple(list(range(1, n)) + [0]))
    return permutation_group(gens, f"S{n}")


def direct_product(A: FiniteGroup, B: FiniteGroup, name: str = "") -> FiniteGroup:
    nb = B.order
    table = tuple(tuple(A.mul[a1][a2] * nb + B.mul[b1][b2]
                        for a2 in range(A.order) for b2 in range(nb))
                  for a1 in range(A.order) for b1 in range(nb))
    return FiniteGroup(table, name or f"{A.name}x{B.name}")


def quaternion() -> FiniteGroup:
    """``Q8`` with elements ``±1, ±i, ±j, ±k`` encoded as ``2*unit + sign``."""
    units = {(0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
             (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
             (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
             (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0)}

    def enc(sign, u):
        return 2 * u + (0 if sign == 1 else 1)

    table = []
    for x in range(8):
        ux, sx = divmod(x, 2)
        row = []
        for y in range(8):
            uy, sy = divmod(y, 2)
            s, u = units[(ux, uy)]
            sign = s * (-1) ** (sx + sy)
            row.append(enc(sign, u))
        table.append(tuple(row))
    return FiniteGroup(tuple(table), "Q8")


def small_groups(max_order: int = 8) -> list[FiniteGroup]:
    """One group from each isomorphism class of order at most 8."""
    C = cyclic
    out = [C(1), C(2), C(3), C(4), direct_product(C(2), C(2), "C2xC2"), C(5), C(6),
           symmetric(3), C(7), C(8), direct_product(C(4), C(2), "C4xC2"),
           direct_product(direct_product(C(2), C(2)), C(2), "C2xC2xC2"), dihedral(4), quaternion()]
    return [G for G in out if G.order <= max_order]


NAMED_GROUPS = {
    "C1": lambda: cyclic(1), "C2": lambda: cyclic(2), "C3": lambda: cyclic(3),
    "C4": lambda: cyclic(4), "C6": lambda: cyclic(6), "S3": lambda: symmetric(3),
    "D4": lambda: dihedral(4), "Q8": quaternion, "S4": lambda: symmetric(4),
    "V4": lambda: direct_product(cyclic(2), cyclic(2), "V4"),
}


def named_group(name: str) -> FiniteGroup:
    if name not in NAMED_GROUPS:
        raise GroupError(f"unknown group {name!r}; known: {sorted(NAMED_GROUPS)}")
    return NAMED_GROUPS[name]()


# -- double cosets ----------------------------------------------------------


def double_coset(G: FiniteGroup, K: Subgroup, g: int, H: Subgroup) -> frozenset[int]:
    return frozenset(G.m(k, g, h) for k in K for h in H)


def double_cosets(G: FiniteGroup, K: Subgroup, H: Subgroup, within: Subgroup | None = None) -> list[int]:
    """One representative (the smallest element) of each ``KgH`` inside ``within`` (default ``G``)."""
    for S in (K, H):
        if not G.is_subgroup(S):
            raise GroupError("double cosets need subgroups")
    L = sorted(within) if within is not None else list(G.elements())
    seen, reps = set(), []
    for g in L:
        if g in seen:
            continue
        seen |= double_coset(G, K, g, H)
        reps.append(g)
    return reps


# -- G-sets -----------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class GSet:
    """A finite left G-set; ``act[g][x]`` is ``g·x``."""

    group: FiniteGroup
    act: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        G = self.group
        if len(self.act) != G.order:
            raise GroupError("need one row of the action table per group element")
        n = len(self.act[0])
        if any(len(r) != n or sorted(r) != list(range(n)) for r in self.act):
            raise GroupError("each group element must act by a permutation")
        if any(self.act[G.identity][x] != x for x in range(n)):
            raise GroupError("the identity must act trivially")
        for g, h in itertools.product(G.elements(), repeat=2):
            gh = G.mul[g][h]
            if any(self.act[gh][x] != self.act[g][self.act[h][x]] for x in range(n)):
                raise GroupError(f"action not compatible with multiplication at {(g, h)}")

    @property
    def size(self) -> int:
        return len(self.act[0])

    def __len__(self) -> int:
        return self.size

    def stabilizer(self, x: int) -> Subgroup:
        return frozenset(g for g in self.group.elements() if self.act[g][x] == x)

    def fixed_points(self, H) -> list[int]:
        return [x for x in range(self.size) if all(self.act[h][x] == x for h in H)]

    @cached_property
    def orbits(self) -> tuple[tuple[int, ...], ...]:
        """Orbits as sorted tuples, ordered by smallest point (the base point)."""
        seen, out = set(), []
        for x in range(self.size):
            if x in seen:
                continue
            o = tuple(sorted({self.act[g][x] for g in self.group.elements()}))
            seen |= set(o)
            out.append(o)
        return tuple(out)

    @cached_property
    def transversal(self) -> dict[int, int]:
        """For each point ``y`` some ``h`` with ``h·base = y``; the identity for base points."""
        G = self.group
        order = [G.identity] + [g for g in G.elements() if g != G.identity]
        out = {}
        for o in self.orbits:
            b = o[0]
            for h in order:
                out.setdefault(self.act[h][b], h)
        return out

    @cached_property
    def orbit_index(self) -> dict[int, int]:
        return {x: i for i, o in enumerate(self.orbits) for x in o}

    def to_json(self) -> dict:
        return {"action": [list(r) for r in self.act]}


def coset_space(G: FiniteGroup, H: Subgroup) -> GSet:
    """``G/H``; point 0 is the coset ``H``."""
    cosets = G.left_cosets(H)
    where = {g: i for i, c in enumerate(cosets) for g in c}
    act = tuple(tuple(where[G.mul[g][min(c)]] for c in cosets) for g in G.elements())
    return GSet(G, act)


def point(G: FiniteGroup) -> GSet:
    return GSet(G, tuple((0,) for _ in G.elements()))


def empty_gset(G: FiniteGroup) -> GSet:
    return GSet(G, tuple(() for _ in G.elements()))


def regular(G: FiniteGroup) -> GSet:
    return GSet(G, tuple(tuple(G.mul[g][x] for x in G.elements()) for g in G.elements()))


def product_gset(X: GSet, Y: GSet) -> GSet:
    """``X × Y`` with the diagonal action; ``(x, y)`` is point ``x*|Y| + y``."""
    m = Y.size
    act = tuple(tuple(ax[x] * m + ay[y] for x in range(X.size) for y in range(m))
                for ax, ay in zip(X.act, Y.act))
    return GSet(X.group, act)


def disjoint_union(X: GSet, Y: GSet) -> GSet:
    n = X.size
    return GSet(X.group, tuple(tuple(ax) + tuple(n + y for y in ay) for ax, ay in zip(X.act, Y.act)))


def gset_from_json(G: FiniteGroup, data) -> GSet:
    if isinstance(data, str):
        data = json.loads(data)
    if "action" in data:
        return GSet(G, tuple(tuple(int(x) for x in r) for r in data["action"]))
    if "orbits" in data:
        X = empty_gset(G)
        for H in data["orbits"]:
            H = G.generated([int(x) for x in H])
            X = disjoint_union(X, coset_space(G, H))
        return X
    raise GroupError("G-set JSON needs 'action' or 'orbits'")


def is_equivariant(f: Sequence[int], X: GSet, Y: GSet) -> bool:
    if len(f) != X.size or any(not 0 <= y < Y.size for y in f):
        return False
    return all(f[X.act[g][x]] == Y.act[g][f[x]] for g in X.group.elements() for x in range(X.size))


def orbit_types(X: GSet) -> Counter:
    """Multiset of orbit types, each recorded as the conjugacy-class representative of a stabilizer."""
    G = X.group
    return Counter(G.class_rep(X.stabilizer(o[0])) for o in X.orbits)


# -- characters -------------------------------------------------------------


def is_class_function(G: FiniteGroup, H: Subgroup, chi: Mapping[int, Fraction]) -> bool:
    return all(chi[G.conj(h, x)] == chi[x] for h in H for x in H)


def permutation_character(G: FiniteGroup, H: Subgroup, L: Subgroup) -> dict[int, Fraction]:
    """Character of ``H`` on ``H/L``: fixed cosets of each element."""
    return {h: Fraction(sum(1 for x in H if G.m(G.inv[x], h, x) in L), len(L)) for h in H}


def restrict(chi: Mapping[int, Fraction], K: Subgroup) -> dict[int, Fraction]:
    return {k: chi[k] for k in K}


def induce(G: FiniteGroup, H: Subgroup, chi: Mapping[int, Fraction],
           L: Subgroup | None = None) -> dict[int, Fraction]:
    """``Ind_H^L chi(g) = (1/|H|) Σ_{x ∈ L, x^-1 g x ∈ H} chi(x^-1 g x)``."""
    L = frozenset(G.elements()) if L is None else L
    out = {}
    for g in L:
        s = Fraction(0)
        for x in L:
            y = G.m(G.inv[x], g, x)
            if y in H:
                s += chi[y]
        out[g] = s / len(H)
    return out


def conjugate_character(G: FiniteGroup, g: int, chi: Mapping[int, Fraction]) -> dict[int, Fraction]:
    """``(^g chi)(y) = chi(g^-1 y g)`` on ``gHg^-1``."""
    return {G.conj(g, h): x for h, x in chi.items()}


def mackey_identity_check(G: FiniteGroup, H: Subgroup, K: Subgroup,
                          chi: Mapping[int, Fraction]) -> bool:
    """``Res_K Ind_H^G chi == Σ_{g ∈ [K\\G/H]} Ind_{gHg^-1 ∩ K}^K Res (^g chi)``."""
    lhs = restrict(induce(G, H, chi), K)
    rhs = {k: Fraction(0) for k in K}
    for g in double_cosets(G, K, H):
        D = G.conj_subgroup(g, H) & K
        part = induce(G, D, restrict(conjugate_character(G, g, chi), D), K)
        for k in K:
            rhs[k] += part[k]
    return lhs == rhs
