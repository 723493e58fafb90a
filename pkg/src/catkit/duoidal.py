"""Derivation schemes on a finite category and their two tensor products.

A derivation scheme assigns a finite set of cells to every parallel pair
``(α, α')`` of morphisms. Cells of composite schemes are nested tuples:

* ``("*", (β, β', x), (γ, γ', y))``  in ``X ∗ Y`` at ``(γβ, γ'β')``
* ``("o", α', x, y)``                in ``X ∘ Y`` at ``(α, α'')``, ``x: α ⇒ α'``, ``y: α' ⇒ α''``
* ``"j"``                            the cell of ``J`` at ``(1_a, 1_a)``
* ``"1"``                            the cell of ``1`` at ``(α, α)``

Scheme morphisms are dicts ``{(pair, cell): cell}``.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Hashable, Iterable, Mapping

Pair = tuple[str, str]
Cell = Hashable


class CategoryError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class FiniteCategory:
    objects: tuple[str, ...]
    morphisms: Mapping[str, tuple[str, str]]
    identities: Mapping[str, str]
    composition: Mapping[tuple[str, str], str]   # (g, f) -> g∘f when tgt f = src g

    def __post_init__(self):
        objs = set(self.objects)
        for m, (s, t) in self.morphisms.items():
            if s not in objs or t not in objs:
                raise CategoryError(f"morphism {m} has unknown endpoints")
        comp = dict(self.composition)
        for a in self.objects:
            i = self.identities.get(a)
            if i is None or self.morphisms.get(i) != (a, a):
                raise CategoryError(f"bad identity for {a}")
        for m, (s, t) in self.morphisms.items():
            comp.setdefault((m, self.identities[s]), m)
            comp.setdefault((self.identities[t], m), m)
            if comp[(m, self.identities[s])] != m or comp[(self.identities[t], m)] != m:
                raise CategoryError(f"identity law fails for {m}")
        for g, (sg, tg) in self.morphisms.items():
            for f, (sf, tf) in self.morphisms.items():
                if tf != sg:
                    continue
                h = comp.get((g, f))
                if h is None:
                    raise CategoryError(f"missing composite {g}∘{f}")
                if self.morphisms.get(h) != (sf, tg):
                    raise CategoryError(f"composite {g}∘{f} = {h} has the wrong type")
        for (g, f), h in comp.items():
            if g not in self.morphisms or f not in self.morphisms:
                raise CategoryError(f"composite of unknown morphisms {(g, f)}")
            if self.morphisms[f][1] != self.morphisms[g][0]:
                raise CategoryError(f"{g}∘{f} is not composable")
        for h, (sh, th) in self.morphisms.items():
            for g, (sg, tg) in self.morphisms.items():
                if sh != tg:
                    continue
                for f, (sf, tf) in self.morphisms.items():
                    if sg != tf:
                        continue
                    if comp[(h, comp[(g, f)])] != comp[(comp[(h, g)], f)]:
                        raise CategoryError(f"associativity fails at {(h, g, f)}")
        object.__setattr__(self, "composition", comp)

    def src(self, m: str) -> str:
        return self.morphisms[m][0]

    def tgt(self, m: str) -> str:
        return self.morphisms[m][1]

    def compose(self, g: str, f: str) -> str:
        """``g ∘ f``."""
        return self.composition[(g, f)]

    def morphism_names(self) -> list[str]:
        return sorted(self.morphisms)

    def parallel_pairs(self) -> list[Pair]:
        ms = self.morphism_names()
        return [(a, b) for a in ms for b in ms if self.morphisms[a] == self.morphisms[b]]

    def is_identity(self, m: str) -> bool:
        return self.identities[self.src(m)] == m

    def factorizations(self, m: str) -> list[tuple[str, str]]:
        """All ``(β, γ)`` with ``γ ∘ β = m``."""
        return [(f, g) for (g, f), h in self.composition.items() if h == m]

    def to_json(self) -> dict:
        return {"objects": list(self.objects),
                "morphisms": {m: list(st) for m, st in sorted(self.morphisms.items())},
                "identities": dict(self.identities),
                "compose": sorted([g, f, h] for (g, f), h in self.composition.items())}


def category_from_json(data) -> FiniteCategory:
    if isinstance(data, str):
        data = json.loads(data)
    objects = tuple(data["objects"])
    morphisms = {m: (st[0], st[1]) for m, st in data.get("morphisms", {}).items()}
    identities = dict(data.get("identities", {}))
    for a in objects:
        if a not in identities:
            identities[a] = f"1{a}"
        morphisms.setdefault(identities[a], (a, a))
    comp = {(g, f): h for g, f, h in data.get("compose", [])}
    return FiniteCategory(objects, morphisms, identities, comp)


# -- test corpus of small categories ----------------------------------------


def terminal_category() -> FiniteCategory:
    return category_from_json({"objects": ["a"]})


def discrete_category(n: int = 2) -> FiniteCategory:
    return category_from_json({"objects": [chr(ord("a") + i) for i in range(n)]})


def walking_arrow() -> FiniteCategory:
    return category_from_json({"objects": ["a", "b"], "morphisms": {"f": ["a", "b"]}})


def parallel_pair() -> FiniteCategory:
    return category_from_json({"objects": ["a", "b"], "morphisms": {"f": ["a", "b"], "g": ["a", "b"]}})


def composable_pair() -> FiniteCategory:
    return category_from_json({
        "objects": ["a", "b", "c"],
        "morphisms": {"f": ["a", "b"], "g": ["b", "c"], "gf": ["a", "c"]},
        "compose": [["g", "f", "gf"]],
    })


def one_object_monoid(idempotent: bool = False) -> FiniteCategory:
    """One object, morphisms ``{1, e}`` with ``e∘e = e`` or ``e∘e = 1``."""
    return category_from_json({
        "objects": ["a"], "morphisms": {"e": ["a", "a"]},
        "compose": [["e", "e", "e" if idempotent else "1a"]],
    })


def sample_categories() -> dict[str, FiniteCategory]:
    return {
        "terminal": terminal_category(),
        "discrete2": discrete_category(2),
        "arrow": walking_arrow(),
        "parallel": parallel_pair(),
        "composable": composable_pair(),
        "Z2": one_object_monoid(False),
        "idempotent": one_object_monoid(True),
    }


# -- derivation schemes -----------------------------------------------------


def _key(c) -> str:
    # plain string cells round-trip through JSON; composite cells are shown by repr
    return c if isinstance(c, str) else repr(c)


@dataclass(frozen=True, eq=False)
class DerivationScheme:
    cat: FiniteCategory
    cells: Mapping[Pair, tuple[Cell, ...]]

    def __post_init__(self):
        pairs = set(self.cat.parallel_pairs())
        clean = {}
        for p, cs in self.cells.items():
            p = tuple(p)
            if p not in pairs:
                raise CategoryError(f"{p} is not a parallel pair")
            cs = tuple(cs)
            if len(set(cs)) != len(cs):
                raise CategoryError(f"repeated cells at {p}")
            if cs:
                clean[p] = cs
        object.__setattr__(self, "cells", clean)

    def at(self, p: Pair) -> tuple[Cell, ...]:
        return self.cells.get(tuple(p), ())

    @cached_property
    def _cell_sets(self) -> dict[Pair, frozenset]:
        return {p: frozenset(cs) for p, cs in self.cells.items()}

    def contains(self, p: Pair, c: Cell) -> bool:
        return c in self._cell_sets.get(tuple(p), ())

    def elements(self) -> list[tuple[Pair, Cell]]:
        return [(p, c) for p in self.cat.parallel_pairs() for c in self.at(p)]

    def size(self) -> int:
        return sum(len(v) for v in self.cells.values())

    def same_as(self, other: DerivationScheme) -> bool:
        return (self.cat is other.cat and
                {p: set(v) for p, v in self.cells.items()} ==
                {p: set(v) for p, v in other.cells.items()})

    def to_json(self) -> dict:
        return {f"{a},{b}": sorted(map(_key, cs)) for (a, b), cs in sorted(self.cells.items())}


def scheme_from_json(cat: FiniteCategory, data) -> DerivationScheme:
    cells = {}
    for k, v in data.items():
        a, b = (s.strip() for s in k.split(","))
        cells[(a, b)] = tuple(v)
    return DerivationScheme(cat, cells)


def unit_J(cat: FiniteCategory) -> DerivationScheme:
    """``J``: one cell at each ``(1_a, 1_a)``; the unit for ``∗``."""
    return DerivationScheme(cat, {(i, i): ("j",) for i in cat.identities.values()})


def unit_1(cat: FiniteCategory) -> DerivationScheme:
    """``1``: one cell at each ``(α, α)``; the unit for ``∘``."""
    return DerivationScheme(cat, {(m, m): ("1",) for m in cat.morphisms})


def terminal_scheme(cat: FiniteCategory) -> DerivationScheme:
    return DerivationScheme(cat, {p: ("*",) for p in cat.parallel_pairs()})


def _check_same(*schemes: DerivationScheme) -> FiniteCategory:
    cat = schemes[0].cat
    if any(s.cat is not cat for s in schemes):
        raise CategoryError("schemes live on different categories")
    return cat


def ds_star(X: DerivationScheme, Y: DerivationScheme) -> DerivationScheme:
    """``(X ∗ Y)_(α, α')``: pairs ``x: β ⇒ β'``, ``y: γ ⇒ γ'`` with ``α = γβ``, ``α' = γ'β'``."""
    cat = _check_same(X, Y)
    cells: dict[Pair, list] = {}
    for (b, b2), xs in X.cells.items():
        for (g, g2), ys in Y.cells.items():
            if cat.tgt(b) != cat.src(g):
                continue
            p = (cat.compose(g, b), cat.compose(g2, b2))
            cells.setdefault(p, []).extend(("*", (b, b2, x), (g, g2, y)) for x in xs for y in ys)
    return DerivationScheme(cat, cells)


def ds_circ(X: DerivationScheme, Y: DerivationScheme) -> DerivationScheme:
    """``(X ∘ Y)_(α, α'')``: ``x: α ⇒ α'`` then ``y: α' ⇒ α''`` over every middle ``α'``."""
    cat = _check_same(X, Y)
    cells: dict[Pair, list] = {}
    for (a, a1), xs in X.cells.items():
        for (a1b, a2), ys in Y.cells.items():
            if a1 != a1b:
                continue
            cells.setdefault((a, a2), []).extend(("o", a1, x, y) for x in xs for y in ys)
    return DerivationScheme(cat, cells)


# -- scheme morphisms -------------------------------------------------------


@dataclass(frozen=True, eq=False)
class SchemeMap:
    src: DerivationScheme
    tgt: DerivationScheme
    fn: Mapping[tuple[Pair, Cell], Cell]

    def __post_init__(self):
        for p, c in self.src.elements():
            if (p, c) not in self.fn:
                raise CategoryError(f"map undefined at {p} {c!r}")
            if not self.tgt.contains(p, self.fn[(p, c)]):
                raise CategoryError(f"image of {c!r} at {p} is not a target cell")

    def __call__(self, p: Pair, c: Cell) -> Cell:
        return self.fn[(tuple(p), c)]

    def equals(self, other: SchemeMap) -> bool:
        return all(self.fn[e] == other.fn[e] for e in self.src.elements())

    def is_bijective(self) -> bool:
        images = {(p, self.fn[(p, c)]) for p, c in self.src.elements()}
        return len(images) == self.src.size() == self.tgt.size()


def scheme_map(src: DerivationScheme, tgt: DerivationScheme,
               f: Callable[[Pair, Cell], Cell]) -> SchemeMap:
    return SchemeMap(src, tgt, {(p, c): f(p, c) for p, c in src.elements()})


def identity_map(X: DerivationScheme) -> SchemeMap:
    return scheme_map(X, X, lambda p, c: c)


def compose_maps(g: SchemeMap, f: SchemeMap) -> SchemeMap:
    """``g ∘ f``."""
    return scheme_map(f.src, g.tgt, lambda p, c: g(p, f(p, c)))


def star_map(f: SchemeMap, g: SchemeMap) -> SchemeMap:
    src, tgt = ds_star(f.src, g.src), ds_star(f.tgt, g.tgt)
    return scheme_map(src, tgt, lambda p, c: (
        "*", (c[1][0], c[1][1], f(c[1][:2], c[1][2])), (c[2][0], c[2][1], g(c[2][:2], c[2][2]))))


def circ_map(f: SchemeMap, g: SchemeMap) -> SchemeMap:
    src, tgt = ds_circ(f.src, g.src), ds_circ(f.tgt, g.tgt)
    return scheme_map(src, tgt, lambda p, c: (
        "o", c[1], f((p[0], c[1]), c[2]), g((c[1], p[1]), c[3])))


# canonical bijections


def star_assoc(X, Y, Z) -> SchemeMap:
    """``(X ∗ Y) ∗ Z -> X ∗ (Y ∗ Z)``."""
    cat = X.cat
    src, tgt = ds_star(ds_star(X, Y), Z), ds_star(X, ds_star(Y, Z))

    def f(p, c):
        (_, (_, _, inner), (g, g2, z)) = c
        (_, (b, b2, x), (m, m2, y)) = inner
        right = ("*", (m, m2, y), (g, g2, z))
        return ("*", (b, b2, x), (cat.compose(g, m), cat.compose(g2, m2), right))

    return scheme_map(src, tgt, f)


def circ_assoc(X, Y, Z) -> SchemeMap:
    """``(X ∘ Y) ∘ Z -> X ∘ (Y ∘ Z)``."""
    src, tgt = ds_circ(ds_circ(X, Y), Z), ds_circ(X, ds_circ(Y, Z))

    def f(p, c):
        (_, a2, (_, a1, x, y), z) = c
        return ("o", a1, x, ("o", a2, y, z))

    return scheme_map(src, tgt, f)


def star_left_unitor(X) -> SchemeMap:
    """``J ∗ X -> X``."""
    return scheme_map(ds_star(unit_J(X.cat), X), X, lambda p, c: c[2][2])


def star_right_unitor(X) -> SchemeMap:
    """``X ∗ J -> X``."""
    return scheme_map(ds_star(X, unit_J(X.cat)), X, lambda p, c: c[1][2])


def circ_left_unitor(X) -> SchemeMap:
    """``1 ∘ X -> X``."""
    return scheme_map(ds_circ(unit_1(X.cat), X), X, lambda p, c: c[3])


def circ_right_unitor(X) -> SchemeMap:
    """``X ∘ 1 -> X``."""
    return scheme_map(ds_circ(X, unit_1(X.cat)), X, lambda p, c: c[2])


def inverse_map(f: SchemeMap) -> SchemeMap:
    if not f.is_bijective():
        raise CategoryError("map is not a bijection")
    inv = {(p, f.fn[(p, c)]): c for p, c in f.src.elements()}
    return SchemeMap(f.tgt, f.src, inv)


# -- duoidal structure ------------------------------------------------------


def ds_interchange(X, X2, Y, Y2) -> SchemeMap:
    """``γ: (X ∘ X') ∗ (Y ∘ Y') -> (X ∗ Y) ∘ (X' ∗ Y')``.

    A horizontal pair of vertical composites is re-read as a vertical pair of
    horizontal composites, with middle ``γ'β'``.
    """
    cat = _check_same(X, X2, Y, Y2)
    src = ds_star(ds_circ(X, X2), ds_circ(Y, Y2))
    tgt = ds_circ(ds_star(X, Y), ds_star(X2, Y2))

    def f(p, c):
        (_, (b, b2, (_, b1, x, x2)), (g, g2, (_, g1, y, y2))) = c
        return ("o", cat.compose(g1, b1), ("*", (b, b1, x), (g, g1, y)),
                ("*", (b1, b2, x2), (g1, g2, y2)))

    return scheme_map(src, tgt, f)


def mu_unit(cat: FiniteCategory) -> SchemeMap:
    """``μ: 1 ∗ 1 -> 1``."""
    one = unit_1(cat)
    return scheme_map(ds_star(one, one), one, lambda p, c: "1")


def tau_unit(cat: FiniteCategory) -> SchemeMap:
    """``τ: J -> 1``, the inclusion of identity cells."""
    return scheme_map(unit_J(cat), unit_1(cat), lambda p, c: "1")


def delta_unit(cat: FiniteCategory) -> SchemeMap:
    """``δ: J -> J ∘ J``."""
    J = unit_J(cat)
    return scheme_map(J, ds_circ(J, J), lambda p, c: ("o", p[0], "j", "j"))


def coherence_checks(cat: FiniteCategory) -> dict[str, bool]:
    """Monoid laws for ``(1, μ, τ)``, comonoid laws for ``(J, δ, τ)`` and the
    unit instances of the interchange."""
    J, one = unit_J(cat), unit_1(cat)
    mu, tau, delta = mu_unit(cat), tau_unit(cat), delta_unit(cat)
    i1, iJ = identity_map(one), identity_map(J)
    out = {}
    out["mu_assoc"] = compose_maps(mu, star_map(mu, i1)).equals(
        compose_maps(compose_maps(mu, star_map(i1, mu)), star_assoc(one, one, one)))
    out["mu_left_unit"] = compose_maps(mu, star_map(tau, i1)).equals(star_left_unitor(one))
    out["mu_right_unit"] = compose_maps(mu, star_map(i1, tau)).equals(star_right_unitor(one))
    out["delta_coassoc"] = compose_maps(circ_assoc(J, J, J),
                                        compose_maps(circ_map(delta, iJ), delta)).equals(
        compose_maps(circ_map(iJ, delta), delta))
    out["delta_left_counit"] = compose_maps(circ_left_unitor(J),
                                            compose_maps(circ_map(tau, iJ), delta)).equals(iJ)
    out["delta_right_counit"] = compose_maps(circ_right_unitor(J),
                                             compose_maps(circ_map(iJ, tau), delta)).equals(iJ)
    # γ on units: J -δ∗δ-> (J∘J)∗(J∘J) -γ-> (J∗J)∘(J∗J) agrees with δ up to unitors
    lam = star_left_unitor(J)
    lhs = compose_maps(ds_interchange(J, J, J, J),
                       compose_maps(star_map(delta, delta), inverse_map(lam)))
    rhs = compose_maps(circ_map(inverse_map(lam), inverse_map(lam)), delta)
    out["gamma_delta"] = lhs.equals(rhs)
    # (1∘1)∗(1∘1) -γ-> (1∗1)∘(1∗1) -μ∘μ-> 1∘1 -> 1 agrees with the unitors then μ
    rho = circ_left_unitor(one)
    lhs = compose_maps(rho, compose_maps(circ_map(mu, mu), ds_interchange(one, one, one, one)))
    rhs = compose_maps(mu, star_map(rho, rho))
    out["gamma_mu"] = lhs.equals(rhs)
    return out


# -- duoids -----------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class DuoidData:
    A: DerivationScheme
    mu_h: SchemeMap   # A ∗ A -> A
    eta_h: SchemeMap  # J -> A
    mu_v: SchemeMap   # A ∘ A -> A
    eta_v: SchemeMap  # 1 -> A

    def __post_init__(self):
        A = self.A
        for name, m, src in (("mu_h", self.mu_h, ds_star(A, A)), ("eta_h", self.eta_h, unit_J(A.cat)),
                             ("mu_v", self.mu_v, ds_circ(A, A)), ("eta_v", self.eta_v, unit_1(A.cat))):
            if not (m.src.same_as(src) and m.tgt.same_as(A)):
                raise CategoryError(f"{name} has the wrong source or target")


@dataclass
class DuoidReport:
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def duoid_validate(D: DuoidData) -> DuoidReport:
    """Both monoid structures, and ``μ_v``, ``η_v`` as horizontal monoid morphisms."""
    A, cat = D.A, D.A.cat
    iA = identity_map(A)
    rep = DuoidReport()

    def check(name, f, g):
        if not f.equals(g):
            rep.failures.append(name)

    check("horizontal associativity", compose_maps(D.mu_h, star_map(D.mu_h, iA)),
          compose_maps(compose_maps(D.mu_h, star_map(iA, D.mu_h)), star_assoc(A, A, A)))
    check("horizontal left unit", compose_maps(D.mu_h, star_map(D.eta_h, iA)), star_left_unitor(A))
    check("horizontal right unit", compose_maps(D.mu_h, star_map(iA, D.eta_h)), star_right_unitor(A))
    check("vertical associativity", compose_maps(D.mu_v, circ_map(D.mu_v, iA)),
          compose_maps(compose_maps(D.mu_v, circ_map(iA, D.mu_v)), circ_assoc(A, A, A)))
    check("vertical left unit", compose_maps(D.mu_v, circ_map(D.eta_v, iA)), circ_left_unitor(A))
    check("vertical right unit", compose_maps(D.mu_v, circ_map(iA, D.eta_v)), circ_right_unitor(A))
    # horizontal monoid structure on A ∘ A, via γ and δ
    mu_AA = compose_maps(circ_map(D.mu_h, D.mu_h), ds_interchange(A, A, A, A))
    eta_AA = compose_maps(circ_map(D.eta_h, D.eta_h), delta_unit(cat))
    check("mu_v preserves products", compose_maps(D.mu_v, mu_AA),
          compose_maps(D.mu_h, star_map(D.mu_v, D.mu_v)))
    check("mu_v preserves units", compose_maps(D.mu_v, eta_AA), D.eta_h)
    check("eta_v preserves products", compose_maps(D.eta_v, mu_unit(cat)),
          compose_maps(D.mu_h, star_map(D.eta_v, D.eta_v)))
    check("eta_v preserves units", compose_maps(D.eta_v, tau_unit(cat)), D.eta_h)
    return rep


def two_category_check(D: DuoidData) -> bool:
    """Read ``D`` as 2-cell composition tables and check the 2-category axioms directly.

    Vertical composition ``y·x`` comes from ``μ_v``, horizontal ``y∗x`` from
    ``μ_h``, identity 2-cells from ``η_v`` and ``η_h``. Raises only if the
    tables are not total on well-typed inputs (``DuoidData`` already ensures this).
    """
    A, cat = D.A, D.A.cat
    pairs = cat.parallel_pairs()
    cells = {p: A.at(p) for p in pairs}

    def vert(a, a1, a2, x, y):
        return D.mu_v.fn[((a, a2), ("o", a1, x, y))]

    def horiz(b, b2, x, g, g2, y):
        return D.mu_h.fn[((cat.compose(g, b), cat.compose(g2, b2)), ("*", (b, b2, x), (g, g2, y)))]

    def vid(a):
        return D.eta_v.fn[((a, a), "1")]

    def hid(obj):
        i = cat.identities[obj]
        return D.eta_h.fn[((i, i), "j")]

    ms = cat.morphism_names()
    par = {m: [n for n in ms if cat.morphisms[n] == cat.morphisms[m]] for m in ms}

    # vertical category structure on each hom
    for a in ms:
        for a1 in par[a]:
            for x in cells.get((a, a1), ()):
                if vert(a, a, a1, vid(a), x) != x or vert(a, a1, a1, x, vid(a1)) != x:
                    return False
                for a2 in par[a]:
                    for y in cells.get((a1, a2), ()):
                        xy = vert(a, a1, a2, x, y)
                        for a3 in par[a]:
                            for z in cells.get((a2, a3), ()):
                                if vert(a, a2, a3, xy, z) != vert(a, a1, a3, x, vert(a1, a2, a3, y, z)):
                                    return False
    # identity 2-cells of identity 1-cells
    for obj in cat.objects:
        if hid(obj) != vid(cat.identities[obj]):
            return False
    composable = [(b, g) for b in ms for g in ms if cat.tgt(b) == cat.src(g)]
    # horizontal units, identities compose to identities
    for b, g in composable:
        if horiz(b, b, vid(b), g, g, vid(g)) != vid(cat.compose(g, b)):
            return False
    for b in ms:
        ia, ib = cat.identities[cat.src(b)], cat.identities[cat.tgt(b)]
        for b2 in par[b]:
            for x in cells.get((b, b2), ()):
                if horiz(ia, ia, hid(cat.src(b)), b, b2, x) != x:
                    return False
                if horiz(b, b2, x, ib, ib, hid(cat.tgt(b))) != x:
                    return False
    # horizontal associativity
    for b, g in composable:
        for k in ms:
            if cat.tgt(g) != cat.src(k):
                continue
            for b2 in par[b]:
                for x in cells.get((b, b2), ()):
                    for g2 in par[g]:
                        for y in cells.get((g, g2), ()):
                            xy = horiz(b, b2, x, g, g2, y)
                            for k2 in par[k]:
                                for z in cells.get((k, k2), ()):
                                    lhs = horiz(cat.compose(g, b), cat.compose(g2, b2), xy, k, k2, z)
                                    rhs = horiz(b, b2, x, cat.compose(k, g), cat.compose(k2, g2),
                                                horiz(g, g2, y, k, k2, z))
                                    if lhs != rhs:
                                        return False
    # interchange: (y'·y) ∗ ... = ((x'∗y')·(x∗y))
    for b, g in composable:
        for b1 in par[b]:
            for b2 in par[b]:
                for g1 in par[g]:
                    for g2 in par[g]:
                        for x in cells.get((b, b1), ()):
                            for x2 in cells.get((b1, b2), ()):
                                for y in cells.get((g, g1), ()):
                                    for y2 in cells.get((g1, g2), ()):
                                        lhs = horiz(b, b2, vert(b, b1, b2, x, x2),
                                                    g, g2, vert(g, g1, g2, y, y2))
                                        rhs = vert(cat.compose(g, b), cat.compose(g1, b1),
                                                   cat.compose(g2, b2),
                                                   horiz(b, b1, x, g, g1, y),
                                                   horiz(b1, b2, x2, g1, g2, y2))
                                        if lhs != rhs:
                                            return False
    return True


# -- generated duoids -------------------------------------------------------


def codiscrete_duoid(cat: FiniteCategory, k: int = 1) -> DuoidData:
    """2-cells ``α ⇒ α'`` are ``Z/k`` for every parallel pair; both compositions add.

    ``k = 1`` gives the terminal duoid.
    """
    A = DerivationScheme(cat, {p: tuple(range(k)) for p in cat.parallel_pairs()})
    return DuoidData(
        A,
        scheme_map(ds_star(A, A), A, lambda p, c: (c[1][2] + c[2][2]) % k),
        scheme_map(unit_J(cat), A, lambda p, c: 0),
        scheme_map(ds_circ(A, A), A, lambda p, c: (c[2] + c[3]) % k),
        scheme_map(unit_1(cat), A, lambda p, c: 0),
    )


def locally_discrete_duoid(cat: FiniteCategory) -> DuoidData:
    """Only identity 2-cells: ``A = 1``."""
    A = unit_1(cat)
    return DuoidData(
        A,
        mu_unit(cat),
        tau_unit(cat),
        scheme_map(ds_circ(A, A), A, lambda p, c: "1"),
        identity_map(A),
    )


def corrupt_duoid(D: DuoidData, which: str, rng: random.Random) -> DuoidData:
    """Redirect one entry of ``mu_h``, ``mu_v``, ``eta_h`` or ``eta_v`` to another cell of the same pair."""
    m = getattr(D, which)
    options = [(p, c) for p, c in m.src.elements() if len(D.A.at(p)) > 1]
    if not options:
        raise ValueError(f"no entry of {which} can be changed")
    p, c = rng.choice(options)
    fn = dict(m.fn)
    fn[(p, c)] = rng.choice([x for x in D.A.at(p) if x != fn[(p, c)]])
    new = SchemeMap(m.src, m.tgt, fn)
    parts = {k: getattr(D, k) for k in ("mu_h", "eta_h", "mu_v", "eta_v")}
    parts[which] = new
    return DuoidData(D.A, **parts)


def broken_interchange_duoid(cat: FiniteCategory, k: int = 2) -> DuoidData:
    """Codiscrete ``Z/k`` cells with horizontal composition ``max``: both monoid
    structures are fine but they do not interchange."""
    D = codiscrete_duoid(cat, k)
    A = D.A
    mu_h = scheme_map(ds_star(A, A), A, lambda p, c: max(c[1][2], c[2][2]))
    return DuoidData(A, mu_h, D.eta_h, D.mu_v, D.eta_v)


def random_scheme(cat: FiniteCategory, rng: random.Random, max_cells: int = 2,
                  tag: str = "x") -> DerivationScheme:
    return DerivationScheme(cat, {p: tuple(f"{tag}{i}" for i in range(rng.randint(0, max_cells)))
                                  for p in cat.parallel_pairs()})


def random_map(X: DerivationScheme, rng: random.Random, tag: str = "y") -> SchemeMap:
    """A random map out of ``X`` into a fresh scheme with at least one cell wherever ``X`` has one."""
    cells = {p: tuple(f"{tag}{i}" for i in range(rng.randint(1 if X.at(p) else 0, 2)))
             for p in X.cat.parallel_pairs()}
    Y = DerivationScheme(X.cat, cells)
    return scheme_map(X, Y, lambda p, c: rng.choice(Y.at(p)))


def interchange_natural(f: SchemeMap, f2: SchemeMap, g: SchemeMap, g2: SchemeMap) -> bool:
    """Naturality square of ``γ`` for maps ``f: X -> X1`` and so on."""
    lhs = compose_maps(ds_interchange(f.tgt, f2.tgt, g.tgt, g2.tgt),
                       star_map(circ_map(f, f2), circ_map(g, g2)))
    rhs = compose_maps(circ_map(star_map(f, g), star_map(f2, g2)),
                       ds_interchange(f.src, f2.src, g.src, g2.src))
    return lhs.equals(rhs)


def unit_and_assoc_checks(cat: FiniteCategory, schemes: Iterable[DerivationScheme]) -> dict[str, bool]:
    """Canonical unit and associativity maps are bijections and the unit
    laws hold as equalities of cell sets."""
    schemes = list(schemes)
    J, one = unit_J(cat), unit_1(cat)
    out = {"J*J=J": ds_star(J, J).size() == J.size() and star_left_unitor(J).is_bijective(),
           "1o1=1": circ_left_unitor(one).is_bijective()}
    ok_units = ok_assoc = True
    for X in schemes:
        ok_units &= all(m.is_bijective() for m in (star_left_unitor(X), star_right_unitor(X),
                                                    circ_left_unitor(X), circ_right_unitor(X)))
    for X in schemes:
        for Y in schemes:
            for Z in schemes:
                ok_assoc &= star_assoc(X, Y, Z).is_bijective() and circ_assoc(X, Y, Z).is_bijective()
    out["units"] = ok_units
    out["associativity"] = ok_assoc
    return out


def duoid_from_json(cat: FiniteCategory, data) -> DuoidData:
    """``{"kind": "codiscrete", "k": 2}`` or ``{"kind": "locally_discrete"}``."""
    kind = data.get("kind", "codiscrete")
    if kind == "codiscrete":
        return codiscrete_duoid(cat, int(data.get("k", 1)))
    if kind == "locally_discrete":
        return locally_discrete_duoid(cat)
    if kind == "broken_interchange":
        return broken_interchange_duoid(cat, int(data.get("k", 2)))
    raise CategoryError(f"unknown duoid kind {kind!r}")
