"""Spans of G-sets, Burnside multiplication, and Mackey functors as explicit
matrix data: validation, fixed points, the Burnside functor, the Dress
construction and a small box product.

``MackeyData`` stores a value for every subgroup (not only one per conjugacy
class) so that conjugation maps land in stored spaces. Keys:

* ``t[(H, K)]``: ``M(K) -> M(H)`` for ``K <= H`` (transfer)
* ``r[(H, K)]``: ``M(H) -> M(K)`` (restriction)
* ``c[(g, H)]``: ``M(H) -> M(gHg^-1)`` (conjugation)

A Mackey functor is evaluated on an arbitrary G-set orbit by orbit, using the
base point of each orbit to identify it with ``G/Stab``.
"""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .groups import (FiniteGroup, GroupError, GSet, Subgroup, coset_space, double_cosets,
                     is_equivariant, orbit_types, product_gset)
from .rational import EchelonBasis, QMat, block_matrix

MAX_BOX_ORDER = 6


# -- spans ------------------------------------------------------------------


def same_gset(X: GSet, Y: GSet) -> bool:
    return X.group is Y.group and X.act == Y.act


@dataclass(frozen=True, eq=False)
class Span:
    """``X <-u- S -v-> Y``."""

    X: GSet
    S: GSet
    Y: GSet
    u: tuple[int, ...]
    v: tuple[int, ...]

    def __post_init__(self):
        if not is_equivariant(self.u, self.S, self.X):
            raise GroupError("left leg is not equivariant")
        if not is_equivariant(self.v, self.S, self.Y):
            raise GroupError("right leg is not equivariant")


def identity_span(X: GSet) -> Span:
    ids = tuple(range(X.size))
    return Span(X, X, X, ids, ids)


def span_compose(s1: Span, s2: Span) -> Span:
    """Pullback ``S ×_Y T``; its points are the pairs ``(s, t)`` in lexicographic order."""
    if not same_gset(s1.Y, s2.X):
        raise GroupError("spans do not share a middle object")
    pairs = [(a, b) for a in range(s1.S.size) for b in range(s2.S.size)
             if s1.v[a] == s2.u[b]]
    where = {p: i for i, p in enumerate(pairs)}
    act = tuple(tuple(where[(g1[a], g2[b])] for a, b in pairs)
                for g1, g2 in zip(s1.S.act, s2.S.act))
    P = GSet(s1.X.group, act)
    return Span(s1.X, P, s2.Y, tuple(s1.u[a] for a, _ in pairs), tuple(s2.v[b] for _, b in pairs))


def span_iso(s1: Span, s2: Span) -> tuple[int, ...] | None:
    """An equivariant bijection ``S1 -> S2`` over ``X`` and ``Y``, by backtracking search."""
    if not (same_gset(s1.X, s2.X) and same_gset(s1.Y, s2.Y)) or s1.S.size != s2.S.size:
        return None
    n = s1.S.size
    cands = [[y for y in range(n) if (s2.u[y], s2.v[y]) == (s1.u[x], s1.v[x])] for x in range(n)]
    phi: list[int] = []
    used = set()

    def consistent() -> bool:
        k = len(phi)
        x = k - 1
        for g1, g2 in zip(s1.S.act, s2.S.act):
            gx = g1[x]
            if gx < k and phi[gx] != g2[phi[x]]:
                return False
        for g1, g2 in zip(s1.S.act, s2.S.act):
            for z in range(k):
                if g1[z] == x and g2[phi[z]] != phi[x]:
                    return False
        return True

    def search(x: int) -> bool:
        if x == n:
            return True
        for y in cands[x]:
            if y in used:
                continue
            phi.append(y)
            used.add(y)
            if consistent() and search(x + 1):
                return True
            phi.pop()
            used.discard(y)
        return False

    return tuple(phi) if search(0) else None


def spans_isomorphic(s1: Span, s2: Span) -> bool:
    return span_iso(s1, s2) is not None


def terminal_map(X: GSet) -> tuple[int, ...]:
    return (0,) * X.size


# -- Burnside ring ----------------------------------------------------------


def class_reps(G: FiniteGroup) -> list[Subgroup]:
    return [G.class_rep(cls[0]) for cls in G.subgroup_classes()]


def table_of_marks(G: FiniteGroup) -> list[list[int]]:
    """``marks[i][j] = |(G/H_i)^{H_j}|`` over conjugacy-class representatives."""
    reps = class_reps(G)
    out = []
    for H in reps:
        X = coset_space(G, H)
        out.append([len(X.fixed_points(L)) for L in reps])
    return out


def marks(X: GSet) -> list[int]:
    return [len(X.fixed_points(L)) for L in class_reps(X.group)]


def _marks_of(G: FiniteGroup, x) -> list[int]:
    if isinstance(x, GSet):
        return marks(x)
    reps = class_reps(G)
    tom = table_of_marks(G)
    out = [0] * len(reps)
    for H, n in x.items():
        i = reps.index(G.class_rep(H))
        out = [a + n * b for a, b in zip(out, tom[i])]
    return out


def decompose_marks(G: FiniteGroup, m: Sequence[int]) -> Counter:
    """Solve ``m = Σ n_i marks(G/H_i)``; the table of marks is triangular."""
    reps = class_reps(G)
    tom = table_of_marks(G)
    k = len(reps)
    n = [Fraction(0)] * k
    # representatives are ordered by size, so larger subgroups come later
    for j in reversed(range(k)):
        rest = m[j] - sum(n[i] * tom[i][j] for i in range(j + 1, k))
        n[j] = Fraction(rest, tom[j][j])
    if any(x.denominator != 1 or x < 0 for x in n):
        raise ValueError(f"marks {list(m)} are not those of a G-set")
    return Counter({reps[i]: int(x) for i, x in enumerate(n) if x})


def burnside_mul(X, Y) -> Counter:
    """Orbit types of ``X × Y`` computed from marks, which are multiplicative.

    ``X`` and ``Y`` are G-sets or multisets ``{subgroup: count}`` of orbit types.
    """
    G = X.group if isinstance(X, GSet) else Y.group
    mx, my = _marks_of(G, X), _marks_of(G, Y)
    return decompose_marks(G, [a * b for a, b in zip(mx, my)])


def orbit_decomposition(X: GSet) -> Counter:
    """Orbit types read off directly from the orbits of ``X``."""
    return orbit_types(X)


def format_orbit_types(G: FiniteGroup, types: Counter) -> str:
    reps = class_reps(G)
    parts = []
    for H in reps:
        n = types.get(H, 0)
        if n:
            parts.append(f"{n}*[G/{{{','.join(map(str, sorted(H)))}}}]")
    return " + ".join(parts) or "0"


# -- Mackey data ------------------------------------------------------------


@dataclass(eq=False)
class MackeyData:
    group: FiniteGroup
    dims: dict[Subgroup, int]
    t: dict[tuple[Subgroup, Subgroup], QMat]
    r: dict[tuple[Subgroup, Subgroup], QMat]
    c: dict[tuple[int, Subgroup], QMat]
    # mul[H][i] is left multiplication by the i-th basis vector of M(H)
    mul: dict[Subgroup, list[QMat]] | None = None
    unit: dict[Subgroup, tuple[Fraction, ...]] | None = None

    def product(self, H: Subgroup, a: Sequence, b: Sequence) -> tuple[Fraction, ...]:
        out = [Fraction(0)] * self.dims[H]
        for ai, L in zip(a, self.mul[H]):
            if ai:
                out = [x + ai * y for x, y in zip(out, L.apply(b))]
        return tuple(out)

    def dims_by_class(self) -> list[tuple[Subgroup, int]]:
        return [(H, self.dims[H]) for H in class_reps(self.group)]


def _pairs(G: FiniteGroup):
    return [(H, K) for H in G.subgroups for K in G.subgroups if K <= H]


@dataclass
class MackeyReport:
    failures: dict[str, list[str]] = field(default_factory=dict)
    checked: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not any(self.failures.values())

    def passed(self, axiom: str) -> bool:
        return axiom in self.checked and not self.failures.get(axiom)

    def fail(self, axiom: str, msg: str) -> None:
        self.failures.setdefault(axiom, []).append(msg)

    def summary(self) -> str:
        lines = []
        for a in self.checked:
            bad = self.failures.get(a, [])
            lines.append(f"axiom {a}: {'PASS' if not bad else f'FAIL ({len(bad)})'}")
        return "\n".join(lines)


def _name(H: Subgroup) -> str:
    return "{" + ",".join(map(str, sorted(H))) + "}"


def mackey_axioms_validate(M: MackeyData, algebra: bool = True) -> MackeyReport:
    """Check Green's axioms 1-4 as exact matrix identities, and 5-6 when a product is present.

    Axiom 5 is checked for restrictions and conjugations only; transfers are
    not multiplicative in the basic examples (in the Burnside functor
    ``t(1)·t(1) = [H:K]·t(1)``, not ``t(1)``).
    """
    G = M.group
    rep = MackeyReport()
    subs = G.subgroups
    try:
        for (H, K) in _pairs(G):
            for key, store in (("t", M.t), ("r", M.r)):
                if (H, K) not in store:
                    raise KeyError(f"missing {key}[{_name(H)},{_name(K)}]")
        for g in G.elements():
            for H in subs:
                if (g, H) not in M.c:
                    raise KeyError(f"missing c[{g},{_name(H)}]")
    except KeyError as exc:
        rep.checked.append("0")
        rep.fail("0", str(exc.args[0]))
        return rep

    rep.checked.append("1")
    for H in subs:
        I = QMat.identity(M.dims[H])
        if M.t[(H, H)] != I or M.r[(H, H)] != I:
            rep.fail("1", f"t or r at {_name(H)} >= {_name(H)} is not the identity")
    for H in subs:
        for K in subs:
            if not K <= H:
                continue
            for L in subs:
                if not L <= K:
                    continue
                if M.t[(H, K)] @ M.t[(K, L)] != M.t[(H, L)]:
                    rep.fail("1", f"t transitivity {_name(H)} > {_name(K)} > {_name(L)}")
                if M.r[(K, L)] @ M.r[(H, K)] != M.r[(H, L)]:
                    rep.fail("1", f"r transitivity {_name(H)} > {_name(K)} > {_name(L)}")

    rep.checked.append("2")
    for H in subs:
        for h in H:
            if M.c[(h, H)] != QMat.identity(M.dims[H]):
                rep.fail("2", f"c[{h},{_name(H)}] is not the identity")
        for g in G.elements():
            gH = G.conj_subgroup(g, H)
            for g2 in G.elements():
                if M.c[(g2, gH)] @ M.c[(g, H)] != M.c[(G.mul[g2][g], H)]:
                    rep.fail("2", f"c[{g2}] c[{g}] != c[{G.mul[g2][g]}] at {_name(H)}")

    rep.checked.append("3")
    for (H, K) in _pairs(G):
        for g in G.elements():
            gH, gK = G.conj_subgroup(g, H), G.conj_subgroup(g, K)
            if M.c[(g, H)] @ M.t[(H, K)] != M.t[(gH, gK)] @ M.c[(g, K)]:
                rep.fail("3", f"c t at g={g}, {_name(H)} > {_name(K)}")
            if M.c[(g, K)] @ M.r[(H, K)] != M.r[(gH, gK)] @ M.c[(g, H)]:
                rep.fail("3", f"c r at g={g}, {_name(H)} > {_name(K)}")

    rep.checked.append("4")
    for L in subs:
        inner = [S for S in subs if S <= L]
        for H in inner:
            for K in inner:
                lhs = M.r[(L, K)] @ M.t[(L, H)]
                rhs = QMat.zeros(M.dims[K], M.dims[H])
                for g in double_cosets(G, K, H, within=L):
                    D = G.conj_subgroup(g, H) & K
                    E = H & G.conj_subgroup(G.inv[g], K)
                    rhs = rhs + M.t[(K, D)] @ M.c[(g, E)] @ M.r[(H, E)]
                if lhs != rhs:
                    rep.fail("4", f"double coset formula L={_name(L)} H={_name(H)} K={_name(K)}")

    if algebra and M.mul is not None:
        _check_algebra(M, rep)
    return rep


def _basis(n: int) -> list[tuple[Fraction, ...]]:
    return [tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)]


def _check_algebra(M: MackeyData, rep: MackeyReport) -> None:
    G = M.group
    rep.checked.append("5")
    maps = [(f"r[{_name(H)},{_name(K)}]", H, K, M.r[(H, K)]) for (H, K) in _pairs(G)]
    maps += [(f"c[{g},{_name(H)}]", H, G.conj_subgroup(g, H), M.c[(g, H)])
             for g in G.elements() for H in G.subgroups]
    for name, S, T, f in maps:
        if f.apply(M.unit[S]) != M.unit[T]:
            rep.fail("5", f"{name} is not unital")
        B = _basis(M.dims[S])
        for a, b in itertools.product(B, repeat=2):
            if f.apply(M.product(S, a, b)) != M.product(T, f.apply(a), f.apply(b)):
                rep.fail("5", f"{name} is not multiplicative")
                break
    rep.checked.append("6")
    for (H, K) in _pairs(G):
        t, r = M.t[(H, K)], M.r[(H, K)]
        for a in _basis(M.dims[H]):
            for b in _basis(M.dims[K]):
                if M.product(H, a, t.apply(b)) != t.apply(M.product(K, r.apply(a), b)):
                    rep.fail("6", f"left Frobenius at {_name(H)} > {_name(K)}")
                if M.product(H, t.apply(b), a) != t.apply(M.product(K, b, r.apply(a))):
                    rep.fail("6", f"right Frobenius at {_name(H)} > {_name(K)}")


def corrupt(M: MackeyData, key: tuple[Subgroup, Subgroup], which: str = "t") -> MackeyData:
    """A copy with one transfer (or restriction) matrix perturbed by adding 1 to an entry."""
    store = dict(M.t if which == "t" else M.r)
    old = store[key]
    if old.nrows == 0 or old.ncols == 0:
        raise ValueError("cannot corrupt an empty matrix")
    rows = [list(r) for r in old.rows]
    rows[0][0] += 1
    store[key] = QMat.from_rows(rows, old.ncols)
    if which == "t":
        return MackeyData(M.group, M.dims, store, M.r, M.c, M.mul, M.unit)
    return MackeyData(M.group, M.dims, M.t, store, M.c, M.mul, M.unit)


# -- basic examples ---------------------------------------------------------


def _left_coset_reps(G: FiniteGroup, H: Subgroup, K: Subgroup) -> list[int]:
    """Representatives of ``H/K`` (left cosets ``hK``)."""
    seen, reps = set(), []
    for h in sorted(H):
        if h in seen:
            continue
        seen |= {G.mul[h][k] for k in K}
        reps.append(h)
    return reps


def fixed_point_mackey(R: GSet) -> MackeyData:
    """``M(H) = k[R]^H``, basis the ``H``-orbit sums ordered by smallest point.

    ``r`` is inclusion, ``t`` the relative trace, ``c`` translation, and the
    product is pointwise (orbit sums are orthogonal idempotents).
    """
    G = R.group
    n = R.size
    orbits: dict[Subgroup, list[tuple[int, ...]]] = {}
    for H in G.subgroups:
        seen, os = set(), []
        for x in range(n):
            if x in seen:
                continue
            o = tuple(sorted({R.act[h][x] for h in H}))
            seen |= set(o)
            os.append(o)
        orbits[H] = os

    def coords(H, vec):
        return tuple(vec[o[0]] for o in orbits[H])

    def indicator(o):
        v = [Fraction(0)] * n
        for x in o:
            v[x] = Fraction(1)
        return v

    def translate(g, vec):
        out = [Fraction(0)] * n
        for x in range(n):
            out[R.act[g][x]] = vec[x]
        return out

    dims = {H: len(orbits[H]) for H in G.subgroups}
    t, r, c = {}, {}, {}
    for (H, K) in _pairs(G):
        reps = _left_coset_reps(G, H, K)
        r[(H, K)] = QMat.from_columns([coords(K, indicator(o)) for o in orbits[H]], dims[K])
        tcols = []
        for o in orbits[K]:
            v = [Fraction(0)] * n
            for h in reps:
                v = [a + b for a, b in zip(v, translate(h, indicator(o)))]
            tcols.append(coords(H, v))
        t[(H, K)] = QMat.from_columns(tcols, dims[H])
    for g in G.elements():
        for H in G.subgroups:
            gH = G.conj_subgroup(g, H)
            c[(g, H)] = QMat.from_columns([coords(gH, translate(g, indicator(o))) for o in orbits[H]],
                                          dims[gH])
    mul, unit = {}, {}
    for H in G.subgroups:
        d = dims[H]
        mul[H] = [QMat.from_rows([[Fraction(int(a == b == i)) for b in range(d)] for a in range(d)], d)
                  for i in range(d)]
        unit[H] = (Fraction(1),) * d
    return MackeyData(G, dims, t, r, c, mul, unit)


def trivial_mackey(G: FiniteGroup) -> MackeyData:
    """``M(H) = k``, restriction and conjugation identities, transfer multiplication by the index."""
    one = QMat.identity(1)
    dims = {H: 1 for H in G.subgroups}
    t = {(H, K): one.scale(len(H) // len(K)) for (H, K) in _pairs(G)}
    r = {(H, K): one for (H, K) in _pairs(G)}
    c = {(g, H): one for g in G.elements() for H in G.subgroups}
    mul = {H: [one] for H in G.subgroups}
    unit = {H: (Fraction(1),) for H in G.subgroups}
    return MackeyData(G, dims, t, r, c, mul, unit)


def zero_mackey(G: FiniteGroup) -> MackeyData:
    z = QMat.zeros(0, 0)
    return MackeyData(G, {H: 0 for H in G.subgroups}, {k: z for k in _pairs(G)},
                      {k: z for k in _pairs(G)},
                      {(g, H): z for g in G.elements() for H in G.subgroups})


def _rel_class_rep(G: FiniteGroup, H: Subgroup, L: Subgroup) -> Subgroup:
    """Canonical representative of the ``H``-conjugacy class of ``L <= H``."""
    return min((G.conj_subgroup(h, L) for h in H), key=lambda S: (len(S), sorted(S)))


def _rel_classes(G: FiniteGroup, H: Subgroup) -> list[Subgroup]:
    reps = {_rel_class_rep(G, H, L) for L in G.subgroups if L <= H}
    return sorted(reps, key=lambda S: (len(S), sorted(S)))


def burnside_mackey(G: FiniteGroup) -> MackeyData:
    """The Burnside functor ``J``: ``J(H)`` is the Burnside ring of ``H`` on basis ``[H/L]``."""
    basis = {H: _rel_classes(G, H) for H in G.subgroups}
    index = {H: {L: i for i, L in enumerate(basis[H])} for H in G.subgroups}
    dims = {H: len(basis[H]) for H in G.subgroups}

    def vec(H, terms):
        v = [Fraction(0)] * dims[H]
        for L in terms:
            v[index[H][_rel_class_rep(G, H, L)]] += 1
        return v

    def transitive_product(H, A, B):
        # H/A × H/B = Σ_{x ∈ [A\H/B]} H/(A ∩ xBx^-1)
        return [A & G.conj_subgroup(x, B) for x in double_cosets(G, A, B, within=H)]

    t, r, c = {}, {}, {}
    for (H, K) in _pairs(G):
        t[(H, K)] = QMat.from_columns([vec(H, [L]) for L in basis[K]], dims[H])
        r[(H, K)] = QMat.from_columns(
            [vec(K, [K & G.conj_subgroup(x, L) for x in double_cosets(G, K, L, within=H)])
             for L in basis[H]], dims[K])
    for g in G.elements():
        for H in G.subgroups:
            gH = G.conj_subgroup(g, H)
            c[(g, H)] = QMat.from_columns([vec(gH, [G.conj_subgroup(g, L)]) for L in basis[H]],
                                          dims[gH])
    mul, unit = {}, {}
    for H in G.subgroups:
        d = dims[H]
        mats = []
        for A in basis[H]:
            cols = [vec(H, transitive_product(H, A, B)) for B in basis[H]]
            mats.append(QMat.from_columns(cols, d))
        mul[H] = mats
        unit[H] = tuple(vec(H, [H]))
    return MackeyData(G, dims, t, r, c, mul, unit)


# -- evaluation on G-sets ---------------------------------------------------


def _orbit_layout(M: MackeyData, X: GSet) -> tuple[list[Subgroup], list[int]]:
    stabs = [X.stabilizer(o[0]) for o in X.orbits]
    return stabs, [M.dims[A] for A in stabs]


def evaluate_dim(M: MackeyData, X: GSet) -> int:
    return sum(_orbit_layout(M, X)[1])


def _orbit_blocks(M: MackeyData, f: Sequence[int], X: GSet, Y: GSet):
    G = M.group
    sx, _ = _orbit_layout(M, X)
    sy, _ = _orbit_layout(M, Y)
    for i, o in enumerate(X.orbits):
        A = sx[i]
        y = f[o[0]]
        j = Y.orbit_index[y]
        h = Y.transversal[y]
        B = sy[j]
        C = G.conj_subgroup(h, B)
        yield i, j, A, B, C, h


def pullback(M: MackeyData, f: Sequence[int], X: GSet, Y: GSet) -> QMat:
    """``M(f^*): M(Y) -> M(X)`` for an equivariant ``f: X -> Y``."""
    if not is_equivariant(f, X, Y):
        raise GroupError("map is not equivariant")
    blocks = {}
    for i, j, A, B, C, h in _orbit_blocks(M, f, X, Y):
        blocks[(i, j)] = M.r[(C, A)] @ M.c[(h, B)]
    return block_matrix(blocks, _orbit_layout(M, X)[1], _orbit_layout(M, Y)[1])


def pushforward(M: MackeyData, f: Sequence[int], X: GSet, Y: GSet) -> QMat:
    """``M(f_*): M(X) -> M(Y)`` for an equivariant ``f: X -> Y``."""
    if not is_equivariant(f, X, Y):
        raise GroupError("map is not equivariant")
    G = M.group
    blocks: dict[tuple[int, int], QMat] = {}
    for i, j, A, B, C, h in _orbit_blocks(M, f, X, Y):
        blocks[(j, i)] = M.c[(G.inv[h], C)] @ M.t[(C, A)]
    return block_matrix(blocks, _orbit_layout(M, Y)[1], _orbit_layout(M, X)[1])


def projection_map(G: FiniteGroup, K: Subgroup, H: Subgroup) -> tuple[int, ...]:
    """``G/K -> G/H``, ``xK -> xH`` for ``K <= H``."""
    src = G.left_cosets(K)
    where = {g: i for i, c in enumerate(G.left_cosets(H)) for g in c}
    return tuple(where[min(c)] for c in src)


def conjugation_map(G: FiniteGroup, g: int, H: Subgroup) -> tuple[int, ...]:
    """``G/H -> G/gHg^-1``, ``xH -> x g^-1 (gHg^-1)``."""
    gH = G.conj_subgroup(g, H)
    where = {x: i for i, c in enumerate(G.left_cosets(gH)) for x in c}
    return tuple(where[G.mul[min(c)][G.inv[g]]] for c in G.left_cosets(H))


def times_identity(f: Sequence[int], Z: GSet) -> tuple[int, ...]:
    """``f × 1_Z`` on product point indices."""
    m = Z.size
    return tuple(f[x] * m + z for x in range(len(f)) for z in range(m))


def identity_times(Y: GSet, f: Sequence[int], m: int) -> tuple[int, ...]:
    """``1_Y × f`` where ``f`` lands in a set of size ``m``."""
    return tuple(y * m + f[z] for y in range(Y.size) for z in range(len(f)))


def functor_from_gset_maps(G: FiniteGroup, space, push, pull) -> MackeyData:
    """Mackey data from a functor on the orbits ``G/H``: ``space(H)`` is a G-set
    and ``push``/``pull`` turn a map between orbits into matrices."""
    dims, t, r, c = {}, {}, {}, {}
    for H in G.subgroups:
        dims[H] = space(H)
    for (H, K) in _pairs(G):
        p = projection_map(G, K, H)
        t[(H, K)] = push(p, K, H)
        r[(H, K)] = pull(p, K, H)
    for g in G.elements():
        for H in G.subgroups:
            c[(g, H)] = push(conjugation_map(G, g, H), H, G.conj_subgroup(g, H))
    return MackeyData(G, dims, t, r, c)


def dress_construct(M: MackeyData, Z: GSet) -> MackeyData:
    """``M_Z(H) = M(G/H × Z)`` with structure maps induced by ``- × Z``."""
    G = M.group
    X = {H: product_gset(coset_space(G, H), Z) for H in G.subgroups}
    return functor_from_gset_maps(
        G,
        lambda H: evaluate_dim(M, X[H]),
        lambda f, S, T: pushforward(M, times_identity(f, Z), X[S], X[T]),
        lambda f, S, T: pullback(M, times_identity(f, Z), X[S], X[T]),
    )


# -- box product ------------------------------------------------------------


def orbit_maps(G: FiniteGroup, A: Subgroup, B: Subgroup) -> list[tuple[int, ...]]:
    """All equivariant maps ``G/A -> G/B``."""
    YA, YB = coset_space(G, A), coset_space(G, B)
    cosets = G.left_cosets(A)
    out = []
    for y in range(YB.size):
        if all(YB.act[a][y] == y for a in A):
            out.append(tuple(YB.act[min(c)][y] for c in cosets))
    assert all(is_equivariant(f, YA, YB) for f in out)
    return out


@dataclass
class _BoxSpace:
    offsets: dict[Subgroup, int]
    mdims: dict[Subgroup, int]
    ndims: dict[Subgroup, int]
    dim: int
    quotient: EchelonBasis


def _sparse(col: Sequence[Fraction], offset: int, stride: int, b: int) -> dict[int, Fraction]:
    return {offset + a * stride + b: x for a, x in enumerate(col) if x}


def box_product(M: MackeyData, N: MackeyData) -> MackeyData:
    """``(M □ N)(Z) = ∫^Y M(Z × Y) ⊗ N(Y)`` for ``Z = G/H``, as an explicit quotient.

    ``Y`` runs over one orbit ``G/A`` per conjugacy class of subgroups, and the
    relations come from every equivariant map ``f`` between these orbits:
    ``M(1×f)^*(a) ⊗ b ~ a ⊗ N(f_*)(b)`` and ``M(1×f)_*(a) ⊗ b ~ a ⊗ N(f^*)(b)``.
    """
    G = M.group
    if G.order > MAX_BOX_ORDER:
        raise ValueError(f"box product is capped at groups of order {MAX_BOX_ORDER}")
    reps = class_reps(G)
    Y = {A: coset_space(G, A) for A in reps}
    ndims = {A: evaluate_dim(N, Y[A]) for A in reps}
    maps = {(A, B): orbit_maps(G, A, B) for A in reps for B in reps}
    Npush = {(A, B, k): pushforward(N, f, Y[A], Y[B])
             for (A, B), fs in maps.items() for k, f in enumerate(fs)}
    Npull = {(A, B, k): pullback(N, f, Y[A], Y[B])
             for (A, B), fs in maps.items() for k, f in enumerate(fs)}

    ZY: dict[tuple[Subgroup, Subgroup], GSet] = {}
    spaces: dict[Subgroup, _BoxSpace] = {}
    for H in G.subgroups:
        Z = coset_space(G, H)
        mdims, offsets, total = {}, {}, 0
        for A in reps:
            ZY[(H, A)] = product_gset(Z, Y[A])
            mdims[A] = evaluate_dim(M, ZY[(H, A)])
            offsets[A] = total
            total += mdims[A] * ndims[A]
        eb = EchelonBasis(total)
        for (A, B), fs in maps.items():
            for k, f in enumerate(fs):
                g = identity_times(Z, f, Y[B].size)
                Mpull = pullback(M, g, ZY[(H, A)], ZY[(H, B)])   # M(Z×B) -> M(Z×A)
                Mpush = pushforward(M, g, ZY[(H, A)], ZY[(H, B)])  # M(Z×A) -> M(Z×B)
                # a ∈ M(Z×B), b ∈ N(A): M(1×f)^* a ⊗ b - a ⊗ N(f_*) b
                for a in range(mdims[B]):
                    for b in range(ndims[A]):
                        v = _sparse(Mpull.column(a), offsets[A], ndims[A], b)
                        for b2, x in enumerate(Npush[(A, B, k)].column(b)):
                            if x:
                                key = offsets[B] + a * ndims[B] + b2
                                v[key] = v.get(key, Fraction(0)) - x
                        eb.add(v)
                # a ∈ M(Z×A), b ∈ N(B): M(1×f)_* a ⊗ b - a ⊗ N(f^*) b
                for a in range(mdims[A]):
                    for b in range(ndims[B]):
                        v = _sparse(Mpush.column(a), offsets[B], ndims[B], b)
                        for b2, x in enumerate(Npull[(A, B, k)].column(b)):
                            if x:
                                key = offsets[A] + a * ndims[A] + b2
                                v[key] = v.get(key, Fraction(0)) - x
                        eb.add(v)
        spaces[H] = _BoxSpace(offsets, mdims, ndims, total, eb)

    def induced(f, S, T, covariant: bool) -> QMat:
        src, tgt = spaces[S], spaces[T]
        cols = []
        mats = {}
        for A in reps:
            g = times_identity(f, Y[A])
            mats[A] = (pushforward(M, g, ZY[(S, A)], ZY[(T, A)]) if covariant
                       else pullback(M, g, ZY[(S, A)], ZY[(T, A)]))
        # covariant: V(S) -> V(T); contravariant: V(T) -> V(S)
        dom, cod = (src, tgt) if covariant else (tgt, src)
        for j in dom.quotient.free_columns():
            A = max((B for B in reps if dom.offsets[B] <= j and dom.mdims[B] * dom.ndims[B]),
                    key=lambda B: dom.offsets[B])
            a, b = divmod(j - dom.offsets[A], dom.ndims[A])
            image = _sparse(mats[A].column(a), cod.offsets[A], cod.ndims[A], b)
            cols.append(cod.quotient.quotient_coords(image))
        return QMat.from_columns(cols, cod.dim - cod.quotient.rank)

    return functor_from_gset_maps(
        G,
        lambda H: spaces[H].dim - spaces[H].quotient.rank,
        lambda f, S, T: induced(f, S, T, True),
        lambda f, S, T: induced(f, S, T, False),
    )
