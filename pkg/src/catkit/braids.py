"""Braid words, their Markov closures, and a Kauffman-bracket state-sum oracle.

Sign conventions live in :mod:`catkit.conventions`.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

from .conventions import BRACKET_A_SQUARED_TO_V
from .laurent import ONE, ZERO, LaurentPoly

MAX_BRACKET_CROSSINGS = 14


@dataclass(frozen=True)
class Permutation:
    """A bijection of ``{1..n}`` given by its images (``images[i-1]`` is the image of i)."""

    images: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"{self.images} is not a permutation of 1..{len(self.images)}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        """``self * other`` applies ``self`` first, then ``other``."""
        if self.n != other.n:
            raise ValueError("permutations of different degree")
        return Permutation(tuple(other(self(i)) for i in range(1, self.n + 1)))

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, j in enumerate(self.images, 1):
            inv[j - 1] = i
        return Permutation(tuple(inv))

    def block_sum(self, other: Permutation) -> Permutation:
        return Permutation(self.images + tuple(j + self.n for j in other.images))

    def cycle_type(self) -> tuple[int, ...]:
        seen, lengths = set(), []
        for i in range(1, self.n + 1):
            if i in seen:
                continue
            k, j = 0, i
            while j not in seen:
                seen.add(j)
                j = self(j)
                k += 1
            lengths.append(k)
        return tuple(sorted(lengths, reverse=True))


@dataclass(frozen=True)
class BraidWord:
    """A word in the Artin generators; letter ``i`` is ``s_i``, ``-i`` its inverse."""

    strands: int
    word: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "word", tuple(int(x) for x in self.word))
        if self.strands < 1:
            raise ValueError("a braid needs at least one strand")
        for x in self.word:
            if x == 0 or abs(x) >= self.strands:
                raise ValueError(f"letter {x} invalid on {self.strands} strands")

    def __len__(self) -> int:
        return len(self.word)

    def inverse(self) -> BraidWord:
        return BraidWord(self.strands, tuple(-x for x in reversed(self.word)))

    def to_json(self) -> dict:
        return {"strands": self.strands, "word": list(self.word)}

    @classmethod
    def from_json(cls, data) -> BraidWord:
        try:
            return cls(int(data["strands"]), tuple(data["word"]))
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed braid JSON: {exc}") from exc


def free_reduce(word: Sequence[int]) -> tuple[int, ...]:
    stack: list[int] = []
    for x in word:
        if stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    return tuple(stack)


def braid_compose(a: BraidWord, b: BraidWord) -> BraidWord:
    """``a`` followed by ``b``, freely reduced."""
    if a.strands != b.strands:
        raise ValueError(f"strand mismatch: {a.strands} vs {b.strands}")
    return BraidWord(a.strands, free_reduce(a.word + b.word))


def braid_tensor(a: BraidWord, b: BraidWord) -> BraidWord:
    """Side by side: ``b``'s generators are shifted past ``a``'s strands."""
    shift = a.strands
    moved = tuple(x + shift if x > 0 else x - shift for x in b.word)
    return BraidWord(a.strands + b.strands, a.word + moved)


def braiding_gamma(m: int, n: int) -> BraidWord:
    """Positive braid taking the first ``m`` strands past the last ``n``.

    Strand ``j <= m`` ends at position ``j + n``; strand ``m + j`` ends at ``j``.
    """
    if m < 0 or n < 0:
        raise ValueError("block sizes must be nonnegative")
    word = []
    for j in range(m, 0, -1):
        word.extend(range(j, j + n))
    return BraidWord(max(m + n, 1), tuple(word))


def underlying_perm(b: BraidWord) -> Permutation:
    """Where each strand ends up: strand starting at position p ends at ``perm(p)``."""
    pos = list(range(1, b.strands + 1))  # pos[strand-1] = current position
    at = list(range(1, b.strands + 1))   # at[position-1] = strand there
    for x in b.word:
        i = abs(x)
        s, t = at[i - 1], at[i]
        at[i - 1], at[i] = t, s
        pos[s - 1], pos[t - 1] = i + 1, i
    return Permutation(tuple(pos))


def writhe(b: BraidWord) -> int:
    return sum(1 if x > 0 else -1 for x in b.word)


def stabilize(b: BraidWord, sign: int = 1) -> BraidWord:
    """Markov stabilization: embed in ``n + 1`` strands and append ``s_n^±1``."""
    return BraidWord(b.strands + 1, b.word + (sign * b.strands,))


def conjugate(b: BraidWord, c: BraidWord) -> BraidWord:
    """``c · b · c^-1`` (not reduced, so the crossing count is predictable)."""
    if b.strands != c.strands:
        raise ValueError("strand mismatch")
    return BraidWord(b.strands, c.word + b.word + c.inverse().word)


# -- planar diagrams --------------------------------------------------------


@dataclass(frozen=True)
class Crossing:
    """An oriented crossing ``X[a, b, c, d]``.

    ``a`` is the incoming under-arc and the labels run counterclockwise, so
    the under-strand goes ``a -> c``. The over-strand goes ``d -> b`` when
    ``sign == +1`` and ``b -> d`` when ``sign == -1``.
    """

    a: int
    b: int
    c: int
    d: int
    sign: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("crossing sign must be ±1")

    @property
    def arcs(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def incoming(self) -> tuple[int, int]:
        return (self.a, self.d if self.sign > 0 else self.b)

    def outgoing(self) -> tuple[int, int]:
        return (self.c, self.b if self.sign > 0 else self.d)


@dataclass(frozen=True)
class PlanarDiagram:
    """An oriented link diagram: crossings plus crossingless circles."""

    crossings: tuple[Crossing, ...] = ()
    loops: int = 0

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(self.crossings))
        counts: dict[int, int] = {}
        ins: dict[int, int] = {}
        outs: dict[int, int] = {}
        for x in self.crossings:
            for arc in x.arcs:
                counts[arc] = counts.get(arc, 0) + 1
            for arc in x.incoming():
                ins[arc] = ins.get(arc, 0) + 1
            for arc in x.outgoing():
                outs[arc] = outs.get(arc, 0) + 1
        bad = [arc for arc, k in counts.items() if k != 2]
        if bad:
            raise ValueError(f"arcs {sorted(bad)} do not appear exactly twice")
        if any(ins.get(arc) != 1 or outs.get(arc) != 1 for arc in counts):
            raise ValueError("inconsistent orientations: each arc must leave one "
                             "crossing and enter one")
        if self.loops < 0:
            raise ValueError("negative loop count")

    @property
    def arcs(self) -> list[int]:
        return sorted({a for x in self.crossings for a in x.arcs})

    def writhe(self) -> int:
        return sum(x.sign for x in self.crossings)

    def num_components(self) -> int:
        uf = _UnionFind()
        for x in self.crossings:
            uf.union(x.a, x.c)
            uf.union(x.b, x.d)
        return uf.count(self.arcs) + self.loops

    def to_json(self) -> dict:
        return {"crossings": [[x.a, x.b, x.c, x.d, x.sign] for x in self.crossings],
                "loops": self.loops}

    @classmethod
    def from_json(cls, data) -> PlanarDiagram:
        try:
            return cls(tuple(Crossing(*map(int, row)) for row in data["crossings"]),
                       int(data.get("loops", 0)))
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed PD JSON: {exc}") from exc


class _UnionFind:
    def __init__(self):
        self.parent: dict = {}

    def find(self, x):
        self.parent.setdefault(x, x)
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[rx] = ry

    def count(self, items) -> int:
        return len({self.find(x) for x in items})


def markov_closure(b: BraidWord) -> PlanarDiagram:
    """Close strand ``i`` top to strand ``i`` bottom.

    The braid is drawn flowing upward, first letter at the bottom. At ``s_i``
    the strand coming from the lower left goes over to the upper right.
    """
    fresh = itertools.count(1)
    start = [next(fresh) for _ in range(b.strands)]
    cur = list(start)
    raw = []
    for x in b.word:
        i = abs(x)
        left, right = cur[i - 1], cur[i]   # arriving from SW, SE
        nw, ne = next(fresh), next(fresh)
        if x > 0:
            raw.append((right, ne, nw, left, 1))
        else:
            raw.append((left, right, ne, nw, -1))
        cur[i - 1], cur[i] = nw, ne
    rename = {end: beg for beg, end in zip(start, cur) if beg != end}

    def r(arc):
        return rename.get(arc, arc)

    loops = sum(1 for beg, end in zip(start, cur) if beg == end)
    crossings = [(r(a), r(bb), r(c), r(d), s) for a, bb, c, d, s in raw]
    order: dict[int, int] = {}
    for row in crossings:
        for arc in row[:4]:
            order.setdefault(arc, len(order) + 1)
    return PlanarDiagram(tuple(Crossing(order[a], order[bb], order[c], order[d], s)
                               for a, bb, c, d, s in crossings), loops)


# -- Kauffman bracket -------------------------------------------------------

_A = LaurentPoly.monomial(1)          # bracket variable A, stored in the same ring
_LOOP = -(_A ** 2) - _A ** -2


def bracket_polynomial(pd: PlanarDiagram) -> LaurentPoly:
    """The Kauffman bracket <D> in the variable A (as a LaurentPoly), <O> = 1."""
    n = len(pd.crossings)
    if n > MAX_BRACKET_CROSSINGS:
        raise ValueError(f"{n} crossings exceeds the state-sum cap of {MAX_BRACKET_CROSSINGS}")
    arcs = pd.arcs
    by_loops: dict[tuple[int, int], int] = {}
    for state in itertools.product((0, 1), repeat=n):
        uf = _UnionFind()
        for x, s in zip(pd.crossings, state):
            if s == 0:      # A-smoothing
                uf.union(x.a, x.b)
                uf.union(x.c, x.d)
            else:           # B-smoothing
                uf.union(x.a, x.d)
                uf.union(x.b, x.c)
        loops = uf.count(arcs) + pd.loops
        a_minus_b = n - 2 * sum(state)
        key = (a_minus_b, loops)
        by_loops[key] = by_loops.get(key, 0) + 1
    total = ZERO
    for (a_minus_b, loops), mult in sorted(by_loops.items()):
        total = total + _A ** a_minus_b * _LOOP ** (loops - 1) * mult
    return total


def kauffman_bracket(pd: PlanarDiagram) -> LaurentPoly:
    """Jones polynomial in ``v`` from the bracket state sum.

    Computes ``(-A^3)^-w <D>`` and substitutes ``A^2 -> v`` (see
    :mod:`catkit.conventions`). The unknot maps to 1.
    """
    if not pd.crossings and pd.loops == 0:
        raise ValueError("empty diagram")
    f = (-(_A ** 3)) ** (-pd.writhe()) * bracket_polynomial(pd)
    return f.halve_exponents().substitute(BRACKET_A_SQUARED_TO_V)


def jones_from_braid(b: BraidWord) -> LaurentPoly:
    return kauffman_bracket(markov_closure(b))
