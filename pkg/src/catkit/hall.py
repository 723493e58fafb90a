"""Gaussian binomials, subspace enumeration, Ringel's Hall product for
finite vector spaces, and Green's convolution of class functions on GL_n(F_q).
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Mapping

from .finitefield import FqField, Mat, Vec
from .laurent import ONE, Q, V, ZERO, LaurentPoly

# Subspace enumeration walks q^{k(n-k)} RREF matrices per pivot set.
MAX_SUBSPACE_WORK = 20_000
MAX_GROUP_ORDER = 12_000


class CapExceeded(ValueError):
    pass


@lru_cache(maxsize=None)
def _gauss_poly(n: int, k: int) -> LaurentPoly:
    if k < 0 or k > n:
        return ZERO
    if k == 0 or k == n:
        return ONE
    return _gauss_poly(n - 1, k - 1) + Q ** k * _gauss_poly(n - 1, k)


def gaussian_binomial(n: int, k: int, q: int | None = None) -> LaurentPoly | int:
    """``[n choose k]_q`` as a polynomial in ``q = v^2``, or its value at an integer ``q``."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    poly = _gauss_poly(n, k)
    return poly if q is None else poly.eval_q(q)


@dataclass(frozen=True, order=True)
class Subspace:
    """A subspace of ``F_q^n`` stored as its RREF basis (rows)."""

    n: int
    basis: Mat

    @property
    def dim(self) -> int:
        return len(self.basis)

    def pivots(self) -> tuple[int, ...]:
        return tuple(next(i for i, a in enumerate(row) if a) for row in self.basis)

    def contains(self, F: FqField, x: Vec) -> bool:
        return F.rank(self.basis + (tuple(x),)) == self.dim

    def complement_basis(self) -> Mat:
        """Standard basis vectors at the non-pivot columns: a complement of this subspace."""
        piv = set(self.pivots())
        return tuple(tuple(1 if j == c else 0 for j in range(self.n))
                     for c in range(self.n) if c not in piv)


def span(F: FqField, n: int, vectors) -> Subspace:
    vectors = [tuple(x) for x in vectors]
    if not vectors:
        return Subspace(n, ())
    red, _ = F.rref(vectors)
    return Subspace(n, red)


def _check_cap(n: int, k: int, q: int) -> None:
    work = q ** (k * (n - k))
    if work > MAX_SUBSPACE_WORK or (n > 4) or (n == 4 and q > 3):
        raise CapExceeded(f"enumerating {k}-subspaces of F_{q}^{n} is beyond the cap")


def enumerate_subspaces(n: int, k: int, F: FqField) -> list[Subspace]:
    """All ``k``-dimensional subspaces of ``F_q^n``, in canonical RREF order."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    _check_cap(n, k, F.q)
    out = []
    for piv in itertools.combinations(range(n), k):
        free = [(r, c) for r, p in enumerate(piv) for c in range(p + 1, n) if c not in piv]
        for vals in itertools.product(range(F.q), repeat=len(free)):
            rows = [[0] * n for _ in range(k)]
            for r, p in enumerate(piv):
                rows[r][p] = 1
            for (r, c), x in zip(free, vals):
                rows[r][c] = x
            out.append(Subspace(n, tuple(tuple(r) for r in rows)))
    return out


def all_subspaces(n: int, F: FqField) -> list[Subspace]:
    return [S for k in range(n + 1) for S in enumerate_subspaces(n, k, F)]


# -- Hall algebra -----------------------------------------------------------


@dataclass(frozen=True)
class HallElement:
    """Finitely supported function on iso classes of F_q-spaces (i.e. on dimensions)."""

    values: Mapping[int, LaurentPoly]

    def __post_init__(self):
        vals = {}
        for d, x in self.values.items():
            if int(d) < 0:
                raise ValueError("dimensions are nonnegative")
            x = LaurentPoly.coerce(x)
            if x:
                vals[int(d)] = x
        object.__setattr__(self, "values", dict(sorted(vals.items())))

    def __call__(self, d: int) -> LaurentPoly:
        return self.values.get(d, ZERO)

    def __eq__(self, other) -> bool:
        if not isinstance(other, HallElement):
            return NotImplemented
        return self.values == other.values

    def __add__(self, other: HallElement) -> HallElement:
        keys = set(self.values) | set(other.values)
        return HallElement({d: self(d) + other(d) for d in keys})

    def support(self) -> list[int]:
        return list(self.values)

    @classmethod
    def indicator(cls, d: int) -> HallElement:
        return cls({d: ONE})

    @classmethod
    def random(cls, rng: random.Random, max_dim: int = 2) -> HallElement:
        return cls({d: LaurentPoly({rng.randint(-2, 2): rng.randint(-3, 3),
                                    rng.randint(-2, 2): rng.randint(-3, 3)})
                    for d in range(max_dim + 1) if rng.random() < 0.8})

    def to_json(self) -> dict:
        return {str(d): x.to_json() for d, x in self.values.items()}

    @classmethod
    def from_json(cls, data) -> HallElement:
        return cls({int(d): LaurentPoly.from_json(x) for d, x in data.items()})


def euler_form(a: int, b: int) -> LaurentPoly:
    """Multiplicative Euler form of ``F_q^a, F_q^b``: only Hom survives, ``sqrt(q^{ab}) = v^{ab}``."""
    return V ** (a * b)


def hall_product(f: HallElement, g: HallElement, q: int | None = None) -> HallElement:
    """``(f•g)[n] = Σ_{a+b=n} v^{ab} [n choose a]_q f(a) g(b)``.

    With ``q`` given, the Gaussian binomial is replaced by its integer value at
    that ``q`` while the twist ``v^{ab}`` stays formal.
    """
    out: dict[int, LaurentPoly] = {}
    for a, x in f.values.items():
        for b, y in g.values.items():
            n = a + b
            count = gaussian_binomial(n, a, q)
            out[n] = out.get(n, ZERO) + euler_form(a, b) * count * x * y
    return HallElement(out)


def hall_product_by_enumeration(f: HallElement, g: HallElement, F: FqField) -> HallElement:
    """Literal sum over subspaces ``V <= C``, at a fixed field size."""
    out: dict[int, LaurentPoly] = {}
    for a, x in f.values.items():
        for b, y in g.values.items():
            n = a + b
            for _ in enumerate_subspaces(n, a, F):
                out[n] = out.get(n, ZERO) + euler_form(a, n - a) * x * y
    return HallElement(out)


# -- direct sums ------------------------------------------------------------


@dataclass(frozen=True)
class DirectSumPair:
    """``C = U ⊕ V`` with the induced ``r: U -> C/V`` and ``s: C/U -> V``.

    ``C/V`` uses the basis ``V.complement_basis()`` (images of standard vectors),
    likewise for ``C/U``; ``U`` and ``V`` use their RREF bases. Matrices act on
    coordinate column vectors.
    """

    U: Subspace
    V: Subspace
    r: Mat
    s: Mat


def quotient_coords(F: FqField, W: Subspace, comp: Mat, x: Vec) -> Vec:
    """Coordinates of the class of ``x`` in ``C/W`` w.r.t. the complement basis ``comp``."""
    coords = F.solve_coords(tuple(W.basis) + tuple(comp), tuple(x))
    if coords is None:
        raise ValueError("complement does not span together with the subspace")
    return coords[W.dim:]


def direct_sum_pairs(n: int, F: FqField, U: Subspace | None = None) -> list[DirectSumPair]:
    subs = all_subspaces(n, F)
    out = []
    for u in ([U] if U is not None else subs):
        for w in subs:
            if u.dim + w.dim != n or F.rank(u.basis + w.basis) != n:
                continue
            w_comp = w.complement_basis()
            u_comp = u.complement_basis()
            # r: U -> C/V, columns are images of U's basis vectors
            r_cols = [quotient_coords(F, w, w_comp, b) for b in u.basis]
            r = tuple(zip(*r_cols)) if r_cols else ()
            # s: C/U -> V, the V-component of each complement vector
            s_cols = []
            for c in u_comp:
                coords = F.solve_coords(tuple(u.basis) + tuple(w.basis), c)
                s_cols.append(coords[u.dim:])
            s = tuple(zip(*s_cols)) if s_cols else ()
            out.append(DirectSumPair(u, w, tuple(map(tuple, r)), tuple(map(tuple, s))))
    return out


# -- GL_n(F_q) conjugacy classes -------------------------------------------


def _encode(m: Mat, q: int) -> int:
    code = 0
    for row in m:
        for a in row:
            code = code * q + a
    return code


@dataclass
class ClassTable:
    n: int
    F: FqField
    reps: list[Mat]
    sizes: list[int]
    orders: list[int]
    _member: dict[int, int] = field(repr=False)

    def class_of(self, m: Mat) -> int:
        return self._member[_encode(m, self.F.q)]

    @property
    def group_order(self) -> int:
        return sum(self.sizes)

    def __len__(self) -> int:
        return len(self.reps)


def gl_elements(n: int, F: FqField) -> list[Mat]:
    out = []
    for entries in itertools.product(range(F.q), repeat=n * n):
        m = tuple(tuple(entries[i * n:(i + 1) * n]) for i in range(n))
        if F.is_invertible(m):
            out.append(m)
    return out


def _element_order(m: Mat, F: FqField) -> int:
    eye = F.identity(len(m))
    k, p = 1, m
    while p != eye:
        p = F.matmul(p, m)
        k += 1
    return k


@lru_cache(maxsize=None)
def _conj_classes_cached(n: int, q: int) -> ClassTable:
    F = FqField(q)
    if n == 0:
        return ClassTable(0, F, [()], [1], [1], {0: 0})
    order = 1
    for i in range(n):
        order *= q ** n - q ** i
    if order > MAX_GROUP_ORDER:
        raise CapExceeded(f"|GL_{n}(F_{q})| = {order} exceeds the cap {MAX_GROUP_ORDER}")
    elems = gl_elements(n, F)
    inverses = [F.mat_inverse(g) for g in elems]
    seen: dict[int, int] = {}
    orbits = []
    for x in elems:
        if _encode(x, q) in seen:
            continue
        orbit = {}
        for g, gi in zip(elems, inverses):
            y = F.matmul(F.matmul(g, x), gi)
            orbit[_encode(y, q)] = y
        rep = min(orbit.values())
        orbits.append((_element_order(rep, F), rep, list(orbit)))
        for code in orbit:
            seen[code] = -1
    orbits.sort()
    member = {}
    for cid, (_, _, codes) in enumerate(orbits):
        for code in codes:
            member[code] = cid
    return ClassTable(n, F, [o[1] for o in orbits], [len(o[2]) for o in orbits],
                      [o[0] for o in orbits], member)


def conj_classes(n: int, F: FqField) -> ClassTable:
    """Conjugacy classes of GL_n(F_q) by brute-force orbits, ordered by (element order, rep)."""
    return _conj_classes_cached(n, F.q)


@dataclass(frozen=True)
class GLClassFunction:
    n: int
    q: int
    values: Mapping[int, Fraction]

    def __post_init__(self):
        table = conj_classes(self.n, FqField(self.q))
        vals = {int(k): Fraction(v) for k, v in self.values.items()}
        if set(vals) - set(range(len(table))):
            raise ValueError(f"unknown class ids {set(vals) - set(range(len(table)))}")
        object.__setattr__(self, "values", {c: vals.get(c, Fraction(0)) for c in range(len(table))})

    def __call__(self, cid: int) -> Fraction:
        return self.values[cid]

    def __eq__(self, other) -> bool:
        if not isinstance(other, GLClassFunction):
            return NotImplemented
        return (self.n, self.q, self.values) == (other.n, other.q, other.values)

    @classmethod
    def constant(cls, n: int, q: int, value=1) -> GLClassFunction:
        k = len(conj_classes(n, FqField(q)))
        return cls(n, q, {c: value for c in range(k)})

    @classmethod
    def indicator(cls, n: int, q: int, cid: int) -> GLClassFunction:
        return cls(n, q, {cid: 1})

    @classmethod
    def random(cls, n: int, q: int, rng: random.Random) -> GLClassFunction:
        k = len(conj_classes(n, FqField(q)))
        return cls(n, q, {c: Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for c in range(k)})

    def to_json(self) -> dict:
        return {"n": self.n, "q": self.q, "values": {str(k): str(v) for k, v in self.values.items()}}

    @classmethod
    def from_json(cls, data) -> GLClassFunction:
        return cls(int(data["n"]), int(data["q"]),
                   {int(k): Fraction(v) for k, v in data["values"].items()})


def restrict_and_quotient(F: FqField, sigma: Mat, W: Subspace,
                          comp: Mat | None = None) -> tuple[Mat, Mat]:
    """Matrices of ``sigma|W`` (in W's basis) and ``sigma/W`` (in the basis ``comp`` of C/W).

    ``sigma`` acts on column vectors. ``comp`` defaults to the standard complement.
    """
    comp = W.complement_basis() if comp is None else comp
    k = W.dim
    restricted_cols = []
    for b in W.basis:
        coords = F.solve_coords(W.basis, F.matvec(sigma, b))
        if coords is None:
            raise ValueError("subspace is not invariant")
        restricted_cols.append(coords)
    quotient_cols = [quotient_coords(F, W, comp, F.matvec(sigma, c)) for c in comp]
    res = tuple(zip(*restricted_cols)) if k else ()
    quo = tuple(zip(*quotient_cols)) if comp else ()
    return tuple(map(tuple, res)), tuple(map(tuple, quo))


def is_invariant(F: FqField, sigma: Mat, W: Subspace) -> bool:
    return all(W.contains(F, F.matvec(sigma, b)) for b in W.basis)


def green_convolution(f: GLClassFunction, g: GLClassFunction,
                      complement: Callable[[Subspace], Mat] | None = None) -> GLClassFunction:
    """``(f•g)(σ) = Σ_{V ≤ C, σV = V} f(σ|V) g(σ/V)``, by enumeration.

    ``complement`` chooses the basis of ``C/V``; the result does not depend on it.
    """
    if f.q != g.q:
        raise ValueError("field mismatch")
    F = FqField(f.q)
    n = f.n + g.n
    table = conj_classes(n, F)
    tf, tg = conj_classes(f.n, F), conj_classes(g.n, F)
    subs = enumerate_subspaces(n, f.n, F)
    out = {}
    for cid, sigma in enumerate(table.reps):
        total = Fraction(0)
        for W in subs:
            if not is_invariant(F, sigma, W):
                continue
            comp = complement(W) if complement else None
            res, quo = restrict_and_quotient(F, sigma, W, comp)
            total += f(tf.class_of(res)) * g(tg.class_of(quo))
        out[cid] = total
    return GLClassFunction(n, f.q, out)
