"""Sparse matrices over Z[v^±1].

Conventions, fixed once for the whole package:

* a morphism X -> Y is a ``dim(Y) x dim(X)`` matrix acting on column vectors;
* ``compose(A, B)`` is ``A @ B``: apply ``B`` first, then ``A``;
* Kronecker products are row-major: the index of ``e_i ⊗ e_j`` in
  ``V ⊗ W`` is ``i * dim(W) + j``, so the leftmost tensor factor is the most
  significant digit.
"""
from __future__ import annotations

from math import prod
from typing import Iterable, Mapping, Sequence

from .laurent import ONE, ZERO, LaurentPoly, Scalar


class DimensionError(ValueError):
    pass


class SparseMat:
    """Immutable sparse matrix with :class:`LaurentPoly` entries."""

    __slots__ = ("nrows", "ncols", "_e")

    def __init__(self, nrows: int, ncols: int,
                 entries: Mapping[tuple[int, int], Scalar] | Iterable = ()):
        if nrows < 0 or ncols < 0:
            raise DimensionError("negative dimension")
        items = entries.items() if isinstance(entries, Mapping) else \
            (((i, j), x) for i, j, x in entries)
        e: dict[tuple[int, int], LaurentPoly] = {}
        for (i, j), x in items:
            if not (0 <= i < nrows and 0 <= j < ncols):
                raise DimensionError(f"index ({i}, {j}) out of range for {nrows}x{ncols}")
            x = LaurentPoly.coerce(x)
            if x:
                e[(i, j)] = e.get((i, j), ZERO) + x
                if not e[(i, j)]:
                    del e[(i, j)]
        object.__setattr__(self, "nrows", nrows)
        object.__setattr__(self, "ncols", ncols)
        object.__setattr__(self, "_e", e)

    def __setattr__(self, name, value):
        raise AttributeError("SparseMat is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def identity(cls, n: int) -> SparseMat:
        return cls(n, n, {(i, i): ONE for i in range(n)})

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> SparseMat:
        return cls(nrows, ncols)

    @classmethod
    def scalar(cls, x: Scalar) -> SparseMat:
        return cls(1, 1, {(0, 0): x})

    @classmethod
    def diagonal(cls, values: Sequence[Scalar]) -> SparseMat:
        n = len(values)
        return cls(n, n, {(i, i): x for i, x in enumerate(values)})

    @classmethod
    def from_dense(cls, rows: Sequence[Sequence[Scalar]]) -> SparseMat:
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise DimensionError("ragged rows")
        return cls(nrows, ncols, {(i, j): x for i, r in enumerate(rows)
                                  for j, x in enumerate(r)})

    @classmethod
    def permutation(cls, images: Sequence[int]) -> SparseMat:
        """Matrix sending basis vector ``e_j`` to ``e_{images[j]}``."""
        n = len(images)
        return cls(n, n, {(images[j], j): ONE for j in range(n)})

    # -- inspection ---------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def __getitem__(self, ij: tuple[int, int]) -> LaurentPoly:
        return self._e.get(ij, ZERO)

    def entries(self):
        """Sorted ``(i, j, value)`` triples."""
        return [(i, j, x) for (i, j), x in sorted(self._e.items())]

    def nnz(self) -> int:
        return len(self._e)

    def is_zero(self) -> bool:
        return not self._e

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def to_dense(self) -> list[list[LaurentPoly]]:
        out = [[ZERO] * self.ncols for _ in range(self.nrows)]
        for (i, j), x in self._e.items():
            out[i][j] = x
        return out

    # -- algebra ------------------------------------------------------------

    def __add__(self, other: SparseMat) -> SparseMat:
        if not isinstance(other, SparseMat):
            return NotImplemented
        if self.shape != other.shape:
            raise DimensionError(f"cannot add {self.shape} and {other.shape}")
        e = dict(self._e)
        for k, x in other._e.items():
            e[k] = e.get(k, ZERO) + x
        return SparseMat(self.nrows, self.ncols, e)

    def __neg__(self) -> SparseMat:
        return SparseMat(self.nrows, self.ncols, {k: -x for k, x in self._e.items()})

    def __sub__(self, other: SparseMat) -> SparseMat:
        return self + (-other)

    def scale(self, c: Scalar) -> SparseMat:
        c = LaurentPoly.coerce(c)
        return SparseMat(self.nrows, self.ncols, {k: c * x for k, x in self._e.items()})

    def __mul__(self, c: Scalar) -> SparseMat:
        if isinstance(c, (int, LaurentPoly)):
            return self.scale(c)
        return NotImplemented

    __rmul__ = __mul__

    def __matmul__(self, other: SparseMat) -> SparseMat:
        return compose(self, other)

    def transpose(self) -> SparseMat:
        return SparseMat(self.ncols, self.nrows, {(j, i): x for (i, j), x in self._e.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparseMat):
            return NotImplemented
        return self.shape == other.shape and self._e == other._e

    def __hash__(self) -> int:
        return hash((self.nrows, self.ncols, frozenset(self._e.items())))

    def __repr__(self) -> str:
        return f"SparseMat({self.nrows}, {self.ncols}, nnz={len(self._e)})"

    def inverse(self) -> SparseMat:
        return mat_inverse(self)

    # -- serialization ------------------------------------------------------

    def to_json(self) -> dict:
        return {"nrows": self.nrows, "ncols": self.ncols,
                "entries": [[i, j, x.to_json()] for i, j, x in self.entries()]}

    @classmethod
    def from_json(cls, data: Mapping) -> SparseMat:
        try:
            return cls(int(data["nrows"]), int(data["ncols"]),
                       [(int(i), int(j), LaurentPoly.from_json(x))
                        for i, j, x in data["entries"]])
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed matrix JSON: {exc}") from exc


def compose(A: SparseMat, B: SparseMat) -> SparseMat:
    """``A ∘ B``: B is applied first. Requires ``A.ncols == B.nrows``."""
    if A.ncols != B.nrows:
        raise DimensionError(f"cannot compose {A.shape} after {B.shape}")
    by_row: dict[int, list[tuple[int, LaurentPoly]]] = {}
    for (k, j), y in B._e.items():
        by_row.setdefault(k, []).append((j, y))
    out: dict[tuple[int, int], LaurentPoly] = {}
    for (i, k), x in A._e.items():
        for j, y in by_row.get(k, ()):
            out[(i, j)] = out.get((i, j), ZERO) + x * y
    return SparseMat(A.nrows, B.ncols, out)


def kron(A: SparseMat, B: SparseMat) -> SparseMat:
    """Kronecker product, row-major: ``(i, k) x (j, l) -> (i*B.nrows + k, j*B.ncols + l)``."""
    out = {}
    for (i, j), x in A._e.items():
        for (k, l), y in B._e.items():
            out[(i * B.nrows + k, j * B.ncols + l)] = x * y
    return SparseMat(A.nrows * B.nrows, A.ncols * B.ncols, out)


def kron_all(mats: Iterable[SparseMat]) -> SparseMat:
    out = SparseMat.identity(1)
    for m in mats:
        out = kron(out, m)
    return out


def trace(A: SparseMat) -> LaurentPoly:
    if not A.is_square():
        raise DimensionError(f"trace of non-square {A.shape} matrix")
    total = ZERO
    for (i, j), x in A._e.items():
        if i == j:
            total = total + x
    return total


def _digits(index: int, dims: Sequence[int]) -> list[int]:
    out = []
    for d in reversed(dims):
        index, r = divmod(index, d)
        out.append(r)
    return out[::-1]


def _undigits(digits: Sequence[int], dims: Sequence[int]) -> int:
    index = 0
    for x, d in zip(digits, dims):
        index = index * d + x
    return index


def partial_trace(A: SparseMat, site: int, dims: Sequence[int]) -> SparseMat:
    """Contract tensor factor ``site`` (1-based) of a square matrix on ``⊗ dims``."""
    dims = list(dims)
    n = prod(dims)
    if not A.is_square() or A.nrows != n:
        raise DimensionError(f"{A.shape} matrix is not an operator on dims {dims}")
    if not 1 <= site <= len(dims):
        raise DimensionError(f"site {site} not in 1..{len(dims)}")
    s = site - 1
    rest = dims[:s] + dims[s + 1:]
    m = prod(rest)
    out: dict[tuple[int, int], LaurentPoly] = {}
    for (i, j), x in A._e.items():
        di, dj = _digits(i, dims), _digits(j, dims)
        if di[s] != dj[s]:
            continue
        key = (_undigits(di[:s] + di[s + 1:], rest), _undigits(dj[:s] + dj[s + 1:], rest))
        out[key] = out.get(key, ZERO) + x
    return SparseMat(m, m, out)


def mat_inverse(A: SparseMat) -> SparseMat:
    """Inverse over Z[v^±1] via the Faddeev-LeVerrier recurrence.

    The determinant must be a unit ``±v^k``; otherwise the inverse has
    non-Laurent entries and ``ZeroDivisionError`` is raised.
    """
    if not A.is_square():
        raise DimensionError("inverse of non-square matrix")
    n = A.nrows
    if n == 0:
        return A
    eye = SparseMat.identity(n)
    M = SparseMat.zeros(n, n)
    c = ONE
    for k in range(1, n + 1):
        M = compose(A, M) + eye.scale(c)
        t = trace(compose(A, M))
        c = -_divide_int(t, k)
    # c is now c_0 = (-1)^n det A, and A^{-1} = -M / c_0.
    if not c.is_unit():
        raise ZeroDivisionError(f"determinant {c} is not a unit in Z[v^±1]")
    return M.scale(-c.inverse())


def _divide_int(p: LaurentPoly, k: int) -> LaurentPoly:
    out = {}
    for e, c in p.coeffs.items():
        if c % k:
            raise ArithmeticError("non-integral characteristic polynomial coefficient")
        out[e] = c // k
    return LaurentPoly(out)


def determinant(A: SparseMat) -> LaurentPoly:
    """Determinant via the same recurrence (used for invertibility checks)."""
    if not A.is_square():
        raise DimensionError("determinant of non-square matrix")
    n = A.nrows
    eye = SparseMat.identity(n)
    M = SparseMat.zeros(n, n)
    c = ONE
    for k in range(1, n + 1):
        M = compose(A, M) + eye.scale(c)
        c = -_divide_int(trace(compose(A, M)), k)
    return c if n % 2 == 0 else -c
