"""Dense matrices over the rationals, plus an incremental row-echelon basis."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence


@dataclass(frozen=True)
class QMat:
    nrows: int
    ncols: int
    rows: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if len(self.rows) != self.nrows or any(len(r) != self.ncols for r in self.rows):
            raise ValueError("row data does not match the declared shape")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], ncols: int | None = None) -> QMat:
        rows = tuple(tuple(Fraction(x) for x in r) for r in rows)
        if ncols is None:
            if not rows:
                raise ValueError("ncols needed for a matrix with no rows")
            ncols = len(rows[0])
        return cls(len(rows), ncols, rows)

    @classmethod
    def zeros(cls, m: int, n: int) -> QMat:
        return cls(m, n, tuple((Fraction(0),) * n for _ in range(m)))

    @classmethod
    def identity(cls, n: int) -> QMat:
        return cls(n, n, tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)))

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence], nrows: int) -> QMat:
        return cls(nrows, len(cols), tuple(tuple(Fraction(c[i]) for c in cols)
                                           for i in range(nrows)))

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, ij) -> Fraction:
        i, j = ij
        return self.rows[i][j]

    def __matmul__(self, other: QMat) -> QMat:
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        # matrices here are mostly zero, so work row by row over nonzeros
        zero = Fraction(0)
        out = []
        for r in self.rows:
            acc = [zero] * other.ncols
            for a, orow in zip(r, other.rows):
                if a:
                    for j, b in enumerate(orow):
                        if b:
                            acc[j] += a * b
            out.append(tuple(acc))
        return QMat(self.nrows, other.ncols, tuple(out))

    def __add__(self, other: QMat) -> QMat:
        if self.shape != other.shape:
            raise ValueError(f"cannot add {self.shape} and {other.shape}")
        return QMat(self.nrows, self.ncols,
                    tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)))

    def scale(self, c) -> QMat:
        c = Fraction(c)
        return QMat(self.nrows, self.ncols, tuple(tuple(c * a for a in r) for r in self.rows))

    def apply(self, x: Sequence) -> tuple[Fraction, ...]:
        return tuple(sum((a * b for a, b in zip(r, x) if a and b), Fraction(0))
                     for r in self.rows)

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(r[j] for r in self.rows)

    def is_identity(self) -> bool:
        return self == QMat.identity(self.nrows)

    def to_json(self) -> list:
        return [[str(a) for a in r] for r in self.rows]


def block_matrix(blocks: dict[tuple[int, int], QMat], row_dims: Sequence[int],
                 col_dims: Sequence[int]) -> QMat:
    """Assemble ``blocks[(i, j)]`` into one matrix; missing blocks are zero."""
    roff = [sum(row_dims[:i]) for i in range(len(row_dims))]
    coff = [sum(col_dims[:j]) for j in range(len(col_dims))]
    m, n = sum(row_dims), sum(col_dims)
    data = [[Fraction(0)] * n for _ in range(m)]
    for (i, j), b in blocks.items():
        if b.shape != (row_dims[i], col_dims[j]):
            raise ValueError(f"block {(i, j)} has shape {b.shape}")
        for a in range(b.nrows):
            for c in range(b.ncols):
                data[roff[i] + a][coff[j] + c] += b.rows[a][c]
    return QMat(m, n, tuple(tuple(r) for r in data))


class EchelonBasis:
    """Row space of sparse vectors, kept fully reduced as vectors are added."""

    def __init__(self, dim: int):
        self.dim = dim
        self.rows: dict[int, dict[int, Fraction]] = {}

    def reduce(self, vec: dict[int, Fraction]) -> dict[int, Fraction]:
        vec = {k: Fraction(v) for k, v in vec.items() if v}
        for p in sorted(set(vec) & set(self.rows)):
            if p not in vec:
                continue
            c = vec[p]
            for k, a in self.rows[p].items():
                x = vec.get(k, Fraction(0)) - c * a
                if x:
                    vec[k] = x
                else:
                    vec.pop(k, None)
        return vec

    def add(self, vec: dict[int, Fraction]) -> bool:
        vec = self.reduce(vec)
        # pivots of existing rows are never entries of reduced vectors, so a
        # single pass suffices
        if not vec:
            return False
        p = min(vec)
        inv = 1 / vec[p]
        vec = {k: a * inv for k, a in vec.items()}
        for q, row in self.rows.items():
            if p in row:
                c = row[p]
                for k, a in vec.items():
                    x = row.get(k, Fraction(0)) - c * a
                    if x:
                        row[k] = x
                    else:
                        row.pop(k, None)
        self.rows[p] = vec
        return True

    def extend(self, vecs: Iterable[dict[int, Fraction]]) -> None:
        for v in vecs:
            self.add(v)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def free_columns(self) -> list[int]:
        return [j for j in range(self.dim) if j not in self.rows]

    def quotient_coords(self, vec: dict[int, Fraction]) -> tuple[Fraction, ...]:
        """Coordinates of the class of ``vec`` in ``k^dim / span``, in the free-column basis."""
        red = self.reduce(vec)
        return tuple(red.get(j, Fraction(0)) for j in self.free_columns())


def rank(rows: Sequence[Sequence]) -> int:
    if not rows:
        return 0
    eb = EchelonBasis(len(rows[0]))
    eb.extend({j: a for j, a in enumerate(r) if a} for r in rows)
    return eb.rank
