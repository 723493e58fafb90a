"""Small finite fields and linear algebra over them.

Elements of ``F_q`` are the ints ``0..q-1``. For prime ``q`` the arithmetic is
modular; ``F_4`` is ``F_2[x]/(x^2 + x + 1)`` with ``x`` encoded as 2.
Vectors are tuples, matrices tuples of row tuples.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property

SUPPORTED_Q = (2, 3, 4, 5)

Vec = tuple[int, ...]
Mat = tuple[Vec, ...]


def _gf4_mul(a: int, b: int) -> int:
    # carry-less multiply then reduce by x^2 + x + 1
    r = 0
    for i in range(2):
        if b >> i & 1:
            r ^= a << i
    if r & 4:
        r ^= 0b111
    return r


@dataclass(frozen=True)
class FqField:
    q: int
    add: tuple[tuple[int, ...], ...] = field(init=False, repr=False)
    mul: tuple[tuple[int, ...], ...] = field(init=False, repr=False)

    def __post_init__(self):
        q = self.q
        if q not in SUPPORTED_Q:
            raise ValueError(f"q={q} not supported; choose from {SUPPORTED_Q}")
        if q == 4:
            add = tuple(tuple(a ^ b for b in range(4)) for a in range(4))
            mul = tuple(tuple(_gf4_mul(a, b) for b in range(4)) for a in range(4))
        else:
            add = tuple(tuple((a + b) % q for b in range(q)) for a in range(q))
            mul = tuple(tuple((a * b) % q for b in range(q)) for a in range(q))
        object.__setattr__(self, "add", add)
        object.__setattr__(self, "mul", mul)
        if q == 4:
            self.check_axioms()

    @cached_property
    def neg(self) -> tuple[int, ...]:
        return tuple(next(b for b in range(self.q) if self.add[a][b] == 0) for a in range(self.q))

    @cached_property
    def inv(self) -> tuple[int | None, ...]:
        return (None,) + tuple(next(b for b in range(1, self.q) if self.mul[a][b] == 1)
                               for a in range(1, self.q))

    def check_axioms(self) -> None:
        E = range(self.q)
        A, M = self.add, self.mul
        for a, b, c in itertools.product(E, repeat=3):
            if A[A[a][b]][c] != A[a][A[b][c]] or M[M[a][b]][c] != M[a][M[b][c]]:
                raise ValueError("associativity fails")
            if M[a][A[b][c]] != A[M[a][b]][M[a][c]]:
                raise ValueError("distributivity fails")
        for a, b in itertools.product(E, repeat=2):
            if A[a][b] != A[b][a] or M[a][b] != M[b][a]:
                raise ValueError("commutativity fails")
        for a in E:
            if A[a][0] != a or M[a][1] != a:
                raise ValueError("identity fails")
            if not any(A[a][b] == 0 for b in E):
                raise ValueError("additive inverse missing")
            if a and not any(M[a][b] == 1 for b in E):
                raise ValueError("multiplicative inverse missing")

    # -- vector helpers -----------------------------------------------------

    def vadd(self, x: Vec, y: Vec) -> Vec:
        A = self.add
        return tuple(A[a][b] for a, b in zip(x, y))

    def vscale(self, c: int, x: Vec) -> Vec:
        M = self.mul
        return tuple(M[c][a] for a in x)

    def vsub(self, x: Vec, y: Vec) -> Vec:
        return self.vadd(x, tuple(self.neg[b] for b in y))

    def dot(self, x: Vec, y: Vec) -> int:
        s = 0
        for a, b in zip(x, y):
            s = self.add[s][self.mul[a][b]]
        return s

    def matvec(self, m: Mat, x: Vec) -> Vec:
        return tuple(self.dot(row, x) for row in m)

    def matmul(self, a: Mat, b: Mat) -> Mat:
        cols = list(zip(*b))
        return tuple(tuple(self.dot(row, col) for col in cols) for row in a)

    def rref(self, rows) -> tuple[Mat, tuple[int, ...]]:
        """Reduced row echelon form (zero rows dropped) and pivot columns."""
        rows = [list(r) for r in rows]
        if not rows:
            return (), ()
        ncols = len(rows[0])
        pivots = []
        r = 0
        for c in range(ncols):
            piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
            if piv is None:
                continue
            rows[r], rows[piv] = rows[piv], rows[r]
            inv = self.inv[rows[r][c]]
            rows[r] = [self.mul[inv][a] for a in rows[r]]
            for i in range(len(rows)):
                if i != r and rows[i][c]:
                    f = self.neg[rows[i][c]]
                    rows[i] = [self.add[a][self.mul[f][b]] for a, b in zip(rows[i], rows[r])]
            pivots.append(c)
            r += 1
            if r == len(rows):
                break
        return tuple(tuple(x) for x in rows[:r]), tuple(pivots)

    def rank(self, rows) -> int:
        return len(self.rref(rows)[1])

    def solve_coords(self, basis, x: Vec) -> Vec | None:
        """Coordinates of ``x`` in the (independent) ``basis``, or ``None`` if outside the span."""
        k = len(basis)
        if k == 0:
            return () if not any(x) else None
        # columns are basis vectors; augment with x
        aug = [tuple(b[i] for b in basis) + (x[i],) for i in range(len(x))]
        red, piv = self.rref(aug)
        if k in piv:
            return None
        coords = [0] * k
        for row, c in zip(red, piv):
            coords[c] = row[k]
        return tuple(coords)

    def is_invertible(self, m: Mat) -> bool:
        return self.rank(m) == len(m)

    def identity(self, n: int) -> Mat:
        return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))

    def mat_inverse(self, m: Mat) -> Mat:
        n = len(m)
        aug = [tuple(m[i]) + self.identity(n)[i] for i in range(n)]
        red, piv = self.rref(aug)
        if tuple(piv[:n]) != tuple(range(n)) or len(red) < n:
            raise ValueError("matrix is singular")
        return tuple(tuple(row[n:]) for row in red)

    def vectors(self, n: int):
        return itertools.product(range(self.q), repeat=n)
