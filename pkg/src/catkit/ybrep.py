"""Yang-Baxter and Hecke checks, braid representations, Markov-trace invariants."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Mapping

from .braids import BraidWord, writhe
from .laurent import ONE, Q, V, LaurentPoly
from .sparse import DimensionError, SparseMat, kron, kron_all, partial_trace, trace

MAX_REP_STRANDS = 8


@dataclass(frozen=True, eq=False)
class YBOp:
    """An operator ``R`` on ``V ⊗ V`` with ``dim V = dim``."""

    dim: int
    R: SparseMat

    def __post_init__(self):
        if self.R.shape != (self.dim ** 2, self.dim ** 2):
            raise DimensionError(f"R has shape {self.R.shape}, expected {self.dim ** 2} square")

    @cached_property
    def R_inv(self) -> SparseMat:
        return self.R.inverse()

    @classmethod
    def from_matrix(cls, R: SparseMat) -> YBOp:
        d = round(R.nrows ** 0.5)
        if d * d != R.nrows:
            raise DimensionError(f"{R.nrows} is not a square dimension")
        return cls(d, R)


@dataclass(frozen=True, eq=False)
class EnhancedYB:
    """A Yang-Baxter operator with Markov-trace data ``(mu, alpha, beta)``."""

    yb: YBOp
    mu: SparseMat
    alpha: LaurentPoly
    beta: LaurentPoly


@dataclass(frozen=True)
class HeckeParams:
    r: int
    s: int = 0


def identity_op(d: int) -> YBOp:
    return YBOp(d, SparseMat.identity(d * d))


def flip_op(d: int) -> YBOp:
    """The swap ``e_i ⊗ e_j -> e_j ⊗ e_i``."""
    return YBOp(d, SparseMat.permutation([j * d + i for i in range(d) for j in range(d)]))


def flip_matrix(d1: int, d2: int) -> SparseMat:
    """Swap ``V1 ⊗ V2 -> V2 ⊗ V1``."""
    return SparseMat.permutation([j * d1 + i for i in range(d1) for j in range(d2)])


def check_ybe(op: YBOp) -> bool:
    I = SparseMat.identity(op.dim)
    R1 = kron(op.R, I)
    R2 = kron(I, op.R)
    return R1 @ R2 @ R1 == R2 @ R1 @ R2


def check_hecke(op: YBOp, p: HeckeParams, case: str) -> bool:
    """Quadratic relations satisfied by braidings of cuspidal representations.

    ``distinct``: R² = q^{rs}·1.  ``equal``: R² = q^{r(r-1)/2}(q^r - 1)·R + q^{r²}·1.
    """
    I = SparseMat.identity(op.dim ** 2)
    R2 = op.R @ op.R
    if case == "distinct":
        return R2 == I.scale(Q ** (p.r * p.s))
    if case == "equal":
        r = p.r
        e = Q ** (r * (r - 1) // 2) * (Q ** r - 1)
        return R2 == op.R.scale(e) + I.scale(Q ** (r * r))
    raise ValueError(f"unknown case {case!r}; expected 'distinct' or 'equal'")


def check_hecke_algebroid(ys: Mapping[tuple, SparseMat], dims: Mapping, d: Mapping,
                          e: Mapping) -> bool:
    """Relations of the Hecke algebroid on a family ``y[(s, t)]: X_s ⊗ X_t -> X_t ⊗ X_s``.

    Checks ``y_ts y_st = d(s,t)`` for ``s != t``, ``y_ss² = e(s) y_ss + d(s,s)``
    and the coloured Yang-Baxter equation for every triple of labels.
    """
    labels = sorted(dims)
    for s in labels:
        for t in labels:
            y = ys[(s, t)]
            if y.shape != (dims[t] * dims[s], dims[s] * dims[t]):
                raise DimensionError(f"y[{s},{t}] has shape {y.shape}")
            if d[(s, t)] != d[(t, s)]:
                return False
    for s in labels:
        for t in labels:
            I = SparseMat.identity(dims[s] * dims[t])
            if s != t:
                if ys[(t, s)] @ ys[(s, t)] != I.scale(d[(s, t)]):
                    return False
            else:
                y = ys[(s, s)]
                if y @ y != y.scale(e[s]) + I.scale(d[(s, s)]):
                    return False
    eye = {s: SparseMat.identity(dims[s]) for s in labels}
    for s in labels:
        for t in labels:
            for u in labels:
                lhs = kron(ys[(t, u)], eye[s]) @ kron(eye[t], ys[(s, u)]) @ kron(ys[(s, t)], eye[u])
                rhs = kron(eye[u], ys[(s, t)]) @ kron(ys[(s, u)], eye[t]) @ kron(eye[s], ys[(t, u)])
                if lhs != rhs:
                    return False
    return True


def generator_matrix(letter: int, n: int, op: YBOp) -> SparseMat:
    i = abs(letter)
    R = op.R if letter > 0 else op.R_inv
    I = SparseMat.identity
    return kron_all([I(op.dim ** (i - 1)), R, I(op.dim ** (n - i - 1))])


def braid_rep(b: BraidWord, op: YBOp) -> SparseMat:
    """``rho(b)`` on ``V^{⊗n}``; ``rho(a ∘ b) = rho(a) @ rho(b)``."""
    if b.strands > MAX_REP_STRANDS and op.dim > 1:
        raise ValueError(f"{b.strands} strands exceeds the cap of {MAX_REP_STRANDS}")
    out = SparseMat.identity(op.dim ** b.strands)
    cache: dict[int, SparseMat] = {}
    for x in b.word:
        if x not in cache:
            cache[x] = generator_matrix(x, b.strands, op)
        out = out @ cache[x]
    return out


def enhancement_checks(E: EnhancedYB) -> dict[str, bool]:
    """The three Markov-trace conditions, by name."""
    d = E.yb.dim
    mumu = kron(E.mu, E.mu)
    R, R_inv = E.yb.R, E.yb.R_inv
    is_diag = all(i == j for i, j, _ in E.mu.entries())
    return {
        "mu_diagonal": is_diag,
        "commutes": mumu @ R == R @ mumu,
        "trace_R": partial_trace(R @ mumu, 2, [d, d]) == E.mu.scale(E.alpha * E.beta),
        "trace_R_inv": partial_trace(R_inv @ mumu, 2, [d, d])
        == E.mu.scale(E.alpha.inverse() * E.beta),
    }


def markov_trace(b: BraidWord, E: EnhancedYB) -> LaurentPoly:
    """``alpha^-w · beta^-n · tr(rho(b) mu^{⊗n})``; its value on the unknot is ``tr(mu)/beta``."""
    mun = kron_all([E.mu] * b.strands)
    t = trace(braid_rep(b, E.yb) @ mun)
    return E.alpha ** (-writhe(b)) * E.beta ** (-b.strands) * t


def eyb_invariant(b: BraidWord, E: EnhancedYB) -> LaurentPoly:
    """The Markov trace divided by its unknot value, so the unknot maps to 1."""
    unknot = E.beta.inverse() * trace(E.mu)
    return markov_trace(b, E).divexact(unknot)


def jones_R() -> SparseMat:
    """Hecke-normalized R on C² ⊗ C², eigenvalues ``q`` and ``-1``.

    ``e_i⊗e_i -> q e_i⊗e_i``, ``e_1⊗e_2 -> v e_2⊗e_1``,
    ``e_2⊗e_1 -> v e_1⊗e_2 + (q - 1) e_2⊗e_1``.
    """
    e11, e12, e21, e22 = 0, 1, 2, 3
    return SparseMat(4, 4, {
        (e11, e11): Q, (e22, e22): Q,
        (e21, e12): V,
        (e12, e21): V, (e21, e21): Q - 1,
    })


def builtin_jones() -> EnhancedYB:
    """Enhanced operator whose normalized trace is the Jones polynomial in ``v``."""
    op = YBOp(2, jones_R())
    mu = SparseMat.diagonal([V, V ** -1])
    # alpha*beta = v^3 and beta/alpha = v^-3 are forced by mu; the common sign
    # makes the unknot value -(v + v^-1), the bracket's loop value.
    return EnhancedYB(op, mu, alpha=-(V ** 3), beta=-ONE)


BUILTIN_OPERATORS = {"jones": builtin_jones}
