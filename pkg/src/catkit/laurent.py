"""Exact Laurent polynomials in one variable ``v``.

Everything in the package that needs a scalar uses this ring. The Hecke
parameter is ``q = v**2`` so square roots of powers of ``q`` stay integral.
Coefficients are Python ints, so there is no overflow.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Union

Scalar = Union["LaurentPoly", int]


class LaurentPoly:
    """An element of Z[v, v^-1], stored as ``{exponent: coefficient}``.

    Instances are immutable and hashable. Zero coefficients are never stored.
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | int | None = None):
        if coeffs is None:
            c: dict[int, int] = {}
        elif isinstance(coeffs, int):
            c = {0: coeffs} if coeffs else {}
        else:
            c = {int(e): int(k) for e, k in coeffs.items() if k}
        object.__setattr__(self, "_c", c)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> LaurentPoly:
        return cls({exponent: coeff})

    @classmethod
    def coerce(cls, x: Scalar) -> LaurentPoly:
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, int):
            return cls(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to LaurentPoly")

    # -- inspection ---------------------------------------------------------

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def items(self):
        return sorted(self._c.items())

    def is_zero(self) -> bool:
        return not self._c

    def min_degree(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no degree")
        return min(self._c)

    def max_degree(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no degree")
        return max(self._c)

    def is_unit(self) -> bool:
        return len(self._c) == 1 and next(iter(self._c.values())) in (1, -1)

    def constant(self) -> int:
        return self._c.get(0, 0)

    # -- ring operations ----------------------------------------------------

    def __add__(self, other: Scalar) -> LaurentPoly:
        if isinstance(other, int):
            other = LaurentPoly(other)
        elif not isinstance(other, LaurentPoly):
            return NotImplemented
        out = dict(self._c)
        for e, k in other._c.items():
            out[e] = out.get(e, 0) + k
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly({e: -k for e, k in self._c.items()})

    def __sub__(self, other: Scalar) -> LaurentPoly:
        if isinstance(other, int):
            other = LaurentPoly(other)
        elif not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> LaurentPoly:
        return LaurentPoly.coerce(other) - self

    def __mul__(self, other: Scalar) -> LaurentPoly:
        if isinstance(other, int):
            return LaurentPoly({e: k * other for e, k in self._c.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out: dict[int, int] = {}
        for e1, k1 in self._c.items():
            for e2, k2 in other._c.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + k1 * k2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            return self.inverse() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> LaurentPoly:
        """Inverse in Z[v^±1]; only monomials ``±v^k`` are invertible."""
        if not self.is_unit():
            raise ZeroDivisionError(f"{self} is not a unit in Z[v, v^-1]")
        (e, k), = self._c.items()
        return LaurentPoly({-e: k})

    def divexact(self, other: Scalar) -> LaurentPoly:
        """Exact division; raises ``ValueError`` when ``other`` does not divide."""
        other = LaurentPoly.coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return ZERO
        if other.is_unit():
            return self * other.inverse()
        # Shift both into Z[v] with nonzero constant term on the divisor; the
        # powers of v are units, so divisibility is decided by long division.
        s_lo, d_lo = self.min_degree(), other.min_degree()
        num = {e - s_lo: c for e, c in self._c.items()}
        den = {e - d_lo: c for e, c in other._c.items()}
        d_hi = max(den)
        lead = den[d_hi]
        quot: dict[int, int] = {}
        while num and max(num) >= d_hi:
            top = max(num)
            k = num[top]
            if k % lead:
                raise ValueError(f"{other} does not divide {self}")
            qk = k // lead
            shift = top - d_hi
            quot[shift] = qk
            for e, c in den.items():
                val = num.get(e + shift, 0) - qk * c
                if val:
                    num[e + shift] = val
                else:
                    num.pop(e + shift, None)
        if num:
            raise ValueError(f"{other} does not divide {self}")
        return LaurentPoly({e + s_lo - d_lo: c for e, c in quot.items()})

    def substitute(self, k: int) -> LaurentPoly:
        """Return p(v^k)."""
        return LaurentPoly({e * k: c for e, c in self._c.items()})

    def halve_exponents(self) -> LaurentPoly:
        """Return p(v^(1/2)); every exponent must be even."""
        if any(e % 2 for e in self._c):
            raise ValueError(f"{self} has odd exponents")
        return LaurentPoly({e // 2: c for e, c in self._c.items()})

    def evaluate(self, x: int | Fraction) -> Fraction:
        x = Fraction(x)
        return sum((Fraction(c) * x**e for e, c in self._c.items()), Fraction(0))

    def eval_q(self, q: int) -> int:
        """Evaluate at ``v**2 = q`` for a polynomial in q with integer result."""
        val = self.halve_exponents().evaluate(q)
        if val.denominator != 1:
            raise ValueError(f"{self} is not integral at q={q}")
        return int(val)

    # -- comparison / hashing ----------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(self, "_hash", hash(frozenset(self._c.items())))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._c)

    # -- text ---------------------------------------------------------------

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"LaurentPoly({self._c!r})"

    def to_json(self) -> dict[str, int]:
        return {str(e): c for e, c in sorted(self._c.items(), reverse=True)}

    @classmethod
    def from_json(cls, data) -> LaurentPoly:
        if isinstance(data, int):
            return cls(data)
        if isinstance(data, dict):
            return cls({int(e): int(c) for e, c in data.items()})
        raise ValueError(f"cannot read a Laurent polynomial from {data!r}")


def format_poly(p: LaurentPoly, var: str = "v") -> str:
    """Descending exponents, explicit signs: ``-v^-8 + v^-6 + v^-2``."""
    if p.is_zero():
        return "0"
    parts = []
    for i, (e, c) in enumerate(sorted(p._c.items(), reverse=True)):
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            mono = var if e == 1 else f"{var}^{e}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        if i == 0:
            parts.append(body if sign == "+" else f"-{body}")
        else:
            parts.append(f"{sign} {body}")
    return " ".join(parts)


ZERO = LaurentPoly()
ONE = LaurentPoly(1)
V = LaurentPoly.monomial(1)
Q = LaurentPoly.monomial(2)
