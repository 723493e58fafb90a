"""Shared hypothesis strategies."""
from __future__ import annotations

from hypothesis import strategies as st

from catkit.laurent import LaurentPoly
from catkit.sparse import SparseMat

polys = st.dictionaries(st.integers(-4, 4), st.integers(-5, 5), max_size=4).map(LaurentPoly)


@st.composite
def matrices(draw, nrows=None, ncols=None, max_dim: int = 3):
    m = draw(st.integers(1, max_dim)) if nrows is None else nrows
    n = draw(st.integers(1, max_dim)) if ncols is None else ncols
    entries = draw(st.dictionaries(st.tuples(st.integers(0, m - 1), st.integers(0, n - 1)),
                                   polys, max_size=m * n))
    return SparseMat(m, n, entries)
