"""Pinned sign and variable conventions for braids and link invariants.

Every published source uses a different mix of these; keeping them in one
place is what makes the invariant tests deterministic.

Braids
    The letter ``i`` is the generator ``s_i``: the strand at position ``i``
    crosses over the strand at position ``i + 1``. Read bottom to top this is
    a right-handed (positive) crossing, so its writhe contribution is ``+1``.
    ``-i`` is the inverse. A word is read left to right, first letter first.

Bracket variable
    The Kauffman bracket lives in Z[A^±1] with ``<O> = 1``,
    ``<X> = A <A-smoothing> + A^-1 <B-smoothing>`` and loop value
    ``-A^2 - A^-2``. The writhe-normalized bracket ``(-A^3)^-w <D>`` has only
    even powers of A and is moved to ``v`` by ``A^2 -> v``
    (:data:`BRACKET_A_SQUARED_TO_V`). With ``q = v^2`` the closure of
    ``[1, 1, 1]`` then gives ``-q^-4 + q^-3 + q^-1``.
"""

# Exponent k such that A^2 is replaced by v^k.
BRACKET_A_SQUARED_TO_V = 1

# Crossing sign of a positive generator s_i.
POSITIVE_GENERATOR_SIGN = +1
