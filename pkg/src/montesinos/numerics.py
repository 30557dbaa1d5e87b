"""Exact rational arithmetic and continued-fraction utilities.

Every scalar in this package (tangle slopes, uv-coordinates, edge
fractions, path lengths, twists, boundary slopes) is a
``fractions.Fraction``.  Python integers are arbitrary precision, so
all arithmetic here is exact with no overflow concerns.
"""

from __future__ import annotations

import operator
from fractions import Fraction

__all__ = [
    "Fraction",
    "normalize",
    "arith",
    "continued_fraction",
    "fold_continued_fraction",
]


def normalize(p: int, q: int) -> Fraction:
    """Return the reduced fraction p/q with positive denominator.

    Raises ValueError on a zero denominator.
    """
    if q == 0:
        raise ValueError("zero denominator")
    return Fraction(p, q)


_BINARY_OPS = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}


def arith(a: Fraction, b: Fraction | None, op: str):
    """Exact rational arithmetic dispatcher.

    ``op`` is one of add, sub, mul, div, neg, cmp.  ``neg`` ignores
    ``b``; ``cmp`` returns -1, 0 or 1.  Division by zero raises
    ValueError.
    """
    if op == "neg":
        return -a
    if op == "cmp":
        return (a > b) - (a < b)
    if op == "div" and b == 0:
        raise ValueError("division by zero")
    try:
        fn = _BINARY_OPS[op]
    except KeyError:
        raise ValueError(f"unknown operation {op!r}") from None
    return fn(a, b)


def continued_fraction(x: Fraction) -> list[int]:
    """Canonical continued-fraction expansion [a0; a1, ..., ak] of x.

    Uses the floor convention (a0 = floor(x), so negative inputs get a
    negative leading term).  For k >= 1 the final term is >= 2, which
    makes the expansion unique.
    """
    x = Fraction(x)
    terms = []
    while True:
        a = x.numerator // x.denominator
        terms.append(a)
        rem = x - a
        if rem == 0:
            return terms
        x = 1 / rem


def fold_continued_fraction(terms: list[int]) -> Fraction:
    """Rebuild the exact rational from its continued-fraction terms."""
    if not terms:
        raise ValueError("empty continued fraction")
    acc = Fraction(terms[-1])
    for a in reversed(terms[:-1]):
        acc = a + 1 / acc
    return acc
