"""Montesinos-knot data model: parsing, canonical form, and predicates."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import gcd

__all__ = [
    "KnotError",
    "MontesinosKnot",
    "parse",
    "format_knot",
    "canonical_form",
    "to_pretzel",
    "pretzel_torus_check",
    "is_hyperbolic",
    "is_one_one",
]


class KnotError(ValueError):
    """Malformed or invalid knot input."""


def _knot_parity_ok(tangles: tuple[Fraction, ...]) -> tuple[bool, str]:
    """A tangle vector yields a knot (not a link) iff exactly one
    denominator is even, or all are odd and the number of odd
    numerators is odd."""
    evens = sum(1 for t in tangles if t.denominator % 2 == 0)
    if evens == 1:
        return True, ""
    if evens == 0:
        odd_numerators = sum(1 for t in tangles if t.numerator % 2 != 0)
        if odd_numerators % 2 == 1:
            return True, ""
        return False, (
            "all denominators odd but the number of odd numerators is even: "
            "this is a link, not a knot"
        )
    return False, f"{evens} even denominators: this is a link, not a knot"


@dataclass(frozen=True)
class MontesinosKnot:
    """A Montesinos knot given by its tuple of non-integral tangle slopes."""

    tangles: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.tangles) < 3:
            raise KnotError("a Montesinos knot needs at least 3 tangles")
        for t in self.tangles:
            if not isinstance(t, Fraction):
                raise KnotError("tangle slopes must be Fractions")
            if t.denominator < 2:
                raise KnotError(f"tangle slope {t} is integral")
        ok, why = _knot_parity_ok(self.tangles)
        if not ok:
            raise KnotError(why)

    def __repr__(self):
        return format_knot(self)


_FRAC_RE = re.compile(r"^([+-]?\d+)/([+-]?\d+)$")
_INT_RE = re.compile(r"^[+-]?\d+$")


def _parse_fraction(text: str) -> Fraction:
    m = _FRAC_RE.match(text)
    if not m:
        raise KnotError(f"malformed tangle slope {text!r}: expected int/int")
    p, q = int(m.group(1)), int(m.group(2))
    if q == 0:
        raise KnotError(f"tangle slope {text!r} has zero denominator")
    if gcd(abs(p), abs(q)) != 1:
        raise KnotError(f"tangle slope {text!r} is not in lowest terms")
    return Fraction(p, q)


def parse(text: str) -> MontesinosKnot:
    """Parse knot text: K(1/5,2/3,-1/2), bare 1/5,2/3,-1/2, or P(2,-3,7).

    Whitespace is ignored.  Pretzel entries q map to tangles 1/q.
    Tangles must be reduced and non-integral and the vector must have
    knot (not link) parity.
    """
    s = re.sub(r"\s+", "", text)
    if not s:
        raise KnotError("empty knot text")
    pretzel = False
    if s.startswith("P(") and s.endswith(")"):
        body, pretzel = s[2:-1], True
    elif s.startswith("K(") and s.endswith(")"):
        body = s[2:-1]
    else:
        body = s
    parts = body.split(",")
    if pretzel:
        tangles = []
        for part in parts:
            if not _INT_RE.match(part):
                raise KnotError(f"malformed pretzel entry {part!r}: expected integer")
            q = int(part)
            if abs(q) < 2:
                raise KnotError(f"pretzel entry {q} gives an integral tangle")
            tangles.append(Fraction(1, q))
        return MontesinosKnot(tuple(tangles))
    return MontesinosKnot(tuple(_parse_fraction(part) for part in parts))


def format_knot(k: MontesinosKnot) -> str:
    return "K(" + ",".join(f"{t.numerator}/{t.denominator}" for t in k.tangles) + ")"


def _mod1(x: Fraction) -> Fraction:
    return x - (x.numerator // x.denominator)


def canonical_form(k: MontesinosKnot) -> tuple[Fraction, tuple[Fraction, ...]]:
    """Classifying key: (sum of tangles, least rotation/reversal of the
    mod-1 tangle vector).  Equal keys iff the same knot."""
    vec = tuple(_mod1(t) for t in k.tangles)
    n = len(vec)
    candidates = []
    for base in (vec, vec[::-1]):
        for i in range(n):
            candidates.append(base[i:] + base[:i])
    return (sum(k.tangles, Fraction(0)), min(candidates))


def to_pretzel(k: MontesinosKnot) -> tuple[int, ...] | None:
    """The pretzel form (q_1, ..., q_n) of the knot, or None.

    A tangle p/q matches 1/(sq) for sign s iff p = s mod q; among the
    sign choices the tangle sums must agree exactly.
    """
    per_tangle: list[list[int]] = []
    for t in k.tangles:
        p, q = t.numerator, t.denominator
        options = [s * q for s in (1, -1) if (p - s) % q == 0]
        if not options:
            return None
        per_tangle.append(options)
    target = sum(k.tangles, Fraction(0))
    for choice in product(*per_tangle):
        if sum(Fraction(1, q) for q in choice) == target:
            return tuple(choice)
    return None


def pretzel_torus_check(qs) -> bool:
    """Torus-knot test for a pretzel (q_1, ..., q_n).

    True iff n = 3 and the triple is, up to cyclic permutation and
    reversal, (-2e, 3e, 3e) or (-2e, 3e, 5e) with e = +-1.
    """
    qs = tuple(int(q) for q in qs)
    if len(qs) != 3:
        return False
    orbit = set()
    for base in (qs, qs[::-1]):
        for i in range(3):
            orbit.add(base[i:] + base[:i])
    for eps in (1, -1):
        if (-2 * eps, 3 * eps, 3 * eps) in orbit or (-2 * eps, 3 * eps, 5 * eps) in orbit:
            return True
    return False


def is_hyperbolic(k: MontesinosKnot) -> bool | None:
    """True/False for pretzel-form knots (hyperbolic iff not torus);
    None for knots with no available torus test."""
    qs = to_pretzel(k)
    if qs is None:
        return None
    return not pretzel_torus_check(qs)


def is_one_one(k: MontesinosKnot) -> bool | None:
    """True when the knot is known to be a (1,1)-knot (tunnel number one):
    three tangles, one denominator 2 and the other two odd.  None
    otherwise (the criterion is one-directional)."""
    if len(k.tangles) != 3:
        return None
    dens = sorted(t.denominator for t in k.tangles)
    if dens[0] == 2 and dens[1] % 2 == 1 and dens[2] % 2 == 1:
        return True
    return None
