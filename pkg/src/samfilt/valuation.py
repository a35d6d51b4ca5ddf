"""Monomial valuations and their valuation ideals.

A monomial valuation is given by a strictly positive integer weight vector
w; it sends a monomial x^e to w.e and a polynomial to the minimum over its
support.  The valuation ideal at threshold T is the monomial ideal of all
exponents with w.e >= T; thresholds may be any positive exact scalar and
are resolved through exact ceilings.
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence

from . import _kernels
from .errors import DimensionMismatchError, ParseError, PreconditionError
from .exactnum import INF, ExactReal, PlusInfinity, as_exact
from .monomial import Exponent, MonomialIdeal, SupportPoly


class MonomialValuation:
    """Weight-vector valuation v(x^e) = w . e with all weights >= 1."""

    __slots__ = ("w",)

    def __init__(self, w: Sequence[int]):
        t = tuple(w)
        if not t:
            raise PreconditionError("weight vector must be nonempty")
        for x in t:
            if not isinstance(x, int) or isinstance(x, bool) or x < 1:
                raise PreconditionError("weights must be positive integers")
        object.__setattr__(self, "w", t)

    def __setattr__(self, name, value):  # pragma: no cover
        raise AttributeError("MonomialValuation is immutable")

    @property
    def n(self) -> int:
        return len(self.w)

    @property
    def is_primitive(self) -> bool:
        return math.gcd(*self.w) == 1 if len(self.w) > 1 else self.w[0] == 1

    def value_exponent(self, e: Sequence[int]) -> int:
        if len(e) != self.n:
            raise DimensionMismatchError("dimension mismatch")
        return sum(a * b for a, b in zip(self.w, e))

    def value(self, f: SupportPoly):
        """Minimum weight over the support; +inf on the zero polynomial."""
        if f.n != self.n:
            raise DimensionMismatchError("dimension mismatch")
        if f.is_zero:
            return INF
        return min(self.value_exponent(e) for e in f.exps)

    def value_of_ideal(self, ideal: MonomialIdeal):
        """min over the ideal; 0 for the unit ideal, +inf for the zero ideal."""
        if ideal.n != self.n:
            raise DimensionMismatchError("dimension mismatch")
        if ideal.is_zero:
            return INF
        return min(self.value_exponent(g) for g in ideal.gens)

    def valuation_ideal(self, threshold) -> MonomialIdeal:
        """All exponents e with w . e >= threshold."""
        return system_level(self.n, [(self.w, threshold, False)])

    def to_json(self) -> dict:
        return {"w": list(self.w)}

    @classmethod
    def from_json(cls, data: dict) -> "MonomialValuation":
        try:
            w = data["w"]
        except (TypeError, KeyError) as exc:
            raise ParseError("valuation JSON needs 'w'") from exc
        try:
            return cls(tuple(w))
        except (PreconditionError, TypeError) as exc:
            raise ParseError("valuation JSON: %s" % exc) from exc

    def __eq__(self, other):
        if not isinstance(other, MonomialValuation):
            return NotImplemented
        return self.w == other.w

    def __hash__(self):
        return hash(self.w)

    def __repr__(self):
        return "MonomialValuation(%r)" % (self.w,)


def primitive_pair(v: MonomialValuation, a) -> tuple[MonomialValuation, ExactReal]:
    """Divide (w, a) by gcd(w); the ratio w/a and hence all orders and
    asymptotic orders are unchanged."""
    a = as_exact(a)
    if a.sign() <= 0:
        raise PreconditionError("scale must be positive")
    g = math.gcd(*v.w) if len(v.w) > 1 else v.w[0]
    if g == 1:
        return v, a
    return MonomialValuation(tuple(x // g for x in v.w)), a / g


def _resolve_threshold(threshold, strict: bool) -> int:
    """Integer T with {integer s : s >= threshold (or >)} = {s >= T}."""
    t = as_exact(threshold)
    c = t.ceil()
    if strict and t.is_integer:
        c += 1
    return c


def system_level(
    n: int, constraints: Iterable[tuple[Sequence[int], object, bool]]
) -> MonomialIdeal:
    """Monomial ideal {e >= 0 : w . e >= T (or > T) for every constraint}.

    Each constraint is (w, threshold, strict) with strictly positive integer
    w of length n and an exact positive-or-zero threshold.
    """
    rows = []
    for w, threshold, strict in constraints:
        w = tuple(w)
        if len(w) != n:
            raise DimensionMismatchError("dimension mismatch")
        c = _resolve_threshold(threshold, strict)
        if c > 0:
            rows.append((w, c))
    if not rows:
        return MonomialIdeal.unit(n)
    return MonomialIdeal(n, _minimal_rows(n, rows))


def _minimal_rows(n: int, rows: list[tuple[tuple[int, ...], int]]) -> list[Exponent]:
    """Minimal integer solutions of w . e >= c for all rows (all w >= 1)."""
    if n == 1:
        need = max(-(-c // w[0]) for w, c in rows)
        return [(max(need, 0),)]
    if n == 2:
        return [
            tuple(g)
            for g in _kernels.staircase_gens_2d([(w[0], w[1], c) for w, c in rows])
        ]
    # peel off the last coordinate and recurse
    top = max(-(-c // w[-1]) for w, c in rows)
    pts: list[Exponent] = []
    for t in range(top + 1):
        sub = [(w[:-1], c - w[-1] * t) for w, c in rows]
        sub = [(w, c) for w, c in sub if c > 0]
        if not sub:
            pts.append((0,) * (n - 1) + (t,))
            break
        for tail in _minimal_rows(n - 1, sub):
            pts.append(tail + (t,))
    return _kernels.reduce_antichain(pts)
