"""Monomial ideals and coefficient-free polynomials in k[x1..xn].

Ideals are stored as the antichain of minimal generating exponents, so
equality, inclusion and membership are all decided on canonical data.
Polynomials carry only their support: additions take unions and products
take all pairwise sums, the generic no-cancellation convention.

The Newton polyhedron of an ideal (convex hull of the generators plus the
positive orthant) drives integral closures: a monomial lies in the integral
closure of I^m exactly when its exponent lies in m times the polyhedron.
That test is an exact rational LP; in two variables the facet description
is computed directly and used for fast staircase sweeps.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import Iterable, Sequence

from . import _kernels
from ._linprog import OPTIMAL, simplex_max
from .errors import DimensionMismatchError, ParseError, PreconditionError
from .exactnum import ExactReal, as_exact

Exponent = tuple[int, ...]


def _check_exponent(e: Sequence[int], n: int) -> Exponent:
    t = tuple(e)
    if len(t) != n:
        raise DimensionMismatchError("expected %d coordinates, got %d" % (n, len(t)))
    for x in t:
        if not isinstance(x, int) or isinstance(x, bool) or x < 0:
            raise PreconditionError("exponents must be nonnegative integers")
    return t


def monomial_str(e: Exponent) -> str:
    """Render an exponent vector, e.g. (2, 1) -> 'x^2*y'."""
    names = ["x", "y", "z"] if len(e) <= 3 else ["x%d" % (i + 1) for i in range(len(e))]
    parts = []
    for name, k in zip(names, e):
        if k == 1:
            parts.append(name)
        elif k > 1:
            parts.append("%s^%d" % (name, k))
    return "*".join(parts) if parts else "1"


class MonomialIdeal:
    """A monomial ideal, canonically generated by its minimal exponents."""

    __slots__ = ("n", "gens")

    def __init__(self, n: int, gens: Iterable[Sequence[int]]):
        if n < 1:
            raise PreconditionError("ambient dimension must be >= 1")
        pts = [_check_exponent(g, n) for g in gens]
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "gens", tuple(_kernels.reduce_antichain(pts)))

    def __setattr__(self, name, value):  # pragma: no cover
        raise AttributeError("MonomialIdeal is immutable")

    @classmethod
    def zero(cls, n: int) -> "MonomialIdeal":
        return cls(n, [])

    @classmethod
    def unit(cls, n: int) -> "MonomialIdeal":
        return cls(n, [(0,) * n])

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return bool(self.gens) and not any(self.gens[0])

    @property
    def is_proper_nonzero(self) -> bool:
        return bool(self.gens) and not self.is_unit

    def contains_exponent(self, e: Sequence[int]) -> bool:
        return _kernels.any_le(self.gens, _check_exponent(e, self.n))

    def contains(self, f: "SupportPoly") -> bool:
        if f.n != self.n:
            raise DimensionMismatchError("dimension mismatch")
        return all(_kernels.any_le(self.gens, e) for e in f.min_support())

    def __mul__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        if other.n != self.n:
            raise DimensionMismatchError("dimension mismatch")
        if self.is_zero or other.is_zero:
            return MonomialIdeal.zero(self.n)
        sums = [
            tuple(a + b for a, b in zip(g, h))
            for g in self.gens
            for h in other.gens
        ]
        return MonomialIdeal(self.n, sums)

    def __pow__(self, m: int) -> "MonomialIdeal":
        if m < 0:
            raise PreconditionError("negative power")
        out = MonomialIdeal.unit(self.n)
        for _ in range(m):
            out = out * self
        return out

    def __and__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        """Intersection: componentwise maxima of generator pairs."""
        if other.n != self.n:
            raise DimensionMismatchError("dimension mismatch")
        tops = [
            tuple(max(a, b) for a, b in zip(g, h))
            for g in self.gens
            for h in other.gens
        ]
        return MonomialIdeal(self.n, tops)

    def __le__(self, other: "MonomialIdeal") -> bool:
        """Inclusion self <= other."""
        if other.n != self.n:
            raise DimensionMismatchError("dimension mismatch")
        return all(_kernels.any_le(other.gens, g) for g in self.gens)

    def __lt__(self, other: "MonomialIdeal") -> bool:
        return self <= other and self != other

    def __eq__(self, other):
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.n == other.n and self.gens == other.gens

    def __hash__(self):
        return hash((self.n, self.gens))

    def is_primary(self) -> bool:
        """True when the ideal contains a pure power of every variable."""
        if self.is_zero:
            return False
        for j in range(self.n):
            if not any(
                all(g[k] == 0 for k in range(self.n) if k != j) for g in self.gens
            ):
                return False
        return True

    def pure_power_bounds(self) -> tuple[int, ...]:
        """For each variable j the least b with x_j^b in the ideal."""
        if not self.is_primary():
            raise PreconditionError("ideal misses a pure power of some variable")
        bounds = []
        for j in range(self.n):
            bounds.append(
                min(
                    g[j]
                    for g in self.gens
                    if all(g[k] == 0 for k in range(self.n) if k != j)
                )
            )
        return tuple(bounds)

    def min_total_degree(self) -> int:
        if self.is_zero:
            raise PreconditionError("zero ideal has no generator degree")
        return min(sum(g) for g in self.gens)

    def to_json(self) -> dict:
        return {"n": self.n, "gens": [list(g) for g in self.gens]}

    @classmethod
    def from_json(cls, data: dict) -> "MonomialIdeal":
        try:
            n = data["n"]
            gens = data["gens"]
        except (TypeError, KeyError) as exc:
            raise ParseError("ideal JSON needs 'n' and 'gens'") from exc
        if not isinstance(n, int) or n < 1:
            raise ParseError("ideal JSON: 'n' must be a positive integer")
        if not isinstance(gens, list):
            raise ParseError("ideal JSON: 'gens' must be a list")
        try:
            return cls(n, [tuple(g) for g in gens])
        except (PreconditionError, TypeError) as exc:
            raise ParseError("ideal JSON: bad generator list: %s" % exc) from exc

    def __repr__(self):
        return "MonomialIdeal(%d, %r)" % (self.n, list(self.gens))

    def __str__(self):
        if self.is_zero:
            return "(0)"
        return "(%s)" % ", ".join(monomial_str(g) for g in self.gens)


class SupportPoly:
    """A polynomial remembered only through its exponent support."""

    __slots__ = ("n", "exps")

    def __init__(self, n: int, exps: Iterable[Sequence[int]]):
        if n < 1:
            raise PreconditionError("ambient dimension must be >= 1")
        pts = frozenset(_check_exponent(e, n) for e in exps)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "exps", pts)

    def __setattr__(self, name, value):  # pragma: no cover
        raise AttributeError("SupportPoly is immutable")

    @classmethod
    def monomial(cls, e: Sequence[int]) -> "SupportPoly":
        return cls(len(tuple(e)), [e])

    @classmethod
    def zero(cls, n: int) -> "SupportPoly":
        return cls(n, [])

    @classmethod
    def one(cls, n: int) -> "SupportPoly":
        return cls(n, [(0,) * n])

    @property
    def is_zero(self) -> bool:
        return not self.exps

    def min_support(self) -> list[Exponent]:
        """Minimal exponents; ideal membership only depends on these."""
        return _kernels.reduce_antichain(list(self.exps))

    def __add__(self, other: "SupportPoly") -> "SupportPoly":
        if other.n != self.n:
            raise DimensionMismatchError("dimension mismatch")
        return SupportPoly(self.n, self.exps | other.exps)

    def __mul__(self, other: "SupportPoly") -> "SupportPoly":
        if other.n != self.n:
            raise DimensionMismatchError("dimension mismatch")
        return SupportPoly(
            self.n,
            (
                tuple(a + b for a, b in zip(e, f))
                for e in self.exps
                for f in other.exps
            ),
        )

    def __pow__(self, m: int) -> "SupportPoly":
        if m < 0:
            raise PreconditionError("negative power")
        out = SupportPoly.one(self.n)
        for _ in range(m):
            out = out * self
        return out

    def order_1var(self) -> int:
        """Least exponent, for one-variable supports."""
        if self.n != 1:
            raise PreconditionError("order_1var needs a one-variable support")
        if self.is_zero:
            raise PreconditionError("zero polynomial has no finite order")
        return min(e[0] for e in self.exps)

    def __eq__(self, other):
        if not isinstance(other, SupportPoly):
            return NotImplemented
        return self.n == other.n and self.exps == other.exps

    def __hash__(self):
        return hash((self.n, self.exps))

    def __repr__(self):
        return "SupportPoly(%d, %r)" % (self.n, sorted(self.exps))

    def __str__(self):
        if self.is_zero:
            return "0"
        return " + ".join(monomial_str(e) for e in sorted(self.exps))


# -- Newton polyhedron ------------------------------------------------


def newton_facets_2d(ideal: MonomialIdeal) -> list[tuple[int, int, int]]:
    """Facet inequalities (l1, l2, c): NP(I) = {e : l1 e1 + l2 e2 >= c, all}.

    Normals are primitive with nonnegative entries, sorted lexicographically.
    Only facets with positive right-hand side are listed (the rest are
    implied by e >= 0).
    """
    if ideal.n != 2:
        raise PreconditionError("facet description implemented for n = 2")
    if not ideal.is_proper_nonzero:
        raise PreconditionError("facets need a proper nonzero ideal")
    pts = sorted(ideal.gens)  # x ascending, y strictly descending
    hull = []
    for p in pts:
        while len(hull) >= 2:
            (x0, y0), (x1, y1) = hull[-2], hull[-1]
            # keep only convex (left-bending) corners of the lower chain
            if (x1 - x0) * (p[1] - y0) - (y1 - y0) * (p[0] - x0) <= 0:
                hull.pop()
            else:
                break
        hull.append(p)
    facets = []
    for (x0, y0), (x1, y1) in zip(hull, hull[1:]):
        l1, l2 = y0 - y1, x1 - x0
        g = math.gcd(l1, l2)
        l1, l2 = l1 // g, l2 // g
        facets.append((l1, l2, l1 * x0 + l2 * y0))
    xmin = min(g[0] for g in ideal.gens)
    ymin = min(g[1] for g in ideal.gens)
    if xmin > 0:
        facets.append((1, 0, xmin))
    if ymin > 0:
        facets.append((0, 1, ymin))
    facets.sort()
    return facets


def np_value(ideal: MonomialIdeal, e: Sequence[int]) -> ExactReal:
    """Largest t with e inside t times the Newton polyhedron of the ideal.

    This equals the limit of (power membership order of e^k)/k; it is
    always rational.  Requires a proper nonzero ideal.
    """
    if not ideal.is_proper_nonzero:
        raise PreconditionError("np_value needs a proper nonzero ideal")
    e = _check_exponent(e, ideal.n)
    if ideal.n == 2:
        best = None
        for l1, l2, c in newton_facets_2d(ideal):
            t = Fraction(l1 * e[0] + l2 * e[1], c)
            if best is None or t < best:
                best = t
        return as_exact(best)
    # max sum(mu) with sum_g mu_g g <= e, mu >= 0
    zero, one = Fraction(0), Fraction(1)
    gens = ideal.gens
    c = [one] * len(gens)
    A = [[Fraction(g[j]) for g in gens] for j in range(ideal.n)]
    b = [Fraction(x) for x in e]
    status, value, _ = simplex_max(c, A, b, zero=zero, one=one)
    if status != OPTIMAL:  # pragma: no cover - bounded for proper ideals
        raise RuntimeError("np_value LP: %s" % status)
    return as_exact(value)


def _np_threshold_level_2d(
    ideal: MonomialIdeal, t, strict_integer_boundary: bool = False
) -> MonomialIdeal:
    """Monomials with np_value >= t (or > t at exact facet equality).

    t is a positive exact scalar; uses the facet staircase directly.
    """
    rows = []
    xmin = ymin = 0
    for l1, l2, c in newton_facets_2d(ideal):
        thr = as_exact(t) * c
        ci = thr.ceil()
        if strict_integer_boundary and thr.is_integer:
            ci += 1
        if ci <= 0:
            continue
        if l1 == 0:
            ymin = max(ymin, -(-ci // l2))
        elif l2 == 0:
            xmin = max(xmin, -(-ci // l1))
        else:
            rows.append((l1, l2, ci))
    if not rows:
        return MonomialIdeal(2, [(xmin, ymin)])
    return MonomialIdeal(2, _kernels.staircase_gens_2d(rows, xmin, ymin))


def np_threshold_level(ideal: MonomialIdeal, t, strict: bool = False) -> MonomialIdeal:
    """The monomial ideal of exponents with np_value(ideal, e) >= t.

    With strict=True the inequality is strict instead.
    """
    t = as_exact(t)
    if t.sign() < 0 or (t.sign() == 0 and not strict):
        return MonomialIdeal.unit(ideal.n)
    if not ideal.is_proper_nonzero:
        raise PreconditionError("threshold level needs a proper nonzero ideal")
    if ideal.n == 2:
        return _np_threshold_level_2d(ideal, t, strict_integer_boundary=strict)
    pad = 1 if strict else 0
    box = tuple(
        (t * max(g[j] for g in ideal.gens)).ceil() + pad for j in range(ideal.n)
    )
    if strict:
        member = lambda e: np_value(ideal, e) > t
    else:
        member = lambda e: np_value(ideal, e) >= t
    return MonomialIdeal(ideal.n, _minimal_satisfying(box, member))


def _minimal_satisfying(box: tuple[int, ...], member) -> list[Exponent]:
    """Minimal points of an up-closed predicate inside the given box."""
    accepted: list[Exponent] = []
    candidates = sorted(
        itertools.product(*(range(b + 1) for b in box)), key=lambda p: (sum(p), p)
    )
    for e in candidates:
        if _kernels.any_le(accepted, e):
            continue
        if member(e):
            accepted.append(e)
    return accepted


def integral_closure(ideal: MonomialIdeal) -> MonomialIdeal:
    """Integral closure: all monomials inside the Newton polyhedron."""
    if ideal.is_zero or ideal.is_unit:
        return ideal
    if ideal.n == 1:
        return ideal  # principal monomial ideals are integrally closed
    return np_threshold_level(ideal, 1)
