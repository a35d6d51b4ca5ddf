"""Filtrations of monomial ideals: I_0 = R, I_a * I_b inside I_{a+b}.

Five engines:

* Adic(I): levels are the powers I^m.
* DiscreteValued(pairs): levels are intersections of valuation ideals,
  I_m = {e : w_i . e >= ceil(m * a_i) for every pair (w_i, a_i)}.
* Twist(base, alpha): levels I_m = base level at ceil(alpha * m).  Nested
  twists are kept nested; ceil(alpha*ceil(beta*m)) differs from
  ceil(alpha*beta*m), so flattening would change the filtration.
* StairOneVar(alpha, c): one variable, I_m = (x^(ceil(alpha*m)+c)).
* Table(levels, horizon): finitely many explicit levels; queries beyond the
  horizon raise, and membership at the horizon yields an AtLeast marker.

order(F, f) is the largest m with f in I_m (PlusInfinity when f lies in
every level).  Level results are cached per filtration; with the GIL a
plain dict is safe for concurrent readers, at worst a level is computed
twice.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from .errors import (
    ConstructionError,
    DimensionMismatchError,
    HorizonExceededError,
    ParseError,
    PreconditionError,
)
from .exactnum import (
    INF,
    ExactReal,
    PlusInfinity,
    as_exact,
    ceil_mul,
    format_scalar,
    parse_scalar,
)
from .monomial import Exponent, MonomialIdeal, SupportPoly
from .valuation import MonomialValuation, system_level


@dataclass(frozen=True)
class AtLeast:
    """Order result 'at least bound': the element lies in the deepest
    stored level, so only a lower bound for the order is known."""

    bound: int

    def __str__(self):
        return ">= %d" % self.bound


OrderValue = Union[int, PlusInfinity, AtLeast]


class Filtration:
    """Base class; subclasses implement _level and order."""

    n: int

    def __init__(self):
        self._cache: dict[int, MonomialIdeal] = {}

    def level(self, m: int) -> MonomialIdeal:
        if m < 0:
            raise PreconditionError("level index must be nonnegative")
        ideal = self._cache.get(m)
        if ideal is None:
            ideal = self._level(m)
            self._cache[m] = ideal
        return ideal

    def _level(self, m: int) -> MonomialIdeal:
        raise NotImplementedError

    def order(self, f: SupportPoly) -> OrderValue:
        raise NotImplementedError

    def _check_elem(self, f: SupportPoly) -> SupportPoly:
        if not isinstance(f, SupportPoly):
            raise PreconditionError("expected a SupportPoly")
        if f.n != self.n:
            raise DimensionMismatchError("dimension mismatch")
        return f

    def to_json(self) -> dict:
        raise NotImplementedError


class Adic(Filtration):
    """Powers of a fixed monomial ideal."""

    def __init__(self, ideal: MonomialIdeal):
        super().__init__()
        self.ideal = ideal
        self.n = ideal.n
        self._order_memo: dict[Exponent, int] = {}

    def _level(self, m: int) -> MonomialIdeal:
        if m == 0:
            return MonomialIdeal.unit(self.n)
        return self.level(m - 1) * self.ideal

    def _order_exponent(self, e: Exponent) -> int:
        """Largest m with x^e in I^m: strip generators greedily with memo."""
        memo = self._order_memo
        got = memo.get(e)
        if got is not None:
            return got
        best = 0
        for g in self.ideal.gens:
            ok = True
            for a, b in zip(g, e):
                if a > b:
                    ok = False
                    break
            if ok:
                cand = 1 + self._order_exponent(tuple(b - a for a, b in zip(g, e)))
                if cand > best:
                    best = cand
        memo[e] = best
        return best

    def order(self, f: SupportPoly) -> OrderValue:
        f = self._check_elem(f)
        if f.is_zero:
            return INF
        if self.ideal.is_unit:
            return INF
        if self.ideal.is_zero:
            return 0
        return min(self._order_exponent(e) for e in f.min_support())

    def to_json(self) -> dict:
        return {"type": "adic", "ideal": self.ideal.to_json()}

    def __repr__(self):
        return "Adic(%r)" % (self.ideal,)


class DiscreteValued(Filtration):
    """Intersections of valuation ideals with per-valuation scales a_i."""

    def __init__(self, pairs: Iterable[tuple[MonomialValuation, object]]):
        super().__init__()
        norm = []
        for v, a in pairs:
            if not isinstance(v, MonomialValuation):
                v = MonomialValuation(tuple(v))
            a = as_exact(a)
            if a.sign() <= 0:
                raise PreconditionError("scales a_i must be positive")
            norm.append((v, a))
        if not norm:
            raise PreconditionError("need at least one (valuation, scale) pair")
        n = norm[0][0].n
        for v, _ in norm:
            if v.n != n:
                raise DimensionMismatchError("valuations of mixed dimension")
        self.pairs = tuple(norm)
        self.n = n

    def _level(self, m: int) -> MonomialIdeal:
        if m == 0:
            return MonomialIdeal.unit(self.n)
        return system_level(self.n, [(v.w, a * m, False) for v, a in self.pairs])

    def order(self, f: SupportPoly) -> OrderValue:
        """min_i floor(v_i(f) / a_i) — the closed form for these levels."""
        f = self._check_elem(f)
        if f.is_zero:
            return INF
        best = None
        for v, a in self.pairs:
            val = (as_exact(v.value(f)) / a).floor()
            if best is None or val < best:
                best = val
        return max(best, 0)

    def to_json(self) -> dict:
        return {
            "type": "dv",
            "pairs": [
                {"w": list(v.w), "a": format_scalar(a)} for v, a in self.pairs
            ],
        }

    def __repr__(self):
        return "DiscreteValued(%r)" % (list(self.pairs),)


class Twist(Filtration):
    """Level reindexing I_m -> I_ceil(alpha*m); never flattened."""

    def __init__(self, base: Filtration, alpha):
        super().__init__()
        alpha = as_exact(alpha)
        if alpha.sign() <= 0:
            raise PreconditionError("twist exponent must be positive")
        self.base = base
        self.alpha = alpha
        self.n = base.n

    def _level(self, m: int) -> MonomialIdeal:
        return self.base.level(ceil_mul(self.alpha, m))

    def order(self, f: SupportPoly) -> OrderValue:
        base = self.base.order(f)
        if isinstance(base, PlusInfinity):
            return INF
        if isinstance(base, AtLeast):
            return AtLeast((as_exact(base.bound) / self.alpha).floor())
        return (as_exact(base) / self.alpha).floor()

    def to_json(self) -> dict:
        return {
            "type": "twist",
            "alpha": format_scalar(self.alpha),
            "base": self.base.to_json(),
        }

    def __repr__(self):
        return "Twist(%r, %s)" % (self.base, self.alpha)


class StairOneVar(Filtration):
    """One-variable staircase I_m = (x^(ceil(alpha*m)+c)) with shift c >= 0."""

    def __init__(self, alpha, c: int):
        super().__init__()
        alpha = as_exact(alpha)
        if alpha.sign() <= 0:
            raise PreconditionError("alpha must be positive")
        if not isinstance(c, int) or isinstance(c, bool) or c < 0:
            raise PreconditionError("c must be a nonnegative integer")
        self.alpha = alpha
        self.c = c
        self.n = 1

    def _level(self, m: int) -> MonomialIdeal:
        if m == 0:
            return MonomialIdeal.unit(1)
        return MonomialIdeal(1, [(ceil_mul(self.alpha, m) + self.c,)])

    def order(self, f: SupportPoly) -> OrderValue:
        f = self._check_elem(f)
        if f.is_zero:
            return INF
        c0 = f.order_1var()
        if c0 < self.c:
            return 0
        return (as_exact(c0 - self.c) / self.alpha).floor()

    def to_json(self) -> dict:
        return {"type": "stair1", "alpha": format_scalar(self.alpha), "c": self.c}

    def __repr__(self):
        return "StairOneVar(%s, %d)" % (self.alpha, self.c)


class Table(Filtration):
    """Explicit levels 1..horizon.

    With validate=True (the default, and always for JSON input) the level
    data is checked against the filtration axioms: descending chain and
    I_a * I_b inside I_{a+b} for a + b <= horizon.  Computed tables built
    internally skip the quadratic product check.
    """

    def __init__(
        self,
        levels: Union[Mapping[int, MonomialIdeal], Iterable[tuple[int, MonomialIdeal]]],
        horizon: int,
        validate: bool = True,
    ):
        super().__init__()
        if horizon < 1:
            raise PreconditionError("horizon must be >= 1")
        data = dict(levels.items() if isinstance(levels, Mapping) else levels)
        if sorted(data) != list(range(1, horizon + 1)):
            raise ConstructionError("levels must cover exactly 1..horizon")
        n = data[1].n
        for m, ideal in data.items():
            if not isinstance(ideal, MonomialIdeal) or ideal.n != n:
                raise ConstructionError("level %d: bad ideal" % m)
        self.n = n
        self.horizon = horizon
        self._levels = data
        if validate:
            self._validate()

    def _validate(self):
        prev = MonomialIdeal.unit(self.n)
        for m in range(1, self.horizon + 1):
            if not self._levels[m] <= prev:
                raise ConstructionError(
                    "level %d is not contained in level %d" % (m, m - 1)
                )
            prev = self._levels[m]
        for a in range(1, self.horizon + 1):
            for b in range(a, self.horizon + 1 - a):
                prod = self._levels[a] * self._levels[b]
                if not prod <= self._levels[a + b]:
                    raise ConstructionError(
                        "product of levels %d and %d leaves level %d" % (a, b, a + b)
                    )

    def _level(self, m: int) -> MonomialIdeal:
        if m == 0:
            return MonomialIdeal.unit(self.n)
        if m > self.horizon:
            raise HorizonExceededError(
                "level %d beyond table horizon %d" % (m, self.horizon)
            )
        return self._levels[m]

    def order(self, f: SupportPoly) -> OrderValue:
        f = self._check_elem(f)
        if f.is_zero:
            return INF
        if self._levels[self.horizon].contains(f):
            return AtLeast(self.horizon)
        lo, hi = 0, self.horizon - 1  # membership holds at lo, fails above hi
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if self.level(mid).contains(f):
                lo = mid
            else:
                hi = mid - 1
        return lo

    def to_json(self) -> dict:
        return {
            "type": "table",
            "horizon": self.horizon,
            "levels": [
                [m, self._levels[m].to_json()] for m in range(1, self.horizon + 1)
            ],
        }

    def __repr__(self):
        return "Table(horizon=%d, n=%d)" % (self.horizon, self.n)


def twist(base: Filtration, alpha) -> Twist:
    """The twisted filtration; twists stack without simplification."""
    return Twist(base, alpha)


def bracket_twist(F: DiscreteValued, alpha) -> DiscreteValued:
    """Scale every a_i by alpha: the discrete valued filtration whose levels
    use thresholds ceil(m * alpha * a_i).  Only defined on DiscreteValued."""
    if not isinstance(F, DiscreteValued):
        raise PreconditionError("bracket twist needs a discrete valued filtration")
    alpha = as_exact(alpha)
    if alpha.sign() <= 0:
        raise PreconditionError("twist exponent must be positive")
    return DiscreteValued([(v, a * alpha) for v, a in F.pairs])


def _parse_positive_scalar(text, what: str) -> ExactReal:
    if not isinstance(text, str):
        raise ParseError("%s must be a scalar string" % what)
    val = parse_scalar(text)
    if isinstance(val, PlusInfinity) or val.sign() <= 0:
        raise ParseError("%s must be a positive finite scalar" % what)
    return val


def filtration_from_json(data: dict) -> Filtration:
    """Build a filtration from its JSON description."""
    if not isinstance(data, dict) or "type" not in data:
        raise ParseError("filtration JSON needs a 'type' field")
    kind = data["type"]
    try:
        if kind == "adic":
            return Adic(MonomialIdeal.from_json(data["ideal"]))
        if kind == "dv":
            pairs = []
            for item in data["pairs"]:
                v = MonomialValuation.from_json(item)
                a = _parse_positive_scalar(item["a"], "scale 'a'")
                pairs.append((v, a))
            return DiscreteValued(pairs)
        if kind == "twist":
            alpha = _parse_positive_scalar(data["alpha"], "'alpha'")
            return Twist(filtration_from_json(data["base"]), alpha)
        if kind == "stair1":
            alpha = _parse_positive_scalar(data["alpha"], "'alpha'")
            c = data["c"]
            if not isinstance(c, int) or c < 0:
                raise ParseError("'c' must be a nonnegative integer")
            return StairOneVar(alpha, c)
        if kind == "table":
            horizon = data["horizon"]
            if not isinstance(horizon, int):
                raise ParseError("'horizon' must be an integer")
            levels = [
                (m, MonomialIdeal.from_json(ideal)) for m, ideal in data["levels"]
            ]
            return Table(levels, horizon, validate=True)
    except KeyError as exc:
        raise ParseError("filtration JSON missing field %s" % exc) from exc
    except (PreconditionError, ConstructionError) as exc:
        raise ParseError("filtration JSON: %s" % exc) from exc
    except (TypeError, ValueError) as exc:
        raise ParseError("filtration JSON: %s" % exc) from exc
    raise ParseError("unknown filtration type %r" % kind)
