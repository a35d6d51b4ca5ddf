"""Pure-Python kernels for the hot integer loops.

These mirror the compiled versions in _fast.pyx; either implementation must
produce identical results.  All functions take plain ints and tuples.
"""

from __future__ import annotations

from typing import Sequence


def reduce_antichain(points: Sequence[tuple[int, ...]]) -> list[tuple[int, ...]]:
    """Minimal elements of a set of exponent vectors under componentwise <=.

    Output is deduplicated and sorted by (total degree, lex).
    """
    pts = sorted(set(points), key=lambda p: (sum(p), p))
    if not pts:
        return []
    n = len(pts[0])
    if n == 2:
        # staircase scan: sorted by degree then lex; keep a running minimum
        # of the second coordinate per strictly increasing first coordinate
        out: list[tuple[int, ...]] = []
        for p in sorted(set(points)):
            if out and out[-1][1] <= p[1]:
                continue
            out.append(p)
        out.sort(key=lambda p: (sum(p), p))
        return out
    out = []
    for p in pts:
        dominated = False
        for q in out:
            le = True
            for a, b in zip(q, p):
                if a > b:
                    le = False
                    break
            if le:
                dominated = True
                break
        if not dominated:
            out.append(p)
    return out


def any_le(points: Sequence[tuple[int, ...]], e: tuple[int, ...]) -> bool:
    """True if some point is componentwise <= e."""
    for p in points:
        ok = True
        for a, b in zip(p, e):
            if a > b:
                ok = False
                break
        if ok:
            return True
    return False


def colength_2d(gens: Sequence[tuple[int, int]]) -> int:
    """Lattice points below a 2-d staircase.

    gens must be the minimal generators of an ideal containing pure powers
    of both variables (an antichain, any order).
    """
    pts = sorted(gens)  # x ascending, y descending along the antichain
    total = 0
    for i in range(len(pts) - 1):
        total += (pts[i + 1][0] - pts[i][0]) * pts[i][1]
    return total


def prefix_union_count_2d(rows: Sequence[tuple[int, int, int]]) -> int:
    """Count integer points (x, y) >= 0 with w1*x + w2*y < c for some row.

    Each row is (w1, w2, c) with w1, w2 >= 1.  The union of the prefix
    slabs in each fiber y = const is again a prefix, so the count per fiber
    is the max of the per-row counts.
    """
    ymax = 0
    for w1, w2, c in rows:
        if c > 0:
            yr = (c + w2 - 1) // w2  # number of fibers with a nonempty slab
            if yr > ymax:
                ymax = yr
    total = 0
    for y in range(ymax):
        best = 0
        for w1, w2, c in rows:
            rem = c - w2 * y
            if rem > 0:
                cnt = (rem + w1 - 1) // w1
                if cnt > best:
                    best = cnt
        total += best
    return total


def staircase_gens_2d(
    rows: Sequence[tuple[int, int, int]], xmin: int = 0, ymin: int = 0
) -> list[tuple[int, int]]:
    """Minimal generators of {e : e1 >= xmin, e2 >= ymin, w1*e1 + w2*e2 >= c}.

    Each row is (w1, w2, c) with w1, w2 >= 1.
    """
    ylim = ymin
    for w1, w2, c in rows:
        rem = c - w1 * xmin
        if rem > 0:
            yl = (rem + w2 - 1) // w2
            if yl > ylim:
                ylim = yl
    out: list[tuple[int, int]] = []
    prev_x = None
    for y in range(ymin, ylim + 1):
        x = xmin
        for w1, w2, c in rows:
            rem = c - w2 * y
            if rem > 0:
                need = (rem + w1 - 1) // w1
                if need > x:
                    x = need
        if prev_x is None or x < prev_x:
            out.append((x, y))
            prev_x = x
        if x == xmin:
            break
    return out
