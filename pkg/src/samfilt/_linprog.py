"""Exact linear programming over an ordered field.

A dense two-phase tableau simplex with Bland's rule, generic over the scalar
type: Fraction for rational data, ExactReal for data in one quadratic
extension.  Every pivot is exact, so optima and feasibility answers are
certificates, not approximations.
"""

from __future__ import annotations

from typing import Sequence

OPTIMAL = "optimal"
UNBOUNDED = "unbounded"
INFEASIBLE = "infeasible"


def _pivot(rows, obj, basis, pr, pc, zero):
    piv = rows[pr][pc]
    rows[pr] = [v / piv for v in rows[pr]]
    prow = rows[pr]
    for i in range(len(rows)):
        if i == pr:
            continue
        f = rows[i][pc]
        if f != zero:
            rows[i] = [a - f * b for a, b in zip(rows[i], prow)]
    f = obj[pc]
    if f != zero:
        obj[:] = [a - f * b for a, b in zip(obj, prow)]
    basis[pr] = pc


def _make_obj(rows, basis, costs, zero):
    """Reduced-cost row costs[j] - sum_i costs[basis[i]] * rows[i][j]."""
    width = len(rows[0]) if rows else 0
    obj = list(costs) + [zero] * (width - len(costs))
    for i, row in enumerate(rows):
        cb = costs[basis[i]]
        if cb != zero:
            obj = [a - cb * b for a, b in zip(obj, row)]
    return obj


def _pivot_loop(rows, obj, basis, ncols, zero):
    while True:
        enter = -1
        for j in range(ncols):
            if obj[j] > zero:
                enter = j
                break
        if enter < 0:
            return OPTIMAL
        leave = -1
        best = None
        for i in range(len(rows)):
            aij = rows[i][enter]
            if aij > zero:
                ratio = rows[i][-1] / aij
                if (
                    best is None
                    or ratio < best
                    or (ratio == best and basis[i] < basis[leave])
                ):
                    best = ratio
                    leave = i
        if leave < 0:
            return UNBOUNDED
        _pivot(rows, obj, basis, leave, enter, zero)


def simplex_max(c: Sequence, A: Sequence[Sequence], b: Sequence, *, zero, one):
    """Maximize c.x subject to A x <= b, x >= 0.

    Returns (status, value, x).  value and x are None unless status is
    "optimal".  All entries of c, A, b must already be of the scalar type
    that zero and one belong to.
    """
    m, n = len(A), len(c)
    ncols = n + m
    rows = []
    basis = []
    need_art = []
    for i in range(m):
        row = list(A[i]) + [zero] * m + [b[i]]
        row[n + i] = one
        if b[i] < zero:
            row = [(-v) for v in row]
            need_art.append(i)
            basis.append(-1)
        else:
            basis.append(n + i)
        rows.append(row)
    if need_art:
        k = len(need_art)
        for ai, i in enumerate(need_art):
            basis[i] = ncols + ai
        for i in range(m):
            ext = [zero] * k
            if basis[i] >= ncols:
                ext[basis[i] - ncols] = one
            rows[i] = rows[i][:-1] + ext + [rows[i][-1]]
        total = ncols + k
        costs = [zero] * total
        for j in range(ncols, total):
            costs[j] = -one
        obj = _make_obj(rows, basis, costs, zero)
        _pivot_loop(rows, obj, basis, total, zero)
        value = zero
        for i in range(m):
            if basis[i] >= ncols:
                value = value + rows[i][-1]
        if value != zero:
            return INFEASIBLE, None, None
        # drive remaining artificials out of the basis
        drop = []
        for i in range(m):
            if basis[i] >= ncols:
                done = False
                for j in range(ncols):
                    if rows[i][j] != zero:
                        _pivot(rows, obj, basis, i, j, zero)
                        done = True
                        break
                if not done:
                    drop.append(i)  # redundant row
        for i in sorted(drop, reverse=True):
            del rows[i]
            del basis[i]
        for i in range(len(rows)):
            rows[i] = rows[i][:ncols] + [rows[i][-1]]

    costs = list(c) + [zero] * (ncols - n)
    obj = _make_obj(rows, basis, costs, zero)
    status = _pivot_loop(rows, obj, basis, ncols, zero)
    if status == UNBOUNDED:
        return UNBOUNDED, None, None
    x = [zero] * n
    value = zero
    for i in range(len(rows)):
        col = basis[i]
        if col < n:
            x[col] = rows[i][-1]
        if costs[col] != zero:
            value = value + costs[col] * rows[i][-1]
    return OPTIMAL, value, x


def lp_min(c: Sequence, A_ge: Sequence[Sequence], b_ge: Sequence, *, zero, one):
    """Minimize c.x subject to A x >= b, x >= 0; returns (status, value, x)."""
    neg_c = [-v for v in c]
    neg_A = [[-v for v in row] for row in A_ge]
    neg_b = [-v for v in b_ge]
    status, value, x = simplex_max(neg_c, neg_A, neg_b, zero=zero, one=one)
    if status != OPTIMAL:
        return status, None, None
    return OPTIMAL, -value, x


def strict_cone_margin(cvecs: Sequence[Sequence], *, zero, one):
    """Largest margin delta with some x >= 0, sum x = 1, c_j . x >= delta.

    The open cone {x >= 0 : c_j . x > 0 for all j} is nonempty exactly when
    the returned delta is > 0.  Returns (delta, x).
    """
    if not cvecs:
        raise ValueError("no constraint vectors")
    n = len(cvecs[0])
    # variables: x_1..x_n, dp, dm  (delta = dp - dm, both parts nonnegative)
    c = [zero] * n + [one, -one]
    A = []
    b = []
    for cv in cvecs:
        A.append([-v for v in cv] + [one, -one])
        b.append(zero)
    A.append([one] * n + [zero, zero])
    b.append(one)
    A.append([-one] * n + [zero, zero])
    b.append(-one)
    status, value, x = simplex_max(c, A, b, zero=zero, one=one)
    if status != OPTIMAL:  # pragma: no cover - bounded by construction
        raise RuntimeError("margin LP failed: %s" % status)
    return value, x[:n]
