# cython: language_level=3
"""Compiled kernels; must match _kernels.pure exactly on safe inputs.

The dispatch layer guarantees every coordinate fits comfortably in an
int64 (products of two coordinates do not overflow).  Bounds checks stay
on: the hot loops run on raw C buffers that are sized in this file, while
indexing into caller-supplied tuples must fail cleanly on malformed rows.
"""

from libc.stdlib cimport free, malloc


def reduce_antichain(points):
    cdef Py_ssize_t n, i, j, k, m
    cdef bint le, dominated, first
    cdef long long py, lasty
    pts = sorted(set(points), key=lambda p: (sum(p), p))
    if not pts:
        return []
    n = len(pts[0])
    if n == 2:
        out2 = []
        lasty = -1
        first = True
        for p in sorted(set(points)):
            py = p[1]
            if not first and lasty <= py:
                continue
            out2.append(p)
            lasty = py
            first = False
        out2.sort(key=lambda p: (p[0] + p[1], p))
        return out2
    m = len(pts)
    cdef long long *buf = <long long *> malloc(m * n * sizeof(long long))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t kept = 0
    out = []
    try:
        for i in range(m):
            p = pts[i]
            dominated = False
            for j in range(kept):
                le = True
                for k in range(n):
                    if buf[j * n + k] > <long long> p[k]:
                        le = False
                        break
                if le:
                    dominated = True
                    break
            if not dominated:
                for k in range(n):
                    buf[kept * n + k] = <long long> p[k]
                kept += 1
                out.append(p)
    finally:
        free(buf)
    return out


def any_le(points, e):
    cdef Py_ssize_t n = len(e)
    cdef Py_ssize_t k
    cdef bint ok
    for p in points:
        ok = True
        for k in range(n):
            if <long long> p[k] > <long long> e[k]:
                ok = False
                break
        if ok:
            return True
    return False


def colength_2d(gens):
    pts = sorted(gens)
    cdef long long total = 0
    cdef Py_ssize_t i
    for i in range(len(pts) - 1):
        total += (<long long> pts[i + 1][0] - <long long> pts[i][0]) * \
            <long long> pts[i][1]
    return total


def prefix_union_count_2d(rows):
    cdef long long ymax = 0, yr, y, best, rem, cnt, total
    cdef long long w1, w2, c
    cdef Py_ssize_t i, nrows = len(rows)
    cdef long long *rw = <long long *> malloc(3 * nrows * sizeof(long long))
    if rw == NULL:
        raise MemoryError()
    try:
        for i in range(nrows):
            row = rows[i]
            rw[3 * i] = row[0]
            rw[3 * i + 1] = row[1]
            rw[3 * i + 2] = row[2]
            w2 = rw[3 * i + 1]
            c = rw[3 * i + 2]
            if c > 0:
                yr = (c + w2 - 1) // w2
                if yr > ymax:
                    ymax = yr
        total = 0
        for y in range(ymax):
            best = 0
            for i in range(nrows):
                w1 = rw[3 * i]
                w2 = rw[3 * i + 1]
                c = rw[3 * i + 2]
                rem = c - w2 * y
                if rem > 0:
                    cnt = (rem + w1 - 1) // w1
                    if cnt > best:
                        best = cnt
            total += best
    finally:
        free(rw)
    return total


def staircase_gens_2d(rows, long long xmin=0, long long ymin=0):
    cdef long long ylim = ymin, yl, y, x, rem, need, prev_x
    cdef long long w1, w2, c
    cdef bint have_prev = False
    cdef Py_ssize_t i, nrows = len(rows)
    cdef long long *rw = <long long *> malloc(3 * nrows * sizeof(long long))
    if rw == NULL:
        raise MemoryError()
    out = []
    try:
        for i in range(nrows):
            row = rows[i]
            rw[3 * i] = row[0]
            rw[3 * i + 1] = row[1]
            rw[3 * i + 2] = row[2]
            w1 = rw[3 * i]
            w2 = rw[3 * i + 1]
            c = rw[3 * i + 2]
            rem = c - w1 * xmin
            if rem > 0:
                yl = (rem + w2 - 1) // w2
                if yl > ylim:
                    ylim = yl
        prev_x = 0
        for y in range(ymin, ylim + 1):
            x = xmin
            for i in range(nrows):
                w1 = rw[3 * i]
                w2 = rw[3 * i + 1]
                c = rw[3 * i + 2]
                rem = c - w2 * y
                if rem > 0:
                    need = (rem + w1 - 1) // w1
                    if need > x:
                        x = need
            if not have_prev or x < prev_x:
                out.append((x, y))
                prev_x = x
                have_prev = True
            if x == xmin:
                break
    finally:
        free(rw)
    return out
