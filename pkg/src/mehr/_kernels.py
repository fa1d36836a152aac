"""Compiled rectangle generation.

Mirrors ``expansion.create_mehr`` draw for draw. Each point carries the number
of dimensions in which it lies outside the current box (and the sum of those
dimension indices). A point outside in exactly one dimension can block that
dimension, so the blocking limits are kept as running min/max values and only
the points a bound sweeps over need updating.
"""

import numpy as np
from numba import njit

DOWN = 0
UP = 1


@njit(cache=True, nogil=True)
def _index(gen, m):
    j = int(gen.random() * m)
    return j if j < m else m - 1


@njit(cache=True, nogil=True)
def _shuffle_prefix(gen, items, m):
    for i in range(m - 1, 0, -1):
        j = _index(gen, i + 1)
        t = items[i]
        items[i] = items[j]
        items[j] = t


@njit(cache=True, nogil=True)
def _inside(x, lo, hi):
    return lo < x and x < hi


@njit(cache=True, nogil=True)
def _note_blocker(points, p, dim, lower, upper, lim_down, lim_up):
    v = points[p, dim]
    if v >= upper[dim]:
        if v < lim_up[dim]:
            lim_up[dim] = v
    elif v <= lower[dim]:
        if v > lim_down[dim]:
            lim_down[dim] = v


@njit(cache=True, nogil=True)
def _set_bound(points, by_coord, sorted_vals, out_cnt, out_dim, lower, upper, lim_down, lim_up, dim, direction, value):
    # Growing a bound only pulls points into the slab; those are exactly the
    # points whose coordinate lies between the old and the new bound.
    col = sorted_vals[dim]
    if direction == UP:
        a = np.searchsorted(col, upper[dim], side="left")
        b = np.searchsorted(col, value, side="left")
        upper[dim] = value
    else:
        a = np.searchsorted(col, value, side="right")
        b = np.searchsorted(col, lower[dim], side="right")
        lower[dim] = value
    for t in range(a, b):
        if not _inside(col[t], lower[dim], upper[dim]):
            continue
        p = by_coord[dim, t]
        out_cnt[p] -= 1
        out_dim[p] -= dim
        if out_cnt[p] == 1:
            _note_blocker(points, p, out_dim[p], lower, upper, lim_down, lim_up)


@njit(cache=True, nogil=True)
def _seed(gen, proj, plen, lower, upper):
    k = proj.shape[0]
    for d in range(k):
        vals = proj[d, : plen[d]]
        while True:
            u = gen.random()
            i = np.searchsorted(vals, u, side="left")
            if i == vals.size or vals[i] != u:
                break
        lower[d] = vals[i - 1] if i > 0 else 0.0
        upper[d] = vals[i] if i < vals.size else 1.0


@njit(cache=True, nogil=True)
def _init_counts(points, lower, upper, out_cnt, out_dim, lim_down, lim_up):
    n, k = points.shape
    lim_down[:] = 0.0
    lim_up[:] = 1.0
    for p in range(n):
        c = 0
        s = 0
        for d in range(k):
            if not _inside(points[p, d], lower[d], upper[d]):
                c += 1
                s += d
        out_cnt[p] = c
        out_dim[p] = s
        if c == 1:
            _note_blocker(points, p, s, lower, upper, lim_down, lim_up)


@njit(cache=True, nogil=True)
def _limit(lim_down, lim_up, dim, direction):
    return lim_up[dim] if direction == UP else lim_down[dim]


@njit(cache=True, nogil=True)
def _bound(lower, upper, dim, direction):
    return upper[dim] if direction == UP else lower[dim]


@njit(cache=True, nogil=True)
def _expand_max(gen, points, by_coord, sorted_vals, lower, upper, out_cnt, out_dim, lim_down, lim_up):
    k = lower.size
    order = np.arange(k)
    _shuffle_prefix(gen, order, k)
    dirs = np.empty(2, dtype=np.int64)
    for dim in order:
        dirs[0] = DOWN
        dirs[1] = UP
        _shuffle_prefix(gen, dirs, 2)
        for direction in dirs:
            lim = _limit(lim_down, lim_up, dim, direction)
            _set_bound(points, by_coord, sorted_vals, out_cnt, out_dim, lower, upper, lim_down, lim_up, dim, direction, lim)


@njit(cache=True, nogil=True)
def _expand_rounds(gen, points, by_coord, sorted_vals, proj, plen, lower, upper, out_cnt, out_dim, lim_down, lim_up):
    k = lower.size
    active = np.arange(2 * k)
    m = 2 * k
    order = np.empty(2 * k, dtype=np.int64)
    frozen = np.zeros(2 * k, dtype=np.bool_)
    while m > 0:
        order[:m] = active[:m]
        _shuffle_prefix(gen, order, m)
        for t in range(m):
            slot = order[t]
            dim = slot // 2
            direction = slot % 2
            vals = proj[dim, : plen[dim]]
            lim = _limit(lim_down, lim_up, dim, direction)
            cur = _bound(lower, upper, dim, direction)
            if direction == UP:
                i = np.searchsorted(vals, cur, side="right")
                step = vals[i] if i < vals.size else 1.0
                new = min(step, lim)
            else:
                i = np.searchsorted(vals, cur, side="left") - 1
                step = vals[i] if i >= 0 else 0.0
                new = max(step, lim)
            _set_bound(points, by_coord, sorted_vals, out_cnt, out_dim, lower, upper, lim_down, lim_up, dim, direction, new)
            if new == lim:
                frozen[slot] = True
        kept = 0
        for t in range(m):
            if not frozen[active[t]]:
                active[kept] = active[t]
                kept += 1
        m = kept


@njit(cache=True, nogil=True)
def _expand_random(gen, points, by_coord, sorted_vals, proj, plen, lower, upper, out_cnt, out_dim, lim_down, lim_up):
    k = lower.size
    active = np.arange(2 * k)
    m = 2 * k
    while m > 0:
        pick = _index(gen, m)
        slot = active[pick]
        dim = slot // 2
        direction = slot % 2
        vals = proj[dim, : plen[dim]]
        lim = _limit(lim_down, lim_up, dim, direction)
        cur = _bound(lower, upper, dim, direction)
        if cur != lim:
            if direction == UP:
                i0 = np.searchsorted(vals, cur, side="right")
                i1 = np.searchsorted(vals, lim, side="left")
            else:
                i0 = np.searchsorted(vals, lim, side="right")
                i1 = np.searchsorted(vals, cur, side="left")
            between = i1 - i0
            j = _index(gen, between + 1)
            if j == between:
                new = lim
            elif direction == UP:
                new = vals[i0 + j]
            else:
                new = vals[i1 - 1 - j]
            _set_bound(points, by_coord, sorted_vals, out_cnt, out_dim, lower, upper, lim_down, lim_up, dim, direction, new)
            cur = new
        if cur == lim:
            for t in range(pick, m - 1):
                active[t] = active[t + 1]
            m -= 1


@njit(cache=True, nogil=True)
def generate(gen, points, by_coord, sorted_vals, proj, plen, strategy, count, lower_out, upper_out, volume_out):
    """Fill the first ``count`` rows of the output arrays with fresh rectangles."""
    n, k = points.shape
    out_cnt = np.empty(n, dtype=np.int64)
    out_dim = np.empty(n, dtype=np.int64)
    lim_down = np.empty(k)
    lim_up = np.empty(k)
    lower = np.empty(k)
    upper = np.empty(k)
    for r in range(count):
        _seed(gen, proj, plen, lower, upper)
        _init_counts(points, lower, upper, out_cnt, out_dim, lim_down, lim_up)
        if strategy == 1:
            _expand_max(gen, points, by_coord, sorted_vals, lower, upper, out_cnt, out_dim, lim_down, lim_up)
        elif strategy == 2:
            _expand_rounds(gen, points, by_coord, sorted_vals, proj, plen, lower, upper, out_cnt, out_dim, lim_down, lim_up)
        else:
            _expand_random(gen, points, by_coord, sorted_vals, proj, plen, lower, upper, out_cnt, out_dim, lim_down, lim_up)
        v = 1.0
        for d in range(k):
            lower_out[r, d] = lower[d]
            upper_out[r, d] = upper[d]
            v *= upper[d] - lower[d]
        volume_out[r] = v


def sort_columns(points):
    """Per-dimension argsort and sorted coordinates, as ``generate`` expects."""
    by_coord = np.ascontiguousarray(np.argsort(points, axis=0, kind="stable").T)
    sorted_vals = np.ascontiguousarray(np.take_along_axis(points, by_coord.T, axis=0).T)
    return by_coord.astype(np.int64), sorted_vals
