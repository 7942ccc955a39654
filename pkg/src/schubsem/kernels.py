"""Batch kernels over arrays of permutations and pipe-dream grids.

Every kernel exists twice: a loop version compiled with numba and a
vectorised numpy version.  The public names dispatch to numba when it is
available and not disabled (see :mod:`schubsem._accel`); the ``*_numpy``
variants are always importable so the two can be compared directly.

Permutation arrays are ``(m, n)`` integer arrays holding one-line words with
values ``1..n``.  Grids are ``(m, n, n)`` uint8 arrays, 1 marking a cross.
"""

from itertools import combinations

import numpy as np

from ._accel import HAS_NUMBA, njit

__all__ = [
    "lehmer_codes",
    "lehmer_codes_numpy",
    "contains_pattern_batch",
    "contains_pattern_numpy",
    "trace_grids",
    "trace_grids_numpy",
    "HAS_NUMBA",
]


# -- Lehmer codes -------------------------------------------------------------


def lehmer_codes_numpy(perms: np.ndarray) -> np.ndarray:
    perms = np.asarray(perms, dtype=np.int64)
    m, n = perms.shape
    out = np.zeros((m, n), dtype=np.int64)
    for i in range(n - 1):
        out[:, i] = np.count_nonzero(perms[:, i + 1:] < perms[:, i:i + 1], axis=1)
    return out


@njit(cache=True)
def _lehmer_codes_loop(perms):
    m, n = perms.shape
    out = np.zeros((m, n), dtype=np.int64)
    for r in range(m):
        for i in range(n):
            v = perms[r, i]
            c = 0
            for j in range(i + 1, n):
                if perms[r, j] < v:
                    c += 1
            out[r, i] = c
    return out


# -- pattern containment ------------------------------------------------------


def contains_pattern_numpy(perms: np.ndarray, pattern) -> np.ndarray:
    perms = np.asarray(perms, dtype=np.int64)
    pattern = np.asarray(pattern, dtype=np.int64)
    m, n = perms.shape
    k = len(pattern)
    found = np.zeros(m, dtype=bool)
    if k == 0:
        found[:] = True
        return found
    pairs = [(a, b, pattern[a] < pattern[b]) for a in range(k) for b in range(a + 1, k)]
    for positions in combinations(range(n), k):
        sub = perms[:, positions]
        ok = ~found
        for a, b, less in pairs:
            if less:
                ok &= sub[:, a] < sub[:, b]
            else:
                ok &= sub[:, a] > sub[:, b]
        found |= ok
        if found.all():
            break
    return found


@njit(cache=True)
def _match_row(row, pattern, k, chosen):
    # iterative depth-first subsequence scan with prefix pruning
    # (numba mis-compiles the recursive form, so the stack is explicit)
    n = row.shape[0]
    depth = 0
    nxt = 0
    while True:
        if depth == k:
            return True
        advanced = False
        p = nxt
        while p <= n - (k - depth):
            v = row[p]
            ok = True
            for q in range(depth):
                if (row[chosen[q]] < v) != (pattern[q] < pattern[depth]):
                    ok = False
                    break
            if ok:
                chosen[depth] = p
                depth += 1
                nxt = p + 1
                advanced = True
                break
            p += 1
        if not advanced:
            if depth == 0:
                return False
            depth -= 1
            nxt = chosen[depth] + 1


@njit(cache=True)
def _contains_pattern_loop(perms, pattern):
    m = perms.shape[0]
    k = pattern.shape[0]
    out = np.zeros(m, dtype=np.bool_)
    chosen = np.zeros(max(k, 1), dtype=np.int64)
    for r in range(m):
        out[r] = _match_row(perms[r], pattern, k, chosen)
    return out


# -- wire tracing -------------------------------------------------------------


def trace_grids_numpy(grids: np.ndarray):
    """Trace wires through a stack of grids.

    Returns ``(perms, reduced)``: the ``(m, n)`` one-line words and a bool
    array flagging grids in which no pair of wires crosses twice.
    """
    grids = np.asarray(grids, dtype=np.uint8)
    m, n, _ = grids.shape
    rows = np.arange(m)
    up = np.full((m, n), -1, dtype=np.int64)
    seen = np.zeros((m, n, n), dtype=bool)
    reduced = np.ones(m, dtype=bool)
    for r in range(n - 1, -1, -1):
        h = np.full(m, r, dtype=np.int64)
        for c in range(n - r):
            b = up[:, c].copy()
            if r + c < n - 1:
                cross = grids[:, r, c].astype(bool)
            else:
                cross = np.zeros(m, dtype=bool)
            if cross.any():
                lo = np.minimum(h, b)
                hi = np.maximum(h, b)
                hit = cross & seen[rows, lo, hi]
                reduced &= ~hit
                seen[rows[cross], lo[cross], hi[cross]] = True
            up[:, c] = np.where(cross, b, h)
            h = np.where(cross, h, b)
    perms = np.zeros((m, n), dtype=np.int64)
    cols = np.broadcast_to(np.arange(1, n + 1), (m, n))
    perms[rows[:, None], up] = cols
    return perms, reduced


@njit(cache=True)
def _trace_grids_loop(grids):
    m, n, _ = grids.shape
    perms = np.zeros((m, n), dtype=np.int64)
    reduced = np.ones(m, dtype=np.bool_)
    up = np.empty(n, dtype=np.int64)
    seen = np.zeros((n, n), dtype=np.bool_)
    for g in range(m):
        up[:] = -1
        seen[:, :] = False
        for r in range(n - 1, -1, -1):
            h = r
            for c in range(n - r):
                b = up[c]
                if r + c < n - 1 and grids[g, r, c] != 0:
                    lo = min(h, b)
                    hi = max(h, b)
                    if seen[lo, hi]:
                        reduced[g] = False
                    seen[lo, hi] = True
                    up[c] = b
                else:
                    up[c] = h
                    h = b
        for c in range(n):
            perms[g, up[c]] = c + 1
    return perms, reduced


# -- dispatch -----------------------------------------------------------------


def lehmer_codes(perms: np.ndarray) -> np.ndarray:
    perms = np.ascontiguousarray(perms, dtype=np.int64)
    if HAS_NUMBA:
        return _lehmer_codes_loop(perms)
    return lehmer_codes_numpy(perms)


def contains_pattern_batch(perms: np.ndarray, pattern) -> np.ndarray:
    perms = np.ascontiguousarray(perms, dtype=np.int64)
    pattern = np.ascontiguousarray(pattern, dtype=np.int64)
    if perms.shape[1] < pattern.shape[0]:
        return np.zeros(perms.shape[0], dtype=bool)
    if HAS_NUMBA:
        return _contains_pattern_loop(perms, pattern)
    return contains_pattern_numpy(perms, pattern)


def trace_grids(grids: np.ndarray):
    grids = np.ascontiguousarray(grids, dtype=np.uint8)
    if HAS_NUMBA:
        return _trace_grids_loop(grids)
    return trace_grids_numpy(grids)


# loop variants for benchmarking; plain Python when numba is off
lehmer_codes_loop = _lehmer_codes_loop
contains_pattern_loop = _contains_pattern_loop
trace_grids_loop = _trace_grids_loop
