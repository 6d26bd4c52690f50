"""Bitmask kernels for the hot combinatorial loops.

Every kernel has two implementations: a numba ``@njit`` version and a
pure Python / numpy version.  The numba path is used when numba imports and
the environment variable ``PROBEIEP_DISABLE_NUMBA`` is unset or ``0``.
Graphs are passed as ``int64`` arrays of neighbourhood bitmasks, so the
kernels only handle graphs with at most 62 vertices.
"""

from __future__ import annotations

import os

import numpy as np

MAX_KERNEL_N = 62


def _numba_requested() -> bool:
    flag = os.environ.get("PROBEIEP_DISABLE_NUMBA", "0").strip().lower()
    return flag in ("", "0", "false", "no")


try:
    if not _numba_requested():
        raise ImportError("numba disabled by PROBEIEP_DISABLE_NUMBA")
    import numba

    njit = numba.njit(cache=True, nogil=True)
    NUMBA_ENABLED = True
except ImportError:  # pragma: no cover - exercised by the fallback benchmark
    numba = None
    NUMBA_ENABLED = False


# ---------------------------------------------------------------------------
# zero forcing closure


def _closure_py(adj, blue, probe_mask, nonprobe_mask):
    n = adj.shape[0]
    changed = True
    while changed:
        changed = False
        nonprobes_blue = (blue & nonprobe_mask) == nonprobe_mask
        for v in range(n):
            if not (blue >> v) & 1:
                continue
            if not ((probe_mask >> v) & 1 or nonprobes_blue):
                continue
            white = adj[v] & ~blue
            if white != 0 and (white & (white - 1)) == 0:
                blue |= white
                changed = True
                nonprobes_blue = (blue & nonprobe_mask) == nonprobe_mask
    return blue


def _closure_batch_np(adj, blues, probe_mask, nonprobe_mask):
    """Closure of many initial sets at once (vectorised over ``blues``)."""
    blues = blues.astype(np.int64).copy()
    adj = adj.astype(np.int64)
    n = adj.shape[0]
    probe_mask = np.int64(probe_mask)
    nonprobe_mask = np.int64(nonprobe_mask)
    while True:
        before = blues.copy()
        for v in range(n):
            is_blue = ((blues >> v) & 1).astype(bool)
            if not (probe_mask >> v) & 1:
                is_blue &= (blues & nonprobe_mask) == nonprobe_mask
            white = adj[v] & ~blues
            single = (white != 0) & ((white & (white - 1)) == 0)
            blues = np.where(is_blue & single, blues | white, blues)
        if np.array_equal(before, blues):
            return blues


def _min_forcing_py(adj, probe_mask, nonprobe_mask, size):
    n = adj.shape[0]
    full = (1 << n) - 1
    if size == 0:
        return 0 if _closure_py(adj, 0, probe_mask, nonprobe_mask) == full else -1
    masks = _masks_of_size(n, size)
    closed = _closure_batch_np(adj, masks, probe_mask, nonprobe_mask)
    hits = np.nonzero(closed == full)[0]
    return int(masks[hits[0]]) if hits.size else -1


def _masks_of_size(n, size):
    everything = np.arange(1 << n, dtype=np.int64)
    counts = np.zeros(everything.shape, dtype=np.int64)
    for v in range(n):
        counts += (everything >> v) & 1
    return everything[counts == size]


def _min_forcing_nb(adj, probe_mask, nonprobe_mask, size):
    n = adj.shape[0]
    full = (np.int64(1) << n) - 1
    if size == 0:
        if _closure_nb(adj, np.int64(0), probe_mask, nonprobe_mask) == full:
            return np.int64(0)
        return np.int64(-1)
    x = (np.int64(1) << size) - 1
    while x <= full:
        if _closure_nb(adj, x, probe_mask, nonprobe_mask) == full:
            return x
        # Gosper's hack: next mask with the same popcount
        c = x & -x
        r = x + c
        x = (((r ^ x) >> 2) // c) | r
    return np.int64(-1)


# ---------------------------------------------------------------------------
# canonical labelling


def _canonical_code_np(adjmat, perms):
    n = adjmat.shape[0]
    if n < 2:
        return 0
    iu, ju = np.triu_indices(n, 1)
    bits = adjmat[perms[:, iu], perms[:, ju]].astype(np.int64)
    weights = np.left_shift(np.int64(1), np.arange(bits.shape[1] - 1, -1, -1, dtype=np.int64))
    return int((bits * weights).sum(axis=1).min())


def _canonical_code_nb(adjmat, perms):
    n = adjmat.shape[0]
    best = np.int64(-1)
    for p in range(perms.shape[0]):
        code = np.int64(0)
        for i in range(n):
            for j in range(i + 1, n):
                code = code * 2 + adjmat[perms[p, i], perms[p, j]]
        if best < 0 or code < best:
            best = code
    return best if best > 0 else np.int64(0)


# ---------------------------------------------------------------------------
# two parallel paths, exhaustive


def _walk_path(adj, mask, out):
    """Write the vertices of the induced path on ``mask`` into ``out``.

    Returns the number of vertices written, or -1 when ``mask`` does not
    induce a path.
    """
    n = adj.shape[0]
    count = 0
    edges2 = 0
    start = -1
    for v in range(n):
        if (mask >> v) & 1:
            count += 1
            nb = adj[v] & mask
            d = 0
            while nb:
                nb &= nb - 1
                d += 1
            if d > 2:
                return -1
            edges2 += d
            if d <= 1 and start < 0:
                start = v
    if count == 0:
        return 0
    if edges2 != 2 * (count - 1) or start < 0:
        return -1
    prev = -1
    cur = start
    k = 0
    while True:
        out[k] = cur
        k += 1
        nb = adj[cur] & mask
        nxt = -1
        for u in range(n):
            if (nb >> u) & 1 and u != prev:
                nxt = u
                break
        if nxt < 0:
            break
        prev = cur
        cur = nxt
        if k > count:
            return -1
    if k != count:
        return -1
    return k


def _noncrossing(adj, pord, kp, qord, kq, reverse_q):
    n = adj.shape[0]
    pidx = np.full(n, -1, dtype=np.int64)
    qidx = np.full(n, -1, dtype=np.int64)
    for i in range(kp):
        pidx[pord[i]] = i
    for j in range(kq):
        qidx[qord[j]] = (kq - 1 - j) if reverse_q else j
    ci = np.empty(n * n, dtype=np.int64)
    cj = np.empty(n * n, dtype=np.int64)
    m = 0
    for i in range(kp):
        v = pord[i]
        for u in range(n):
            if (adj[v] >> u) & 1 and qidx[u] >= 0:
                ci[m] = i
                cj[m] = qidx[u]
                m += 1
    for a in range(m):
        for b in range(m):
            if ci[b] > ci[a] and cj[b] < cj[a]:
                return False
    return True


def _two_paths_py(adj):
    n = adj.shape[0]
    full = (1 << n) - 1
    pord = np.empty(n, dtype=np.int64)
    qord = np.empty(n, dtype=np.int64)
    result = np.full(n + 2, -1, dtype=np.int64)
    if n == 0:
        return result
    for mask in range(1, full + 1):
        if not mask & 1:
            continue  # vertex 0 always lies on the first path
        kp = _walk_path(adj, mask, pord)
        if kp < 0:
            continue
        kq = _walk_path(adj, full & ~mask, qord)
        if kq < 0:
            continue
        for rev in (False, True):
            if _noncrossing(adj, pord, kp, qord, kq, rev):
                result[0] = kp
                result[1] = kq
                for i in range(kp):
                    result[2 + i] = pord[i]
                for j in range(kq):
                    result[2 + kp + j] = qord[kq - 1 - j] if rev else qord[j]
                return result
    return result


def _all_partitions_py(adj):
    """Bitmasks (containing vertex 0) of every valid first-path vertex set."""
    n = adj.shape[0]
    full = (1 << n) - 1
    pord = np.empty(n, dtype=np.int64)
    qord = np.empty(n, dtype=np.int64)
    found = np.empty(1 << max(n - 1, 0), dtype=np.int64)
    m = 0
    for mask in range(1, full + 1):
        if not mask & 1:
            continue
        kp = _walk_path(adj, mask, pord)
        if kp < 0:
            continue
        kq = _walk_path(adj, full & ~mask, qord)
        if kq < 0:
            continue
        if _noncrossing(adj, pord, kp, qord, kq, False) or _noncrossing(adj, pord, kp, qord, kq, True):
            found[m] = mask
            m += 1
    return found[:m]


if NUMBA_ENABLED:
    _closure_nb = njit(_closure_py)
    _min_forcing_nb = njit(_min_forcing_nb)
    _walk_path_nb = njit(_walk_path)
    _walk_path = _walk_path_nb
    _noncrossing = njit(_noncrossing)
    closure = _closure_nb
    min_forcing_of_size = _min_forcing_nb
    canonical_code = njit(_canonical_code_nb)
    two_paths_search = njit(_two_paths_py)
    all_path_partitions = njit(_all_partitions_py)
else:
    closure = _closure_py
    min_forcing_of_size = _min_forcing_py
    canonical_code = _canonical_code_np
    two_paths_search = _two_paths_py
    all_path_partitions = _all_partitions_py


def as_adj_array(adj_masks) -> np.ndarray:
    return np.asarray(adj_masks, dtype=np.int64)
