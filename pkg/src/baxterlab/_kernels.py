"""
Hot loops for exhaustive scans over S_n.

Two interchangeable backends:

* ``numba``: @njit kernels walking S_n in lexicographic order in place.
* ``numpy``: batches from itertools.permutations tested with vectorized
  comparisons.

The backend is picked once at import from ``BAXTERLAB_BACKEND``
(``numba`` or ``numpy``); numba is the default when it imports.
"""
from __future__ import annotations

import itertools
import math
import os

import numpy as np

_requested = os.environ.get("BAXTERLAB_BACKEND", "numba").strip().lower()
if _requested not in ("numba", "numpy"):
    raise ImportError(f"BAXTERLAB_BACKEND must be 'numba' or 'numpy', got {_requested!r}")

try:
    if _requested != "numba":
        raise ImportError
    from numba import njit
    HAVE_NUMBA = True
except ImportError:
    HAVE_NUMBA = False

BACKEND = "numba" if HAVE_NUMBA else "numpy"

_CHUNK = 1 << 16


# ---------------------------------------------------------------------------
# numpy path

def baxter_mask_numpy(batch: np.ndarray) -> np.ndarray:
    """Boolean mask of the Baxter rows of an (m, n) array of permutations."""
    batch = np.asarray(batch)
    m, n = batch.shape
    ok = np.ones(m, dtype=bool)
    big = n + 1
    for j in range(1, n - 2):
        a = batch[:, j][:, None]
        b = batch[:, j + 1][:, None]
        left = batch[:, :j]
        right = batch[:, j + 2:]
        lo = np.minimum(a, b)
        hi = np.maximum(a, b)
        in_left = (left > lo) & (left < hi)
        in_right = (right > lo) & (right < hi)
        up = (a < b)[:, 0]
        # 3-14-2: some left entry above some right entry
        bad_up = np.where(in_left, left, 0).max(axis=1) > np.where(in_right, right, big).min(axis=1)
        # 2-41-3: some left entry below some right entry
        bad_down = np.where(in_left, left, big).min(axis=1) < np.where(in_right, right, 0).max(axis=1)
        ok &= ~np.where(up, bad_up, bad_down)
    return ok


def _descents_numpy(batch: np.ndarray) -> np.ndarray:
    return (batch[:, :-1] > batch[:, 1:]).sum(axis=1)


def _inverse_numpy(batch: np.ndarray) -> np.ndarray:
    inv = np.empty_like(batch)
    rows = np.arange(batch.shape[0])[:, None]
    inv[rows, batch - 1] = np.arange(1, batch.shape[1] + 1)
    return inv


def scan_baxter_numpy(n: int, first: int = 0) -> tuple[int, np.ndarray]:
    """Count Baxter permutations of length n and tabulate (des, ides).

    ``first`` restricts the scan to permutations starting with that label
    (0 scans everything).
    """
    table = np.zeros((max(n, 1), max(n, 1)), dtype=np.int64)
    if n == 0:
        return 1, table[:0, :0]
    if first:
        rest = [x for x in range(1, n + 1) if x != first]
        source = ((first,) + p for p in itertools.permutations(rest))
    else:
        source = itertools.permutations(range(1, n + 1))
    count = 0
    while True:
        chunk = list(itertools.islice(source, _CHUNK))
        if not chunk:
            break
        batch = np.array(chunk, dtype=np.int64)
        keep = batch[baxter_mask_numpy(batch)]
        count += len(keep)
        if n > 1:
            np.add.at(table, (_descents_numpy(keep), _descents_numpy(_inverse_numpy(keep))), 1)
        else:
            table[0, 0] += len(keep)
    return count, table


# ---------------------------------------------------------------------------
# numba path

if HAVE_NUMBA:

    @njit(cache=True, nogil=True)
    def _is_baxter_nb(p):
        n = p.shape[0]
        for j in range(1, n - 2):
            a = p[j]
            b = p[j + 1]
            if a < b:
                best_left = 0
                for i in range(j):
                    if a < p[i] < b and p[i] > best_left:
                        best_left = p[i]
                if best_left == 0:
                    continue
                for k in range(j + 2, n):
                    if a < p[k] < best_left:
                        return False
            else:
                best_left = n + 1
                for i in range(j):
                    if b < p[i] < a and p[i] < best_left:
                        best_left = p[i]
                if best_left == n + 1:
                    continue
                for k in range(j + 2, n):
                    if best_left < p[k] < a:
                        return False
        return True

    @njit(cache=True, nogil=True)
    def _baxter_mask_nb(batch):
        m = batch.shape[0]
        out = np.empty(m, dtype=np.bool_)
        for r in range(m):
            out[r] = _is_baxter_nb(batch[r])
        return out

    @njit(cache=True, nogil=True)
    def _next_perm_nb(p, lo):
        # lexicographic successor of p[lo:], in place; False when exhausted
        n = p.shape[0]
        i = n - 2
        while i >= lo and p[i] > p[i + 1]:
            i -= 1
        if i < lo:
            return False
        k = n - 1
        while p[k] < p[i]:
            k -= 1
        p[i], p[k] = p[k], p[i]
        a = i + 1
        b = n - 1
        while a < b:
            p[a], p[b] = p[b], p[a]
            a += 1
            b -= 1
        return True

    @njit(cache=True, nogil=True)
    def _scan_baxter_nb(n, first):
        table = np.zeros((n, n), dtype=np.int64)
        p = np.empty(n, dtype=np.int64)
        inv = np.empty(n, dtype=np.int64)
        lo = 0
        if first > 0:
            p[0] = first
            t = 1
            for x in range(1, n + 1):
                if x != first:
                    p[t] = x
                    t += 1
            lo = 1
        else:
            for t in range(n):
                p[t] = t + 1
        count = 0
        while True:
            if _is_baxter_nb(p):
                count += 1
                des = 0
                for t in range(n - 1):
                    if p[t] > p[t + 1]:
                        des += 1
                for t in range(n):
                    inv[p[t] - 1] = t
                ides = 0
                for t in range(n - 1):
                    if inv[t] > inv[t + 1]:
                        ides += 1
                table[des, ides] += 1
            if not _next_perm_nb(p, lo):
                break
        return count, table


def baxter_mask(batch) -> np.ndarray:
    batch = np.ascontiguousarray(batch, dtype=np.int64)
    if batch.ndim != 2:
        raise ValueError("expected a 2-d array of permutations")
    if HAVE_NUMBA:
        return _baxter_mask_nb(batch)
    return baxter_mask_numpy(batch)


def scan_baxter(n: int, first: int = 0) -> tuple[int, np.ndarray]:
    """Exhaustive lexicographic scan of S_n (optionally one first-entry slice).

    Returns the Baxter count and the joint (descents, inverse descents)
    table, an (n, n) int64 array.
    """
    if n < 0 or not 0 <= first <= n:
        raise ValueError("bad scan arguments")
    if n == 0:
        return 1, np.zeros((0, 0), dtype=np.int64)
    if HAVE_NUMBA:
        count, table = _scan_baxter_nb(n, first)
        return int(count), table
    return scan_baxter_numpy(n, first)


def scan_size(n: int) -> int:
    return math.factorial(n)
