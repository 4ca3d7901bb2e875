"""Compiled depth-first counter for feasible weight sets.

Reachable signed sums live in a uint64 bitset over the band [-n, n]
(bit n + v <=> v reachable).  Same pruning as the pure-Python enumerator.
"""
import numpy as np
from numba import njit

_ALL = np.uint64(0xFFFFFFFFFFFFFFFF)
_ONE = np.uint64(1)


@njit(cache=True)
def _expand(src, dst, w, nbits):
    nw = src.shape[0]
    q = w >> 6
    b = np.uint64(w & 63)
    cb = np.uint64(64 - (w & 63))
    for i in range(nw):
        dst[i] = src[i]
    for i in range(nw - 1, q - 1, -1):
        v = src[i - q] << b
        if b and i - q - 1 >= 0:
            v |= src[i - q - 1] >> cb
        dst[i] |= v
    for i in range(0, nw - q):
        v = src[i + q] >> b
        if b and i + q + 1 < nw:
            v |= src[i + q + 1] << cb
        dst[i] |= v
    extra = nw * 64 - nbits
    if extra:
        dst[nw - 1] &= _ALL >> np.uint64(extra)


@njit(cache=True)
def _covers(mask, n):
    # bits n+1 .. 2n must all be set
    lo = n + 1
    hi = 2 * n
    i = lo
    while i <= hi:
        word = i >> 6
        off = i & 63
        span = min(64 - off, hi - i + 1)
        if span == 64:
            want = _ALL
        else:
            want = ((_ONE << np.uint64(span)) - _ONE) << np.uint64(off)
        if mask[word] & want != want:
            return False
        i += span
    return True


@njit(cache=True)
def _range_for(d, m, n, rp, last, p3):
    """Candidate weights at depth d given prefix sum rp and previous weight."""
    k = m - d + 1
    if d == m:
        w = n - rp
        if w < last or w > 2 * rp + 1:
            return 1, 0
        return w, w
    lo = last
    hi = min(2 * rp + 1, (n - rp) // k)
    # R_d must still be able to grow to n in k - 1 steps of R -> 3R + 1
    g = p3[k - 1]
    need = (n - (g - 1) // 2 + g - 1) // g - rp
    if need > lo:
        lo = need
    return lo, hi


@njit(cache=True)
def count_feasible_kernel(n, m):
    nbits = 2 * n + 1
    nw = (nbits + 63) // 64
    masks = np.zeros((m + 1, nw), np.uint64)
    masks[0, n >> 6] = _ONE << np.uint64(n & 63)
    R = np.zeros(m + 1, np.int64)
    cur = np.zeros(m + 1, np.int64)
    hi = np.zeros(m + 1, np.int64)
    p3 = np.ones(m + 1, np.int64)
    for i in range(1, m + 1):
        p3[i] = p3[i - 1] * 3

    count = 0
    d = 1
    cur[1], hi[1] = _range_for(1, m, n, 0, 1, p3)
    while d >= 1:
        if cur[d] > hi[d]:
            d -= 1
            if d >= 1:
                cur[d] += 1
            continue
        w = cur[d]
        _expand(masks[d - 1], masks[d], w, nbits)
        R[d] = R[d - 1] + w
        if d == m:
            if R[d] == n and _covers(masks[d], n):
                count += 1
            cur[d] += 1
            continue
        d += 1
        cur[d], hi[d] = _range_for(d, m, n, R[d - 1], w, p3)
    return count
