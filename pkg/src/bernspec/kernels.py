"""Hot search kernels over the envelope lattice.

The cycle search walks the functional graph on the nonzero integers of the
attractor envelope: node x has the single digit candidate c ≡ -x * t^{-1}
(mod N) and an edge x -> (x + t*c)/b exactly when b divides x + t*c.  Out-
degree is at most 1, so a three-color pointer chase decides "any cycle?" in
linear time; that loop dominates scan runtime at ~10^7..10^8 nodes.

Two interchangeable backends:

* numba: @njit three-color chase (default when numba imports);
* numpy: vectorized successor table + pointer doubling, selected by setting
  BERNSPEC_NO_NUMBA=1 or automatically when numba is unavailable.

Both return a node on the same first-found cycle (the cycle reached from the
lowest-index node whose chain survives), so downstream canonicalization makes
the final witness backend-independent.  A pure-Python reference path handles
arguments outside the int64-safe range and anchors the tests.
"""

from __future__ import annotations

import os

import numpy as np

try:
    from numba import njit

    _NUMBA_AVAILABLE = True
except ImportError:  # pragma: no cover - exercised only without numba installed
    _NUMBA_AVAILABLE = False

    def njit(*args, **kwargs):
        def wrap(f):
            return f

        if args and callable(args[0]):
            return args[0]
        return wrap


_ENV_FLAG = "BERNSPEC_NO_NUMBA"

# int64 safety: walks compute x + t*c and neg_t_inv*x with |x| <= t, |c| <= N/2.
INT64_SAFE = 1 << 62


def _numba_disabled() -> bool:
    return os.environ.get(_ENV_FLAG, "").strip().lower() in ("1", "true", "yes", "on")


def kernel_backend() -> str:
    """Active backend name: 'numba' unless unavailable or disabled by env."""
    if _NUMBA_AVAILABLE and not _numba_disabled():
        return "numba"
    return "numpy"


def int64_safe(t: int, b: int, N: int) -> bool:
    """Whether all kernel intermediates fit int64 for this (t, b, N)."""
    return t * (N + 1) < INT64_SAFE and t * b < INT64_SAFE and b * N < INT64_SAFE


# ---------------------------------------------------------------------------
# cycle detection
# ---------------------------------------------------------------------------

_WHITE, _GRAY, _BLACK = 0, 1, 2


@njit(cache=True, nogil=True)
def _find_cycle_numba(t, b, N, neg_t_inv, x_lo, n_nodes, colors):  # pragma: no cover
    half = N // 2
    sentinel = x_lo - 1
    for s in range(n_nodes):
        if colors[s] != _WHITE:
            continue
        x = s + x_lo
        if x == 0:
            continue
        entry = sentinel
        cur = x
        while True:
            i = cur - x_lo
            col = colors[i]
            if col == _GRAY:
                entry = cur
                break
            if col == _BLACK:
                break
            colors[i] = _GRAY
            r = (neg_t_inv * cur) % N
            c = r if r <= half else r - N
            y = cur + t * c
            if y % b != 0:
                break
            cur = y // b
        cur = x
        while True:
            i = cur - x_lo
            if colors[i] != _GRAY:
                break
            colors[i] = _BLACK
            r = (neg_t_inv * cur) % N
            c = r if r <= half else r - N
            y = cur + t * c
            if y % b != 0:
                break
            cur = y // b
        if entry != sentinel:
            return entry
    return sentinel


def _successor_table(t, b, N, neg_t_inv, x_lo, n_nodes, dtype=np.int32):
    """Vectorized successor indices; n_nodes acts as the absorbing sentinel."""
    sent = n_nodes
    succ = np.full(n_nodes + 1, sent, dtype=dtype)
    half = N // 2
    chunk = 1 << 20
    for start in range(0, n_nodes, chunk):
        stop = min(start + chunk, n_nodes)
        x = np.arange(start, stop, dtype=np.int64) + x_lo
        r = (neg_t_inv * x) % N
        c = np.where(r <= half, r, r - N)
        y = x + t * c
        ok = (y % b == 0) & (x != 0)
        succ[start:stop] = np.where(ok, y // b - x_lo, sent).astype(dtype)
    return succ


def _doubled_successors(succ, n_nodes):
    """Pointer-double until every walk of length >= n_nodes is resolved."""
    sent = n_nodes
    buf = np.empty_like(succ)
    for _ in range(max(1, (max(n_nodes, 2) - 1).bit_length())):
        np.take(succ, succ, out=buf)
        succ, buf = buf, succ
        if not (succ[:n_nodes] != sent).any():
            return succ, False
    return succ, bool((succ[:n_nodes] != sent).any())

def _find_cycle_numpy(t, b, N, neg_t_inv, x_lo, n_nodes):
    succ = _successor_table(t, b, N, neg_t_inv, x_lo, n_nodes)
    final, any_alive = _doubled_successors(succ, n_nodes)
    if not any_alive:
        return None
    alive = final[:n_nodes] != n_nodes
    first = int(np.argmax(alive))
    # walks from the first surviving node end on its cycle
    return int(final[first]) + x_lo


def _find_cycle_python(t, b, N, neg_t_inv, x_lo, n_nodes):
    """Reference three-color chase; big-int safe, used beyond int64 range."""
    half = N // 2
    colors = bytearray(n_nodes)

    def step(x):
        r = (neg_t_inv * x) % N
        c = r if r <= half else r - N
        y = x + t * c
        if y % b != 0:
            return None
        return y // b

    for s in range(n_nodes):
        if colors[s] != _WHITE:
            continue
        x = s + x_lo
        if x == 0:
            continue
        entry = None
        cur = x
        while True:
            i = cur - x_lo
            if colors[i] == _GRAY:
                entry = cur
                break
            if colors[i] == _BLACK:
                break
            colors[i] = _GRAY
            nxt = step(cur)
            if nxt is None:
                break
            cur = nxt
        cur = x
        while colors[cur - x_lo] == _GRAY:
            colors[cur - x_lo] = _BLACK
            nxt = step(cur)
            if nxt is None:
                break
            cur = nxt
        if entry is not None:
            return entry
    return None


def find_cycle_node(t, b, N, neg_t_inv, x_lo, n_nodes, backend=None):
    """Some lattice value on the first-found cycle, or None when acyclic."""
    if n_nodes <= 0:
        return None
    be = backend or kernel_backend()
    if be == "python" or not int64_safe(t, b, N):
        return _find_cycle_python(t, b, N, neg_t_inv, x_lo, n_nodes)
    if be == "numba":
        colors = np.zeros(n_nodes, dtype=np.uint8)
        entry = _find_cycle_numba(t, b, N, neg_t_inv, x_lo, n_nodes, colors)
        return None if entry == x_lo - 1 else int(entry)
    if be == "numpy":
        return _find_cycle_numpy(t, b, N, neg_t_inv, x_lo, n_nodes)
    raise ValueError(f"unknown backend {be!r}")


def all_cycle_values(t, b, N, neg_t_inv, x_lo, n_nodes):
    """Every lattice value lying on some cycle (numpy path; test/survey scale)."""
    if n_nodes <= 0:
        return []
    if not int64_safe(t, b, N):
        raise ValueError("arguments exceed the int64-safe kernel range")
    succ = _successor_table(t, b, N, neg_t_inv, x_lo, n_nodes)
    final, any_alive = _doubled_successors(succ, n_nodes)
    if not any_alive:
        return []
    on_cycle = np.unique(final[:n_nodes][final[:n_nodes] != n_nodes])
    return [int(i) + x_lo for i in on_cycle]


# ---------------------------------------------------------------------------
# small-group certificate walk
# ---------------------------------------------------------------------------


@njit(cache=True, nogil=True)
def _group_walk_numba(b, t, q, budget):  # pragma: no cover
    cur = b % t
    l = 1
    while l <= budget:
        a = cur if 2 * cur <= t else cur - t
        aa = -a if a < 0 else a
        if (q == 2 and aa == 2) or (q >= 3 and 2 <= aa <= q - 1):
            return a, l
        if cur == 1:
            return 0, 0
        cur = cur * b % t
        l += 1
    return 0, 0


def _group_walk_numpy(b, t, q, budget):
    block = 1024
    pows = np.empty(block, dtype=np.int64)
    acc = 1
    for i in range(block):
        acc = acc * b % t
        pows[i] = acc
    base = 1
    l0 = 0
    while l0 < budget:
        vals = base * pows % t
        signed = np.where(2 * vals <= t, vals, vals - t)
        amag = np.abs(signed)
        fire = (amag == 2) if q == 2 else ((amag >= 2) & (amag <= q - 1))
        done = vals == 1
        stop = fire | done
        if stop.any():
            j = int(np.argmax(stop))
            if l0 + j + 1 > budget:
                return None
            if fire[j]:
                return int(signed[j]), l0 + j + 1
            return None
        base = int(vals[-1])
        l0 += block
    return None


def _group_walk_python(b, t, q, budget):
    cur = b % t
    l = 1
    while l <= budget:
        a = cur if 2 * cur <= t else cur - t
        aa = abs(a)
        if (q == 2 and aa == 2) or (q >= 3 and 2 <= aa <= q - 1):
            return a, l
        if cur == 1:
            return None
        cur = cur * b % t
        l += 1
    return None


def group_walk(b, t, q, budget, backend=None):
    """First signed power b**l mod t with the small-magnitude property.

    Returns (a, l) or None (full order walked without a hit, or budget
    exhausted -- either way there is no certificate).
    """
    if t <= 2:
        return None
    be = backend or kernel_backend()
    if be == "python" or not int64_safe(t, b, 2):
        return _group_walk_python(b, t, q, budget)
    if be == "numba":
        a, l = _group_walk_numba(b, t, q, budget)
        return (int(a), int(l)) if l else None
    if be == "numpy":
        if t * t >= INT64_SAFE:  # blocked products square the modulus
            return _group_walk_python(b, t, q, budget)
        return _group_walk_numpy(b, t, q, budget)
    raise ValueError(f"unknown backend {be!r}")
