"""Exhaustive deficiency scan over all disjoint (S, T) vertex-set pairs.

The kernel walks every W = S-union-T (2^n masks); the components of
G - W depend on W alone, so each of the 2^|W| splits of W into (S, T)
is then evaluated in Gray-code order with O(1) incremental updates of

    delta(S, T) = 2|S| + sum_{v in T} deg_{G-S}(v) - 2|T| - h(S, T),

where h counts components C of G - W with an odd number of edges into
T.  Total work is Theta(3^n) split evaluations plus 2^n component
computations; the kernel is numba-jitted when numba is available and
runs unmodified in pure Python otherwise (same iteration order, so
results are bit-identical either way).

Modes: FIRST returns the first barrier (delta <= -2) in scan order
(W ascending, Gray splits); MINIMUM scans |W| ascending and returns,
among barriers of minimum |S u T|, the one minimising (h, S, T).
"""

from __future__ import annotations

import numpy as np

MODE_FIRST = 0
MODE_MINIMUM = 1

_POP16 = np.array([bin(i).count("1") for i in range(1 << 16)], dtype=np.int64)


def _scan_impl(n, adj, mode, pop16):  # pragma: no cover - exercised via scan()
    full = (np.int64(1) << n) - 1
    comps = np.zeros(n + 1, dtype=np.int64)
    wverts = np.zeros(n + 1, dtype=np.int64)
    deg_u = np.zeros(n + 1, dtype=np.int64)
    parvec = np.zeros(n + 1, dtype=np.int64)

    best_found = np.int64(0)
    best_s = np.int64(0)
    best_t = np.int64(0)
    best_delta = np.int64(0)
    best_h = np.int64(0)

    for size in range(0, n + 1):
        for w in range(0, full + 1):
            W = np.int64(w)
            k = pop16[W & 0xFFFF] + pop16[(W >> 16) & 0xFFFF]
            if mode == MODE_MINIMUM and k != size:
                continue
            if mode == MODE_FIRST and size > 0:
                continue

            # components of G - W
            u_mask = full & ~W
            m = 0
            rem = u_mask
            while rem:
                low = rem & -rem
                comp = np.int64(0)
                frontier = low
                while frontier:
                    comp |= frontier
                    nxt = np.int64(0)
                    for v in range(n):
                        if frontier >> v & 1:
                            nxt |= adj[v]
                    frontier = nxt & rem & ~comp
                comps[m] = comp
                m += 1
                rem &= ~comp

            kk = 0
            for v in range(n):
                if W >> v & 1:
                    wverts[kk] = v
                    row = adj[v]
                    deg_u[kk] = pop16[(row & u_mask) & 0xFFFF] + pop16[((row & u_mask) >> 16) & 0xFFFF]
                    pv = np.int64(0)
                    for j in range(m):
                        c = row & comps[j]
                        if (pop16[c & 0xFFFF] + pop16[(c >> 16) & 0xFFFF]) & 1:
                            pv |= np.int64(1) << j
                    parvec[kk] = pv
                    kk += 1

            # Gray walk over T-subsets of W (the empty T never yields delta < 0)
            t_mask = np.int64(0)
            t_size = np.int64(0)
            sum_deg_u = np.int64(0)
            e_tt = np.int64(0)
            par = np.int64(0)
            steps = np.int64(1) << kk
            for step in range(1, steps):
                j = 0
                while not step >> j & 1:
                    j += 1
                v = wverts[j]
                vbit = np.int64(1) << v
                row = adj[v]
                if t_mask & vbit:
                    t_mask &= ~vbit
                    inner = row & t_mask
                    e_tt -= pop16[inner & 0xFFFF] + pop16[(inner >> 16) & 0xFFFF]
                    t_size -= 1
                    sum_deg_u -= deg_u[j]
                else:
                    inner = row & t_mask
                    e_tt += pop16[inner & 0xFFFF] + pop16[(inner >> 16) & 0xFFFF]
                    t_mask |= vbit
                    t_size += 1
                    sum_deg_u += deg_u[j]
                par ^= parvec[j]
                h = pop16[par & 0xFFFF] + pop16[(par >> 16) & 0xFFFF]
                delta = 2 * (kk - t_size) - 2 * t_size + sum_deg_u + 2 * e_tt - h
                if delta <= -2:
                    s_mask = W & ~t_mask
                    if mode == MODE_FIRST:
                        return np.int64(1), s_mask, t_mask, delta, h
                    better = best_found == 0
                    if not better and h < best_h:
                        better = True
                    elif not better and h == best_h:
                        if s_mask < best_s or (s_mask == best_s and t_mask < best_t):
                            better = True
                    if better:
                        best_found = np.int64(1)
                        best_s = s_mask
                        best_t = t_mask
                        best_delta = delta
                        best_h = h
        if mode == MODE_FIRST or best_found != 0:
            break
    return best_found, best_s, best_t, best_delta, best_h


_compiled = None


def _kernel():
    global _compiled
    if _compiled is None:
        try:
            from numba import njit

            _compiled = njit(cache=True)(_scan_impl)
        except ImportError:  # pragma: no cover
            _compiled = _scan_impl
    return _compiled


def scan(n: int, adj, mode: int) -> tuple[int, int, int, int, int]:
    """Run the (S, T) scan; returns (found, s_mask, t_mask, delta, h)."""
    rows = np.array(adj, dtype=np.int64) if len(adj) else np.zeros(1, dtype=np.int64)
    found, s, t, delta, h = _kernel()(np.int64(n), rows, np.int64(mode), _POP16)
    return int(found), int(s), int(t), int(delta), int(h)
