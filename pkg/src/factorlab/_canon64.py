"""Packed canonical keys for graphs on at most 11 vertices.

The canonical upper-triangle bit string of an 11-vertex graph has 55
bits, so it fits one integer; the enumeration layer dedups isomorphism
classes on these keys instead of byte strings.  The kernel mirrors the
reference implementation in :mod:`factorlab.graphs` exactly - same
colour refinement (degree-prefixed signatures), same block order, same
column-wise minimisation - so key bits and ``canonical_form`` bytes
always describe the same labelling; a differential test pins that.
Numba-jitted when available, plain Python otherwise.
"""

from __future__ import annotations

import numpy as np

from ._scan import _POP16

CANON64_MAX_N = 11


def _canon_impl(n, adj, pop16):  # pragma: no cover - exercised via canon_key()
    if n <= 1:
        return np.int64(0)

    # --- colour refinement: signature (deg, colour, sorted nbr colours),
    # packed base-16 with a length prefix (order-identical to the tuple)
    colors = np.empty(n, dtype=np.int64)
    for v in range(n):
        colors[v] = pop16[adj[v] & 0xFFFF]
    sig = np.empty(n, dtype=np.int64)
    nbuf = np.empty(n, dtype=np.int64)
    newc = np.empty(n, dtype=np.int64)
    for _round in range(n):
        for v in range(n):
            row = adj[v]
            cnt = 0
            for u in range(n):
                if row >> u & 1:
                    nbuf[cnt] = colors[u]
                    cnt += 1
            for i in range(1, cnt):
                key = nbuf[i]
                j = i - 1
                while j >= 0 and nbuf[j] > key:
                    nbuf[j + 1] = nbuf[j]
                    j -= 1
                nbuf[j + 1] = key
            s = np.int64(cnt)
            s = s * 16 + colors[v]
            for i in range(cnt):
                s = s * 16 + nbuf[i]
            sig[v] = s
        order = np.argsort(sig)
        rank = np.int64(0)
        prev = sig[order[0]]
        newc[order[0]] = 0
        for i in range(1, n):
            if sig[order[i]] != prev:
                rank += 1
                prev = sig[order[i]]
            newc[order[i]] = rank
        same = True
        for v in range(n):
            if newc[v] != colors[v]:
                same = False
        if same:
            break
        for v in range(n):
            colors[v] = newc[v]

    # position d draws from the colour class depth_color[d]
    depth_color = np.empty(n, dtype=np.int64)
    pos = 0
    for c in range(n):
        for v in range(n):
            if colors[v] == c:
                depth_color[pos] = c
                pos += 1

    # --- iterative blocked DFS minimising the column bit string
    placed = np.zeros(n, dtype=np.int64)
    colsv = np.zeros(n, dtype=np.int64)
    cand_v = np.zeros((n, n), dtype=np.int64)
    cand_col = np.zeros((n, n), dtype=np.int64)
    cand_cnt = np.zeros(n, dtype=np.int64)
    cand_ptr = np.zeros(n, dtype=np.int64)
    at_entry = np.zeros(n, dtype=np.int64)
    prefix_eq = np.zeros(n, dtype=np.int64)
    best_cols = np.zeros(n, dtype=np.int64)
    have_best = False
    version = np.int64(0)
    used = np.int64(0)

    def_depth = 0  # placeholder to keep locals typed before the loop
    depth = def_depth

    # push candidates for depth 0
    def_build = True
    while True:
        if def_build:
            # build candidate list at current depth
            cnt = 0
            want = depth_color[depth]
            for v in range(n):
                if colors[v] != want or used >> v & 1:
                    continue
                row = adj[v]
                col = np.int64(0)
                for i in range(depth):
                    col = col << 1 | (row >> placed[i] & 1)
                skip = False
                for j in range(cnt):
                    if cand_col[depth, j] == col:
                        u = cand_v[depth, j]
                        if adj[u] & ~(np.int64(1) << v) == adj[v] & ~(np.int64(1) << u):
                            skip = True
                            break
                if skip:
                    continue
                # insertion keeping cols ascending, vertex order stable
                k = cnt
                while k > 0 and cand_col[depth, k - 1] > col:
                    cand_col[depth, k] = cand_col[depth, k - 1]
                    cand_v[depth, k] = cand_v[depth, k - 1]
                    k -= 1
                cand_col[depth, k] = col
                cand_v[depth, k] = v
                cnt += 1
            cand_cnt[depth] = cnt
            cand_ptr[depth] = 0
            at_entry[depth] = version
            def_build = False

        advanced = False
        while cand_ptr[depth] < cand_cnt[depth]:
            i = cand_ptr[depth]
            cand_ptr[depth] += 1
            col = cand_col[depth, i]
            v = cand_v[depth, i]
            peq = prefix_eq[depth] != 0 or version != at_entry[depth]
            if peq and have_best and col > best_cols[depth]:
                cand_ptr[depth] = cand_cnt[depth]
                break
            child_eq = np.int64(0)
            if peq and have_best and col == best_cols[depth]:
                child_eq = np.int64(1)
            placed[depth] = v
            colsv[depth] = col
            if depth + 1 == n:
                better = not have_best
                if not better:
                    for d in range(n):
                        if colsv[d] != best_cols[d]:
                            better = colsv[d] < best_cols[d]
                            break
                if better:
                    for d in range(n):
                        best_cols[d] = colsv[d]
                    have_best = True
                    version += 1
                continue
            used |= np.int64(1) << v
            prefix_eq[depth + 1] = child_eq
            depth += 1
            def_build = True
            advanced = True
            break
        if advanced:
            continue
        depth -= 1
        if depth < 0:
            break
        used &= ~(np.int64(1) << placed[depth])

    key = np.int64(0)
    for d in range(1, n):
        key = key << d | best_cols[d]
    return key


_compiled = None


def _kernel():
    global _compiled
    if _compiled is None:
        try:
            from numba import njit

            _compiled = njit(cache=True)(_canon_impl)
        except ImportError:  # pragma: no cover
            _compiled = _canon_impl
    return _compiled


def canon_key(n: int, adj) -> int:
    """Canonical key of the graph; equal keys iff isomorphic (n <= 11)."""
    if n > CANON64_MAX_N:
        raise ValueError(f"packed canonical keys need n <= {CANON64_MAX_N}")
    rows = np.array(adj, dtype=np.int64) if len(adj) else np.zeros(1, dtype=np.int64)
    return int(_kernel()(np.int64(n), rows, _POP16))


def key_to_bits(n: int, key: int) -> list[int]:
    """Unpack a canonical key into column-order upper-triangle bits."""
    total = n * (n - 1) // 2
    return [key >> (total - 1 - i) & 1 for i in range(total)]


def key_to_graph(n: int, key: int):
    """Rebuild the canonical representative graph from its packed key."""
    from .graphs import Graph

    adj = [0] * n
    i = 0
    for col in range(1, n):
        for row in range(col):
            if key >> (n * (n - 1) // 2 - 1 - i) & 1:
                adj[row] |= 1 << col
                adj[col] |= 1 << row
            i += 1
    return Graph(n, tuple(adj))
