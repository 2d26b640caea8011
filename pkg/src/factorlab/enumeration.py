"""Connected-graph enumeration up to isomorphism and the conjecture scan.

Graphs on n vertices are generated by augmenting every (n-1)-vertex
graph with one new vertex over all neighbour masks, rejecting isomorphs
on packed canonical keys (the canonical adjacency bit string fits one
integer at this scale); keys decode straight back to the canonical
representatives.  For the final level only masks meeting every
component of the parent are used, which yields exactly the connected
classes.  The scan filters the connected classes down to the
Delta-critical ones and audits each against the independence bound,
2-factor existence, and the structural lemmas.

Per-graph analysis can fan out over processes (FACTORLAB_THREADS or the
``jobs`` argument); results are merged in canonical order, so reports
are byte-identical regardless of parallelism.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from typing import Iterator

from ._canon64 import canon_key, key_to_graph
from .audits import audit_minimum_barrier, audit_split_reduction, audit_vizing_adjacency
from .coloring import chromatic_index, is_delta_critical
from .factors import find_two_factor
from .graphs import (
    CapabilityError,
    Graph,
    components_within,
    independence_number,
    parse_graph6,
    to_graph6,
)

CONNECTED_MAX_N = 9
DELTA_CRITICAL_MAX_N = 8
SCAN_MAX_N = 8

_ALL_CACHE: dict[int, list[int]] = {}
_CONNECTED_CACHE: dict[int, list[bytes]] = {}


def default_jobs() -> int:
    env = os.environ.get("FACTORLAB_THREADS")
    if env:
        return max(1, int(env))
    return 1


def _augment_keys(n_parent: int, parent_key: int, connected_only: bool) -> set[int]:
    """Canonical keys of all one-vertex augmentations of one parent."""
    parent = key_to_graph(n_parent, parent_key)
    n = n_parent + 1
    bit = 1 << n_parent
    comps = components_within(parent, parent.vertex_mask)
    out: set[int] = set()
    for mask in range(1 << n_parent):
        if connected_only and any(not mask & c for c in comps):
            continue
        adj = tuple(row | bit if mask >> v & 1 else row
                    for v, row in enumerate(parent.adj)) + (mask,)
        out.add(canon_key(n, adj))
    return out


def _augment_chunk(args: tuple[int, list[int], bool]) -> set[int]:
    n_parent, parents, connected_only = args
    out: set[int] = set()
    for parent in parents:
        out |= _augment_keys(n_parent, parent, connected_only)
    return out


def _parallel_union(n_parent: int, parents: list[int], connected_only: bool,
                    jobs: int) -> set[int]:
    if jobs <= 1 or len(parents) < 4 * jobs:
        return _augment_chunk((n_parent, parents, connected_only))
    import multiprocessing as mp

    chunks = [parents[i::jobs * 4] for i in range(jobs * 4)]
    out: set[int] = set()
    with mp.get_context("fork").Pool(jobs) as pool:
        for part in pool.imap_unordered(
                _augment_chunk, [(n_parent, c, connected_only) for c in chunks if c]):
            out |= part
    return out


def _all_graphs(n: int, jobs: int = 1) -> list[int]:
    """Canonical keys of all graphs (connected or not) on n vertices."""
    if n in _ALL_CACHE:
        return _ALL_CACHE[n]
    if n == 0:
        keys = [0]
    else:
        parents = _all_graphs(n - 1, jobs)
        keys = sorted(_parallel_union(n - 1, parents, False, jobs))
    _ALL_CACHE[n] = keys
    return keys


def connected_keys(n: int, jobs: int | None = None) -> list[bytes]:
    """Sorted canonical graph6 keys of the connected classes on n vertices."""
    if not 1 <= n <= CONNECTED_MAX_N:
        raise CapabilityError(f"connected enumeration is rated for 1 <= n <= {CONNECTED_MAX_N}")
    if n in _CONNECTED_CACHE:
        return _CONNECTED_CACHE[n]
    jobs = default_jobs() if jobs is None else jobs
    if n == 1:
        ints = [0]
    else:
        parents = _all_graphs(n - 1, jobs)
        ints = sorted(_parallel_union(n - 1, parents, True, jobs))
    keys = [to_graph6(key_to_graph(n, key)).encode("ascii") for key in ints]
    _CONNECTED_CACHE[n] = keys
    return keys


def enumerate_connected(n: int, jobs: int | None = None) -> Iterator[Graph]:
    """One canonical representative per connected isomorphism class."""
    for key in connected_keys(n, jobs):
        yield parse_graph6(key.decode("ascii"))


def enumerate_delta_critical(n: int, jobs: int | None = None) -> Iterator[Graph]:
    """Connected classes filtered down to the Delta-critical ones."""
    if n > DELTA_CRITICAL_MAX_N:
        raise CapabilityError(
            f"Delta-criticality filtering is rated for n <= {DELTA_CRITICAL_MAX_N}")
    for g in enumerate_connected(n, jobs):
        if is_delta_critical(g):
            yield g


# ---------------------------------------------------------------------------
# conjecture scan

@dataclass
class ScanReport:
    """Aggregated result of the Delta-critical conjecture scan."""

    n_max: int
    delta_ge_half_only: bool
    counts: dict
    records: list[dict] = field(default_factory=list)
    counterexamples: list[dict] = field(default_factory=list)

    def summary_json(self) -> dict:
        return {
            "schema": "factorlab/1",
            "kind": "scan-summary",
            "n_max": self.n_max,
            "delta_ge_half_only": self.delta_ge_half_only,
            "counts": self.counts,
            "counterexamples": self.counterexamples,
        }


def _analyze_connected(g6: str) -> dict | None:
    """Per-graph record for the scan; None when not Delta-critical."""
    g = parse_graph6(g6)
    if not is_delta_critical(g):
        return None
    n = g.n
    delta = g.max_degree()
    alpha, _ = independence_number(g)
    factor = find_two_factor(g)
    audits = {"vizing-adjacency": audit_vizing_adjacency(g)}
    if factor is None:
        audits["minimum-barrier"] = audit_minimum_barrier(g)
        audits["split-reduction"] = audit_split_reduction(g)
    reasons = []
    if 2 * alpha > n:
        reasons.append("independence-exceeds-half")
    if factor is None:
        reasons.append("no-two-factor")
    for name, rec in audits.items():
        if rec.violated:
            reasons.append(f"audit:{name}")
    return {
        "graph6": g6,
        "n": n,
        "delta": delta,
        "chi": chromatic_index(g),
        "critical": True,
        "delta_critical": True,
        "delta_ge_half": 2 * delta >= n,
        "alpha": alpha,
        "alpha_le_half": 2 * alpha <= n,
        "has_two_factor": factor is not None,
        "audits": {name: ("pass" if not rec.violated else "fail") for name, rec in audits.items()},
        "counterexample": reasons,
    }


def _analyze_chunk(g6s: list[str]) -> list[dict | None]:
    return [_analyze_connected(s) for s in g6s]


def scan_conjectures(n_max: int, delta_ge_half_only: bool = False,
                     out_path: str | None = None, jobs: int | None = None) -> ScanReport:
    """Audit every Delta-critical graph with at most ``n_max`` vertices.

    Records the independence number against n/2 and 2-factor existence,
    runs the adjacency-lemma audit, and runs the barrier audits whenever
    a 2-factor is missing.  With ``delta_ge_half_only`` the scan keeps
    only graphs with maximum degree at least n/2 (the theorem regime);
    otherwise it is an empirical record of the open conjectures.

    ``out_path`` persists one JSON line per Delta-critical graph; an
    existing file is reused to skip already-analyzed graphs, and the file
    is rewritten in canonical order so repeated runs agree byte-for-byte.
    """
    if n_max > SCAN_MAX_N:
        raise CapabilityError(f"conjecture scan is rated for n_max <= {SCAN_MAX_N}")
    jobs = default_jobs() if jobs is None else jobs

    done: dict[str, dict] = {}
    if out_path and os.path.exists(out_path):
        with open(out_path, "r", encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if line:
                    rec = json.loads(line)
                    done[rec["graph6"]] = rec

    counts_by_n: dict[str, dict] = {}
    records: list[dict] = []
    for n in range(1, n_max + 1):
        keys = [k.decode("ascii") for k in connected_keys(n, jobs)]
        pending = [k for k in keys if k not in done]
        fresh: dict[str, dict | None] = {}
        if jobs > 1 and len(pending) > 8 * jobs:
            import multiprocessing as mp

            chunks = [pending[i::jobs * 4] for i in range(jobs * 4)]
            chunks = [c for c in chunks if c]
            with mp.get_context("fork").Pool(jobs) as pool:
                for chunk, results in zip(chunks, pool.map(_analyze_chunk, chunks)):
                    fresh.update(zip(chunk, results))
        else:
            fresh.update(zip(pending, _analyze_chunk(pending)))
        n_records = []
        for key in keys:
            rec = done.get(key) if key in done else fresh.get(key)
            if rec is not None:
                n_records.append(rec)
        critical_count = len(n_records)
        large_count = sum(1 for r in n_records if r["delta_ge_half"])
        if delta_ge_half_only:
            n_records = [r for r in n_records if r["delta_ge_half"]]
        records.extend(n_records)
        counts_by_n[str(n)] = {
            "connected": len(keys),
            "delta_critical": critical_count,
            "delta_critical_delta_ge_half": large_count,
        }

    connected_total = sum(c["connected"] for c in counts_by_n.values())
    counts = {
        "enumerated": connected_total,  # the scan enumerates connected classes
        "connected": connected_total,
        "delta_critical": sum(c["delta_critical"] for c in counts_by_n.values()),
        "delta_critical_delta_ge_half": sum(
            c["delta_critical_delta_ge_half"] for c in counts_by_n.values()),
        "by_n": counts_by_n,
    }
    counterexamples = [
        {"graph6": r["graph6"], "reasons": r["counterexample"]}
        for r in records if r["counterexample"]
    ]
    report = ScanReport(n_max, delta_ge_half_only, counts, records, counterexamples)
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            for rec in records:
                fh.write(json.dumps(rec, sort_keys=True, separators=(",", ":")) + "\n")
    return report
