"""Executable audits of the structural lemmas on concrete graphs.

Each checker recomputes everything from the graph itself (criticality,
2-factor existence, the minimum barrier) rather than trusting a caller,
so a bug elsewhere cannot mask a genuine violation.  A checker is
hypothesis-gated: when its hypothesis fails, the record reports that and
never claims a broken conclusion.  A failed conclusion on a satisfied
hypothesis always carries a witness; across the exhaustive small-graph
scans such a failure is a release blocker, since it would contradict
either a published lemma or this implementation.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .coloring import is_delta_critical
from .factors import (
    build_split_reduction,
    build_t_incidence,
    classify_components,
    find_two_factor,
    minimum_barrier,
)
from .graphs import Graph, bits, maximal_independent_sets, to_graph6
from .matching import max_bipartite_matching

VIZING_ADJACENCY = "vizing-adjacency"
T_INCIDENCE_MATCHING = "t-incidence-matching"
MINIMUM_BARRIER = "minimum-barrier"
SPLIT_REDUCTION = "split-reduction"


@dataclass
class AuditRecord:
    """Outcome of one lemma check on one graph."""

    lemma: str
    graph6: str
    hypothesis: bool
    conclusion: bool
    witness: dict | None = None
    details: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.conclusion and self.witness is None:
            raise ValueError("a failed conclusion must carry a witness")

    @property
    def violated(self) -> bool:
        return self.hypothesis and not self.conclusion

    def to_json(self) -> dict:
        return {
            "lemma": self.lemma,
            "graph6": self.graph6,
            "hypothesis": self.hypothesis,
            "conclusion": self.conclusion,
            "witness": self.witness,
            "details": self.details,
        }


def audit_vizing_adjacency(g: Graph) -> AuditRecord:
    """Vizing's Adjacency Lemma on a Delta-critical graph.

    For every edge xy, x must have at least Delta - deg(y) + 1 neighbours
    of maximum degree besides y.
    """
    g6 = to_graph6(g)
    if not is_delta_critical(g):
        return AuditRecord(VIZING_ADJACENCY, g6, False, True)
    delta = g.max_degree()
    heavy = g.max_degree_vertices()
    for x, y in g.edges():
        for a, b in ((x, y), (y, x)):
            have = (g.adj[a] & heavy & ~(1 << b)).bit_count()
            need = delta - g.degree(b) + 1
            if have < need:
                return AuditRecord(
                    VIZING_ADJACENCY, g6, True, False,
                    witness={"edge": [a, b], "max_degree_neighbors": have, "required": need})
    return AuditRecord(VIZING_ADJACENCY, g6, True, True)


def audit_t_incidence_matching(g: Graph, t: int) -> AuditRecord:
    """Degree inequality on the T-incidence graph, plus its matching claim.

    For a Delta-critical graph and independent T: every T-incidence edge
    xy satisfies deg(y) >= deg(x) + 1 - d0 + s(x), where d0 counts
    maximum-degree vertices inside T and s(x) the non-maximum-degree
    neighbours of x outside T; and whenever d0 <= 1 some matching
    saturates T.
    """
    if not g.is_independent(t):
        raise ValueError("T must be independent")
    g6 = to_graph6(g)
    if not is_delta_critical(g):
        return AuditRecord(T_INCIDENCE_MATCHING, g6, False, True,
                           details={"t": sorted(bits(t))})
    aux = build_t_incidence(g, t)
    delta0 = aux.max_degree_right
    details = {"t": sorted(bits(t)), "delta0": delta0}
    for x in bits(aux.graph.left):
        dx = aux.graph.degree(x)
        sx = aux.nondelta_counts[x]
        for y in bits(aux.graph.adj[x]):
            if aux.graph.degree(y) < dx + 1 - delta0 + sx:
                return AuditRecord(
                    T_INCIDENCE_MATCHING, g6, True, False,
                    witness={"edge": [x, y], "deg_y": aux.graph.degree(y),
                             "deg_x": dx, "sigma_x": sx, "delta0": delta0},
                    details=details)
    if delta0 <= 1:
        matching = max_bipartite_matching(aux.graph)
        if not matching.saturates(t):
            unmatched = t & ~matching.vertex_mask()
            return AuditRecord(
                T_INCIDENCE_MATCHING, g6, True, False,
                witness={"unsaturated": sorted(bits(unmatched))},
                details=details)
        details["matching_size"] = len(matching)
    return AuditRecord(T_INCIDENCE_MATCHING, g6, True, True, details=details)


def audit_minimum_barrier(g: Graph) -> AuditRecord:
    """Minimum-barrier structure on a graph without a 2-factor.

    Checks, for the minimum barrier (smallest |S u T|, then smallest h):
    T independent; even components send no edge to T; every odd
    component sends at most one edge to each T-vertex; for any v in T
    linked once to at least two odd components, each pendant component D
    at v has every internal vertex w with at least two edges into
    V(D) u {v}, and |V(D)| >= 2; and |T| > |S| + sum k|C_{2k+1}|.
    """
    g6 = to_graph6(g)
    if find_two_factor(g) is not None:
        return AuditRecord(MINIMUM_BARRIER, g6, False, True)
    barrier = minimum_barrier(g)
    if barrier is None:
        return AuditRecord(MINIMUM_BARRIER, g6, True, False,
                           witness={"error": "no barrier found for a graph without a 2-factor"})
    census = classify_components(g, barrier.s, barrier.t)
    details = {"barrier": barrier.to_json()}

    def fail(witness: dict) -> AuditRecord:
        witness["barrier"] = barrier.to_json()
        return AuditRecord(MINIMUM_BARRIER, g6, True, False, witness=witness, details=details)

    if not g.is_independent(barrier.t):
        return fail({"property": "t-independent"})
    for comp in census.even_components:
        if comp.edges_to_t:
            return fail({"property": "even-component-isolated-from-t",
                         "component": sorted(bits(comp.vertices))})
    for comp in census.odd_components:
        for v in bits(barrier.t):
            if (g.adj[v] & comp.vertices).bit_count() > 1:
                return fail({"property": "at-most-one-edge-per-odd-component",
                             "vertex": v, "component": sorted(bits(comp.vertices))})
    for v in bits(barrier.t):
        if len(census.linked_once(v)) < 2:
            continue
        for comp in census.pendant_at(v):
            if comp.size < 2:
                return fail({"property": "pendant-component-size",
                             "vertex": v, "component": sorted(bits(comp.vertices))})
            for w in bits(comp.vertices):
                reach = (comp.vertices & ~(1 << w)) | (1 << v)
                if (g.adj[w] & reach).bit_count() < 2:
                    return fail({"property": "pendant-internal-degree",
                                 "vertex": v, "component": sorted(bits(comp.vertices)),
                                 "witness_vertex": w})
    t_size = barrier.t.bit_count()
    bound = barrier.s.bit_count() + census.split_weight()
    if not t_size > bound:
        return fail({"property": "t-exceeds-s-plus-split-weight",
                     "t_size": t_size, "bound": bound})
    return AuditRecord(MINIMUM_BARRIER, g6, True, True, details=details)


def audit_split_reduction(g: Graph) -> AuditRecord:
    """Consistency of the T-incidence graph and the split reduction.

    On the minimum barrier of a graph without a 2-factor: right degrees
    of the T-incidence graph equal graph degrees; the graph vertices
    kept on the left of the split reduction are exactly S' (S plus the
    singleton components with three T-edges) and keep their T-incidence
    degrees; right degrees drop by exactly the number of pendant
    components at the vertex; each split family has degrees 3, 2, ..., 2;
    the left side has size |S| + sum k|C_{2k+1}|; and the components
    whose pendant partner meets another pendant component never occur
    alone.
    """
    g6 = to_graph6(g)
    if find_two_factor(g) is not None:
        return AuditRecord(SPLIT_REDUCTION, g6, False, True)
    barrier = minimum_barrier(g)
    if barrier is None:
        return AuditRecord(SPLIT_REDUCTION, g6, True, False,
                           witness={"error": "no barrier found for a graph without a 2-factor"})
    details = {"barrier": barrier.to_json()}

    def fail(witness: dict) -> AuditRecord:
        witness["barrier"] = barrier.to_json()
        return AuditRecord(SPLIT_REDUCTION, g6, True, False, witness=witness, details=details)

    if not g.is_independent(barrier.t):
        return fail({"property": "t-independent"})
    census = classify_components(g, barrier.s, barrier.t)
    incidence = build_t_incidence(g, barrier.t)
    reduction = build_split_reduction(g, barrier.s, barrier.t)

    for y in bits(barrier.t):
        if incidence.graph.degree(y) != g.degree(y):
            return fail({"property": "t-incidence-right-degree", "vertex": y})

    kept = {v for v, i in reduction.vertex_to_bip.items()
            if reduction.graph.left >> i & 1}
    singles = 0
    for comp in census.with_t_edges(3):
        if comp.size == 1:
            singles |= comp.vertices
    s_prime = barrier.s | singles
    if kept != set(bits(s_prime)) or reduction.s_prime != s_prime:
        return fail({"property": "left-graph-vertices-are-s-prime",
                     "kept": sorted(kept), "s_prime": sorted(bits(s_prime))})

    for x in bits(s_prime):
        if reduction.graph.degree(reduction.vertex_to_bip[x]) != incidence.graph.degree(x):
            return fail({"property": "s-prime-degree-preserved", "vertex": x})

    assert reduction.pendant_counts is not None
    for y in bits(barrier.t):
        want = incidence.graph.degree(y) - len(census.pendant_at(y))
        if reduction.graph.degree(reduction.vertex_to_bip[y]) != want:
            return fail({"property": "right-degree-drops-by-pendants", "vertex": y})
        if reduction.pendant_counts[y] != len(census.pendant_at(y)):
            return fail({"property": "pendant-count-bookkeeping", "vertex": y})

    for comp_mask, family in reduction.families:
        degs = [reduction.graph.degree(i) for i in family]
        if degs != [3] + [2] * (len(family) - 1):
            return fail({"property": "split-degrees-3-2-2",
                         "component": sorted(bits(comp_mask)), "degrees": degs})
    left_size = reduction.graph.left.bit_count()
    want_left = barrier.s.bit_count() + census.split_weight()
    if left_size != want_left:
        return fail({"property": "left-size-s-plus-split-weight",
                     "left": left_size, "expected": want_left})

    pendants = census.pendant_components()
    pendant_union = 0
    for comp in pendants:
        pendant_union |= comp.vertices
    crowded = []  # pendant components whose partner vertex sees >= 2 pendant components
    for comp in pendants:
        partner = None
        for y in bits(barrier.t):
            if g.adj[y] & comp.vertices:
                partner = y
                break
        if partner is not None and (g.adj[partner] & pendant_union).bit_count() >= 2:
            crowded.append(comp)
    if len(crowded) == 1:
        return fail({"property": "crowded-pendants-never-alone",
                     "component": sorted(bits(crowded[0].vertices))})

    # diagnostics: partner-based pendant split and T partition
    lonely_singles = sum(1 for c in pendants if c not in crowded and c.size == 1)
    lonely_multi = sum(1 for c in pendants if c not in crowded and c.size >= 2)
    lonely_single_union = 0
    lonely_multi_union = 0
    crowded_union = 0
    for c in pendants:
        if c in crowded:
            crowded_union |= c.vertices
        elif c.size == 1:
            lonely_single_union |= c.vertices
        else:
            lonely_multi_union |= c.vertices
    t0 = t11 = t12 = t2 = 0
    for y in bits(barrier.t):
        if not g.adj[y] & pendant_union:
            t0 += 1
        if (g.adj[y] & lonely_single_union).bit_count() == 1:
            t11 += 1
        if (g.adj[y] & lonely_multi_union).bit_count() == 1:
            t12 += 1
        if (g.adj[y] & crowded_union).bit_count() >= 2:
            t2 += 1
    details["pendant_split"] = {
        "single_lonely": lonely_singles,
        "multi_lonely": lonely_multi,
        "crowded": len(crowded),
        "large_multiply_linked": len([c for c in census.with_t_edges_at_least(3) if c.size >= 2]),
    }
    details["t_partition"] = {"t0": t0, "t1_single": t11, "t1_multi": t12, "t2": t2}
    return AuditRecord(SPLIT_REDUCTION, g6, True, True, details=details)


def run_all(g: Graph) -> list[AuditRecord]:
    """Every applicable audit: adjacency lemma, T-incidence matching over
    all maximal independent sets, and the two barrier audits."""
    records = [audit_vizing_adjacency(g)]
    critical = records[0].hypothesis
    if critical:
        for t in maximal_independent_sets(g):
            records.append(audit_t_incidence_matching(g, t))
    records.append(audit_minimum_barrier(g))
    records.append(audit_split_reduction(g))
    return records
