"""Tutte's 2-factor criterion, both directions, plus the barrier taxonomy.

The constructive direction reduces 2-factor existence to perfect
matching via the classical vertex gadget; the obstruction direction
searches for a barrier, a disjoint pair (S, T) whose deficiency

    delta(S, T) = 2|S| + sum_{v in T} deg_{G-S}(v) - 2|T| - h(S, T)

is at most -2 (h counts components of G - (S u T) with an odd number of
edges into T).  A graph has a 2-factor exactly when no barrier exists.
On top of that sit the component census around a barrier and two
auxiliary bipartite graphs: the T-incidence graph (drop all edges not
meeting the independent set T) and the split reduction (drop even and
singly-linked components, contract each remaining odd component, and
split it into vertices of degree 3, 2, ..., 2).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import _scan
from .graphs import CapabilityError, Graph, bits, components_within, mask_of
from .matching import BipartiteGraph, Matching, max_matching_general


class InfeasibleGadget(Exception):
    """A vertex of degree < 2 makes a 2-factor impossible."""

    def __init__(self, vertex: int):
        super().__init__(f"vertex {vertex} has degree < 2, so no 2-factor exists")
        self.vertex = vertex


# ---------------------------------------------------------------------------
# certificates

@dataclass(frozen=True)
class Barrier:
    """A disjoint pair (S, T) with deficiency <= -2, plus its census size.

    ``s`` and ``t`` are vertex masks; ``deficiency`` and ``h`` are stored
    as found and re-derivable from the graph via :func:`deficiency_delta`.
    """

    s: int
    t: int
    deficiency: int
    h: int

    def __post_init__(self):
        if self.s & self.t:
            raise ValueError("S and T overlap")
        if self.deficiency % 2:
            raise ValueError("deficiency must be even")
        if self.deficiency > -2:
            raise ValueError("a barrier needs deficiency <= -2")

    def size(self) -> int:
        return (self.s | self.t).bit_count()

    def recheck(self, g: Graph) -> bool:
        """Recompute the deficiency on ``g`` and compare with the record."""
        if (self.s | self.t) & ~g.vertex_mask:
            return False
        census = classify_components(g, self.s, self.t)
        delta = deficiency_delta(g, self.s, self.t)
        return delta == self.deficiency and census.odd_count == self.h and delta <= -2

    def to_json(self) -> dict:
        return {
            "s": sorted(bits(self.s)),
            "t": sorted(bits(self.t)),
            "deficiency": self.deficiency,
            "h": self.h,
        }

    @staticmethod
    def from_json(data: dict) -> "Barrier":
        return Barrier(mask_of(data["s"]), mask_of(data["t"]), data["deficiency"], data["h"])


@dataclass(frozen=True)
class TwoFactor:
    """A spanning 2-regular subgraph, stored as its edge set."""

    edges: frozenset[tuple[int, int]]

    def is_valid(self, g: Graph) -> bool:
        deg = [0] * g.n
        for u, v in self.edges:
            if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
                return False
            deg[u] += 1
            deg[v] += 1
        return all(d == 2 for d in deg)

    def to_json(self) -> dict:
        return {"edges": [list(e) for e in sorted(self.edges)]}

    @staticmethod
    def from_json(data: dict) -> "TwoFactor":
        return TwoFactor(frozenset((min(u, v), max(u, v)) for u, v in data["edges"]))


# ---------------------------------------------------------------------------
# deficiency and component census

def deficiency_delta(g: Graph, s: int, t: int) -> int:
    """delta(S, T); always even, and >= 0 for every pair iff a 2-factor exists."""
    if s & t:
        raise ValueError("S and T must be disjoint")
    if (s | t) & ~g.vertex_mask:
        raise ValueError("S or T has vertices outside the graph")
    h = 0
    for comp in components_within(g, g.vertex_mask & ~(s | t)):
        if g.edges_between(comp, t) & 1:
            h += 1
    deg_sum = sum((g.adj[v] & ~s).bit_count() for v in bits(t))
    return 2 * s.bit_count() + deg_sum - 2 * t.bit_count() - h


@dataclass(frozen=True)
class Component:
    """One component of G - (S u T) with its edge count into T."""

    vertices: int
    edges_to_t: int

    @property
    def odd(self) -> bool:
        return bool(self.edges_to_t & 1)

    @property
    def size(self) -> int:
        return self.vertices.bit_count()


@dataclass(frozen=True)
class ComponentClassification:
    """Census of G - (S u T): components, parities, and per-vertex views."""

    graph: Graph
    s: int
    t: int
    components: tuple[Component, ...]

    @property
    def odd_components(self) -> tuple[Component, ...]:
        return tuple(c for c in self.components if c.odd)

    @property
    def even_components(self) -> tuple[Component, ...]:
        return tuple(c for c in self.components if not c.odd)

    @property
    def odd_count(self) -> int:
        """h(S, T): the number of odd components."""
        return len(self.odd_components)

    def with_t_edges(self, k: int) -> tuple[Component, ...]:
        """Odd components sending exactly ``k`` edges into T."""
        return tuple(c for c in self.odd_components if c.edges_to_t == k)

    def with_t_edges_at_least(self, k: int) -> tuple[Component, ...]:
        return tuple(c for c in self.odd_components if c.edges_to_t >= k)

    def linked_once(self, v: int) -> tuple[Component, ...]:
        """Odd components with exactly one edge to vertex ``v``."""
        return tuple(c for c in self.odd_components
                     if (self.graph.adj[v] & c.vertices).bit_count() == 1)

    def pendant_components(self) -> tuple[Component, ...]:
        """Odd components attached to T by a single edge."""
        return self.with_t_edges(1)

    def pendant_at(self, v: int) -> tuple[Component, ...]:
        """Pendant components whose single T-edge lands on ``v``."""
        return tuple(c for c in self.pendant_components()
                     if (self.graph.adj[v] & c.vertices).bit_count() == 1)

    def split_weight(self) -> int:
        """sum over odd components with 2k+1 >= 3 T-edges of k."""
        return sum((c.edges_to_t - 1) // 2 for c in self.with_t_edges_at_least(3))


def classify_components(g: Graph, s: int, t: int) -> ComponentClassification:
    if s & t:
        raise ValueError("S and T must be disjoint")
    comps = []
    for mask in components_within(g, g.vertex_mask & ~(s | t)):
        comps.append(Component(mask, g.edges_between(mask, t)))
    return ComponentClassification(g, s, t, tuple(comps))


def degree_deficiency(g: Graph) -> tuple[int, bool]:
    """sum(maxdeg - deg(v)) and whether the graph is overfull.

    Overfull means odd order with degree deficiency strictly below the
    maximum degree; overfull graphs are class 2.
    """
    delta = g.max_degree()
    total = sum(delta - d for d in g.degrees())
    return total, bool(g.n % 2 == 1 and total < delta)


# ---------------------------------------------------------------------------
# constructive direction: gadget reduction to perfect matching

def build_factor_gadget(g: Graph) -> tuple[Graph, dict[tuple[int, int], tuple[int, int]]]:
    """Reduce 2-factor existence to perfect matching.

    Every vertex v becomes deg(v) port nodes (one per incident edge) plus
    deg(v) - 2 filler nodes joined completely to the ports; each edge uv
    contributes one gadget edge between its two ports.  Perfect matchings
    leave exactly two ports per vertex matched through edge ports, so
    they project onto 2-factors.  Returns the gadget and the map from
    port-port gadget edges back to the original edges.
    """
    port: dict[tuple[int, int], int] = {}
    nodes = 0
    fillers: list[list[int]] = []
    for v in range(g.n):
        deg = g.degree(v)
        if deg < 2:
            raise InfeasibleGadget(v)
        for u in bits(g.adj[v]):
            port[(v, u)] = nodes
            nodes += 1
        fillers.append(list(range(nodes, nodes + deg - 2)))
        nodes += deg - 2
    edges = []
    origin: dict[tuple[int, int], tuple[int, int]] = {}
    for v in range(g.n):
        ports_v = [port[(v, u)] for u in bits(g.adj[v])]
        for f in fillers[v]:
            for p in ports_v:
                edges.append((f, p))
    for u, v in g.edges():
        a, b = port[(u, v)], port[(v, u)]
        edges.append((a, b))
        origin[(min(a, b), max(a, b))] = (u, v)
    return Graph.from_edges(nodes, edges), origin


def find_two_factor(g: Graph) -> TwoFactor | None:
    """A 2-factor of ``g`` if one exists, else None.

    Goes through the gadget and a maximum matching; the pulled-back edge
    set is validated 2-regular spanning before being returned.  The empty
    graph has the empty 2-factor by convention.
    """
    if g.n == 0:
        return TwoFactor(frozenset())
    if g.min_degree() < 2:
        return None
    gadget, origin = build_factor_gadget(g)
    matching = max_matching_general(gadget)
    if 2 * len(matching) != gadget.n:
        return None
    factor = extract_two_factor(matching, origin)
    if not factor.is_valid(g):
        raise AssertionError("gadget matching did not project to a 2-regular subgraph")
    return factor


def extract_two_factor(matching: Matching, origin: dict[tuple[int, int], tuple[int, int]]) -> TwoFactor:
    """Pull the port-port edges of a gadget matching back to graph edges."""
    return TwoFactor(frozenset(origin[e] for e in matching.edges if e in origin))


# ---------------------------------------------------------------------------
# obstruction direction: barrier search

FIND_BARRIER_MAX_N = 20
MINIMUM_BARRIER_MAX_N = 16


def find_barrier(g: Graph) -> Barrier | None:
    """Some barrier of ``g``, or None when every (S, T) has delta >= 0.

    Scans all 3^n disjoint assignments (W = S u T ascending, splits in
    Gray order) and returns the first hit, so the witness is stable.
    """
    if g.n > FIND_BARRIER_MAX_N:
        raise CapabilityError(f"barrier scan is 3^n; capped at n <= {FIND_BARRIER_MAX_N}")
    found, s, t, delta, h = _scan.scan(g.n, g.adj, _scan.MODE_FIRST)
    return Barrier(s, t, delta, h) if found else None


def minimum_barrier(g: Graph) -> Barrier | None:
    """The minimum barrier: smallest |S u T|, then smallest h, then (S, T).

    The final lexicographic tie-break on the (S, T) bitmask pair is a
    determinism choice; any barrier of the minimum size and census would
    satisfy the structural lemmas being audited.
    """
    if g.n > MINIMUM_BARRIER_MAX_N:
        raise CapabilityError(f"minimum-barrier scan is capped at n <= {MINIMUM_BARRIER_MAX_N}")
    found, s, t, delta, h = _scan.scan(g.n, g.adj, _scan.MODE_MINIMUM)
    return Barrier(s, t, delta, h) if found else None


# ---------------------------------------------------------------------------
# auxiliary bipartite graphs

@dataclass
class AuxBipartite:
    """A bipartite companion of G with bookkeeping back to the graph.

    ``origin[i]`` describes bipartite vertex i: ("vertex", v) for a graph
    vertex, ("split", c, j) for the j-th split node of contracted
    component c.  ``max_degree_right`` counts maximum-degree vertices of
    G on the right side; ``nondelta_counts[v]`` counts the non-maximum-
    degree neighbours of v outside T.  The split reduction additionally
    records the kept component families, the per-right-vertex number of
    pendant components, and the S' = S u {singleton components with three
    T-edges} partition into sigma-zero / sigma-positive vertices.
    """

    graph: BipartiteGraph
    origin: tuple[tuple, ...]
    max_degree_right: int
    nondelta_counts: dict[int, int]
    vertex_to_bip: dict[int, int] = field(default_factory=dict)
    s_prime: int | None = None
    s_zero: int | None = None
    s_one: int | None = None
    pendant_counts: dict[int, int] | None = None
    families: tuple[tuple[int, tuple[int, ...]], ...] = ()

    def left_vertices(self) -> list[int]:
        return sorted(bits(self.graph.left))

    def right_vertices(self) -> list[int]:
        return sorted(bits(self.graph.right))

    def graph_vertex(self, i: int) -> int | None:
        kind = self.origin[i]
        return kind[1] if kind[0] == "vertex" else None


def _nondelta_counts(g: Graph, t: int) -> dict[int, int]:
    delta = g.max_degree()
    nondelta = mask_of(v for v in range(g.n) if g.degree(v) != delta)
    outside = g.vertex_mask & ~t
    return {x: (g.adj[x] & nondelta & outside).bit_count() for x in bits(outside)}


def build_t_incidence(g: Graph, t: int) -> AuxBipartite:
    """Bipartite graph keeping exactly the edges that meet the set T.

    T must be independent, so every right vertex keeps its full degree.
    """
    if not g.is_independent(t):
        raise ValueError("T must be independent")
    if t & ~g.vertex_mask:
        raise ValueError("T has vertices outside the graph")
    left = g.vertex_mask & ~t
    adj = tuple(g.adj[v] & t if left >> v & 1 else g.adj[v] for v in range(g.n))
    bip = BipartiteGraph(g.n, left, t, adj)
    delta = g.max_degree()
    delta0 = sum(1 for v in bits(t) if g.degree(v) == delta)
    return AuxBipartite(
        graph=bip,
        origin=tuple(("vertex", v) for v in range(g.n)),
        max_degree_right=delta0,
        nondelta_counts=_nondelta_counts(g, t),
        vertex_to_bip={v: v for v in range(g.n)},
    )


def build_split_reduction(g: Graph, s: int, t: int) -> AuxBipartite:
    """The contracted-and-split bipartite graph over X = S u split nodes.

    Construction: drop even components and pendant (single-T-edge) odd
    components, drop edges inside S, then contract each odd component
    with 2k+1 >= 3 edges into T and split it into k nodes of degrees
    3, 2, ..., 2.  The 2k+1 (T-vertex, edge) incidences are distributed
    in (T index, edge id) order: first three to the first split node,
    then consecutive pairs.  A singleton component with three T-edges is
    its own split node, so S' = S u {such singletons} survives verbatim.
    """
    if s & t:
        raise ValueError("S and T must be disjoint")
    if not g.is_independent(t):
        raise ValueError("T must be independent")
    census = classify_components(g, s, t)
    edge_id = {e: i for i, e in enumerate(g.edges())}
    t_list = sorted(bits(t))
    t_index = {v: i for i, v in enumerate(t_list)}

    left_origin: list[tuple] = [("vertex", v) for v in sorted(bits(s))]
    left_index: dict[int, int] = {v: i for i, v in enumerate(sorted(bits(s)))}
    cross_edges: list[tuple[int, int]] = []  # (left index, t vertex)
    families: list[tuple[int, tuple[int, ...]]] = []
    s_prime = s

    for ci, comp in enumerate(census.odd_components):
        if comp.edges_to_t < 3:
            continue
        k = (comp.edges_to_t - 1) // 2
        incidences = []
        for y in bits(t):
            for x in bits(g.adj[y] & comp.vertices):
                incidences.append((t_index[y], edge_id[(min(x, y), max(x, y))], y))
        incidences.sort()
        if k == 1 and comp.size == 1:
            x = next(bits(comp.vertices))
            idx = len(left_origin)
            left_origin.append(("vertex", x))
            left_index[x] = idx
            s_prime |= comp.vertices
            family = (idx,)
        else:
            family = tuple(range(len(left_origin), len(left_origin) + k))
            for j in range(k):
                left_origin.append(("split", ci, j))
        families.append((comp.vertices, family))
        shares = [3] + [2] * (k - 1)
        pos = 0
        for node, take in zip(family, shares):
            for _, _, y in incidences[pos:pos + take]:
                cross_edges.append((node, y))
            pos += take

    for v in bits(s):
        for y in bits(g.adj[v] & t):
            cross_edges.append((left_index[v], y))

    n_left = len(left_origin)
    n_total = n_left + len(t_list)
    adj = [0] * n_total
    for li, y in cross_edges:
        ri = n_left + t_index[y]
        adj[li] |= 1 << ri
        adj[ri] |= 1 << li
    bip = BipartiteGraph(
        n_total,
        (1 << n_left) - 1,
        ((1 << n_total) - 1) ^ ((1 << n_left) - 1),
        tuple(adj),
    )

    delta = g.max_degree()
    nondelta = _nondelta_counts(g, t)
    s_zero = mask_of(x for x in bits(s_prime) if nondelta[x] == 0)
    pendant_counts = {y: len(census.pendant_at(y)) for y in t_list}
    origin = tuple(left_origin) + tuple(("vertex", v) for v in t_list)
    vertex_to_bip = dict(left_index)
    for i, y in enumerate(t_list):
        vertex_to_bip[y] = n_left + i
    return AuxBipartite(
        graph=bip,
        origin=origin,
        max_degree_right=sum(1 for v in t_list if g.degree(v) == delta),
        nondelta_counts=nondelta,
        vertex_to_bip=vertex_to_bip,
        s_prime=s_prime,
        s_zero=s_zero,
        s_one=s_prime & ~s_zero,
        pendant_counts=pendant_counts,
        families=tuple(families),
    )


# ---------------------------------------------------------------------------
# DOT export

_COMPONENT_COLORS = (
    "lightgoldenrod", "palegreen", "lightpink", "lightcyan", "plum",
    "wheat", "lightsalmon", "aquamarine", "thistle", "khaki",
)


def to_dot(g: Graph, barrier: Barrier | None = None) -> str:
    """DOT rendering; barrier overlay paints S red, T blue, odd components
    in per-component colours."""
    lines = ["graph G {", "  node [style=filled, fillcolor=white];"]
    fill = {}
    if barrier is not None:
        for v in bits(barrier.s):
            fill[v] = "red"
        for v in bits(barrier.t):
            fill[v] = "lightblue"
        census = classify_components(g, barrier.s, barrier.t)
        for i, comp in enumerate(census.odd_components):
            color = _COMPONENT_COLORS[i % len(_COMPONENT_COLORS)]
            for v in bits(comp.vertices):
                fill[v] = color
    for v in range(g.n):
        attr = f' [fillcolor={fill[v]}]' if v in fill else ""
        lines.append(f"  {v}{attr};")
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
