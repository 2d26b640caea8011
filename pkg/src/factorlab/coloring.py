"""Edge coloring: constructive Delta+1, exact chromatic index, criticality.

``vizing_color`` is the fan/Kempe-chain construction and never uses more
than Delta+1 colors.  ``chromatic_index`` decides Delta-edge-colorability
exactly by backtracking (so the answer is Delta or Delta+1, never a
guess), which keeps it honest on class 2 graphs at the cost of
exponential worst case; it is therefore capped at scan scale.  A graph
is critical when deleting any edge lowers the chromatic index, and
Delta-critical when additionally chi' = Delta+1.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .graphs import CapabilityError, Graph, bits


class GraphClass(Enum):
    CLASS1 = 1
    CLASS2 = 2


@dataclass(frozen=True)
class EdgeColoring:
    """Proper edge coloring: a color per edge, no clashes at any vertex."""

    colors: tuple[tuple[tuple[int, int], int], ...]  # ((u, v), color), u < v
    color_count: int

    def color_of(self, u: int, v: int) -> int:
        key = (min(u, v), max(u, v))
        for e, c in self.colors:
            if e == key:
                return c
        raise KeyError(f"edge {key} is not colored")

    def is_proper(self, g: Graph) -> bool:
        seen: dict[tuple[int, int], int] = {}
        for (u, v), c in self.colors:
            if not g.has_edge(u, v) or c < 0:
                return False
            for x in (u, v):
                if (x, c) in seen:
                    return False
                seen[(x, c)] = 1
        return len(self.colors) == g.edge_count()

    def to_json(self) -> dict:
        return {
            "colors": {f"{u}-{v}": c for (u, v), c in sorted(self.colors)},
            "count": self.color_count,
        }


def vizing_color(g: Graph) -> EdgeColoring:
    """Proper edge coloring with at most Delta+1 colors (fan + Kempe chains).

    Edges are processed in sorted order and every choice (fan growth,
    free colors, chain endpoints) takes the lowest admissible index, so
    the output is deterministic.  Recoloring steps (chain inversion, fan
    rotation) uncolor the touched edges first and then reassign, keeping
    the per-vertex color masks exact throughout.
    """
    delta = g.max_degree()
    palette = delta + 1
    color: dict[tuple[int, int], int] = {}
    used = [0] * g.n  # bitmask of colors present at each vertex

    def free_color(v: int) -> int:
        missing = ~used[v] & (1 << palette) - 1
        return (missing & -missing).bit_length() - 1

    def get_color(u: int, v: int) -> int | None:
        return color.get((min(u, v), max(u, v)))

    def recolor(assignments: list[tuple[int, int, int]]):
        # batch update: clear every touched edge, then set the new colors
        for a, b, _ in assignments:
            old = color.pop((min(a, b), max(a, b)), None)
            if old is not None:
                used[a] &= ~(1 << old)
                used[b] &= ~(1 << old)
        for a, b, c in assignments:
            color[(min(a, b), max(a, b))] = c
            used[a] |= 1 << c
            used[b] |= 1 << c

    for u, v in g.edges():
        # maximal fan at u starting with v: the next fan vertex carries a
        # u-edge whose color is missing at the current fan tail
        fan = [v]
        in_fan = {v}
        while True:
            tail = fan[-1]
            grown = False
            for c in range(palette):
                if used[tail] >> c & 1:
                    continue
                for w in bits(g.adj[u]):
                    if w not in in_fan and get_color(u, w) == c:
                        fan.append(w)
                        in_fan.add(w)
                        grown = True
                        break
                if grown:
                    break
            if not grown:
                break
        c = free_color(u)
        d = free_color(fan[-1])
        if used[u] >> d & 1:
            # invert the maximal c/d chain starting at u (u misses c,
            # so the chain leaves u along its unique d-edge)
            x, want = u, d
            chain = []
            while True:
                nxt = None
                for w in bits(g.adj[x]):
                    if get_color(x, w) == want:
                        nxt = w
                        break
                if nxt is None:
                    break
                chain.append((x, nxt, c if want == d else d))
                x = nxt
                want = c if want == d else d
            recolor(chain)
        # smallest fan prefix that is still a fan and ends at a d-free vertex
        w_idx = None
        for i, w in enumerate(fan):
            if used[w] >> d & 1:
                continue
            if all(not used[fan[j]] >> get_color(u, fan[j + 1]) & 1 for j in range(i)):
                w_idx = i
                break
        assert w_idx is not None, "fan rotation target must exist"
        shifts = [(u, fan[j], get_color(u, fan[j + 1])) for j in range(w_idx)]
        recolor(shifts + [(u, fan[w_idx], d)])

    count = len(set(color.values())) if color else 0
    return EdgeColoring(tuple(sorted(color.items())), count)


CHI_MAX_N = 16
CHI_MAX_M = 40


def _check_chi_capability(g: Graph):
    if g.n > CHI_MAX_N and g.edge_count() > CHI_MAX_M:
        raise CapabilityError(
            f"exact chromatic index is exponential; capped at n <= {CHI_MAX_N} or m <= {CHI_MAX_M}")


def _delta_colorable(g: Graph, k: int) -> dict[tuple[int, int], int] | None:
    """Backtracking k-edge-colorability test; returns a coloring or None.

    Edges are ordered max-degree-first; colors are tried ascending with
    symmetry breaking (color c is allowed only after colors < c appear).
    """
    if k < 0:
        return None
    deg = g.degrees()
    edges = sorted(g.edges(), key=lambda e: (-max(deg[e[0]], deg[e[1]]),
                                             -min(deg[e[0]], deg[e[1]]), e))
    m = len(edges)
    used = [0] * g.n
    assign = [0] * m
    full = (1 << k) - 1

    def solve(i: int, maxc: int) -> bool:
        if i == m:
            return True
        u, v = edges[i]
        avail = ~(used[u] | used[v]) & full
        avail &= (1 << min(maxc + 1, k)) - 1  # symmetry: at most one fresh color
        while avail:
            low = avail & -avail
            c = low.bit_length() - 1
            avail ^= low
            used[u] |= low
            used[v] |= low
            assign[i] = c
            if solve(i + 1, max(maxc, c + 1)):
                return True
            used[u] &= ~low
            used[v] &= ~low
        return False

    if not solve(0, 0):
        return None
    return {e: assign[i] for i, e in enumerate(edges)}


def exact_edge_coloring(g: Graph) -> EdgeColoring:
    """An optimal proper edge coloring (chi' colors, certificate included)."""
    _check_chi_capability(g)
    if g.edge_count() == 0:
        return EdgeColoring((), 0)
    delta = g.max_degree()
    best = _delta_colorable(g, delta)
    if best is not None:
        return EdgeColoring(tuple(sorted(best.items())), delta)
    coloring = vizing_color(g)
    assert coloring.color_count <= delta + 1
    return coloring


def chromatic_index(g: Graph) -> int:
    """Exact chi'; equals Delta or Delta+1 for any graph with an edge."""
    return exact_edge_coloring(g).color_count


def classify(g: Graph) -> GraphClass:
    """Class 1 iff chi' = Delta (edgeless graphs are class 1 by convention)."""
    if g.edge_count() == 0:
        return GraphClass.CLASS1
    return GraphClass.CLASS1 if chromatic_index(g) == g.max_degree() else GraphClass.CLASS2


def is_critical(g: Graph) -> bool:
    """No isolated vertices and chi'(G - e) < chi'(G) for every edge e."""
    if g.edge_count() == 0 or g.min_degree() == 0:
        return False
    chi = chromatic_index(g)
    for u, v in g.edges():
        if chromatic_index(g.without_edge(u, v)) >= chi:
            return False
    return True


def is_delta_critical(g: Graph) -> bool:
    """Critical and class 2 (equivalently chi' = Delta+1, drops on every edge)."""
    if g.edge_count() == 0:
        return False
    if classify(g) is not GraphClass.CLASS2:
        return False
    return is_critical(g)
