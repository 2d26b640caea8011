"""Maximum matching in bipartite and general graphs.

Bipartite matching is Hopcroft-Karp; general matching is Edmonds'
blossom algorithm.  Both are deterministic (vertices scanned in index
order) so matchings can be frozen into regression fixtures.  On top of
the raw solvers sit the Hall-violator extractor and two saturation
procedures used by the barrier machinery: one guaranteed by a degree
dominance condition, one that peels degree-one vertices.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graphs import Graph, bits, mask_of


@dataclass(frozen=True)
class BipartiteGraph:
    """Bipartite graph over vertices 0..n-1 with explicit sides.

    ``left`` and ``right`` are disjoint vertex masks; every edge joins the
    sides.  Vertices outside both masks are not allowed.
    """

    n: int
    left: int
    right: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.left & self.right:
            raise ValueError("left and right sides overlap")
        full = (1 << self.n) - 1
        if (self.left | self.right) & ~full:
            raise ValueError("side mask has bits outside the vertex range")
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"adjacency of vertex {v} out of range")
            if self.left >> v & 1:
                if row & ~self.right:
                    raise ValueError(f"edge from left vertex {v} leaves the right side")
            elif self.right >> v & 1:
                if row & ~self.left:
                    raise ValueError(f"edge from right vertex {v} leaves the left side")
            elif row:
                raise ValueError(f"vertex {v} outside both sides has edges")
        for v, row in enumerate(self.adj):
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric edge {v}-{u}")

    @staticmethod
    def from_edges(left, right, edges) -> "BipartiteGraph":
        lmask = mask_of(left)
        rmask = mask_of(right)
        n = max((lmask | rmask).bit_length(), 0)
        adj = [0] * n
        for u, v in edges:
            if lmask >> u & 1 and rmask >> v & 1:
                pass
            elif lmask >> v & 1 and rmask >> u & 1:
                u, v = v, u
            else:
                raise ValueError(f"edge {u}-{v} does not join the sides")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return BipartiteGraph(n, lmask, rmask, tuple(adj))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def induced(self, keep: int) -> "BipartiteGraph":
        """Sub-bipartite-graph induced on the vertex mask ``keep``."""
        adj = tuple(self.adj[v] & keep if keep >> v & 1 else 0 for v in range(self.n))
        return BipartiteGraph(self.n, self.left & keep, self.right & keep, adj)


@dataclass(frozen=True)
class Matching:
    """A set of pairwise vertex-disjoint edges."""

    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        seen = 0
        for u, v in self.edges:
            if u >= v:
                raise ValueError(f"edge {(u, v)} not normalised as u < v")
            pair = 1 << u | 1 << v
            if seen & pair:
                raise ValueError("matching edges share a vertex")
            seen |= pair

    @staticmethod
    def of(pairs) -> "Matching":
        return Matching(frozenset((u, v) if u < v else (v, u) for u, v in pairs))

    def __len__(self):
        return len(self.edges)

    def vertex_mask(self) -> int:
        m = 0
        for u, v in self.edges:
            m |= 1 << u | 1 << v
        return m

    def saturates(self, mask: int) -> bool:
        return self.vertex_mask() & mask == mask

    def partner(self, v: int) -> int | None:
        for a, b in self.edges:
            if a == v:
                return b
            if b == v:
                return a
        return None


def max_bipartite_matching(h: BipartiteGraph) -> Matching:
    """Maximum-cardinality matching via Hopcroft-Karp."""
    INF = h.n + 1
    mate = [-1] * h.n
    lefts = list(bits(h.left))
    dist = [INF] * h.n

    def bfs() -> bool:
        queue = deque()
        for v in lefts:
            if mate[v] == -1:
                dist[v] = 0
                queue.append(v)
            else:
                dist[v] = INF
        found = False
        while queue:
            v = queue.popleft()
            for u in bits(h.adj[v]):
                w = mate[u]
                if w == -1:
                    found = True
                elif dist[w] == INF:
                    dist[w] = dist[v] + 1
                    queue.append(w)
        return found

    def dfs(v: int) -> bool:
        for u in bits(h.adj[v]):
            w = mate[u]
            if w == -1 or (dist[w] == dist[v] + 1 and dfs(w)):
                mate[v] = u
                mate[u] = v
                return True
        dist[v] = INF
        return False

    while bfs():
        for v in lefts:
            if mate[v] == -1:
                dfs(v)
    return Matching.of((v, mate[v]) for v in lefts if mate[v] != -1)


def hall_violator(h: BipartiteGraph) -> int | None:
    """Minimum-cardinality right-side set A with |N(A)| < |A|, if any.

    Returns None exactly when some matching saturates the right side.
    Ties are broken toward the lexicographically smallest bitmask, so the
    witness is reproducible.
    """
    right = list(bits(h.right))
    if max_bipartite_matching(h).saturates(h.right):
        return None
    from itertools import combinations

    for size in range(1, len(right) + 1):
        best = None
        for combo in combinations(right, size):
            nbhd = 0
            for v in combo:
                nbhd |= h.adj[v]
            if nbhd.bit_count() < size:
                m = mask_of(combo)
                if best is None or m < best:
                    best = m
        if best is not None:
            return best
    raise AssertionError("unsaturated right side must contain a Hall violator")


def degree_dominant_matching(h: BipartiteGraph) -> Matching:
    """Matching saturating the right side, guaranteed by degree dominance.

    Preconditions (checked): the right side has no isolated vertex, and
    every edge xy with x on the left satisfies deg(y) >= deg(x).  Under
    them a right-saturating matching always exists; failure to find one
    would contradict that guarantee and raises RuntimeError.
    """
    for y in bits(h.right):
        if not h.adj[y]:
            raise ValueError(f"right vertex {y} is isolated")
    for x in bits(h.left):
        dx = h.degree(x)
        for y in bits(h.adj[x]):
            if h.degree(y) < dx:
                raise ValueError(f"edge {x}-{y} violates degree dominance: deg({y})={h.degree(y)} < deg({x})={dx}")
    m = max_bipartite_matching(h)
    if not m.saturates(h.right):
        raise RuntimeError("degree-dominant bipartite graph without a right-saturating matching; this contradicts the saturation guarantee")
    return m


def degree_one_reduction(h: BipartiteGraph) -> tuple[BipartiteGraph, Matching]:
    """Peel degree-one left vertices and the right vertices they pin.

    Returns the induced graph on the remaining vertices and a matching
    that saturates the peeled right vertices using degree-one left
    vertices.  A matching saturating the remaining right side extends by
    this matching to saturate the whole right side.
    """
    ones = [x for x in bits(h.left) if h.degree(x) == 1]
    pinned = 0
    for x in ones:
        pinned |= h.adj[x]
    forced = []
    taken = 0
    for y in bits(pinned):
        for x in ones:
            if h.adj[x] >> y & 1 and not taken >> x & 1:
                forced.append((x, y))
                taken |= 1 << x
                break
    reduced = h.induced((h.left & ~mask_of(ones)) | (h.right & ~pinned))
    return reduced, Matching.of(forced)


def max_matching_general(g: Graph) -> Matching:
    """Maximum matching in an arbitrary graph (Edmonds' blossom algorithm).

    A greedy matching seeds the search; augmenting paths are then found
    by BFS with blossom contraction from each exposed vertex in index
    order.
    """
    n = g.n
    adj = [list(bits(row)) for row in g.adj]
    mate = [-1] * n
    for v in range(n):
        if mate[v] == -1:
            for u in adj[v]:
                if mate[u] == -1:
                    mate[v] = u
                    mate[u] = v
                    break

    parent = [-1] * n
    base = list(range(n))
    in_queue = [False] * n
    in_blossom = [False] * n

    def lowest_common_base(u: int, v: int) -> int:
        seen = [False] * n
        while True:
            u = base[u]
            seen[u] = True
            if mate[u] == -1:
                break
            u = parent[mate[u]]
        while True:
            v = base[v]
            if seen[v]:
                return v
            v = parent[mate[v]]

    def mark_path(v: int, b: int, child: int, queue):
        while base[v] != b:
            in_blossom[base[v]] = True
            in_blossom[base[mate[v]]] = True
            parent[v] = child
            child = mate[v]
            if not in_queue[mate[v]]:
                in_queue[mate[v]] = True
                queue.append(mate[v])
            v = parent[mate[v]]

    def find_augmenting_path(root: int) -> int:
        for v in range(n):
            parent[v] = -1
            base[v] = v
            in_queue[v] = False
        queue = deque([root])
        in_queue[root] = True
        while queue:
            v = queue.popleft()
            for u in adj[v]:
                if base[v] == base[u] or mate[v] == u:
                    continue
                if u == root or (mate[u] != -1 and parent[mate[u]] != -1):
                    # odd cycle: contract the blossom at the common base
                    b = lowest_common_base(v, u)
                    for w in range(n):
                        in_blossom[w] = False
                    mark_path(v, b, u, queue)
                    mark_path(u, b, v, queue)
                    for w in range(n):
                        if in_blossom[base[w]]:
                            base[w] = b
                            if not in_queue[w]:
                                in_queue[w] = True
                                queue.append(w)
                elif parent[u] == -1:
                    parent[u] = v
                    if mate[u] == -1:
                        return u
                    if not in_queue[mate[u]]:
                        in_queue[mate[u]] = True
                        queue.append(mate[u])
        return -1

    for root in range(n):
        if mate[root] != -1:
            continue
        leaf = find_augmenting_path(root)
        if leaf == -1:
            continue
        while leaf != -1:
            prev = parent[leaf]
            nxt = mate[prev]
            mate[leaf] = prev
            mate[prev] = leaf
            leaf = nxt
    return Matching.of((v, mate[v]) for v in range(n) if mate[v] > v)
