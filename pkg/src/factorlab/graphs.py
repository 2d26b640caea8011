"""Bitset graphs, graph6 I/O, and exact structural invariants.

A graph lives on labelled vertices 0..n-1 with one adjacency bitmask per
vertex; vertex sets are plain Python ints used as bitmasks.  The public
interchange format is graph6 (printable 63-offset bytes, upper-triangle
bit packing), capped at 64 vertices.  Everything here is immutable and
pure, so values can be shared freely across workers.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache


class Graph6Error(ValueError):
    """Malformed graph6 input; ``offset`` is the offending byte position."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class CapabilityError(Exception):
    """The instance is larger than the exact algorithm is rated for."""


GRAPH6_MAX_N = 64


def bits(mask: int):
    """Iterate the set bit positions of a vertex mask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices) -> int:
    """Bitmask with the given vertex indices set."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph on vertices 0..n-1.

    ``adj[v]`` is the neighbour bitmask of ``v``.  The constructor rejects
    loops, asymmetric adjacency, and out-of-range bits.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"adjacency of vertex {v} has bits outside 0..{self.n - 1}")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
        for v, row in enumerate(self.adj):
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric edge {v}-{u}")

    @staticmethod
    def from_edges(n: int, edges) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}-{v} out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return Graph(n, tuple(adj))

    @classmethod
    def _trusted(cls, n: int, adj: tuple[int, ...]) -> "Graph":
        # constructor bypass for hot paths whose inputs are valid by
        # construction (augmentation, relabelling); skips the O(n deg) checks
        obj = object.__new__(cls)
        object.__setattr__(obj, "n", n)
        object.__setattr__(obj, "adj", adj)
        return obj

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range")
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def max_degree(self) -> int:
        return max((row.bit_count() for row in self.adj), default=0)

    def min_degree(self) -> int:
        return min((row.bit_count() for row in self.adj), default=0)

    def max_degree_vertices(self) -> int:
        """Mask of the vertices attaining the maximum degree."""
        delta = self.max_degree()
        return mask_of(v for v in range(self.n) if self.adj[v].bit_count() == delta)

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, lexicographically sorted."""
        out = []
        for u, row in enumerate(self.adj):
            for v in bits(row >> (u + 1) << (u + 1)):
                out.append((u, v))
        return out

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def without_edge(self, u: int, v: int) -> "Graph":
        """Copy with edge uv removed (same vertex set)."""
        if not self.has_edge(u, v):
            raise ValueError(f"no edge {u}-{v}")
        adj = list(self.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph(self.n, tuple(adj))

    def with_edge(self, u: int, v: int) -> "Graph":
        if u == v:
            raise ValueError(f"loop at vertex {u}")
        adj = list(self.adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph(self.n, tuple(adj))

    def relabel(self, perm) -> "Graph":
        """Relabelled copy; ``perm[old] = new``."""
        adj = [0] * self.n
        for v, row in enumerate(self.adj):
            adj[perm[v]] = mask_of(perm[u] for u in bits(row))
        return Graph(self.n, tuple(adj))

    def is_independent(self, mask: int) -> bool:
        """True if no edge joins two vertices of ``mask``."""
        for v in bits(mask):
            if self.adj[v] & mask:
                return False
        return True

    def edges_between(self, a: int, b: int) -> int:
        """Number of edges with one end in mask ``a`` and the other in ``b``.

        Overlapping masks count internal edges of the overlap twice.
        """
        return sum((self.adj[v] & b).bit_count() for v in bits(a))


# ---------------------------------------------------------------------------
# standard constructions

def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(v, (v + 1) % n) for v in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(v, v + 1) for v in range(n - 1)])


def star_graph(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, v) for v in range(1, leaves + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def petersen_graph() -> Graph:
    outer = [(v, (v + 1) % 5) for v in range(5)]
    inner = [(5 + v, 5 + (v + 2) % 5) for v in range(5)]
    spokes = [(v, v + 5) for v in range(5)]
    return Graph.from_edges(10, outer + inner + spokes)


# ---------------------------------------------------------------------------
# graph6 codec

def _g6_data_bits(g: Graph) -> list[int]:
    # upper triangle in column order: x(0,1), x(0,2), x(1,2), x(0,3), ...
    out = []
    for col in range(1, g.n):
        row_mask = g.adj[col]
        for row in range(col):
            out.append(row_mask >> row & 1)
    return out


def to_graph6(g: Graph) -> str:
    """Encode as a graph6 line (no trailing newline)."""
    if g.n > GRAPH6_MAX_N:
        raise CapabilityError(f"graph6 interchange is capped at {GRAPH6_MAX_N} vertices")
    if g.n <= 62:
        head = [g.n + 63]
    else:
        head = [126, (g.n >> 12) + 63, (g.n >> 6 & 63) + 63, (g.n & 63) + 63]
    data_bits = _g6_data_bits(g)
    while len(data_bits) % 6:
        data_bits.append(0)
    body = []
    for i in range(0, len(data_bits), 6):
        word = 0
        for b in data_bits[i:i + 6]:
            word = word << 1 | b
        body.append(word + 63)
    return bytes(head + body).decode("ascii")


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line into a Graph.

    Accepts an optional ``>>graph6<<`` header and a trailing newline, and
    rejects out-of-range bytes, truncation, nonzero padding, and trailing
    garbage, reporting the byte offset of the problem.
    """
    line = text.rstrip("\r\n")
    offset = 0
    header = ">>graph6<<"
    if line.startswith(">>"):
        if not line.startswith(header):
            raise Graph6Error("malformed graph6 header", 0)
        offset = len(header)
    data = line[offset:]
    if not data:
        raise Graph6Error("empty graph6 line", offset)
    raw = data.encode("ascii", errors="replace")
    for i, byte in enumerate(raw):
        if not 63 <= byte <= 126:
            raise Graph6Error(f"byte {byte!r} outside graph6 range 63..126", offset + i)
    pos = 0
    if raw[0] == 126:
        if len(raw) >= 2 and raw[1] == 126:
            raise Graph6Error("8-byte graph6 size form is not supported", offset)
        if len(raw) < 4:
            raise Graph6Error("truncated extended size header", offset + len(raw))
        n = (raw[1] - 63) << 12 | (raw[2] - 63) << 6 | (raw[3] - 63)
        pos = 4
    else:
        n = raw[0] - 63
        pos = 1
    if n > GRAPH6_MAX_N:
        raise Graph6Error(f"graph on {n} vertices exceeds the {GRAPH6_MAX_N}-vertex cap", offset)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(raw) - pos < nbytes:
        raise Graph6Error("truncated edge data", offset + len(raw))
    if len(raw) - pos > nbytes:
        raise Graph6Error("trailing garbage after edge data", offset + pos + nbytes)
    adj = [0] * n
    bit = 0
    for i in range(nbytes):
        word = raw[pos + i] - 63
        for k in range(5, -1, -1):
            if bit >= nbits:
                if word >> k & 1:
                    raise Graph6Error("nonzero padding bits", offset + pos + i)
                continue
            if word >> k & 1:
                row, col = _triangle_coords(bit)
                adj[row] |= 1 << col
                adj[col] |= 1 << row
            bit += 1
    return Graph(n, tuple(adj))


@lru_cache(maxsize=None)
def _triangle_coords(bit: int) -> tuple[int, int]:
    # inverse of column-order upper-triangle indexing
    col = 1
    while col * (col + 1) // 2 <= bit:
        col += 1
    row = bit - col * (col - 1) // 2
    return row, col


# ---------------------------------------------------------------------------
# connectivity

def connected_components(g: Graph) -> list[int]:
    """Vertex masks of the connected components, ordered by lowest vertex."""
    seen = 0
    comps = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp = 0
        frontier = 1 << v
        while frontier:
            comp |= frontier
            nxt = 0
            for u in bits(frontier):
                nxt |= g.adj[u]
            frontier = nxt & ~comp
        comps.append(comp)
        seen |= comp
    return comps


def components_within(g: Graph, mask: int) -> list[int]:
    """Connected components of the subgraph induced on ``mask``."""
    comps = []
    rem = mask
    while rem:
        start = rem & -rem
        comp = 0
        frontier = start
        while frontier:
            comp |= frontier
            nxt = 0
            for u in bits(frontier):
                nxt |= g.adj[u]
            frontier = nxt & rem & ~comp
        comps.append(comp)
        rem &= ~comp
    return comps


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1


# ---------------------------------------------------------------------------
# independence number

def independence_number(g: Graph) -> tuple[int, int]:
    """Exact maximum independent set size with one witness mask.

    Branch and bound on candidate bitmasks: branch on a maximum-degree
    candidate vertex, include-first, pruned by the trivial |current|+|P|
    bound.  Deterministic, so the witness is reproducible.
    """
    adj = g.adj
    best_size = 0
    best_mask = 0

    def grow(candidates: int, size: int, chosen: int):
        nonlocal best_size, best_mask
        if size + candidates.bit_count() <= best_size:
            return
        if not candidates:
            best_size, best_mask = size, chosen
            return
        pivot = -1
        pivot_deg = -1
        for v in bits(candidates):
            d = (adj[v] & candidates).bit_count()
            if d > pivot_deg:
                pivot, pivot_deg = v, d
        bit = 1 << pivot
        grow(candidates & ~(adj[pivot] | bit), size + 1, chosen | bit)
        grow(candidates & ~bit, size, chosen)

    grow(g.vertex_mask, 0, 0)
    return best_size, best_mask


def maximal_independent_sets(g: Graph) -> list[int]:
    """All maximal independent sets as masks (Bron-Kerbosch with pivoting)."""
    out = []
    adj = g.adj

    def extend(chosen: int, candidates: int, excluded: int):
        if not candidates and not excluded:
            out.append(chosen)
            return
        pivot, best = -1, -1
        for v in bits(candidates | excluded):
            gain = (candidates & ~adj[v] & ~(1 << v)).bit_count()
            if gain > best:
                best, pivot = gain, v
        for v in bits(candidates & (adj[pivot] | (1 << pivot))):
            bit = 1 << v
            extend(chosen | bit, candidates & ~adj[v] & ~bit, excluded & ~adj[v])
            candidates &= ~bit
            excluded |= bit

    extend(0, g.vertex_mask, 0)
    out.sort()
    return out


# ---------------------------------------------------------------------------
# canonical form

def _refine_colors(n: int, adj: tuple[int, ...]) -> list[int]:
    # iterated degree refinement; colour ids are isomorphism-invariant.
    # signature = (degree, own colour, sorted neighbour colours): the
    # degree prefix keeps the ordering aligned with the packed-integer
    # encoding used by the accelerated canonical-key kernel.
    colors = [adj[v].bit_count() for v in range(n)]
    nbrs = [tuple(bits(row)) for row in adj]
    for _ in range(n):
        sigs = [(len(nbrs[v]), colors[v], *sorted(colors[u] for u in nbrs[v])) for v in range(n)]
        order = {sig: i for i, sig in enumerate(sorted(set(sigs)))}
        new = [order[s] for s in sigs]
        if new == colors:
            break
        colors = new
    return colors


def canonical_form(g: Graph) -> bytes:
    """Canonical byte string: equal iff the graphs are isomorphic.

    Minimises the upper-triangle adjacency bit string over all vertex
    permutations compatible with the refined degree partition, with
    prefix pruning and collapsing of twin vertices.  The result is the
    graph6 encoding of the minimal relabelling, so it decodes back to a
    canonical representative.
    """
    if g.n > GRAPH6_MAX_N:
        raise CapabilityError(f"canonical form uses graph6 bytes; capped at {GRAPH6_MAX_N} vertices")
    order = _canonical_order(g)
    adj = g.adj
    if g.n <= 62:
        head = [g.n + 63]
    else:
        head = [126, (g.n >> 12) + 63, (g.n >> 6 & 63) + 63, (g.n & 63) + 63]
    word = 0
    filled = 0
    body = []
    for col in range(1, g.n):
        vcol = order[col]
        for row in range(col):
            word = word << 1 | (adj[vcol] >> order[row] & 1)
            filled += 1
            if filled == 6:
                body.append(word + 63)
                word = 0
                filled = 0
    if filled:
        body.append((word << (6 - filled)) + 63)
    return bytes(head + body)


def canonical_graph(g: Graph) -> Graph:
    """Canonical representative of the isomorphism class of ``g``."""
    perm = _canonical_order(g)
    inverse = [0] * g.n
    for pos, v in enumerate(perm):
        inverse[v] = pos
    return g.relabel(inverse)


def _canonical_order(g: Graph) -> list[int]:
    """Vertex order whose relabelling minimises the adjacency bit string.

    Positions are blocked by the refined colour partition (classes in
    canonical colour order, so the block layout is itself an isomorphism
    invariant) and the bit string is minimised over the block-respecting
    permutations.  Depth-first placement: the vertex placed at position d
    contributes the column of bits x(0,d)..x(d-1,d), so partial
    placements are compared to the incumbent column by column.  A branch
    is cut only while its prefix still equals the incumbent's prefix
    (tracked via a version counter, as the incumbent may improve
    mid-search), which keeps the search exact.  Twin vertices (identical
    adjacency off each other) generate equal subtrees and are branched
    only once.
    """
    n = g.n
    if n <= 1:
        return list(range(n))
    adj = g.adj
    colors = _refine_colors(n, adj)
    members: dict[int, list[int]] = {}
    for v in range(n):
        members.setdefault(colors[v], []).append(v)
    block_for_depth: list[list[int]] = []
    for color in sorted(members):
        block_for_depth.extend([members[color]] * len(members[color]))

    best: list[int] | None = None
    best_cols: list[int] = []
    version = 0
    placed = [0] * n
    cols = [0] * n
    used = [False] * n

    def place(depth: int, prefix_eq: bool):
        nonlocal best, best_cols, version
        branch: list[tuple[int, int]] = []
        seen: dict[int, int] = {}
        for v in block_for_depth[depth]:
            if used[v]:
                continue
            col = 0
            row = adj[v]
            for i in range(depth):
                col = col << 1 | (row >> placed[i] & 1)
            keep = seen.get(col)
            if keep is not None and adj[keep] & ~(1 << v) == adj[v] & ~(1 << keep):
                continue  # twin of an already-branched vertex
            seen[col] = v
            branch.append((col, v))
        branch.sort()
        at_entry = version
        for col, v in branch:
            if prefix_eq or version != at_entry:
                # incumbent runs through this node: later columns only grow
                if best is not None and col > best_cols[depth]:
                    break
                child_eq = best is not None and col == best_cols[depth]
            else:
                child_eq = False
            placed[depth] = v
            cols[depth] = col
            if depth + 1 == n:
                if best is None or cols < best_cols:
                    best = placed.copy()
                    best_cols = cols.copy()
                    version += 1
            else:
                used[v] = True
                place(depth + 1, child_eq)
                used[v] = False

    place(0, False)
    assert best is not None
    return best
