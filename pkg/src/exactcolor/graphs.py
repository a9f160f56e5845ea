"""Simple undirected graphs and the structural decompositions built on them.

Vertices are dense 0-based integers.  A Graph is immutable after
construction: algorithms in this package never mutate a graph in place, they
build new ones.  Duplicate input edges are collapsed silently; self-loops are
rejected because they change the semantics of degree-based definitions.
"""

from __future__ import annotations

import heapq
import sys
from collections import deque
from dataclasses import dataclass
from enum import Enum

from .errors import (
    DisconnectedClassError,
    NotAPartitionError,
    OutOfRangeError,
    SelfLoopError,
)


class Graph:
    """Immutable simple undirected graph with sorted adjacency lists."""

    __slots__ = ("n", "adj", "_adjsets", "_m")

    def __init__(self, n: int, adj: tuple[tuple[int, ...], ...]):
        self.n = n
        self.adj = adj
        self._adjsets = tuple(frozenset(a) for a in adj)
        self._m = sum(len(a) for a in adj) // 2

    @property
    def m(self) -> int:
        """Number of edges."""
        return self._m

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def min_degree(self) -> int:
        return min((len(a) for a in self.adj), default=0)

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adjsets[u]

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) pairs with u < v, sorted."""
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edges) -> Graph:
    """Build a graph from an edge list, validating and normalizing it.

    Endpoints must lie in [0, n); self-loops raise SelfLoopError.  Duplicate
    edges (in either orientation) collapse to one.
    """
    if n < 0:
        raise OutOfRangeError("vertex count must be nonnegative")
    nbr: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise OutOfRangeError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        nbr[u].add(v)
        nbr[v].add(u)
    return Graph(n, tuple(tuple(sorted(s)) for s in nbr))


def connected_components(g: Graph) -> list[list[int]]:
    """Vertex sets of the connected components, each sorted, ordered by minimum vertex."""
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def induced_subgraph(g: Graph, vertices) -> tuple[Graph, list[int]]:
    """Subgraph induced by `vertices`; returns it plus the old-index list.

    New vertex i corresponds to the i-th vertex of sorted(vertices).
    """
    verts = sorted(vertices)
    index = {v: i for i, v in enumerate(verts)}
    edges = [
        (index[u], index[v])
        for u in verts
        for v in g.adj[u]
        if u < v and v in index
    ]
    return build_graph(len(verts), edges), verts


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(connected_components(g)) == 1


def is_bipartite(g: Graph) -> tuple[bool, list[int] | None]:
    """BFS 2-coloring.  Returns (True, side list) or (False, None)."""
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] != -1:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if side[w] == -1:
                    side[w] = 1 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    return False, None
    return True, side


# ---------------------------------------------------------------------------
# Blocks (maximal biconnected components)
# ---------------------------------------------------------------------------

class BlockKind(Enum):
    EDGE = "edge"
    CYCLE = "cycle"
    CLIQUE = "clique"
    OTHER = "other"


@dataclass(frozen=True)
class BlockCutTree:
    """Blocks and cut vertices of a graph.

    Every edge lies in exactly one block; a vertex is a cut vertex iff it
    lies in two or more blocks.  Isolated vertices belong to no block.
    A triangle block is reported as CYCLE but counts as a clique for
    block-graph recognition.
    """

    blocks: tuple[tuple[int, ...], ...]          # sorted vertex tuples
    block_edges: tuple[tuple[tuple[int, int], ...], ...]
    cut_vertices: frozenset[int]
    kinds: tuple[BlockKind, ...]

    def is_cactus(self) -> bool:
        return all(k in (BlockKind.EDGE, BlockKind.CYCLE) for k in self.kinds)

    def is_block_graph(self) -> bool:
        # every block is a complete graph (K2, or any clique; K3 is stored as CYCLE)
        for verts, edges in zip(self.blocks, self.block_edges):
            b = len(verts)
            if len(edges) != b * (b - 1) // 2:
                return False
        return True

    def blocks_of_vertex(self, n: int) -> list[list[int]]:
        """For each of the host graph's n vertices, indices of the blocks containing it."""
        out: list[list[int]] = [[] for _ in range(n)]
        for i, verts in enumerate(self.blocks):
            for v in verts:
                out[v].append(i)
        return out


def _classify_block(verts: tuple[int, ...], edges: tuple[tuple[int, int], ...]) -> BlockKind:
    b, e = len(verts), len(edges)
    if b == 2:
        return BlockKind.EDGE
    if e == b:
        return BlockKind.CYCLE
    if e == b * (b - 1) // 2:
        return BlockKind.CLIQUE
    return BlockKind.OTHER


def block_cut_tree(g: Graph) -> BlockCutTree:
    """Hopcroft-Tarjan biconnected components, iteratively (no recursion limit).

    Blocks are listed in a deterministic order and finally sorted by their
    smallest vertex (ties by vertex tuple).
    """
    n = g.n
    disc = [-1] * n
    low = [0] * n
    is_cut = [False] * n
    edge_stack: list[tuple[int, int]] = []
    raw_blocks: list[list[tuple[int, int]]] = []
    timer = 0

    for root in range(n):
        if disc[root] != -1 or not g.adj[root]:
            continue
        # iterative DFS: frames of (vertex, parent, iterator index)
        stack = [(root, -1, 0)]
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        while stack:
            v, parent, i = stack[-1]
            if i < len(g.adj[v]):
                stack[-1] = (v, parent, i + 1)
                w = g.adj[v][i]
                if disc[w] == -1:
                    edge_stack.append((v, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, v, 0))
                elif w != parent and disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
            else:
                stack.pop()
                if stack:
                    u = stack[-1][0]
                    low[u] = min(low[u], low[v])
                    if u == root:
                        root_children += 1
                    if low[v] >= disc[u]:
                        if u != root:
                            is_cut[u] = True
                        block = []
                        while True:
                            e = edge_stack.pop()
                            block.append(e)
                            if e == (u, v):
                                break
                        raw_blocks.append(block)
        if root_children >= 2:
            is_cut[root] = True

    blocks: list[tuple[int, ...]] = []
    bedges: list[tuple[tuple[int, int], ...]] = []
    for block in raw_blocks:
        vs = sorted({v for e in block for v in e})
        es = tuple(sorted((min(u, w), max(u, w)) for u, w in block))
        blocks.append(tuple(vs))
        bedges.append(es)
    order = sorted(range(len(blocks)), key=lambda i: blocks[i])
    blocks = [blocks[i] for i in order]
    bedges = [bedges[i] for i in order]
    kinds = tuple(_classify_block(v, e) for v, e in zip(blocks, bedges))
    return BlockCutTree(
        blocks=tuple(blocks),
        block_edges=tuple(bedges),
        cut_vertices=frozenset(v for v in range(n) if is_cut[v]),
        kinds=kinds,
    )


def cycle_order(block_verts, block_edges) -> list[int]:
    """Vertices of a cycle block in cyclic order, starting at the smallest.

    The walk leaves the start toward its smaller neighbor, so the result is
    deterministic.
    """
    nbr: dict[int, list[int]] = {v: [] for v in block_verts}
    for u, v in block_edges:
        nbr[u].append(v)
        nbr[v].append(u)
    start = min(block_verts)
    order = [start]
    prev, cur = None, start
    while True:
        a, b = sorted(nbr[cur])
        nxt = a if a != prev else b
        if nxt == start:
            break
        order.append(nxt)
        prev, cur = cur, nxt
    return order


# ---------------------------------------------------------------------------
# Class recognizers
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GraphClasses:
    is_tree: bool
    is_forest: bool
    is_cactus: bool
    is_block_graph: bool
    is_chordal: bool
    regular_degree: int | None     # d if the graph is d-regular, else None
    is_disjoint_cycles: bool


def maximum_cardinality_search(g: Graph) -> list[int]:
    """MCS visit order (ties broken by lowest index), via a lazy max-heap."""
    n = g.n
    weight = [0] * n
    visited = [False] * n
    heap = [(0, v) for v in range(n)]   # (-weight, vertex); initial weights all 0
    heapq.heapify(heap)
    order = []
    while heap:
        negw, v = heapq.heappop(heap)
        if visited[v] or -negw != weight[v]:
            continue
        visited[v] = True
        order.append(v)
        for w in g.adj[v]:
            if not visited[w]:
                weight[w] += 1
                heapq.heappush(heap, (-weight[w], w))
    return order


def perfect_elimination_ordering(g: Graph) -> list[int] | None:
    """A perfect elimination ordering if the graph is chordal, else None.

    The reverse of the MCS visit order is a PEO iff the graph is chordal;
    the candidate is verified with the standard parent-subset test.
    """
    order = maximum_cardinality_search(g)
    peo = list(reversed(order))
    pos = {v: i for i, v in enumerate(peo)}
    for v in peo:
        later = [w for w in g.adj[v] if pos[w] > pos[v]]
        if not later:
            continue
        u = min(later, key=lambda w: pos[w])
        rest = [w for w in later if w != u]
        if any(not g.has_edge(u, w) for w in rest):
            return None
    return peo


def is_chordal(g: Graph) -> bool:
    return perfect_elimination_ordering(g) is not None


def is_d_regular(g: Graph, d: int) -> bool:
    return all(len(a) == d for a in g.adj)


def recognize(g: Graph) -> GraphClasses:
    """Classify a graph: tree / cactus / block graph / chordal / regular.

    A graph is a disjoint union of cycles exactly when it is 2-regular, so
    no separate traversal is needed for that flag.
    """
    bct = block_cut_tree(g)
    n_comp = len(connected_components(g))
    forest = g.m == g.n - n_comp
    degs = {len(a) for a in g.adj}
    reg = degs.pop() if len(degs) == 1 else None
    return GraphClasses(
        is_tree=(n_comp == 1 and forest and g.n >= 1),
        is_forest=forest,
        is_cactus=bct.is_cactus(),
        is_block_graph=bct.is_block_graph(),
        is_chordal=is_chordal(g),
        regular_degree=reg,
        is_disjoint_cycles=(g.n > 0 and reg == 2),
    )


# ---------------------------------------------------------------------------
# Matchings
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Matching:
    """A set of pairwise vertex-disjoint edges of some host graph."""

    edges: tuple[tuple[int, int], ...]
    perfect: bool = False

    def vertices(self) -> set[int]:
        return {v for e in self.edges for v in e}


def perfect_matchings(g: Graph, limit: int | None = None) -> list[Matching]:
    """Enumerate perfect matchings by backtracking.

    The lowest unmatched vertex is matched to its unmatched neighbors in
    ascending order, so the output order is deterministic and results
    truncated by `limit` are reproducible.  Empty when n is odd or no
    perfect matching exists.
    """
    if g.n % 2 == 1:
        return []
    old_limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old_limit, g.n + 200))
    matched = [False] * g.n
    chosen: list[tuple[int, int]] = []
    out: list[Matching] = []

    def rec(start: int) -> bool:
        # returns True when the limit has been hit
        v = start
        while v < g.n and matched[v]:
            v += 1
        if v == g.n:
            out.append(Matching(tuple(chosen), perfect=True))
            return limit is not None and len(out) >= limit
        matched[v] = True
        for u in g.adj[v]:
            if matched[u]:
                continue
            matched[u] = True
            chosen.append((v, u))
            if rec(v + 1):
                matched[u] = False
                chosen.pop()
                matched[v] = False
                return True
            chosen.pop()
            matched[u] = False
        matched[v] = False
        return False

    try:
        rec(0)
    finally:
        sys.setrecursionlimit(old_limit)
    return out


def has_perfect_matching(g: Graph) -> bool:
    return g.n % 2 == 0 and (g.n == 0 or bool(perfect_matchings(g, limit=1)))


# ---------------------------------------------------------------------------
# Contraction
# ---------------------------------------------------------------------------

def contract_partition(g: Graph, parts) -> Graph:
    """Quotient graph: one vertex per class, classes adjacent iff a cross edge exists.

    The classes must partition V(g) and each must induce a connected
    subgraph; only such contractions occur in this package (matched pairs,
    cycles, cliques), so anything else is treated as a caller bug.
    """
    parts = [sorted(p) for p in parts]
    seen: set[int] = set()
    total = 0
    for p in parts:
        if not p:
            raise NotAPartitionError("empty class")
        total += len(p)
        seen.update(p)
    if total != g.n or seen != set(range(g.n)):
        raise NotAPartitionError("classes do not partition the vertex set")

    cls = [0] * g.n
    for i, p in enumerate(parts):
        for v in p:
            cls[v] = i

    for i, p in enumerate(parts):
        # BFS inside the class
        inside = set(p)
        reached = {p[0]}
        queue = deque([p[0]])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if w in inside and w not in reached:
                    reached.add(w)
                    queue.append(w)
        if reached != inside:
            raise DisconnectedClassError(f"class {i} does not induce a connected subgraph")

    qedges = set()
    for u in range(g.n):
        for w in g.adj[u]:
            if u < w and cls[u] != cls[w]:
                qedges.add((min(cls[u], cls[w]), max(cls[u], cls[w])))
    return build_graph(len(parts), sorted(qedges))
