"""Shared corpus builders and independent oracles for the test suite.

The oracles here deliberately avoid the library's search machinery so that
agreement tests compare genuinely different computations: set-partition
filtering for regular partitions, edge-subset filtering for matchings, and
a plain proper-coloring sweep for chromatic numbers.
"""

from itertools import combinations, product

import pytest

from exactcolor import Graph, build_graph, is_proper, Coloring


def set_partitions(items):
    """All partitions of a list, by recursive first-element placement."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for smaller in set_partitions(rest):
        for i in range(len(smaller)):
            yield smaller[:i] + [[first] + smaller[i]] + smaller[i + 1:]
        yield [[first]] + smaller


def induces_connected_regular(g: Graph, verts, d: int) -> bool:
    vs = set(verts)
    for v in verts:
        if sum(1 for u in g.adj[v] if u in vs) != d:
            return False
    # connectivity by DFS inside the class
    seen = {verts[0]}
    stack = [verts[0]]
    while stack:
        u = stack.pop()
        for w in g.adj[u]:
            if w in vs and w not in seen:
                seen.add(w)
                stack.append(w)
    return seen == vs


def regular_partitions_filter(g: Graph, d: int) -> set:
    """Independent oracle: filter all set partitions (use only for n <= 8)."""
    found = set()
    for parts in set_partitions(list(range(g.n))):
        if all(induces_connected_regular(g, p, d) for p in parts):
            found.add(frozenset(frozenset(p) for p in parts))
    return found


def perfect_matchings_filter(g: Graph) -> set:
    """Independent oracle: filter edge subsets of size n/2 (n <= 12)."""
    if g.n % 2 == 1:
        return set()
    edges = g.edges()
    found = set()
    for subset in combinations(edges, g.n // 2):
        verts = [v for e in subset for v in e]
        if len(set(verts)) == g.n:
            found.add(frozenset(subset))
    return found


def chi_exhaustive(g: Graph) -> int:
    """Independent chromatic number: plain sweep, no cliques, no DSATUR.

    n <= 5 tries every assignment through is_proper; 6 <= n <= 8 uses a
    minimal fixed-order backtracker.
    """
    if g.n == 0:
        return 0
    for k in range(1, g.n + 1):
        if g.n <= 5:
            if any(
                is_proper(g, Coloring(k, assign))
                for assign in product(range(k), repeat=g.n)
            ):
                return k
        else:
            color = [-1] * g.n

            def ok(v, c):
                return all(color[u] != c for u in g.adj[v] if u < v)

            def rec(v):
                if v == g.n:
                    return True
                for c in range(k):
                    if ok(v, c):
                        color[v] = c
                        if rec(v + 1):
                            return True
                        color[v] = -1
                return False

            if rec(0):
                return k
    return g.n


def exact_coloring_exists_naive(g: Graph, k: int, d: int) -> bool:
    """Independent decision oracle: try every assignment (tiny graphs only)."""
    from exactcolor import is_exact_coloring

    return any(
        is_exact_coloring(g, Coloring(k, assign), d)
        for assign in product(range(k), repeat=g.n)
    )


@pytest.fixture(scope="session")
def bowtie():
    return build_graph(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)])


@pytest.fixture(scope="session")
def two_triangles_bridge():
    return build_graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)])


@pytest.fixture(scope="session")
def sunlet_cactus():
    """C4 with a private triangle on each cycle vertex: one P-cycle, four M."""
    edges = [(0, 1), (1, 2), (2, 3), (3, 0)]
    for i in range(4):
        a, b = 4 + 2 * i, 5 + 2 * i
        edges += [(i, a), (i, b), (a, b)]
    return build_graph(12, edges)
