"""Exact chromatic number and maximum clique.

Chordal graphs take a mandatory fast path: greedy coloring along the
maximum-cardinality-search order is optimal and simultaneously yields the
clique number.  Everything else goes through iterative-deepening branch and
bound between an exact clique lower bound and a greedy upper bound, with a
node budget that raises instead of guessing.

Intended for quotient graphs of moderate size (tens of vertices) and for
chordal graphs of any size.
"""

from __future__ import annotations

from .coloring import Coloring
from .errors import BudgetExceededError
from .graphs import (
    Graph,
    connected_components,
    induced_subgraph,
    maximum_cardinality_search,
    perfect_elimination_ordering,
)

DEFAULT_BUDGET = 10**8


class _Budget:
    __slots__ = ("left",)

    def __init__(self, nodes: int):
        self.left = nodes

    def spend(self, amount: int = 1):
        self.left -= amount
        if self.left < 0:
            raise BudgetExceededError(nodes=self.left)


def greedy_coloring(g: Graph, order: list[int] | None = None) -> list[int]:
    """First-fit coloring along `order` (default: descending degree)."""
    if order is None:
        order = sorted(range(g.n), key=lambda v: (-len(g.adj[v]), v))
    color = [-1] * g.n
    for v in order:
        used = {color[u] for u in g.adj[v] if color[u] != -1}
        c = 0
        while c in used:
            c += 1
        color[v] = c
    return color


def chordal_greedy(g: Graph) -> tuple[list[int], int] | None:
    """(optimal coloring, clique number) when g is chordal, else None."""
    if perfect_elimination_ordering(g) is None:
        return None
    order = maximum_cardinality_search(g)
    color = greedy_coloring(g, order)
    omega = max(color, default=-1) + 1
    return color, omega


def max_clique(g: Graph, budget: int = DEFAULT_BUDGET) -> list[int]:
    """An exact maximum clique, deterministic for a given graph.

    Chordal graphs (which include block graphs) short-circuit through the
    elimination ordering; otherwise a branch and bound over candidate sets
    runs within `budget` expansion nodes.
    """
    if g.n == 0:
        return []
    peo = perfect_elimination_ordering(g)
    if peo is not None:
        pos = {v: i for i, v in enumerate(peo)}
        best: list[int] = []
        for v in peo:
            cand = [v] + [w for w in g.adj[v] if pos[w] > pos[v]]
            if len(cand) > len(best):
                best = cand
        return sorted(best)

    b = _Budget(budget)
    order = sorted(range(g.n), key=lambda v: (-len(g.adj[v]), v))
    best: list[int] = []

    def expand(clique: list[int], cand: list[int]):
        nonlocal best
        b.spend()
        if len(clique) > len(best):
            best = list(clique)
        if len(clique) + len(cand) <= len(best):
            return
        for i, v in enumerate(cand):
            if len(clique) + len(cand) - i <= len(best):
                return
            clique.append(v)
            expand(clique, [u for u in cand[i + 1:] if g.has_edge(u, v)])
            clique.pop()

    expand([], order)
    return sorted(best)


def clique_number(g: Graph, budget: int = DEFAULT_BUDGET) -> int:
    return len(max_clique(g, budget))


def _exact_k_coloring(g: Graph, k: int, b: _Budget) -> list[int] | None:
    """Backtracking proper k-coloring with DSATUR ordering.

    Symmetry is broken by letting a vertex introduce at most one color that
    is new so far, so color classes appear in canonical order.
    """
    n = g.n
    if n == 0:
        return []
    if k <= 0:
        return None
    color = [-1] * n
    nbr_colors: list[set[int]] = [set() for _ in range(n)]

    def pick() -> int:
        best, key = -1, None
        for v in range(n):
            if color[v] != -1:
                continue
            cand = (len(nbr_colors[v]), len(g.adj[v]), -v)
            if key is None or cand > key:
                best, key = v, cand
        return best

    def rec(assigned: int, used: int) -> bool:
        b.spend()
        if assigned == n:
            return True
        v = pick()
        limit = min(k, used + 1)
        for c in range(limit):
            if c in nbr_colors[v]:
                continue
            color[v] = c
            touched = [u for u in g.adj[v] if c not in nbr_colors[u]]
            for u in touched:
                nbr_colors[u].add(c)
            if rec(assigned + 1, max(used, c + 1)):
                return True
            for u in touched:
                nbr_colors[u].remove(c)
            color[v] = -1
        return False

    return color if rec(0, 0) else None


def _chromatic_connected(g: Graph, budget_obj: _Budget) -> tuple[int, list[int]]:
    fast = chordal_greedy(g)
    if fast is not None:
        color, omega = fast
        return omega, color
    lower = len(max_clique(g, budget_obj.left))
    upper_coloring = greedy_coloring(g)
    upper = max(upper_coloring, default=-1) + 1
    for k in range(lower, upper):
        attempt = _exact_k_coloring(g, k, budget_obj)
        if attempt is not None:
            return k, attempt
    return upper, upper_coloring


def chromatic_number(g: Graph, budget: int = DEFAULT_BUDGET) -> tuple[int, Coloring]:
    """Exact chromatic number with a proper witness coloring.

    Disconnected graphs are solved componentwise; the result is the maximum
    over components.  Raises BudgetExceededError when the node budget runs
    out, so callers can report "unknown" instead of a wrong answer.
    """
    if g.n == 0:
        return 0, Coloring(0, ())
    b = _Budget(budget)
    assign = [0] * g.n
    chi = 0
    for comp in connected_components(g):
        sub, verts = induced_subgraph(g, comp)
        sub_chi, sub_color = _chromatic_connected(sub, b)
        chi = max(chi, sub_chi)
        for i, v in enumerate(verts):
            assign[v] = sub_color[i]
    return chi, Coloring(chi, tuple(assign))
