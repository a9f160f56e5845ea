"""Constant-time solvers for the structured families with known exact values.

Each finite answer comes with a witness coloring built the way the
corresponding existence argument builds it, so every closed form can be
re-checked by the exactness validator.  Values outside the proven parameter
ranges are not extrapolated: wheels only support d = 1 here and other
defects are left to the brute-force oracle.
"""

from __future__ import annotations

import math
from collections import deque

from .chromatic import chromatic_number, max_clique
from .coloring import Coloring, INFEASIBLE, SolveOutcome, monochromatic
from .errors import BadParameterError, NotATreeError
from .families import wheel
from .graphs import Graph, contract_partition, is_connected, is_d_regular


def chi_cycle(n: int, d: int) -> SolveOutcome:
    """Exact d-defective chromatic number of the cycle C_n.

    d = 1: 2 when 4 | n, 3 when n is even but not divisible by 4, infinite
    for odd n.  d = 2: 1 (monochromatic).  d > 2 is infeasible since cycle
    vertices have degree 2.
    """
    if n < 3:
        raise BadParameterError("cycle needs n >= 3")
    if d < 1:
        raise BadParameterError("chi_cycle covers d >= 1; use chromatic_number for d = 0")
    if d == 2:
        return SolveOutcome.finite(1, monochromatic(n))
    if d > 2:
        return INFEASIBLE
    if n % 2 == 1:
        return INFEASIBLE
    # pair consecutive vertices (2i, 2i+1); each pair is one matched edge
    pair_colors = [i % 2 for i in range(n // 2)]
    if n % 4 == 0:
        k = 2
    else:
        k = 3
        pair_colors[-1] = 2  # odd pair count: close the ring with a third color
    assign = tuple(pair_colors[v // 2] for v in range(n))
    return SolveOutcome.finite(k, Coloring(k, assign))


def chi_wheel(n: int, d: int) -> SolveOutcome:
    """Exact 1-defective chromatic number of the wheel W_n (rim 0..n-2, hub n-1).

    2 for n = 4, 3 for even n > 4, infinite for odd n.  Only d = 1 is
    supported; other defects on wheels go through the oracle.
    """
    if n < 4:
        raise BadParameterError("wheel needs n >= 4")
    if d != 1:
        raise BadParameterError("chi_wheel covers d = 1 only")
    if n % 2 == 1:
        return INFEASIBLE
    if n == 4:
        return SolveOutcome.finite(2, Coloring(2, (0, 0, 1, 1)))
    # match the hub with rim vertex 0, pair the remaining rim path, and
    # properly color the contracted fan
    g = wheel(n)
    parts = [[n - 1, 0]] + [[i, i + 1] for i in range(1, n - 2, 2)]
    quotient = contract_partition(g, parts)
    q_chi, q_col = chromatic_number(quotient)
    assign = [0] * n
    for idx, part in enumerate(parts):
        for v in part:
            assign[v] = q_col.assign[idx]
    return SolveOutcome.finite(q_chi, Coloring(q_chi, tuple(assign)))


def _tree_perfect_matching(g: Graph) -> list[tuple[int, int]] | None:
    """The unique perfect matching of a tree, by pairing leaves inward."""
    if g.n % 2 == 1:
        return None
    if g.n == 0:
        return []
    parent = [-1] * g.n
    order = []
    seen = [False] * g.n
    seen[0] = True
    queue = deque([0])
    while queue:
        u = queue.popleft()
        order.append(u)
        for w in g.adj[u]:
            if not seen[w]:
                seen[w] = True
                parent[w] = u
                queue.append(w)
    matched = [False] * g.n
    pairs = []
    for v in reversed(order):  # deepest first
        if matched[v]:
            continue
        p = parent[v]
        if p == -1 or matched[p]:
            return None
        matched[v] = matched[p] = True
        pairs.append((min(p, v), max(p, v)))
    return sorted(pairs)


def chi_tree(g: Graph, d: int) -> SolveOutcome:
    """Exact d-defective chromatic number of a tree.

    For d = 1 the value is chi(T/M) for the unique perfect matching M when
    one exists (1 for K2, else 2), and infinite otherwise.  Any d >= 2 is
    infeasible because a non-trivial tree has a leaf.
    """
    if not (g.n >= 1 and g.m == g.n - 1 and is_connected(g)):
        raise NotATreeError("input is not a tree")
    if d < 0:
        raise BadParameterError("defect must be nonnegative")
    if g.n == 1:
        return SolveOutcome.finite(1, monochromatic(1)) if d == 0 else INFEASIBLE
    if d == 0:
        chi, col = chromatic_number(g)
        return SolveOutcome.finite(chi, col)
    if d >= 2:
        return INFEASIBLE
    pairs = _tree_perfect_matching(g)
    if pairs is None:
        return INFEASIBLE
    quotient = contract_partition(g, [list(p) for p in pairs])
    q_chi, q_col = chromatic_number(quotient)
    assign = [0] * g.n
    for idx, part in enumerate(pairs):
        for v in part:
            assign[v] = q_col.assign[idx]
    return SolveOutcome.finite(q_chi, Coloring(q_chi, tuple(assign)))


def chi_complete(n: int, d: int) -> SolveOutcome:
    """n / (d+1) when d + 1 divides n (consecutive blocks of d + 1), else infinite."""
    if n < 1:
        raise BadParameterError("complete graph needs n >= 1")
    if d < 0:
        raise BadParameterError("defect must be nonnegative")
    if n % (d + 1) != 0:
        return INFEASIBLE
    k = n // (d + 1)
    return SolveOutcome.finite(k, Coloring(k, tuple(v // (d + 1) for v in range(n))))


def clique_lower_bound(g: Graph, d: int, budget: int | None = None) -> int:
    """ceil(omega / (d+1)): no color may appear more than d+1 times in a clique."""
    if d < 0:
        raise BadParameterError("defect must be nonnegative")
    kwargs = {} if budget is None else {"budget": budget}
    omega = len(max_clique(g, **kwargs))
    return math.ceil(omega / (d + 1))


def chi_regular_trivial(g: Graph, d: int) -> SolveOutcome | None:
    """Finite(1) with the monochromatic witness when g is d-regular, else None."""
    if g.n == 0:
        return None
    if is_d_regular(g, d):
        return SolveOutcome.finite(1, monochromatic(g.n))
    return None
