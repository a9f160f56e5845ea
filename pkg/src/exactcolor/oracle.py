"""Ground-truth solvers for exact (k, d)-coloring on small graphs.

Two independent routes are provided on purpose:

* ``brute_solve`` / ``brute_chi``: complete backtracking over colorings in
  fixed vertex order with defect-aware pruning.
* ``chi_via_quotients``: enumerate partitions of the vertex set into
  connected d-regular induced subgraphs, contract each, and take the minimum
  chromatic number of the quotients; the witness colors each part with its
  quotient color.

Partitions are restricted to connected parts: splitting a disconnected
d-regular part into its components never increases the quotient chromatic
number (the merged parts are non-adjacent, so any proper coloring of the
coarser quotient lifts), hence the minimum over connected-part partitions
equals the minimum over all partitions into d-regular induced subgraphs.

Unused colors are allowed throughout: an exact coloring needs at most
floor(n / (d + 1)) nonempty classes, which also supplies the infeasibility
certificate in ``brute_chi``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .chromatic import DEFAULT_BUDGET, _Budget, chromatic_number, max_clique
from .coloring import Coloring, INFEASIBLE, SolveOutcome, feasibility_precheck
from .errors import BadParameterError, BudgetExceededError
from .graphs import Graph, connected_components, contract_partition, induced_subgraph


def _solve_component(g: Graph, k: int, d: int, b: _Budget) -> list[int] | None:
    """Backtracking search on a connected graph; returns a color list or None.

    Vertices are colored in index order.  Color c is allowed for vertex v
    only if c <= 1 + max color used before v, so each class pattern is tried
    once.  Pruning: a vertex may never exceed d same-colored neighbors; a
    vertex whose neighborhood is fully colored must sit at exactly d; a
    vertex whose uncolored neighbors cannot lift it to d is a dead end.
    """
    n = g.n
    if n == 0:
        return []
    if k < 1:
        return None
    color = [-1] * n
    same = [0] * n
    colored_nb = [0] * n
    deg = [len(a) for a in g.adj]
    lower_nb = [tuple(u for u in g.adj[v] if u < v) for v in range(n)]

    def rec(v: int, used: int) -> bool:
        b.spend()
        if v == n:
            return True
        cap = min(k - 1, used)
        for c in range(cap + 1):
            same_v = sum(1 for u in lower_nb[v] if color[u] == c)
            unc_v = deg[v] - colored_nb[v]
            if same_v > d or same_v + unc_v < d or (unc_v == 0 and same_v != d):
                continue
            color[v] = c
            same[v] = same_v
            for u in g.adj[v]:
                colored_nb[u] += 1
            matched = [u for u in lower_nb[v] if color[u] == c]
            for u in matched:
                same[u] += 1
            ok = True
            for u in lower_nb[v]:
                unc_u = deg[u] - colored_nb[u]
                if same[u] > d or same[u] + unc_u < d or (unc_u == 0 and same[u] != d):
                    ok = False
                    break
            if ok and rec(v + 1, max(used, c + 1)):
                return True
            for u in matched:
                same[u] -= 1
            for u in g.adj[v]:
                colored_nb[u] -= 1
            color[v] = -1
        return False

    return color if rec(0, 0) else None


def brute_solve(
    g: Graph, k: int, d: int, budget: int = DEFAULT_BUDGET
) -> Coloring | None:
    """Decide whether an exact (k, d)-coloring exists; witness on yes, None on no.

    Components are independent (color classes may merge across them), so the
    search runs per component.  Raises BudgetExceededError when the node
    budget runs out.
    """
    if d < 0:
        raise BadParameterError("defect must be nonnegative")
    if k < 0:
        raise BadParameterError("color count must be nonnegative")
    if g.n == 0:
        return Coloring(k, ())
    if k == 0 or not feasibility_precheck(g, d):
        return None
    b = _Budget(budget)
    assign = [0] * g.n
    for comp in connected_components(g):
        sub, verts = induced_subgraph(g, comp)
        sub_color = _solve_component(sub, k, d, b)
        if sub_color is None:
            return None
        for i, v in enumerate(verts):
            assign[v] = sub_color[i]
    return Coloring(k, tuple(assign))


def _kcap(n: int, d: int) -> int:
    # every nonempty class has >= d + 1 vertices, so at most n // (d + 1) classes
    return max(1, n // (d + 1))


def brute_chi(
    g: Graph,
    d: int,
    k_max: int | None = None,
    budget: int = DEFAULT_BUDGET,
) -> SolveOutcome:
    """Smallest k admitting an exact (k, d)-coloring, or the infeasible outcome.

    If no coloring exists with floor(n / (d+1)) classes then none exists at
    all (nonempty classes have at least d + 1 vertices and the question is
    monotone in k), which certifies infeasibility.  A k_max below that
    certificate threshold that yields no answer raises BudgetExceededError
    rather than guessing.
    """
    if d < 0:
        raise BadParameterError("defect must be nonnegative")
    if g.n == 0:
        return SolveOutcome.finite(0, Coloring(0, ()))
    if not feasibility_precheck(g, d):
        return INFEASIBLE
    b = _Budget(budget)
    chi = 0
    assign = [0] * g.n
    for comp in connected_components(g):
        sub, verts = induced_subgraph(g, comp)
        cap = _kcap(sub.n, d)
        if k_max is not None:
            cap = min(cap, k_max)
        lower = max(1, math.ceil(len(max_clique(sub, b.left)) / (d + 1)))
        sub_color = None
        found_k = None
        for k in range(min(lower, cap), cap + 1):
            sub_color = _solve_component(sub, k, d, b)
            if sub_color is not None:
                found_k = k
                break
        if found_k is None:
            if k_max is not None and k_max < _kcap(sub.n, d):
                raise BudgetExceededError(
                    f"no coloring with k <= {k_max}; infeasibility not certified"
                )
            return INFEASIBLE
        chi = max(chi, found_k)
        for i, v in enumerate(verts):
            assign[v] = sub_color[i]
    return SolveOutcome.finite(chi, Coloring(chi, tuple(assign)))


# ---------------------------------------------------------------------------
# Partitions into d-regular induced subgraphs
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RegularPartition:
    """A partition of the vertex set into connected d-regular induced parts."""

    parts: tuple[tuple[int, ...], ...]
    d: int


def _connected_regular_sets(
    g: Graph, d: int, v: int, avail: set[int], b: _Budget
) -> list[tuple[int, ...]]:
    """All connected vertex sets S with v in S, S within avail, inducing a
    d-regular subgraph.  Each set is produced exactly once; the growth order
    makes the output deterministic."""
    if d == 0:
        return [(v,)]
    in_part = {v}
    deg_in = {v: 0}
    seen = {v}
    results: list[tuple[int, ...]] = []

    def rec(ext: list[int]):
        b.spend()
        if all(deg_in[u] == d for u in in_part):
            results.append(tuple(sorted(in_part)))
            return  # any strict superset would push a saturated vertex past d
        for i, w in enumerate(ext):
            inc = [u for u in g.adj[w] if u in in_part]
            if len(inc) > d or any(deg_in[u] == d for u in inc):
                continue  # stays invalid forever: degrees only grow
            in_part.add(w)
            deg_in[w] = len(inc)
            for u in inc:
                deg_in[u] += 1
            fresh = sorted(
                x for x in g.adj[w] if x in avail and x not in seen
            )
            seen.update(fresh)
            rec(ext[i + 1:] + fresh)
            seen.difference_update(fresh)
            for u in inc:
                deg_in[u] -= 1
            del deg_in[w]
            in_part.remove(w)

    first = sorted(u for u in g.adj[v] if u in avail)
    seen.update(first)
    rec(first)
    return results


def enumerate_regular_partitions(
    g: Graph,
    d: int,
    limit: int | None = None,
    budget: int = DEFAULT_BUDGET,
) -> list[RegularPartition]:
    """All partitions of V into connected d-regular induced subgraphs.

    The lowest-indexed unassigned vertex starts a new part and the part is
    extended to every d-regular completion; recursion then continues on the
    rest.  Output order is deterministic, so `limit`-truncated prefixes are
    reproducible.
    """
    if d < 0:
        raise BadParameterError("defect must be nonnegative")
    b = _Budget(budget)
    out: list[RegularPartition] = []
    avail = set(range(g.n))
    parts: list[tuple[int, ...]] = []

    def rec() -> bool:
        b.spend()
        if not avail:
            out.append(RegularPartition(tuple(parts), d))
            return limit is not None and len(out) >= limit
        v = min(avail)
        avail.discard(v)
        candidates = _connected_regular_sets(g, d, v, avail, b)
        avail.add(v)
        for s in candidates:
            avail.difference_update(s)
            parts.append(s)
            done = rec()
            parts.pop()
            avail.update(s)
            if done:
                return True
        return False

    rec()
    return out


def chi_via_quotients(
    g: Graph, d: int, budget: int = DEFAULT_BUDGET
) -> SolveOutcome:
    """Exact defective chromatic number as min over quotient chromatic numbers.

    Infeasible when no partition into d-regular induced subgraphs exists;
    otherwise the minimum chromatic number over all contracted quotients,
    with the witness obtained by blowing the best quotient coloring back up
    (every part takes its quotient vertex's color).
    """
    if g.n == 0:
        return SolveOutcome.finite(0, Coloring(0, ()))
    partitions = enumerate_regular_partitions(g, d, budget=budget)
    if not partitions:
        return INFEASIBLE
    lower = max(1, math.ceil(len(max_clique(g, budget)) / (d + 1)))
    best_chi: int | None = None
    best_assign: tuple[int, ...] | None = None
    for rp in partitions:
        quotient = contract_partition(g, rp.parts)
        q_chi, q_col = chromatic_number(quotient, budget)
        if best_chi is None or q_chi < best_chi:
            assign = [0] * g.n
            for part_index, part in enumerate(rp.parts):
                for v in part:
                    assign[v] = q_col.assign[part_index]
            best_chi, best_assign = q_chi, tuple(assign)
            if best_chi <= lower:
                break
    return SolveOutcome.finite(best_chi, Coloring(best_chi, best_assign))
