"""Exact (k, 2)-coloring of cactus graphs in polynomial time.

Every color class of an exact (k, 2)-coloring induces disjoint cycles, and
in a cactus all cycles are blocks.  So the solver marks each cycle block as
monochromatic (M) or polychromatic (P) on an auxiliary structure and then
paints the graph by one sweep per component:

* preprocess: collect cycle blocks, per-vertex cycle cliques, and which
  cycles own a cycle-simplicial vertex (a vertex lying in exactly one cycle;
  such a cycle is forced monochromatic);
* label: seed every simplicial-owning cycle with M, then propagate through
  the per-vertex cliques until all cycles are labeled or a local guard
  rejects;
* extract: BFS each component from its smallest vertex, painting M-cycles
  with one color, P-cycles properly, and bridges with a differing color.

With two colors a P-cycle must alternate, so odd P-cycles reject; with
three or more colors that guard is dropped.  The resulting labeling is
unique for every cactus that admits a coloring, independent of the scan
order of the propagation loop.

For defect 1 the value is min over perfect matchings M of chi(G/M), which
lies in {1, 2, 3} for cacti; matchings are enumerated under a budget and an
explicit interval [2, 3] is returned if the budget ends the search early.
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass
from enum import Enum

from .coloring import ChiBounds, Coloring, INFEASIBLE, SolveOutcome, monochromatic
from .errors import BadParameterError, IncompleteLabelingError, NotACactusError
from .graphs import (
    BlockCutTree,
    BlockKind,
    Graph,
    block_cut_tree,
    contract_partition,
    cycle_order,
    is_bipartite,
    is_d_regular,
    perfect_matchings,
)

M = "M"
P = "P"


class NoReason(Enum):
    """Machine-readable causes for rejecting an exact (k, 2)-coloring."""

    UNCOVERED_VERTEX = "uncovered_vertex"            # some vertex lies on no cycle
    TWO_SIMPLICIAL_CYCLES_TOUCH = "two_simplicial_cycles_touch"
    ODD_P_CYCLE = "odd_p_cycle"                      # k = 2 only
    ALL_P_CLIQUE = "all_p_clique"                    # some vertex sees no M cycle
    ADJACENT_M = "adjacent_m"                        # propagation forced two touching M cycles


@dataclass
class CactusAux:
    """Cycle structure of a cactus.

    cycles[i] lists cycle i's vertices in cyclic order; cycles are indexed
    by ascending smallest contained vertex.  cliques[j] lists the cycles
    containing vertex j (cycles sharing a vertex are pairwise "adjacent", so
    each such list plays the role of a clique in the auxiliary graph).
    has_w[i] says cycle i contains a cycle-simplicial vertex.  Bridge (edge)
    blocks are kept as adjacency for the extraction sweep.
    """

    g: Graph
    cycles: tuple[tuple[int, ...], ...]
    cliques: tuple[tuple[int, ...], ...]
    has_w: tuple[bool, ...]
    bridge_nbrs: tuple[tuple[int, ...], ...]

    def cycle_adjacency(self) -> set[tuple[int, int]]:
        """Pairs of cycle indices sharing a vertex (the v_i-v_j edges)."""
        pairs = set()
        for cyc_list in self.cliques:
            for a in range(len(cyc_list)):
                for b in range(a + 1, len(cyc_list)):
                    pairs.add((cyc_list[a], cyc_list[b]))
        return pairs


@dataclass
class LabelResult:
    """Outcome of the labeling pass: complete labels, or a rejection reason."""

    labels: tuple[str, ...] | None
    reason: NoReason | None = None

    @property
    def ok(self) -> bool:
        return self.labels is not None


def _guard_cactus(g: Graph, bct: BlockCutTree | None = None) -> BlockCutTree:
    bct = bct or block_cut_tree(g)
    if not bct.is_cactus():
        raise NotACactusError("input is not a cactus")
    return bct


def cactus_preprocess(g: Graph, bct: BlockCutTree | None = None) -> CactusAux:
    """Build the auxiliary cycle structure (cycles, cliques, simplicial flags)."""
    bct = _guard_cactus(g, bct)
    cycles = []
    bridge_pairs = []
    for verts, edges, kind in zip(bct.blocks, bct.block_edges, bct.kinds):
        if kind == BlockKind.CYCLE:
            cycles.append(tuple(cycle_order(verts, edges)))
        else:
            bridge_pairs.append(edges[0])
    cycles.sort(key=min)

    cliques: list[list[int]] = [[] for _ in range(g.n)]
    for i, cyc in enumerate(cycles):
        for v in cyc:
            cliques[v].append(i)
    has_w = [any(len(cliques[v]) == 1 for v in cyc) for cyc in cycles]

    bridge_nbrs: list[list[int]] = [[] for _ in range(g.n)]
    for u, v in bridge_pairs:
        bridge_nbrs[u].append(v)
        bridge_nbrs[v].append(u)

    return CactusAux(
        g=g,
        cycles=tuple(cycles),
        cliques=tuple(tuple(c) for c in cliques),
        has_w=tuple(has_w),
        bridge_nbrs=tuple(tuple(sorted(b)) for b in bridge_nbrs),
    )


def cactus_label(aux: CactusAux, k: int = 2, scan_order=None) -> LabelResult:
    """Assign M/P to every cycle or reject with a reason.

    k = 2 runs the strict variant (odd cycles may not be P); any k >= 3 runs
    the relaxed variant without that check.  scan_order optionally permutes
    the vertex order of the propagation loop; for accepted instances the
    final labeling does not depend on it.
    """
    if k < 2:
        raise BadParameterError("labeling applies to k >= 2")
    n = aux.g.n
    r = len(aux.cycles)
    order = list(range(n)) if scan_order is None else list(scan_order)

    for j in range(n):
        if not aux.cliques[j]:
            return LabelResult(None, NoReason.UNCOVERED_VERTEX)

    labels: list[str | None] = [None] * r
    m_count = [0] * n                      # M-labeled cycles containing vertex j
    unlabeled_in = [len(aux.cliques[j]) for j in range(n)]
    all_p_somewhere = False
    remaining = r

    def apply(i: int, lab: str):
        nonlocal remaining, all_p_somewhere
        labels[i] = lab
        remaining -= 1
        for u in aux.cycles[i]:
            unlabeled_in[u] -= 1
            if lab == M:
                m_count[u] += 1
            elif unlabeled_in[u] == 0 and m_count[u] == 0:
                all_p_somewhere = True

    def m_conflict(i: int) -> bool:
        # an M neighbor exists iff some vertex of cycle i already sees an M cycle
        return any(m_count[u] >= 1 for u in aux.cycles[i])

    # seed: every cycle owning a cycle-simplicial vertex must be monochromatic
    for i in range(r):
        if aux.has_w[i]:
            if m_conflict(i):
                return LabelResult(None, NoReason.TWO_SIMPLICIAL_CYCLES_TOUCH)
            apply(i, M)

    # propagate through the per-vertex cliques until everything is labeled
    while remaining > 0:
        progressed = False
        for j in order:
            clique = aux.cliques[j]
            if unlabeled_in[j] >= 1 and m_count[j] >= 1:
                target = min(i for i in clique if labels[i] is None)
                apply(target, P)
                if k == 2 and len(aux.cycles[target]) % 2 == 1:
                    return LabelResult(None, NoReason.ODD_P_CYCLE)
                if all_p_somewhere:
                    return LabelResult(None, NoReason.ALL_P_CLIQUE)
                progressed = True
                continue
            if unlabeled_in[j] == 1 and m_count[j] == 0:
                target = next(i for i in clique if labels[i] is None)
                if m_conflict(target):
                    return LabelResult(None, NoReason.ADJACENT_M)
                apply(target, M)
                progressed = True
                continue
        if not progressed:
            # unreachable on a genuine cactus: every traversal labels a cycle
            raise RuntimeError("labeling stalled; input violates cactus structure")

    return LabelResult(tuple(labels))


def cactus_extract_coloring(
    g: Graph, aux: CactusAux, labeling: LabelResult | tuple[str, ...], k: int = 2
) -> Coloring:
    """Turn a complete M/P labeling into an exact (k, 2)-coloring.

    Each component is swept from its smallest vertex (colored 0).  The first
    touched vertex of a cycle fixes the whole cycle: M-cycles copy its
    color, P-cycles receive an alternating (k = 2) or smallest-legal proper
    coloring.  Bridge neighbors take the smallest color different from the
    already-colored endpoint, which for k = 2 is the complement.
    """
    labels = labeling.labels if isinstance(labeling, LabelResult) else tuple(labeling)
    if labels is None or any(lab is None for lab in labels):
        raise IncompleteLabelingError("labeling is not complete")
    if k < 2:
        raise BadParameterError("extraction needs k >= 2")

    n = g.n
    color = [-1] * n
    cycle_done = [False] * len(aux.cycles)

    def smallest_except(*banned: int) -> int:
        c = 0
        while c in banned:
            c += 1
        if c >= k:
            raise IncompleteLabelingError("labeling admits no coloring with this k")
        return c

    for root in range(n):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for i in aux.cliques[u]:
                if cycle_done[i]:
                    continue
                cycle_done[i] = True
                cyc = aux.cycles[i]
                start = cyc.index(u)
                ring = cyc[start:] + cyc[:start]
                if labels[i] == M:
                    for w in ring[1:]:
                        color[w] = color[u]
                        queue.append(w)
                else:
                    prev = color[u]
                    for pos, w in enumerate(ring[1:], start=1):
                        if pos == len(ring) - 1:
                            color[w] = smallest_except(prev, color[u])
                        else:
                            color[w] = smallest_except(prev)
                        prev = color[w]
                        queue.append(w)
            for w in aux.bridge_nbrs[u]:
                if color[w] == -1:
                    color[w] = smallest_except(color[u])
                    queue.append(w)

    return Coloring(k, tuple(color))


def cactus_chi2(g: Graph, bct: BlockCutTree | None = None) -> SolveOutcome:
    """Exact 2-defective chromatic number of a cactus, with witness.

    1 for disjoint unions of cycles; 2 when the strict labeling accepts; 3
    when only the relaxed labeling accepts (three colors always suffice for
    an outerplanar graph when any solution exists); infinite otherwise.
    """
    bct = _guard_cactus(g, bct)
    if g.n == 0:
        return SolveOutcome.finite(0, Coloring(0, ()))
    if is_d_regular(g, 2):
        return SolveOutcome.finite(1, monochromatic(g.n))
    aux = cactus_preprocess(g, bct)
    strict = cactus_label(aux, k=2)
    if strict.ok:
        return SolveOutcome.finite(2, cactus_extract_coloring(g, aux, strict, k=2))
    relaxed = cactus_label(aux, k=3)
    if relaxed.ok:
        return SolveOutcome.finite(3, cactus_extract_coloring(g, aux, relaxed, k=3))
    return INFEASIBLE


def _degeneracy_coloring(g: Graph) -> list[int]:
    """Greedy coloring along a smallest-last order; <= 3 colors on outerplanar graphs."""
    deg = [len(a) for a in g.adj]
    removed = [False] * g.n
    heap = [(deg[v], v) for v in range(g.n)]
    heapq.heapify(heap)
    order = []
    while heap:
        d0, v = heapq.heappop(heap)
        if removed[v] or d0 != deg[v]:
            continue
        removed[v] = True
        order.append(v)
        for w in g.adj[v]:
            if not removed[w]:
                deg[w] -= 1
                heapq.heappush(heap, (deg[w], w))
    color = [-1] * g.n
    for v in reversed(order):
        used = {color[w] for w in g.adj[v] if color[w] != -1}
        c = 0
        while c in used:
            c += 1
        color[v] = c
    return color


def cactus_chi1(
    g: Graph,
    bct: BlockCutTree | None = None,
    matching_limit: int = 10**5,
) -> SolveOutcome | ChiBounds:
    """Exact 1-defective chromatic number of a cactus via perfect matchings.

    Infeasible without a perfect matching.  Otherwise min over matchings M
    of chi(G/M), which is 1, 2 or 3 for a cactus; the enumeration stops
    early once a bipartite quotient shows up.  If `matching_limit` matchings
    are exhausted without settling between 2 and 3, the result is the
    explicit interval ChiBounds(2, 3) with a 3-color witness, never a guess.
    """
    _guard_cactus(g, bct)
    if g.n == 0:
        return SolveOutcome.finite(0, Coloring(0, ()))
    if is_d_regular(g, 1):
        return SolveOutcome.finite(1, monochromatic(g.n))
    matchings = perfect_matchings(g, limit=matching_limit)
    if not matchings:
        return INFEASIBLE
    exhaustive = len(matchings) < matching_limit
    fallback: Coloring | None = None
    for m in matchings:
        parts = [list(e) for e in m.edges]
        quotient = contract_partition(g, parts)
        bip, side = is_bipartite(quotient)
        if bip:
            assign = [0] * g.n
            for idx, part in enumerate(parts):
                for v in part:
                    assign[v] = side[idx]
            return SolveOutcome.finite(2, Coloring(2, tuple(assign)))
        if fallback is None:
            q_col = _degeneracy_coloring(quotient)
            assign = [0] * g.n
            for idx, part in enumerate(parts):
                for v in part:
                    assign[v] = q_col[idx]
            fallback = Coloring(3, tuple(assign))
    if exhaustive:
        return SolveOutcome.finite(3, fallback)
    return ChiBounds(2, 3, fallback)
