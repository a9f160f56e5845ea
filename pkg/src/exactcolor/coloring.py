"""Coloring model, the exactness validator, and the solver outcome type.

An exact (k, d)-coloring assigns one of k colors to every vertex so that
each vertex has exactly d neighbors of its own color; equivalently, every
color class induces a d-regular subgraph.  Colors may go unused: the
question "does a coloring with at most k classes exist" is monotone in k.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import LengthMismatchError, OutOfRangeError
from .graphs import Graph, connected_components


@dataclass(frozen=True)
class Coloring:
    """k available colors and a per-vertex color index in [0, k)."""

    k: int
    assign: tuple[int, ...]

    def __post_init__(self):
        if any(not 0 <= c < self.k for c in self.assign):
            raise OutOfRangeError("color index outside [0, k)")

    def classes(self) -> list[list[int]]:
        """Vertex lists per color, including empty classes."""
        out: list[list[int]] = [[] for _ in range(self.k)]
        for v, c in enumerate(self.assign):
            out[c].append(v)
        return out


def monochromatic(n: int) -> Coloring:
    return Coloring(1, (0,) * n)


@dataclass(frozen=True)
class SolveOutcome:
    """Value of the exact defective chromatic number for one query.

    Either finite with a witness coloring, or infeasible (the value is
    infinity: no exact coloring exists for any number of colors).  The
    infinite case is a distinct variant, never a sentinel integer.
    """

    chi: int | None
    witness: Coloring | None = None

    @classmethod
    def finite(cls, chi: int, witness: Coloring) -> "SolveOutcome":
        return cls(chi, witness)

    @classmethod
    def infeasible(cls) -> "SolveOutcome":
        return cls(None, None)

    @property
    def is_finite(self) -> bool:
        return self.chi is not None

    @property
    def is_infeasible(self) -> bool:
        return self.chi is None

    def __repr__(self) -> str:
        if self.is_infeasible:
            return "SolveOutcome(infeasible)"
        return f"SolveOutcome(chi={self.chi})"


INFEASIBLE = SolveOutcome.infeasible()


@dataclass(frozen=True)
class ChiBounds:
    """An interval answer [lo, hi] used when a search budget ran out.

    Carried witness attains hi.  This is returned instead of a wrong or
    overclaimed exact value.
    """

    lo: int
    hi: int
    witness: Coloring | None = None


def defects(g: Graph, c: Coloring) -> list[int]:
    """Per-vertex count of same-colored neighbors."""
    if len(c.assign) != g.n:
        raise LengthMismatchError(
            f"coloring covers {len(c.assign)} vertices, graph has {g.n}"
        )
    a = c.assign
    return [sum(1 for u in g.adj[v] if a[u] == a[v]) for v in range(g.n)]


def is_exact_coloring(g: Graph, c: Coloring, d: int) -> bool:
    """True iff every vertex has exactly d same-colored neighbors."""
    if len(c.assign) != g.n:
        return False
    a = c.assign
    for v in range(g.n):
        if sum(1 for u in g.adj[v] if a[u] == a[v]) != d:
            return False
    return True


def is_proper(g: Graph, c: Coloring) -> bool:
    """True iff no edge is monochromatic (exactness with d = 0)."""
    return is_exact_coloring(g, c, 0)


def feasibility_precheck(g: Graph, d: int) -> bool:
    """Cheap necessary conditions for an exact (k, d)-coloring to exist.

    False when d exceeds the minimum degree, or some connected component has
    fewer than d + 1 vertices (a d-regular subgraph needs at least d + 1).
    True is necessary, not sufficient.
    """
    if g.n == 0:
        return True
    if d > g.min_degree():
        return False
    if d >= 1 and any(len(comp) < d + 1 for comp in connected_components(g)):
        return False
    return True
