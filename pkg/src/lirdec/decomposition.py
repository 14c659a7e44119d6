"""Edge-color decompositions of multigraphs and the local-irregularity verifier.

A decomposition splits each edge's multiplicity among k colors. Color 0 is
red and color 1 is blue by convention; a doubled edge therefore has three
states: RR (2,0), RB (1,1), BB (0,2).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graphs import Edge, Multigraph, SimpleGraph, canon_edge

# two-color states of a doubled edge
RR = (2, 0)
RB = (1, 1)
BB = (0, 2)

RED = 0
BLUE = 1


class Decomposition:
    """Per-edge color-count vectors summing to the edge multiplicity."""

    __slots__ = ("host", "k", "assign")

    def __init__(self, host: Multigraph, k: int, assign: dict[Edge, tuple[int, ...]]):
        if k < 1:
            raise ValueError("need at least one color")
        cleaned: dict[Edge, tuple[int, ...]] = {}
        for e in host.edges:
            counts = assign.get(e)
            if counts is None:
                raise ValueError(f"edge {e} has no color assignment")
            counts = tuple(counts)
            if len(counts) != k:
                raise ValueError(f"edge {e}: expected {k} counts, got {len(counts)}")
            if any(c < 0 for c in counts):
                raise ValueError(f"edge {e}: negative color count")
            if sum(counts) != host.mult[e]:
                raise ValueError(
                    f"edge {e}: counts sum {sum(counts)} != multiplicity {host.mult[e]}"
                )
            cleaned[e] = counts
        if len(assign) != len(host.edges):
            extra = set(assign) - set(host.edges)
            raise ValueError(f"assignment for non-edges: {sorted(extra)}")
        self.host = host
        self.k = k
        self.assign = cleaned

    def colors_used(self) -> int:
        """Number of colors with at least one edge unit."""
        return sum(
            1 for c in range(self.k) if any(v[c] for v in self.assign.values())
        )

    def color_class(self, c: int) -> Multigraph | None:
        """The submultigraph induced by color c, or None when c is empty."""
        if not (0 <= c < self.k):
            raise ValueError(f"color {c} out of range")
        edges = {e: v[c] for e, v in self.assign.items() if v[c] > 0}
        if not edges:
            return None
        return Multigraph(SimpleGraph(self.host.n, edges.keys()), edges)

    def relabeled(self, mapping: list[int], new_host: Multigraph) -> "Decomposition":
        """Transfer onto new_host, sending vertex i to mapping[i]."""
        assign = {
            canon_edge(mapping[u], mapping[v]): counts
            for (u, v), counts in self.assign.items()
        }
        return Decomposition(new_host, self.k, assign)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Decomposition)
            and self.host == other.host
            and self.k == other.k
            and self.assign == other.assign
        )

    def __repr__(self) -> str:
        return f"Decomposition(n={self.host.n}, m={len(self.host.edges)}, k={self.k})"


@dataclass
class VerifyReport:
    """Conflicts found by verify(); empty means locally irregular."""

    conflicts: list[tuple[int, Edge, int]] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.conflicts


def color_degree(d: Decomposition, v: int, c: int) -> int:
    """Degree of v in the color-c submultigraph."""
    if not (0 <= v < d.host.n):
        raise ValueError(f"vertex {v} out of range")
    if not (0 <= c < d.k):
        raise ValueError(f"color {c} out of range")
    return sum(d.assign[canon_edge(v, w)][c] for w in d.host.base.adj[v])


def color_degree_table(d: Decomposition) -> list[list[int]]:
    """All color degrees at once: table[v][c]."""
    table = [[0] * d.k for _ in range(d.host.n)]
    for (u, v), counts in d.assign.items():
        for c, cnt in enumerate(counts):
            if cnt:
                table[u][c] += cnt
                table[v][c] += cnt
    return table


def verify(d: Decomposition) -> VerifyReport:
    """Check that every color induces a locally irregular submultigraph.

    A conflict (c, {u,v}, deg) is recorded whenever edge {u,v} carries color
    c and both endpoints have the same color-c degree. Raises ValueError on a
    malformed decomposition (count sums not matching multiplicities).
    """
    for e, counts in d.assign.items():
        if sum(counts) != d.host.mult[e]:
            raise ValueError(f"malformed decomposition at edge {e}")
    table = color_degree_table(d)
    conflicts = []
    for c in range(d.k):
        for e in d.host.edges:
            if d.assign[e][c] >= 1:
                u, v = e
                if table[u][c] == table[v][c]:
                    conflicts.append((c, e, table[u][c]))
    return VerifyReport(conflicts)
