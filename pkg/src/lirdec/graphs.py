"""Simple graphs, multigraphs with edge multiplicities, and doubling.

Vertices are integers 0..n-1. Edges are canonicalized as (min, max) pairs.
All structures are immutable after construction and safe to share across
parallel workers.
"""

from __future__ import annotations

from typing import Iterable


Edge = tuple[int, int]


def canon_edge(u: int, v: int) -> Edge:
    """Return the (min, max) form of an undirected edge."""
    return (u, v) if u < v else (v, u)


class SimpleGraph:
    """Undirected simple graph: no loops, no parallel edges.

    Attributes:
        n: vertex count.
        edges: sorted tuple of canonical (u, v) pairs, u < v.
        adj: per-vertex tuple of sorted neighbor tuples.
    """

    __slots__ = ("n", "edges", "adj", "_edge_set")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        seen: set[Edge] = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u} not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            e = canon_edge(u, v)
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
        self.n = n
        self.edges: tuple[Edge, ...] = tuple(sorted(seen))
        self._edge_set = frozenset(self.edges)
        neighbors: list[list[int]] = [[] for _ in range(n)]
        for u, v in self.edges:
            neighbors[u].append(v)
            neighbors[v].append(u)
        self.adj: tuple[tuple[int, ...], ...] = tuple(
            tuple(sorted(ns)) for ns in neighbors
        )

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return canon_edge(u, v) in self._edge_set

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = [False] * self.n
        stack = [0]
        seen[0] = True
        count = 1
        while stack:
            u = stack.pop()
            for w in self.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    count += 1
                    stack.append(w)
        return count == self.n

    def connected_components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp = [s]
            stack = [s]
            while stack:
                u = stack.pop()
                for w in self.adj[u]:
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple["SimpleGraph", list[int]]:
        """Induced subgraph on the given vertices.

        Returns (subgraph, index_map) where index_map[i] is the original id
        of subgraph vertex i.
        """
        keep = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(keep)}
        sub_edges = [
            (pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos
        ]
        return SimpleGraph(len(keep), sub_edges), keep

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SimpleGraph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"SimpleGraph(n={self.n}, m={self.m})"


class Multigraph:
    """Simple graph plus a positive multiplicity per edge.

    The degree of a vertex counts multiplicities:
    deg(v) = sum of mult[e] over edges e incident to v.
    """

    __slots__ = ("base", "mult")

    def __init__(self, base: SimpleGraph, mult: dict[Edge, int] | None = None):
        mult = dict(mult) if mult else {}
        for e, mu in mult.items():
            if e != canon_edge(*e) or not base.has_edge(*e):
                raise ValueError(f"multiplicity given for non-edge {e}")
            if mu < 1:
                raise ValueError(f"multiplicity of {e} must be >= 1, got {mu}")
        self.base = base
        # edges without an explicit multiplicity default to 1
        self.mult: dict[Edge, int] = {e: mult.get(e, 1) for e in base.edges}

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self.base.edges

    def degree(self, v: int) -> int:
        return sum(self.mult[canon_edge(v, w)] for w in self.base.adj[v])

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Multigraph)
            and self.base == other.base
            and self.mult == other.mult
        )

    def __hash__(self) -> int:
        return hash((self.base, tuple(sorted(self.mult.items()))))

    def __repr__(self) -> str:
        return f"Multigraph(n={self.n}, m={len(self.edges)})"


def double(g: SimpleGraph) -> Multigraph:
    """The 2-multigraph of g: every edge doubled.

    Raises ValueError when g has no edges (nothing to double).
    """
    if not g.edges:
        raise ValueError("nothing to double: graph has no edges")
    return Multigraph(g, {e: 2 for e in g.edges})


def is_locally_irregular(m: Multigraph) -> bool:
    """True iff adjacent vertices always have distinct degrees."""
    deg = [m.degree(v) for v in range(m.n)]
    return all(deg[u] != deg[v] for u, v in m.edges)


# --- small graph builders -------------------------------------------------


def path_graph(n: int) -> SimpleGraph:
    """Path on n vertices 0-1-...-(n-1)."""
    if n < 1:
        raise ValueError("path needs at least 1 vertex")
    return SimpleGraph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(length: int) -> SimpleGraph:
    """Cycle with `length` vertices (= `length` edges)."""
    if length < 3:
        raise ValueError("cycle needs length >= 3")
    return SimpleGraph(length, [(i, (i + 1) % length) for i in range(length)])


def wheel_graph(n: int) -> SimpleGraph:
    """Wheel of order n: rim cycle 0..n-2 plus hub n-1 joined to the rim."""
    if n < 4:
        raise ValueError("wheel needs order >= 4")
    rim = n - 1
    edges = [(i, (i + 1) % rim) for i in range(rim)]
    edges += [(i, rim) for i in range(rim)]
    return SimpleGraph(n, edges)


def complete_graph(n: int) -> SimpleGraph:
    if n < 1:
        raise ValueError("complete graph needs at least 1 vertex")
    return SimpleGraph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_multipartite_graph(sizes: list[int]) -> SimpleGraph:
    """Complete multipartite graph; part i occupies a contiguous id block."""
    if len(sizes) < 2 or any(s < 1 for s in sizes):
        raise ValueError("need >= 2 parts, all non-empty")
    bounds = [0]
    for s in sizes:
        bounds.append(bounds[-1] + s)
    n = bounds[-1]
    edges = []
    for a in range(len(sizes)):
        for b in range(a + 1, len(sizes)):
            for u in range(bounds[a], bounds[a + 1]):
                for v in range(bounds[b], bounds[b + 1]):
                    edges.append((u, v))
    return SimpleGraph(n, edges)


def two_triangles_graph() -> SimpleGraph:
    """Two triangles sharing one vertex (vertex 0); decomposes into three
    locally irregular paths."""
    return SimpleGraph(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])


def bowtie_graph() -> SimpleGraph:
    """The bow-tie graph B: two pairs of triangles, each pair sharing a
    center vertex, with the two centers joined by a bridge.

    The one known connected graph outside the non-decomposable families that
    needs four colors.
    """
    return SimpleGraph(
        10,
        [
            (0, 1), (0, 2), (1, 2),
            (0, 4), (0, 5), (4, 5),
            (0, 3),
            (3, 6), (3, 7), (6, 7),
            (3, 8), (3, 9), (8, 9),
        ],
    )
