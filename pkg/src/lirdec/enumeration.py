"""Connected graph catalogs up to isomorphism.

Canonical forms come from iterated degree refinement followed by a minimum
adjacency bitmask over the permutations consistent with the refined cells.
Enumeration augments each smaller catalog entry with one new vertex joined
to a nonempty neighbor set (every connected graph has a non-cut vertex, so
this reaches everything exactly once after deduplication).
"""

from __future__ import annotations

import itertools
import random

from .graphs import SimpleGraph

ENUMERATION_LIMIT = 8
BIPARTITE_ENUMERATION_LIMIT = 10


def _refined_cells(g: SimpleGraph) -> list[list[int]]:
    """Order-invariant vertex partition: iterated neighbor-degree refinement."""
    colors = [g.degree(v) for v in range(g.n)]
    while True:
        sigs = [
            (colors[v], tuple(sorted(colors[w] for w in g.adj[v])))
            for v in range(g.n)
        ]
        ranking = {sig: i for i, sig in enumerate(sorted(set(sigs)))}
        new_colors = [ranking[sigs[v]] for v in range(g.n)]
        if len(set(new_colors)) == len(set(colors)):
            colors = new_colors
            break
        colors = new_colors
    cells: dict[int, list[int]] = {}
    for v in range(g.n):
        cells.setdefault(colors[v], []).append(v)
    return [cells[c] for c in sorted(cells)]


def canonical_key(g: SimpleGraph) -> tuple[int, int]:
    """(n, minimum adjacency bitmask) over refinement-consistent relabelings."""
    n = g.n
    if n == 0:
        return (0, 0)
    cells = _refined_cells(g)
    edges = g.edges
    best = None
    for parts in itertools.product(*(itertools.permutations(c) for c in cells)):
        order = [v for part in parts for v in part]
        pos = [0] * n
        for i, v in enumerate(order):
            pos[v] = i
        mask = 0
        for u, v in edges:
            a, b = pos[u], pos[v]
            if a > b:
                a, b = b, a
            mask |= 1 << (a * n + b)
        if best is None or mask < best:
            best = mask
    return (n, best)


def _augmentations(g: SimpleGraph, side: list[int] | None = None):
    """Graphs obtained by joining one new vertex to a nonempty subset.

    When `side` is given, subsets are drawn from it only (bipartite use).
    """
    pool = side if side is not None else list(range(g.n))
    base = list(g.edges)
    for r in range(1, len(pool) + 1):
        for subset in itertools.combinations(pool, r):
            yield SimpleGraph(g.n + 1, base + [(u, g.n) for u in subset])


_catalog_memo: dict[int, tuple[SimpleGraph, ...]] = {}


def enumerate_connected(n: int) -> list[SimpleGraph]:
    """Every connected simple graph on n vertices, once up to isomorphism."""
    if n < 1:
        raise ValueError("need n >= 1")
    if n > ENUMERATION_LIMIT:
        raise ValueError(
            f"built-in enumeration supports n <= {ENUMERATION_LIMIT}; "
            "ingest a graph6 file for larger orders"
        )
    if n in _catalog_memo:
        return list(_catalog_memo[n])
    reps = [SimpleGraph(1, [])]
    for size in range(2, n + 1):
        if size in _catalog_memo:
            reps = list(_catalog_memo[size])
            continue
        seen: dict[tuple[int, int], SimpleGraph] = {}
        for g in reps:
            for h in _augmentations(g):
                key = canonical_key(h)
                if key not in seen:
                    seen[key] = h
        reps = [seen[k] for k in sorted(seen)]
        _catalog_memo[size] = tuple(reps)
    _catalog_memo.setdefault(n, tuple(reps))
    return list(reps)


def bipartition_sides(g: SimpleGraph) -> tuple[list[int], list[int]] | None:
    """BFS 2-coloring; None when an odd cycle shows up."""
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] != -1:
            continue
        side[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if side[w] == -1:
                    side[w] = 1 - side[u]
                    stack.append(w)
                elif side[w] == side[u]:
                    return None
    return (
        [v for v in range(g.n) if side[v] == 0],
        [v for v in range(g.n) if side[v] == 1],
    )


def enumerate_connected_bipartite(n: int) -> list[SimpleGraph]:
    """Every connected bipartite graph on n vertices, once up to isomorphism."""
    if n < 1:
        raise ValueError("need n >= 1")
    if n > BIPARTITE_ENUMERATION_LIMIT:
        raise ValueError(
            f"bipartite enumeration supports n <= {BIPARTITE_ENUMERATION_LIMIT}"
        )
    reps = [SimpleGraph(1, [])]
    for _ in range(n - 1):
        seen: dict[tuple[int, int], SimpleGraph] = {}
        for g in reps:
            sides = bipartition_sides(g)
            for side in sides:
                if not side:
                    continue
                for h in _augmentations(g, side):
                    key = canonical_key(h)
                    if key not in seen:
                        seen[key] = h
        reps = [seen[k] for k in sorted(seen)]
    return reps


def random_connected_bipartite(n: int, rng: random.Random, extra_edge_rate: float = 0.3) -> SimpleGraph:
    """Seeded random connected bipartite graph on n vertices.

    Builds a spanning tree alternating across a random bipartition, then
    sprinkles extra cross edges.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    sides = [0, 1]
    for _ in range(n - 2):
        sides.append(rng.randrange(2))
    edges = set()
    placed_by_side: dict[int, list[int]] = {0: [], 1: []}
    for v, s in enumerate(sides):
        other = placed_by_side[1 - s]
        if other:
            edges.add(tuple(sorted((v, rng.choice(other)))))
        elif v > 0:
            # no opposite-side vertex yet: flip this vertex's side
            s = 1 - s
            sides[v] = s
            edges.add(tuple(sorted((v, rng.choice(placed_by_side[1 - s])))))
        placed_by_side[s].append(v)
    for u in placed_by_side[0]:
        for v in placed_by_side[1]:
            e = tuple(sorted((u, v)))
            if e not in edges and rng.random() < extra_edge_rate:
                edges.add(e)
    return SimpleGraph(n, edges)
