"""Structural graph classification and recognition of the non-decomposable
families.

The triangle family is built recursively: start from a triangle; repeatedly
pick a degree-2 vertex lying on a triangle and glue onto it either a pendant
path of even length, or a path of odd length whose far end lands on a fresh
triangle. Members are exactly the connected graphs whose blocks are
vertex-disjoint triangles and bridges, where every triangle-to-triangle
path is odd, every pendant path is even, and all branching happens at
triangle vertices.

The wider family adds odd-length paths and odd cycles; together these are
exactly the connected graphs with no locally irregular decomposition.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .graphs import SimpleGraph, canon_edge


class ClassKind(Enum):
    PATH = "path"
    CYCLE = "cycle"
    WHEEL = "wheel"
    COMPLETE = "complete"
    COMPLETE_MULTIPARTITE = "complete-multipartite"
    T_FAMILY = "t-family"
    ODD_PATH = "odd-path"
    ODD_CYCLE = "odd-cycle"
    OTHER = "other"


@dataclass
class Classification:
    kind: ClassKind
    part_sizes: tuple[int, ...] | None = None  # only for complete multipartite


@dataclass
class Attachment:
    """One construction step: a path glued onto `host`, optionally ending in
    a new triangle whose remaining two vertices are `triangle`."""

    host: int
    path: list[int]  # host, interior..., far end
    triangle: tuple[int, int] | None = None


@dataclass
class TWitness:
    """Replayable construction of a triangle-family member."""

    root: tuple[int, int, int]
    steps: list[Attachment] = field(default_factory=list)


@dataclass
class TPrimeResult:
    member: bool
    kind: ClassKind | None = None  # ODD_PATH, ODD_CYCLE or T_FAMILY
    witness: TWitness | None = None


def path_order(g: SimpleGraph) -> list[int] | None:
    """Vertex order along g when g is a path, else None."""
    if g.n == 1:
        return [0] if g.m == 0 else None
    if g.m != g.n - 1 or not g.is_connected():
        return None
    ends = [v for v in range(g.n) if g.degree(v) == 1]
    if len(ends) != 2 or any(g.degree(v) > 2 for v in range(g.n)):
        return None
    order = [ends[0]]
    prev = -1
    while len(order) < g.n:
        nxt = [w for w in g.adj[order[-1]] if w != prev]
        prev = order[-1]
        order.append(nxt[0])
    return order


def cycle_order(g: SimpleGraph) -> list[int] | None:
    """Vertex order around g when g is a single cycle, else None."""
    if g.n < 3 or g.m != g.n or not g.is_connected():
        return None
    if any(g.degree(v) != 2 for v in range(g.n)):
        return None
    order = [0]
    prev = -1
    while len(order) < g.n:
        nxt = [w for w in g.adj[order[-1]] if w != prev]
        prev = order[-1]
        order.append(nxt[0])
    return order


def wheel_hub(g: SimpleGraph) -> int | None:
    """Hub vertex when g is a wheel of order >= 5, else None.

    Order-4 wheels coincide with the complete graph and are classified there.
    """
    if g.n < 5 or g.m != 2 * (g.n - 1):
        return None
    hubs = [v for v in range(g.n) if g.degree(v) == g.n - 1]
    if len(hubs) != 1:
        return None
    hub = hubs[0]
    if any(g.degree(v) != 3 for v in range(g.n) if v != hub):
        return None
    rim, _ = g.induced_subgraph([v for v in range(g.n) if v != hub])
    return hub if cycle_order(rim) is not None else None


def multipartite_parts(g: SimpleGraph) -> list[list[int]] | None:
    """Parts of g when complete multipartite (>= 2 parts), else None.

    A graph is complete multipartite iff its complement is a disjoint union
    of cliques; the complement components are the parts.
    """
    comp_adj: list[set[int]] = [set() for _ in range(g.n)]
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if not g.has_edge(u, v):
                comp_adj[u].add(v)
                comp_adj[v].add(u)
    seen = [False] * g.n
    parts = []
    for s in range(g.n):
        if seen[s]:
            continue
        stack, comp = [s], [s]
        seen[s] = True
        while stack:
            u = stack.pop()
            for w in comp_adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        comp_set = set(comp)
        for u in comp:
            if not (comp_adj[u] & comp_set) == comp_set - {u}:
                return None  # complement component is not a clique
        parts.append(sorted(comp))
    if len(parts) < 2:
        return None
    return parts


def triangles_of(g: SimpleGraph) -> list[tuple[int, int, int]]:
    out = []
    for u, v in g.edges:
        for w in g.adj[u]:
            if w > v and g.has_edge(v, w):
                out.append((u, v, w))
    return out


def t_family_witness(g: SimpleGraph) -> TWitness | None:
    """Construction witness when g belongs to the triangle family, else None."""
    if g.n < 3 or not g.is_connected():
        return None
    tris = triangles_of(g)
    if not tris:
        return None
    tri_vertices: set[int] = set()
    for tri in tris:
        if tri_vertices & set(tri):
            return None  # triangles must be vertex-disjoint
        tri_vertices.update(tri)
    # cyclomatic count: each triangle is the only cycle it contributes
    if g.m != g.n - 1 + len(tris):
        return None
    for v in range(g.n):
        d = g.degree(v)
        if v in tri_vertices:
            if d not in (2, 3):
                return None
        elif d not in (1, 2):
            return None

    tri_edges = {canon_edge(a, b) for tri in tris for a, b in
                 ((tri[0], tri[1]), (tri[1], tri[2]), (tri[0], tri[2]))}
    bridge_adj: list[list[int]] = [[] for _ in range(g.n)]
    for u, v in g.edges:
        if (u, v) not in tri_edges:
            bridge_adj[u].append(v)
            bridge_adj[v].append(u)

    def follow(start: int, first: int) -> list[int]:
        """Walk the bridge path from a triangle vertex until it ends."""
        path = [start, first]
        while True:
            tail = path[-1]
            if tail in tri_vertices or len(bridge_adj[tail]) == 1:
                return path
            nxt = [w for w in bridge_adj[tail] if w != path[-2]]
            path.append(nxt[0])

    tri_of_vertex = {v: tri for tri in tris for v in tri}
    witness = TWitness(root=tris[0])
    placed = set(tris[0])
    queue = [tris[0]]
    seen_tris = {tris[0]}
    while queue:
        tri = queue.pop(0)
        for v in sorted(tri):
            for first in bridge_adj[v]:
                if first in placed:
                    continue
                path = follow(v, first)
                end = path[-1]
                if end in tri_vertices:
                    if len(path) % 2 != 0:
                        return None  # triangle-to-triangle path must be odd
                    new_tri = tri_of_vertex[end]
                    if new_tri in seen_tris:
                        return None
                    others = tuple(sorted(set(new_tri) - {end}))
                    witness.steps.append(Attachment(v, path, others))
                    seen_tris.add(new_tri)
                    placed.update(path)
                    placed.update(new_tri)
                    queue.append(new_tri)
                else:
                    if len(path) % 2 != 1:
                        return None  # pendant path must have even length
                    witness.steps.append(Attachment(v, path))
                    placed.update(path)
    if len(seen_tris) != len(tris):
        return None
    if len(placed) != g.n:
        return None
    return witness


def recognize_t_prime(g: SimpleGraph) -> TPrimeResult:
    """Membership in the family of graphs with no locally irregular
    decomposition: odd paths, odd cycles, and the triangle family."""
    order = path_order(g)
    if order is not None and g.m >= 1:
        if g.m % 2 == 1:
            return TPrimeResult(True, ClassKind.ODD_PATH)
        return TPrimeResult(False)
    if cycle_order(g) is not None:
        if g.n % 2 == 1:
            return TPrimeResult(True, ClassKind.ODD_CYCLE)
        return TPrimeResult(False)
    witness = t_family_witness(g)
    if witness is not None:
        return TPrimeResult(True, ClassKind.T_FAMILY, witness)
    return TPrimeResult(False)


def classify(g: SimpleGraph) -> Classification:
    """Most specific structural tag, for colorer dispatch."""
    if not g.is_connected():
        raise ValueError("classification requires a connected graph")
    if path_order(g) is not None:
        return Classification(ClassKind.PATH)
    if cycle_order(g) is not None:
        return Classification(ClassKind.CYCLE)
    if g.m == g.n * (g.n - 1) // 2:
        return Classification(ClassKind.COMPLETE)
    if wheel_hub(g) is not None:
        return Classification(ClassKind.WHEEL)
    parts = multipartite_parts(g)
    if parts is not None:
        return Classification(
            ClassKind.COMPLETE_MULTIPARTITE,
            tuple(sorted(len(p) for p in parts)),
        )
    if t_family_witness(g) is not None:
        return Classification(ClassKind.T_FAMILY)
    return Classification(ClassKind.OTHER)


def t_family_members(max_vertices: int, limit: int | None = None) -> list[tuple[SimpleGraph, TWitness]]:
    """Generate triangle-family members by replaying the construction.

    Deterministic breadth-first expansion, deduplicated by a cheap canonical
    key; every returned graph carries its construction witness.
    """
    from .enumeration import canonical_key  # local import: avoid cycle at load

    k3 = SimpleGraph(3, [(0, 1), (1, 2), (0, 2)])
    out: list[tuple[SimpleGraph, TWitness]] = []
    seen = set()
    frontier = [k3]
    while frontier:
        next_frontier = []
        for g in frontier:
            key = canonical_key(g)
            if key in seen:
                continue
            seen.add(key)
            witness = t_family_witness(g)
            if witness is None:
                raise AssertionError("generator produced a non-member")
            out.append((g, witness))
            if limit is not None and len(out) >= limit:
                return out
            tris = triangles_of(g)
            tri_vertices = {v for tri in tris for v in tri}
            hosts = [v for v in tri_vertices if g.degree(v) == 2]
            for host in hosts:
                # pendant paths of even length
                for ln in (2, 4, 6):
                    if g.n + ln <= max_vertices:
                        edges = list(g.edges)
                        prev = host
                        for i in range(ln):
                            edges.append((prev, g.n + i))
                            prev = g.n + i
                        next_frontier.append(SimpleGraph(g.n + ln, edges))
                # odd paths ending in a fresh triangle
                for ln in (1, 3, 5):
                    if g.n + ln + 2 <= max_vertices:
                        edges = list(g.edges)
                        prev = host
                        for i in range(ln):
                            edges.append((prev, g.n + i))
                            prev = g.n + i
                        a, b = g.n + ln, g.n + ln + 1
                        edges += [(prev, a), (prev, b), (a, b)]
                        next_frontier.append(SimpleGraph(g.n + ln + 2, edges))
        frontier = next_frontier
    return out
