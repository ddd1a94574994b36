"""Labeled simple undirected graphs and the surgery used by every other module.

Vertices are always ``0..order-1``.  Values are immutable; every operation
returns a fresh :class:`Graph`, relabeling compactly by rank whenever
vertices disappear.  Isolated vertices are allowed (deletions produce them),
but :func:`structural_invariants` insists on a connected input because the
diameter is undefined otherwise.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class Graph:
    """Simple graph as a tuple of strictly sorted neighbor tuples."""

    order: int
    adjacency: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.order < 0:
            raise ValueError("order must be nonnegative")
        if len(self.adjacency) != self.order:
            raise ValueError(
                f"adjacency has {len(self.adjacency)} rows for order {self.order}"
            )
        for v, nbrs in enumerate(self.adjacency):
            prev = -1
            for u in nbrs:
                if not 0 <= u < self.order:
                    raise ValueError(f"neighbor {u} of vertex {v} out of range")
                if u == v:
                    raise ValueError(f"loop at vertex {v}")
                if u <= prev:
                    raise ValueError(f"neighbors of vertex {v} not strictly sorted")
                prev = u
            for u in nbrs:
                if v not in self.adjacency[u]:
                    raise ValueError(f"edge {v}-{u} present only on one side")

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def edges(self) -> tuple[tuple[int, int], ...]:
        """All edges as (u, v) pairs with u < v, in sorted order."""
        return tuple(
            (u, v) for u in range(self.order) for v in self.adjacency[u] if u < v
        )

    @property
    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    def neighbor_masks(self) -> list[int]:
        """Adjacency as one int bitmask per vertex (bit u set iff u adjacent)."""
        masks = []
        for nbrs in self.adjacency:
            m = 0
            for u in nbrs:
                m |= 1 << u
            masks.append(m)
        return masks


def from_edge_list(edges: Iterable[tuple[int, int]], order: int) -> Graph:
    """Build a graph from (possibly repeated) edge pairs on 0..order-1.

    Rejects loops and out-of-range labels, naming the offending pair.
    """
    nbrs: list[set[int]] = [set() for _ in range(order)]
    for pair in edges:
        u, v = pair
        if u == v:
            raise ValueError(f"loop edge ({u},{v}) not allowed")
        if not (0 <= u < order and 0 <= v < order):
            raise ValueError(f"edge ({u},{v}) has a label outside 0..{order - 1}")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(order, tuple(tuple(sorted(s)) for s in nbrs))


def path_graph(n: int) -> Graph:
    """The path on n vertices, 0-1-2-...-(n-1)."""
    return from_edge_list([(i, i + 1) for i in range(n - 1)], n)


def star_graph(leaves: int) -> Graph:
    """Star with center 0 and the given number of leaves."""
    return from_edge_list([(0, i) for i in range(1, leaves + 1)], leaves + 1)


def connected_components(g: Graph) -> list[list[int]]:
    """Vertex lists of the connected components, each sorted, in order of minimum."""
    seen = [False] * g.order
    comps = []
    for s in range(g.order):
        if seen[s]:
            continue
        comp = [s]
        seen[s] = True
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in g.adjacency[v]:
                if not seen[u]:
                    seen[u] = True
                    comp.append(u)
                    queue.append(u)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return g.order <= 1 or len(connected_components(g)) == 1


def _bfs_distances(g: Graph, source: int) -> list[int]:
    dist = [-1] * g.order
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for u in g.adjacency[v]:
            if dist[u] < 0:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


@dataclass(frozen=True)
class StructuralInvariants:
    """Order, pendant count, diameter, and the pendant/support vertex sets."""

    n: int
    p: int
    d: int
    pendant_set: frozenset[int]
    support_set: frozenset[int]


def structural_invariants(g: Graph) -> StructuralInvariants:
    """Exact n, p, d plus pendant and support sets for a connected graph.

    Pendants are the degree-1 vertices; supports are their neighbors; the
    diameter is the maximum BFS distance over all vertex pairs.
    """
    comps = connected_components(g)
    if len(comps) > 1:
        a, b = comps[0][0], comps[1][0]
        raise ValueError(
            f"graph is disconnected: vertices {a} and {b} lie in different components"
        )
    pendants = frozenset(v for v in range(g.order) if g.degree(v) == 1)
    supports = frozenset(u for v in pendants for u in g.adjacency[v])
    diameter = 0
    for v in range(g.order):
        diameter = max(diameter, max(_bfs_distances(g, v)))
    return StructuralInvariants(g.order, len(pendants), diameter, pendants, supports)


@dataclass(frozen=True)
class TreeWitness:
    """A graph together with checked evidence that it is a tree."""

    graph: Graph

    def __post_init__(self) -> None:
        g = self.graph
        if g.order == 0:
            raise ValueError("a tree has at least one vertex")
        if g.edge_count != g.order - 1:
            raise ValueError(
                f"not a tree: {g.edge_count} edges on {g.order} vertices"
            )
        if not is_connected(g):
            raise ValueError("not a tree: graph is disconnected")

    @property
    def is_tree(self) -> bool:
        return True

    @property
    def order(self) -> int:
        return self.graph.order


def induced_subgraph(g: Graph, keep: Iterable[int]) -> Graph:
    """Induced subgraph on the given vertex set, relabeled by rank within it."""
    kept = sorted(set(keep))
    for v in kept:
        if not 0 <= v < g.order:
            raise ValueError(f"vertex {v} out of range")
    rank = {v: i for i, v in enumerate(kept)}
    adj = tuple(
        tuple(rank[u] for u in g.adjacency[v] if u in rank) for v in kept
    )
    return Graph(len(kept), adj)


def delete_vertex(g: Graph, v: int) -> Graph:
    """Graph with v removed and the rest relabeled 0..order-2 preserving order."""
    if not 0 <= v < g.order:
        raise ValueError(f"vertex {v} out of range")
    return induced_subgraph(g, (u for u in range(g.order) if u != v))


def delete_closed_neighborhood(g: Graph, v: int) -> Graph:
    """Induced subgraph on the complement of N[v], relabeled by rank."""
    if not 0 <= v < g.order:
        raise ValueError(f"vertex {v} out of range")
    banned = set(g.adjacency[v]) | {v}
    return induced_subgraph(g, (u for u in range(g.order) if u not in banned))


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """Both graphs side by side; g2's labels are shifted by g1's order."""
    shift = g1.order
    adj = g1.adjacency + tuple(
        tuple(u + shift for u in nbrs) for nbrs in g2.adjacency
    )
    return Graph(g1.order + g2.order, adj)


@dataclass(frozen=True)
class WhiskerVector:
    """One positive whisker count per vertex of the base graph."""

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        for i, a in enumerate(self.entries):
            if a < 1:
                raise ValueError(f"whisker count at vertex {i} must be >= 1, got {a}")

    @classmethod
    def ones(cls, n: int) -> "WhiskerVector":
        return cls((1,) * n)

    @classmethod
    def constant(cls, n: int, value: int) -> "WhiskerVector":
        return cls((value,) * n)

    def __len__(self) -> int:
        return len(self.entries)


def multi_whisker(g: Graph, a: WhiskerVector | Sequence[int]) -> Graph:
    """Attach a_i new pendant vertices to each vertex i.

    Original vertices keep their labels; whisker vertices are labeled
    n, n+1, ... in increasing order of the vertex they hang from.
    """
    vec = a if isinstance(a, WhiskerVector) else WhiskerVector(tuple(a))
    if len(vec) != g.order:
        raise ValueError(
            f"whisker vector has length {len(vec)} for a graph of order {g.order}"
        )
    edges = list(g.edges())
    label = g.order
    for v, count in enumerate(vec.entries):
        for _ in range(count):
            edges.append((v, label))
            label += 1
    return from_edge_list(edges, label)


def parse_edge_spec(text: str) -> list[tuple[int, int]]:
    """Parse comma-separated ``u-v`` tokens with 0-based labels.

    Errors report the 1-based position of the offending token.
    """
    edges = []
    for pos, token in enumerate(text.split(","), start=1):
        token = token.strip()
        if not token:
            raise ValueError(f"empty edge token at position {pos}")
        parts = token.split("-")
        if len(parts) != 2:
            raise ValueError(f"malformed edge token {token!r} at position {pos}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(
                f"non-integer label in token {token!r} at position {pos}"
            ) from None
        if u < 0 or v < 0:
            raise ValueError(f"negative label in token {token!r} at position {pos}")
        edges.append((u, v))
    return edges


def parse_edge_lines(lines: Iterable[str]) -> list[tuple[int, int]]:
    """Parse one ``u v`` (or ``u-v``) pair per line; blank lines are skipped."""
    edges = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line:
            continue
        parts = line.replace("-", " ").split()
        if len(parts) != 2:
            raise ValueError(f"malformed edge on line {lineno}: {raw.rstrip()!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(
                f"non-integer label on line {lineno}: {raw.rstrip()!r}"
            ) from None
        edges.append((u, v))
    return edges


def graph_from_edge_spec(text: str, order: int | None = None) -> Graph:
    """Graph from an inline edge spec; order defaults to 1 + max label."""
    edges = parse_edge_spec(text)
    inferred = 1 + max(max(u, v) for u, v in edges)
    if order is None:
        order = inferred
    elif order < inferred:
        raise ValueError(f"--order {order} smaller than 1 + max label {inferred}")
    return from_edge_list(edges, order)


def edge_spec(g: Graph) -> str:
    """Inverse of parse_edge_spec for display purposes."""
    return ",".join(f"{u}-{v}" for u, v in g.edges())
