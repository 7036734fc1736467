"""Immutable graph container, edge-list I/O, BFS, and bipartiteness checks.

Vertex ids are dense 0-based integers and edge ids follow input order, so
every label and witness produced downstream is reproducible from the file.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional, Sequence


class GraphFormatError(ValueError):
    """An edge-list document could not be parsed."""

    def __init__(self, message: str, line: Optional[int] = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class GraphValidationError(ValueError):
    """A parsed edge list violates the graph invariants."""

    def __init__(self, message: str, line: Optional[int] = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


@dataclass(frozen=True, eq=True)
class Graph:
    """Simple connected undirected graph.

    ``adj[v]`` holds ``(neighbor, edge_id)`` pairs sorted by neighbor id;
    ``neighbors[v]`` is the matching bare neighbor tuple and ``nbr_edge[v]``
    maps neighbor -> edge id. The graph is read-only after construction and
    safe to share across workers.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    adj: tuple[tuple[tuple[int, int], ...], ...]
    neighbors: tuple[tuple[int, ...], ...]
    nbr_edge: tuple[dict, ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.neighbors[v])

    def edge_id(self, u: int, v: int) -> int:
        """Edge id of (u, v); raises KeyError if absent."""
        return self.nbr_edge[u][v]

    def edge_endpoints(self, eid: int) -> tuple[int, int]:
        return self.edges[eid]

    def other_endpoint(self, eid: int, v: int) -> int:
        a, b = self.edges[eid]
        return b if a == v else a


@dataclass(frozen=True)
class DistVector:
    """Hop distances from a single source vertex."""

    source: int
    dist: list


@dataclass(frozen=True)
class BipartiteCheck:
    """Two-coloring when bipartite, otherwise an odd-cycle witness."""

    parity: Optional[list]
    odd_cycle: Optional[list]

    @property
    def is_bipartite(self) -> bool:
        return self.odd_cycle is None


def build_graph(n: int, edges: Sequence[tuple[int, int]],
                edge_lines: Optional[Sequence[int]] = None) -> Graph:
    """Validate and freeze a graph from a raw edge list.

    ``edge_lines`` optionally maps edge position -> source line number so
    validation errors can point at the offending input line.
    """
    if n < 1:
        raise GraphValidationError(f"vertex count must be positive, got {n}")

    def line_of(i: int) -> Optional[int]:
        return edge_lines[i] if edge_lines is not None else None

    seen: set = set()
    adj_lists: list = [[] for _ in range(n)]
    for i, (u, v) in enumerate(edges):
        if not (0 <= u < n) or not (0 <= v < n):
            raise GraphValidationError(
                f"edge ({u}, {v}) has a vertex id outside 0..{n - 1}", line_of(i))
        if u == v:
            raise GraphValidationError(f"self-loop at vertex {u}", line_of(i))
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise GraphValidationError(f"duplicate edge ({u}, {v})", line_of(i))
        seen.add(key)
        adj_lists[u].append((v, i))
        adj_lists[v].append((u, i))

    for v in range(n):
        adj_lists[v].sort()

    # connectivity
    if n > 1:
        reached = 1
        mark = bytearray(n)
        mark[0] = 1
        stack = [0]
        while stack:
            x = stack.pop()
            for y, _ in adj_lists[x]:
                if not mark[y]:
                    mark[y] = 1
                    reached += 1
                    stack.append(y)
        if reached != n:
            raise GraphValidationError(
                f"graph is disconnected: reached {reached} of {n} vertices from vertex 0")

    return Graph(
        n=n,
        edges=tuple((u, v) for u, v in edges),
        adj=tuple(tuple(lst) for lst in adj_lists),
        neighbors=tuple(tuple(x for x, _ in lst) for lst in adj_lists),
        nbr_edge=tuple({x: e for x, e in lst} for lst in adj_lists),
    )


def load_graph(text: str) -> Graph:
    """Parse the edge-list format: header ``n m``, then m lines ``u v``.

    Lines whose first non-blank character is ``#`` are comments. Vertex and
    edge counts must match the header exactly.
    """
    header = None
    edges: list = []
    edge_lines: list = []
    m_expected = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        parts = stripped.split()
        if header is None:
            if len(parts) != 2:
                raise GraphFormatError(
                    f"expected header 'n m', got {stripped!r}", lineno)
            try:
                n, m_expected = int(parts[0]), int(parts[1])
            except ValueError:
                raise GraphFormatError(
                    f"non-integer header field in {stripped!r}", lineno) from None
            if m_expected < 0:
                raise GraphFormatError(f"negative edge count {m_expected}", lineno)
            header = (n, m_expected)
            continue
        if len(parts) != 2:
            raise GraphFormatError(f"expected edge 'u v', got {stripped!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(
                f"non-integer vertex id in {stripped!r}", lineno) from None
        if len(edges) == m_expected:
            raise GraphFormatError(
                f"more than the declared {m_expected} edges", lineno)
        edges.append((u, v))
        edge_lines.append(lineno)

    if header is None:
        raise GraphFormatError("empty document: missing 'n m' header")
    if len(edges) != m_expected:
        raise GraphFormatError(
            f"header declares {m_expected} edges but {len(edges)} were given")
    return build_graph(header[0], edges, edge_lines)


def save_graph(g: Graph) -> str:
    """Serialize in the canonical edge-list form; load(save(g)) == g."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def bfs(g: Graph, source: int) -> DistVector:
    """Exact hop distances from ``source``.

    Adjacency is sorted by vertex id, so discovery within a level follows
    ascending ids; callers that need an explicit level order sort by
    (dist, id), which this guarantees to be consistent.
    """
    if not (0 <= source < g.n):
        raise ValueError(f"source {source} out of range 0..{g.n - 1}")
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    neighbors = g.neighbors
    while queue:
        x = queue.popleft()
        dx = dist[x] + 1
        for y in neighbors[x]:
            if dist[y] < 0:
                dist[y] = dx
                queue.append(y)
    return DistVector(source=source, dist=dist)


def check_bipartite(g: Graph) -> BipartiteCheck:
    """Two-color the graph or produce an explicit odd cycle."""
    parity = [-1] * g.n
    parent = [-1] * g.n
    parity[0] = 0
    queue = deque([0])
    while queue:
        x = queue.popleft()
        px = parity[x]
        for y in g.neighbors[x]:
            if parity[y] < 0:
                parity[y] = px ^ 1
                parent[y] = x
                queue.append(y)
            elif parity[y] == px:
                return BipartiteCheck(parity=None,
                                      odd_cycle=_odd_cycle(parent, x, y))
    return BipartiteCheck(parity=parity, odd_cycle=None)


def _odd_cycle(parent: list, x: int, y: int) -> list:
    """Close the cycle through edge (x, y) using the BFS parent forest.

    Both endpoints sit at equal-parity depths, so the walk x..lca..y plus
    the edge (y, x) has odd length.
    """
    def ancestors(v: int) -> list:
        chain = [v]
        while parent[chain[-1]] >= 0:
            chain.append(parent[chain[-1]])
        return chain

    ax, ay = ancestors(x), ancestors(y)
    pos_x = {v: i for i, v in enumerate(ax)}
    for j, v in enumerate(ay):
        if v in pos_x:
            return ax[:pos_x[v] + 1] + ay[:j][::-1]
    raise AssertionError("BFS forest of a connected graph must share a root")
