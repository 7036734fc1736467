"""Theta classes of a median graph, basepoint orientation, and halfspaces.

Two edges are related when they are opposite sides of some 4-cycle; the
theta classes are the transitive closure of that relation. On median input
every class is a perfect-matching cutset whose removal leaves exactly two
components (the halfspaces). Orienting every edge away from a basepoint v0
gives each vertex its ingoing / outgoing class sets, the raw material for
the cube enumeration.
"""
from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, bfs


class NonMedianGraphError(RuntimeError):
    """A structural invariant that holds on median graphs failed.

    The decomposition does not verify medianness up front; it raises this
    as soon as the input contradicts an invariant it relies on.
    """


@dataclass(frozen=True)
class ThetaDecomposition:
    """Edge classes plus the v0-oriented incidence indexes.

    ``incident[v]`` maps class id -> the unique incident edge id (classes
    are matchings, so at most one edge per class touches a vertex).
    ``in_classes[v]`` / ``out_classes[v]`` split ``incident[v]`` by the
    orientation: an edge (u, v) points u -> v when dist0[u] < dist0[v].
    """

    v0: int
    dist0: list
    q: int
    edge_class: list
    class_edges: list
    incident: tuple
    in_classes: tuple
    out_classes: tuple
    ortho_pairs: frozenset


@dataclass(frozen=True)
class HalfspaceSides:
    """Side bit per vertex for one class; True = the side away from v0."""

    cls: int
    side: list


def compute_theta(g: Graph, v0: int = 0) -> ThetaDecomposition:
    """Group edges into theta classes and index them around each vertex.

    Squares are enumerated at their farthest-from-v0 corner: every pair of
    ingoing edges there must close a 4-cycle through a unique common
    neighbor two levels down. Missing or ambiguous completions, equal-level
    edges, oversized class counts, and non-matching classes all raise
    NonMedianGraphError.
    """
    if not (0 <= v0 < g.n):
        raise ValueError(f"basepoint {v0} out of range 0..{g.n - 1}")
    dist0 = bfs(g, v0).dist
    edges = g.edges
    m = g.m

    for eid, (u, v) in enumerate(edges):
        if dist0[u] == dist0[v]:
            raise NonMedianGraphError(
                f"edge ({u}, {v}) joins vertices at equal distance from the "
                f"basepoint; graph is not bipartite")

    parent = list(range(m))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a: int, b: int) -> None:
        ra, rb = find(a), find(b)
        if ra != rb:
            if ra < rb:
                parent[rb] = ra
            else:
                parent[ra] = rb

    square_pairs: list = []
    nbr_edge = g.nbr_edge
    for z in range(g.n):
        dz = dist0[z]
        inn = [(x, e) for x, e in g.adj[z] if dist0[x] < dz]
        if len(inn) < 2:
            continue
        target = dz - 2
        for i in range(len(inn) - 1):
            a, ea = inn[i]
            na = nbr_edge[a]
            for j in range(i + 1, len(inn)):
                b, eb = inn[j]
                nb = nbr_edge[b]
                src, other = (na, nb) if len(na) <= len(nb) else (nb, na)
                w = -1
                for x in src:
                    if dist0[x] == target and x in other:
                        if w >= 0:
                            raise NonMedianGraphError(
                                f"vertices {a} and {b} have two common "
                                f"neighbors below them (induced K_2,3)")
                        w = x
                if w < 0:
                    raise NonMedianGraphError(
                        f"ingoing edges of vertex {z} through {a} and {b} "
                        f"close no square")
                union(ea, nb[w])
                union(eb, na[w])
                square_pairs.append((ea, eb))

    # canonical class ids: ascending minimum edge id
    root_to_cls: dict = {}
    edge_class = [0] * m
    class_edges: list = []
    for eid in range(m):
        r = find(eid)
        c = root_to_cls.get(r)
        if c is None:
            c = len(class_edges)
            root_to_cls[r] = c
            class_edges.append([])
        edge_class[eid] = c
        class_edges[c].append(eid)
    q = len(class_edges)

    if g.n > 1 and q >= g.n:
        raise NonMedianGraphError(f"class count {q} is not below n = {g.n}")
    if 2 * g.n - m - q > 2:
        raise NonMedianGraphError(
            f"count identity violated: 2n - m - q = {2 * g.n - m - q} > 2")

    incident: list = [dict() for _ in range(g.n)]
    for eid, (u, v) in enumerate(edges):
        c = edge_class[eid]
        for x in (u, v):
            if c in incident[x]:
                raise NonMedianGraphError(
                    f"class {c} is not a matching: two of its edges share "
                    f"vertex {x}")
            incident[x][c] = eid

    in_classes: list = []
    out_classes: list = []
    for v in range(g.n):
        dn = dist0[v]
        ins, outs = [], []
        for c, eid in incident[v].items():
            if dist0[g.other_endpoint(eid, v)] < dn:
                ins.append(c)
            else:
                outs.append(c)
        ins.sort()
        outs.sort()
        in_classes.append(tuple(ins))
        out_classes.append(tuple(outs))

    ortho = set()
    for ea, eb in square_pairs:
        ca, cb = edge_class[ea], edge_class[eb]
        ortho.add((ca, cb) if ca < cb else (cb, ca))

    return ThetaDecomposition(
        v0=v0,
        dist0=dist0,
        q=q,
        edge_class=edge_class,
        class_edges=class_edges,
        incident=tuple(incident),
        in_classes=tuple(in_classes),
        out_classes=tuple(out_classes),
        ortho_pairs=frozenset(ortho),
    )


def orthogonal(theta: ThetaDecomposition, i: int, j: int) -> bool:
    """True when classes i and j appear on opposite sides of one square."""
    if i == j:
        raise ValueError("orthogonality is defined for distinct classes")
    return ((i, j) if i < j else (j, i)) in theta.ortho_pairs


def halfspace_sides(g: Graph, theta: ThetaDecomposition,
                    cls: int) -> HalfspaceSides:
    """Assign each vertex to a side of the given class's cut.

    Uses the representative edge (u, v) of the class with u closer to v0:
    a vertex belongs to the far side exactly when it is strictly closer
    to v. A distance tie contradicts bipartiteness and raises.
    """
    if not (0 <= cls < theta.q):
        raise ValueError(f"class id {cls} out of range 0..{theta.q - 1}")
    eid = theta.class_edges[cls][0]
    u, v = g.edges[eid]
    if theta.dist0[u] > theta.dist0[v]:
        u, v = v, u
    du = bfs(g, u).dist
    dv = bfs(g, v).dist
    side = [False] * g.n
    for x in range(g.n):
        if du[x] == dv[x]:
            raise NonMedianGraphError(
                f"vertex {x} is equidistant from both endpoints of an edge "
                f"of class {cls}")
        side[x] = dv[x] < du[x]
    return HalfspaceSides(cls=cls, side=side)
