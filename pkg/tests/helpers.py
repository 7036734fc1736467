"""Shared oracles and corpus builders for the test suite.

Everything here is definitional / brute force and never routes through the
label pipeline it is used to check.
"""
from __future__ import annotations

from medianecc import (bfs, cartesian_product, fixture, gen_grid,
                       gen_hypercube, gen_tree, ladder_set_oracle, orthogonal,
                       peripheral_expansion)


def quick_dimension(g):
    """Largest ingoing-degree under the vertex-0 orientation (= dimension)."""
    dist = bfs(g, 0).dist
    best = 0
    for v in range(g.n):
        k = sum(1 for x in g.neighbors[v] if dist[x] < dist[v])
        if k > best:
            best = k
    return best


def djokovic_classes(g):
    """Edge partition by the distance-side test, independent of squares.

    Two edges share a class when the endpoints of one are split by the
    distance comparison toward the endpoints of the other.
    """
    assigned = [-1] * g.m
    groups = []
    for eid in range(g.m):
        if assigned[eid] >= 0:
            continue
        u, v = g.edges[eid]
        du = bfs(g, u).dist
        dv = bfs(g, v).dist
        group = []
        for e2, (x, y) in enumerate(g.edges):
            if assigned[e2] < 0 and (du[x] < dv[x]) != (du[y] < dv[y]):
                assigned[e2] = eid
                group.append(e2)
        groups.append(frozenset(group))
    return frozenset(groups)


def theta_partition(theta):
    return frozenset(frozenset(edges) for edges in theta.class_edges)


def brute_phi_table(g, theta, dist):
    """(basis, ladder set) -> max distance, computed from all pairs."""
    table = {}
    n = g.n
    dist0 = theta.dist0
    for v in range(n):
        dv = dist[v]
        for u in range(n):
            if dist0[u] + dv[u] != dist0[v]:
                continue
            lad = ladder_set_oracle(g, theta, u, v, dist_from_v=list(dv))
            key = (u, lad)
            if dv[u] > table.get(key, -1):
                table[key] = int(dv[u])
    return table


def median_of(dist, x, y, z):
    """The unique median vertex of a triple in a median graph."""
    meds = [w for w in range(len(dist))
            if dist[x][w] + dist[w][y] == dist[x][y]
            and dist[y][w] + dist[w][z] == dist[y][z]
            and dist[z][w] + dist[w][x] == dist[z][x]]
    assert len(meds) == 1, f"triple ({x},{y},{z}) has {len(meds)} medians"
    return meds[0]


def is_pof(theta, classes):
    classes = tuple(classes)
    for i in range(len(classes)):
        for j in range(i + 1, len(classes)):
            if not orthogonal(theta, classes[i], classes[j]):
                return False
    return True


def small_corpus_graphs():
    """Named median graphs up to ~130 vertices for module-level checks."""
    graphs = [(name, fixture(name))
              for name in ("gstar", "hstar", "fig3", "cogwheel", "fig2c")]
    for seed in range(6):
        n = 2 + (seed * 23 + 7) % 120
        graphs.append((f"tree{seed}", gen_tree(n, seed)))
    for p, q in [(2, 2), (3, 4), (5, 5), (1, 9), (6, 7)]:
        graphs.append((f"grid{p}x{q}", gen_grid(p, q)))
    for k in range(1, 5):
        graphs.append((f"cube{k}", gen_hypercube(k)))
    graphs.append(("prod_tt", cartesian_product(gen_tree(6, 3),
                                                gen_tree(7, 4))))
    graphs.append(("prod_pp", cartesian_product(gen_grid(1, 5),
                                                gen_grid(1, 4))))
    graphs.append(("prod_cube_tree", cartesian_product(gen_hypercube(2),
                                                       gen_tree(5, 9))))
    for seed in range(6):
        g = peripheral_expansion(gen_tree(1, 0), seed, 12, max_n=120)
        graphs.append((f"expand{seed}", g))
    return graphs


def acceptance_corpus_graphs():
    """Deterministic corpus of >= 300 median graphs, n <= 500, dim <= 5."""
    graphs = []

    for i in range(120):
        n = 2 + (i * 67 + 13) % 479
        graphs.append((f"tree_{i}_n{n}", gen_tree(n, 1000 + i)))

    grid_shapes = []
    for p in (1, 2, 3, 4, 5, 6, 7, 8, 10, 12, 15, 18, 20, 22):
        for q in sorted({p, p + 1, 2 * p, 500 // p}):
            if p <= q and p * q <= 500 and (p, q) not in grid_shapes:
                grid_shapes.append((p, q))
    for p, q in grid_shapes:
        graphs.append((f"grid_{p}x{q}", gen_grid(p, q)))

    prod_sizes = [(2, 9), (3, 7), (4, 12), (5, 5), (6, 20), (7, 9),
                  (8, 30), (10, 11), (12, 13), (15, 15), (20, 20), (9, 40),
                  (4, 4), (6, 6), (18, 25), (16, 30)]
    for i, (a, b) in enumerate(prod_sizes):
        for s in (0, 1):
            graphs.append((f"prod_tt_{i}_{s}",
                           cartesian_product(gen_tree(a, 2000 + i + s),
                                             gen_tree(b, 3000 + i + s))))
    for i, (p, q, b) in enumerate([(2, 3, 10), (3, 3, 8), (2, 5, 12),
                                   (4, 4, 6), (2, 2, 40), (3, 5, 15),
                                   (5, 5, 10), (2, 7, 20)]):
        graphs.append((f"prod_grid_tree_{i}",
                       cartesian_product(gen_grid(p, q),
                                         gen_tree(b, 4000 + i))))
    for i, b in enumerate([3, 5, 8, 12, 20, 30, 45, 60]):
        graphs.append((f"prod_q3_tree_{i}",
                       cartesian_product(gen_hypercube(3),
                                         gen_tree(b, 5000 + i))))
    for i, b in enumerate([2, 4, 8, 12, 16, 20, 25, 30]):
        graphs.append((f"prod_q4_path_{i}",
                       cartesian_product(gen_hypercube(4), gen_grid(1, b))))

    count = 0
    seed = 0
    while count < 80 and seed < 400:
        steps = 8 + (seed * 5) % 22
        g = peripheral_expansion(gen_tree(1, 0), 6000 + seed, steps,
                                 max_n=500)
        seed += 1
        if g.n >= 2 and quick_dimension(g) <= 5:
            graphs.append((f"expand_{seed}_n{g.n}", g))
            count += 1

    return graphs
