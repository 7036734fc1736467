from __future__ import annotations

import random

import pytest

from helpers import brute_phi_table, is_pof

from medianecc import (build_graph, compute_phi, compute_theta,
                       enumerate_cubes, fixture, gen_hypercube, gen_tree,
                       ladder_set_oracle, lookup_by_basis)
from medianecc.oracle import distance_matrix

# a strip of squares climbing from the basepoint into a 3-cube; vertex 2
# reaches the far cube corner 15 through the jumps 2 -> 6 -> 9 -> 15
LADDER_CUBE_GRAPH = (16, [(0, 1), (0, 2), (1, 3), (2, 3), (2, 5), (3, 4), (3, 6),
                   (4, 7), (5, 6), (5, 8), (6, 7), (6, 9), (8, 9), (8, 10),
                   (8, 12), (9, 11), (9, 13), (10, 11), (10, 14), (11, 15),
                   (12, 13), (12, 14), (13, 15), (14, 15)])


def _labeled(g, v0=0):
    theta = compute_theta(g, v0)
    index = enumerate_cubes(g, theta)
    compute_phi(index, theta)
    return theta, index


def test_phi_on_a_path():
    g = build_graph(3, [(0, 1), (1, 2)])
    theta, index = _labeled(g)
    first = theta.edge_class[g.edge_id(0, 1)]
    second = theta.edge_class[g.edge_id(1, 2)]
    r = lookup_by_basis(index, 0, (first,))
    assert index.phi[r] == 2 and index.mu[r] == 2
    r = lookup_by_basis(index, 1, (second,))
    assert index.phi[r] == 1 and index.mu[r] == 2


def test_phi_fig3_square_label_reaches_the_far_corner():
    g = fixture("fig3")
    theta, index = _labeled(g)
    e1, e3 = (theta.edge_class[g.edge_id(0, 2)],
              theta.edge_class[g.edge_id(0, 1)])
    square = tuple(sorted((e1, e3)))
    r = lookup_by_basis(index, 0, square)
    # brute table value for this ladder set: vertex 7 sits at distance 4
    table = brute_phi_table(g, theta, distance_matrix(g))
    assert table[(0, square)] == 4
    assert index.phi[r] == 4 and index.phi[r] >= 2
    assert index.mu[r] == 7


def test_phi_full_hypercube_label_is_the_antipode():
    for k in (2, 3, 4):
        g = gen_hypercube(k)
        theta, index = _labeled(g)
        full = tuple(range(theta.q))
        r = lookup_by_basis(index, 0, full)
        assert index.phi[r] == k
        assert index.mu[r] == g.n - 1


def test_phi_matches_brute_table_with_valid_witnesses(small_corpus):
    for name, g in small_corpus:
        theta, index = _labeled(g)
        dist = distance_matrix(g)
        table = brute_phi_table(g, theta, dist)
        for rid in range(len(index)):
            key = (index.basis[rid], index.pof[rid])
            assert key in table, (name, key)
            assert index.phi[rid] == table[key], (name, key)
            # witness attains the label and lies above the basis
            u, wit = index.basis[rid], index.mu[rid]
            assert dist[u][wit] == index.phi[rid], (name, key)
            assert theta.dist0[u] + dist[u][wit] == theta.dist0[wit]
            lad = ladder_set_oracle(g, theta, u, wit,
                                    dist_from_v=list(dist[wit]))
            assert lad == index.pof[rid], (name, key)


def test_ladder_set_of_a_vertex_with_itself_is_empty(small_corpus):
    for _, g in small_corpus[:4]:
        theta = compute_theta(g)
        for u in (0, g.n - 1):
            assert ladder_set_oracle(g, theta, u, u) == ()


def test_ladder_set_across_squares_and_cube():
    g = build_graph(*LADDER_CUBE_GRAPH)
    theta = compute_theta(g, 0)
    toward_right = theta.edge_class[g.edge_id(2, 5)]
    upward = theta.edge_class[g.edge_id(2, 3)]
    assert ladder_set_oracle(g, theta, 2, 15) == \
        tuple(sorted((toward_right, upward)))


def test_ladder_set_on_tree_is_first_edge_class():
    g = gen_tree(30, 2)
    theta = compute_theta(g)
    dist = distance_matrix(g)
    rng = random.Random(0)
    for _ in range(40):
        v = rng.randrange(g.n)
        # u between the root and v: pick any vertex on the (0, v) path
        candidates = [u for u in range(g.n)
                      if theta.dist0[u] + dist[u][v] == theta.dist0[v]]
        u = rng.choice(candidates)
        lad = ladder_set_oracle(g, theta, u, v, dist_from_v=list(dist[v]))
        if u == v:
            assert lad == ()
        else:
            nxt = next(x for x in g.neighbors[u]
                       if dist[x][v] == dist[u][v] - 1)
            assert lad == (theta.edge_class[g.edge_id(u, nxt)],)


def test_ladder_sets_are_pofs(small_corpus):
    rng = random.Random(5)
    for name, g in small_corpus:
        theta = compute_theta(g)
        dist = distance_matrix(g)
        for _ in range(25):
            v = rng.randrange(g.n)
            ups = [u for u in range(g.n)
                   if theta.dist0[u] + dist[u][v] == theta.dist0[v]]
            u = rng.choice(ups)
            lad = ladder_set_oracle(g, theta, u, v, dist_from_v=list(dist[v]))
            assert is_pof(theta, lad), (name, u, v)


def test_ladder_set_precondition():
    g = build_graph(3, [(0, 1), (1, 2)])
    theta = compute_theta(g, 0)
    with pytest.raises(ValueError, match="not between"):
        ladder_set_oracle(g, theta, 2, 0)


def test_shortest_paths_use_one_edge_per_separating_class(small_corpus):
    rng = random.Random(11)
    for name, g in small_corpus:
        if g.n < 2:
            continue
        theta = compute_theta(g)
        dist = distance_matrix(g)
        for _ in range(15):
            u = rng.randrange(g.n)
            v = rng.randrange(g.n)
            sigma = _signature(g, theta, dist, u, v)
            assert len(sigma) == dist[u][v], (name, u, v)
            path_classes = _random_shortest_path_classes(
                g, theta, dist, u, v, rng)
            assert len(path_classes) == len(set(path_classes))
            assert set(path_classes) == sigma, (name, u, v)


def _signature(g, theta, dist, u, v):
    out = set()
    for eid, (x, y) in enumerate(g.edges):
        if (dist[u][x] < dist[u][y]) != (dist[v][x] < dist[v][y]):
            out.add(theta.edge_class[eid])
    return out


def _random_shortest_path_classes(g, theta, dist, u, v, rng):
    classes = []
    cur = u
    while cur != v:
        step = rng.choice([x for x in g.neighbors[cur]
                           if dist[x][v] == dist[cur][v] - 1])
        classes.append(theta.edge_class[g.edge_id(cur, step)])
        cur = step
    return classes
