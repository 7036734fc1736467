"""Brute-force ground truth: all-pairs distances, eccentricities, median
verdicts, convexity and gatedness.

Everything here is definitional and independent of the label pipeline, so
it can be used to check it. Distances come from per-source unit-weight
searches done in compiled code; the triple checks are vectorized.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import dijkstra

from .eccentricity import EccReport
from .graph import Graph


def _adjacency(g: Graph) -> csr_matrix:
    if g.m == 0:
        return csr_matrix((g.n, g.n), dtype=np.int8)
    rows = np.empty(2 * g.m, dtype=np.int32)
    cols = np.empty(2 * g.m, dtype=np.int32)
    for i, (u, v) in enumerate(g.edges):
        rows[2 * i], cols[2 * i] = u, v
        rows[2 * i + 1], cols[2 * i + 1] = v, u
    data = np.ones(2 * g.m, dtype=np.int8)
    return csr_matrix((data, (rows, cols)), shape=(g.n, g.n))


def distance_matrix(g: Graph, budget: int = 5000) -> np.ndarray:
    """Full hop-distance matrix; one unit-weight search per vertex."""
    if g.n > budget:
        raise ValueError(f"n = {g.n} exceeds the distance budget {budget}")
    d = dijkstra(_adjacency(g), unweighted=True)
    if np.isinf(d).any():
        raise ValueError("graph is disconnected")
    return d.astype(np.int32)


def brute_eccentricities(g: Graph, budget: int = 5000) -> EccReport:
    """Exact eccentricity report from the full distance matrix.

    Witness per vertex is the smallest farthest id; the diametral pair and
    center take the smallest achieving vertex, matching the label pipeline's
    tie-breaks.
    """
    d = distance_matrix(g, budget)
    ecc = d.max(axis=1)
    witness = d.argmax(axis=1)  # first occurrence = smallest id
    diameter = int(ecc.max())
    radius = int(ecc.min())
    u_star = int(ecc.argmax())
    center = int(ecc.argmin())
    return EccReport(ecc=[int(x) for x in ecc],
                     witness=[int(x) for x in witness],
                     diameter=diameter, radius=radius,
                     diametral_pair=(u_star, int(witness[u_star])),
                     center_vertex=center)


@dataclass(frozen=True)
class MedianCheck:
    """Verdict of the unique-median test over vertex triples."""

    is_median: bool
    witness: Optional[tuple]  # (x, y, z, median_count) when violated
    mode: str  # "exhaustive" or "sampled"


def is_median(g: Graph, exhaustive_limit: int = 128, samples: int = 100_000,
              seed: int = 0, budget: int = 5000) -> MedianCheck:
    """Check that every vertex triple has exactly one median.

    Exhaustive up to ``exhaustive_limit`` vertices (all triples), sampled
    above it with a seeded generator; a sampled pass can only ever report
    "no violation found".
    """
    n = g.n
    if n <= 2:
        return MedianCheck(True, None, "exhaustive")
    d = distance_matrix(g, budget)

    if n <= exhaustive_limit:
        between = (d[:, None, :] + d[None, :, :] == d[:, :, None])
        bet = between.astype(np.float32)
        ids = np.arange(n)
        for z in range(n):
            counts = np.einsum("xyw,yw,xw->xy", bet, bet[:, z, :], bet[z])
            bad = counts != 1.0
            bad[ids == z, :] = False
            bad[:, ids == z] = False
            np.fill_diagonal(bad, False)
            if bad.any():
                x, y = np.argwhere(bad)[0]
                return MedianCheck(False, (int(x), int(y), z,
                                           int(counts[x, y])), "exhaustive")
        return MedianCheck(True, None, "exhaustive")

    rng = np.random.default_rng(seed)
    remaining = samples
    while remaining > 0:
        batch = min(remaining, 8192)
        remaining -= batch
        xs = rng.integers(0, n, batch)
        ys = rng.integers(0, n, batch)
        zs = rng.integers(0, n, batch)
        distinct = (xs != ys) & (ys != zs) & (xs != zs)
        if not distinct.any():
            continue
        xs, ys, zs = xs[distinct], ys[distinct], zs[distinct]
        c1 = d[xs] + d[ys] == d[xs, ys][:, None]
        c2 = d[ys] + d[zs] == d[ys, zs][:, None]
        c3 = d[zs] + d[xs] == d[zs, xs][:, None]
        counts = (c1 & c2 & c3).sum(axis=1)
        bad = counts != 1
        if bad.any():
            i = int(np.argmax(bad))
            return MedianCheck(False, (int(xs[i]), int(ys[i]), int(zs[i]),
                                       int(counts[i])), "sampled")
    return MedianCheck(True, None, "sampled")


def medians_of_triple(d: np.ndarray, x: int, y: int, z: int) -> list:
    """All vertices lying between each pair of the triple."""
    c = ((d[x] + d[y] == d[x, y]) & (d[y] + d[z] == d[y, z])
         & (d[z] + d[x] == d[z, x]))
    return [int(w) for w in np.where(c)[0]]


def interval_vertices(d: np.ndarray, u: int, v: int) -> list:
    """Vertices on shortest (u, v)-paths."""
    return [int(w) for w in np.where(d[u] + d[v] == d[u, v])[0]]


def is_convex(g: Graph, subset: Iterable, dist: Optional[np.ndarray] = None,
              budget: int = 5000) -> bool:
    """True when every interval between subset vertices stays inside it."""
    d = dist if dist is not None else distance_matrix(g, budget)
    s = np.fromiter(sorted(set(subset)), dtype=np.int64,
                    count=len(set(subset)))
    if s.size <= 1:
        return True
    mask = np.zeros(g.n, dtype=bool)
    mask[s] = True
    out = np.where(~mask)[0]
    if out.size == 0:
        return True
    d_s_out = d[np.ix_(s, out)]
    for i, u in enumerate(s):
        leak = d_s_out[i][None, :] + d_s_out == d[u, s][:, None]
        if leak.any():
            return False
    return True


def is_gated(g: Graph, subset: Iterable, dist: Optional[np.ndarray] = None,
             budget: int = 5000) -> bool:
    """True when every outside vertex has a gate into the subset.

    A gate of v is a subset vertex lying on a shortest path from v to every
    subset vertex.
    """
    d = dist if dist is not None else distance_matrix(g, budget)
    s = np.fromiter(sorted(set(subset)), dtype=np.int64,
                    count=len(set(subset)))
    if s.size == 0:
        return True
    mask = np.zeros(g.n, dtype=bool)
    mask[s] = True
    out = np.where(~mask)[0]
    d_ss = d[np.ix_(s, s)]
    for v in out:
        dvs = d[v, s]
        gates = (dvs[:, None] + d_ss == dvs[None, :]).all(axis=1)
        if not gates.any():
            return False
    return True
