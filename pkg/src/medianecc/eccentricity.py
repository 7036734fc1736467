"""Bent-path labels psi(u, X) and assembly of all eccentricities.

phi covers targets v lying above u. For everything else the shortest
(u, v)-path bends at the basepoint median m: it goes down from u to m, then
up to v. psi(u, X) is the largest such d(u, v) over targets whose walk
toward u makes its final hypercube jump through the cube (basis u-, classes
X, anti-basis u). The eccentricity of u is then the maximum over both label
families on the records around u.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .cubes import CubeIndex
from .graph import Graph, bfs
from .theta import NonMedianGraphError, ThetaDecomposition


@dataclass(frozen=True)
class EccReport:
    """Per-vertex eccentricities with farthest witnesses and the extremes."""

    ecc: list
    witness: list
    diameter: int
    radius: int
    diametral_pair: tuple
    center_vertex: int


def compute_psi(index: CubeIndex, theta: ThetaDecomposition) -> None:
    """Fill psi / psi_witness for every nonempty-pof record, in place.

    Forward sweep (anti-bases nearest to v0 first), so the labels of the
    record's basis u- are final when read. Two candidate families:

    * the bend sits at u- itself: |X| plus the best upward reach at u-
      among pofs disjoint from X, i.e. phi of the record's opposite (the
      opposite may be empty, which covers the degenerate target v = u-);
    * the bend sits strictly below: |X| + psi(u-, X-) for each nonempty
      ingoing pof X- of u- whose own cube basis touches no class of X
      (otherwise u- would not be the final jump-off point toward u).

    Requires compute_phi and compute_opposites.
    """
    if index.opp is None:
        raise RuntimeError("compute_opposites must run before compute_psi")
    incident = theta.incident
    pofs, phi, mu = index.pof, index.phi, index.mu
    psi, psiw = index.psi, index.psi_witness
    basis, ingoing, opp = index.basis, index.ingoing, index.opp

    for r in range(len(pofs)):
        X = pofs[r]
        if not X:
            continue
        low = basis[r]
        o = opp[r]
        size = len(X)
        best = size + phi[o]
        wit = mu[o]
        for t in ingoing[low]:
            if not pofs[t]:
                continue
            inc_lower = incident[basis[t]]
            blocked = False
            for c in X:
                if c in inc_lower:
                    blocked = True
                    break
            if blocked:
                continue
            ps = psi[t]
            if ps < 0:
                continue  # unreachable: the first candidate is always set
            cand = size + ps
            if cand > best:
                best = cand
                wit = psiw[t]
        psi[r] = best
        psiw[r] = wit


def _ecc_range(index: CubeIndex, lo: int, hi: int) -> tuple:
    pofs, phi, mu = index.pof, index.phi, index.mu
    psi, psiw = index.psi, index.psi_witness
    outgoing, ingoing = index.outgoing, index.ingoing
    ecc = [0] * (hi - lo)
    wit = [0] * (hi - lo)
    for u in range(lo, hi):
        best = 0
        bw = u  # the empty outgoing cube: distance 0 to u itself
        for r in outgoing[u]:
            val = phi[r]
            if val > best or (val == best and mu[r] < bw):
                best = val
                bw = mu[r]
        for r in ingoing[u]:
            if not pofs[r]:
                continue
            val = psi[r]
            if val < 0:
                continue
            if val > best or (val == best and psiw[r] < bw):
                best = val
                bw = psiw[r]
        ecc[u - lo] = best
        wit[u - lo] = bw
    return ecc, wit


def eccentricities(index: CubeIndex, threads: int = 1) -> EccReport:
    """Assemble every vertex's eccentricity from the computed labels.

    The witness is the smallest vertex id among the records attaining the
    maximum. The reduction is an ordered map over vertex chunks, so the
    result is identical for any thread count.
    """
    if threads < 1:
        raise ValueError("threads must be >= 1")
    n = index.n
    if threads == 1 or n < 256:
        ecc, wit = _ecc_range(index, 0, n)
    else:
        chunk = (n + threads - 1) // threads
        bounds = [(i, min(i + chunk, n)) for i in range(0, n, chunk)]
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(lambda b: _ecc_range(index, *b), bounds))
        ecc, wit = [], []
        for e, w in parts:
            ecc.extend(e)
            wit.extend(w)

    diameter = max(ecc)
    radius = min(ecc)
    u_star = ecc.index(diameter)
    center = ecc.index(radius)
    return EccReport(ecc=ecc, witness=wit, diameter=diameter, radius=radius,
                     diametral_pair=(u_star, wit[u_star]),
                     center_vertex=center)


def milestones_oracle(g: Graph, theta: ThetaDecomposition, u: int,
                      v: int) -> list:
    """Reference jump chain from u up to v (u between v0 and v required).

    Repeatedly hop through the hypercube spanned by the current vertex's
    ladder classes toward v; the chain records each landing vertex and ends
    at v. Test-side only.
    """
    dv = bfs(g, v).dist
    if theta.dist0[u] + dv[u] != theta.dist0[v]:
        raise ValueError(
            f"vertex {u} is not between the basepoint and vertex {v}")
    incident = theta.incident
    edge_class = theta.edge_class
    chain = [u]
    cur = u
    for _ in range(g.n + 1):
        if cur == v:
            return chain
        ladder = sorted(edge_class[eid] for x, eid in g.adj[cur]
                        if dv[x] == dv[cur] - 1)
        nxt = cur
        for c in ladder:
            eid = incident[nxt].get(c)
            if eid is None:
                raise NonMedianGraphError(
                    f"jump from vertex {cur} stalled: no edge of class {c} "
                    f"at vertex {nxt}")
            nxt = g.other_endpoint(eid, nxt)
        if dv[nxt] != dv[cur] - len(ladder):
            raise NonMedianGraphError(
                f"jump from vertex {cur} did not move {len(ladder)} steps "
                f"toward vertex {v}")
        chain.append(nxt)
        cur = nxt
    raise NonMedianGraphError("jump chain exceeded the vertex count")
