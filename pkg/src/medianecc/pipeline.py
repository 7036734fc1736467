"""End-to-end driver: theta -> cubes -> phi -> opposites -> psi -> ecc."""
from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Optional

from .cubes import CubeIndex, enumerate_cubes
from .eccentricity import EccReport, compute_psi, eccentricities
from .graph import Graph
from .labels import compute_phi
from .opposites import compute_opposites
from .theta import ThetaDecomposition, compute_theta

STAGES = ("theta", "cubes", "phi", "opposites", "psi", "ecc")


@dataclass
class PipelineResult:
    graph: Graph
    theta: ThetaDecomposition
    index: CubeIndex
    report: Optional[EccReport]
    timings: dict

    @property
    def total_time(self) -> float:
        return sum(self.timings.values())


def run_pipeline(g: Graph, v0: int = 0, threads: int = 1,
                 with_ecc: bool = True) -> PipelineResult:
    """Run every stage, recording per-stage wall time.

    ``with_ecc=False`` stops after the opposites (enough for the diameter).
    """
    timings = {}
    t = time.perf_counter()
    theta = compute_theta(g, v0)
    timings["theta"] = time.perf_counter() - t

    t = time.perf_counter()
    index = enumerate_cubes(g, theta)
    timings["cubes"] = time.perf_counter() - t

    t = time.perf_counter()
    compute_phi(index, theta)
    timings["phi"] = time.perf_counter() - t

    t = time.perf_counter()
    compute_opposites(index)
    timings["opposites"] = time.perf_counter() - t

    report = None
    if with_ecc:
        t = time.perf_counter()
        compute_psi(index, theta)
        timings["psi"] = time.perf_counter() - t

        t = time.perf_counter()
        report = eccentricities(index, threads=threads)
        timings["ecc"] = time.perf_counter() - t

    return PipelineResult(graph=g, theta=theta, index=index, report=report,
                          timings=timings)
