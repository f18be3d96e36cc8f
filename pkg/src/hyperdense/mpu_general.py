"""Minimum p-union on arbitrary hypergraphs.

Two building blocks live here: a two-phase solver with a hard 2*sqrt(m)
approximation guarantee (repeated minimum-expansion extraction, then a
smallest-edges top-up), and a generic cover loop that drives any vertex-set
generator until p edges are collected.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from hyperdense.core import (
    EdgeSolution,
    Hypergraph,
    VertexSolution,
    covered_edges,
    edge_subhypergraph,
)
from hyperdense.expansion import min_expansion_flow

CoverGenerator = Callable[[Hypergraph, int], VertexSolution]


class StalledGeneratorError(RuntimeError):
    """The generator covered no residual edge, so the cover loop cannot progress."""


def _check_p(h: Hypergraph, p: int) -> None:
    if not 1 <= p <= h.m:
        raise ValueError(f"p must be in [1, {h.m}], got {p}")


@dataclass
class CoverAccumulator:
    """Mutable bookkeeping for cover loops: chosen edges, what remains, union so far."""

    hypergraph: Hypergraph
    chosen: list[int] = field(default_factory=list)
    union: set[int] = field(default_factory=set)
    _chosen_set: set[int] = field(default_factory=set)

    def add(self, edge_indices: Iterable[int]) -> None:
        for i in edge_indices:
            if i in self._chosen_set:
                raise ValueError(f"edge {i} already chosen")
            self.chosen.append(i)
            self._chosen_set.add(i)
            self.union.update(self.hypergraph.edges[i])

    def residual_indices(self) -> list[int]:
        return [i for i in range(self.hypergraph.m) if i not in self._chosen_set]


def mpu_sqrt_m(h: Hypergraph, p: int) -> EdgeSolution:
    """Two-phase minimum p-union with union at most 2*sqrt(m) times the optimum.

    Phase 1 repeatedly extracts a minimum-expansion subset from the residual
    edges (vertices are kept) until at least p - ceil(sqrt(m)) edges are
    chosen, truncating by ascending edge index if a subset would overshoot p.
    Phase 2 tops up with the smallest residual edges (ties by index).
    """
    _check_p(h, p)
    root = math.isqrt(h.m)
    if root * root < h.m:
        root += 1
    acc = CoverAccumulator(h)
    while len(acc.chosen) < p - root:
        residual = acc.residual_indices()
        sub = edge_subhypergraph(h, residual)
        cert = min_expansion_flow(sub)
        found = sorted(residual[j] for j in cert.edge_indices)
        acc.add(found[: p - len(acc.chosen)])
    rest = sorted(acc.residual_indices(), key=lambda i: (len(h.edges[i]), i))
    acc.add(rest[: p - len(acc.chosen)])
    return EdgeSolution.from_indices(h, acc.chosen, "sqrt-m")


def iterative_cover(
    h: Hypergraph, p: int, k: int, generator: CoverGenerator
) -> EdgeSolution:
    """Collect edges by repeatedly covering the residual instance.

    Each round calls ``generator(residual, k)``, takes every residual edge its
    vertex set covers, and removes those edges (never the vertices).  Stops
    once p edges are collected, then truncates to exactly p, dropping the
    latest additions first.
    """
    _check_p(h, p)
    acc = CoverAccumulator(h)
    while len(acc.chosen) < p:
        residual = acc.residual_indices()
        sub = edge_subhypergraph(h, residual)
        picked = generator(sub, k)
        found = covered_edges(sub, picked.vertices)
        if not found:
            raise StalledGeneratorError(
                "generator covered no edge on a nonempty residual"
            )
        acc.add(residual[j] for j in found)
    return EdgeSolution.from_indices(h, acc.chosen[:p], "iterative-cover")


def mpu_best_of(
    h: Hypergraph, p: int, candidates: Sequence[EdgeSolution]
) -> EdgeSolution:
    """The candidate of minimum union size; ties keep the earliest tag."""
    if not candidates:
        raise ValueError("need at least one candidate")
    for sol in candidates:
        if len(sol.edge_indices) != p:
            raise ValueError(
                f"candidate {sol.algorithm!r} has {len(sol.edge_indices)} edges, expected {p}"
            )
    best = candidates[0]
    for sol in candidates[1:]:
        if sol.union_size < best.union_size:
            best = sol
    return best
