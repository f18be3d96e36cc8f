"""Minimum p-union on 3-uniform hypergraphs.

The solver guesses the vertex count k of an optimal witness (trying every
value), derives the guess's parameters, and runs the iterative cover loop with
a generator that proposes several anchored candidates per round and keeps the
one with the best exact density (covered residual edges per vertex).  The
final answer is never worse than the general 2*sqrt(m) solver because both
enter a best-of.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator, Sequence

from hyperdense.core import (
    EdgeSolution,
    Hypergraph,
    VertexSolution,
    covered_edges,
    degrees,
    induced,
    top_by_degree,
)
from hyperdense.dksh3 import (
    WeightedGraph,
    _link_graph,
    _pruned_link_graphs,
    _require_three_uniform,
    _st_pick,
    _top_scoring,
    greedy_three_layer,
    k1_pair_weights,
    k1_weighted_graph,
)
from hyperdense.mpu_general import (
    StalledGeneratorError,
    _check_p,
    iterative_cover,
    mpu_best_of,
    mpu_sqrt_m,
)

SpESSubroutine = Callable[[WeightedGraph, int], Sequence[int]]


def _ceil_sqrt_fraction(num: int, den: int) -> int:
    """Smallest integer z with z*z >= num/den, computed in exact integers."""
    if num <= 0:
        return 0
    t = -(-num // den)
    z = math.isqrt(t)
    if z * z < t:
        z += 1
    return z


@dataclass(frozen=True)
class MpU3Params:
    """Parameters derived from one witness-size guess k.

    anchor_size caps ceil(k * n^(2/5)) at n; delta is the minimum degree among
    the anchor_size top-degree vertices; avg_degree is the exact rational
    3p/k; khat is the probe size for the pruned-neighborhood route, the exact
    integer ceiling of sqrt(k^3 * delta / (3 * avg_degree)).
    """

    k: int
    p: int
    n: int
    anchor_size: int
    delta: int
    avg_degree: Fraction
    khat: int

    @classmethod
    def for_guess(
        cls, h: Hypergraph, p: int, k: int, scale: float | None = None
    ) -> "MpU3Params":
        _check_p(h, p)
        if not 1 <= k <= h.n:
            raise ValueError(f"k must be in [1, {h.n}], got {k}")
        if scale is None:
            scale = h.n ** 0.4
        anchor_size = min(math.ceil(k * scale), h.n)
        anchors = top_by_degree(h, anchor_size)
        deg = degrees(h)
        delta = min((deg[v] for v in anchors), default=0)
        khat = max(1, _ceil_sqrt_fraction(k**4 * delta, 9 * p))
        return cls(k, p, h.n, anchor_size, delta, Fraction(3 * p, k), khat)


def greedy_weighted_spes(graph: WeightedGraph, target_weight: int) -> tuple[int, ...]:
    """Default coverage-first subroutine: grow a vertex set until its induced
    weight reaches the target or no vertex adds weight.

    Seeds with the heaviest pair, then repeatedly adds the vertex with the
    largest marginal weight into the picked set.
    """
    if target_weight <= 0 or not graph.edges:
        return ()
    u0, v0, w0 = min(graph.edges, key=lambda e: (-e[2], e[0], e[1]))
    picked = {u0, v0}
    got = w0
    while got < target_weight:
        best_u, best_gain = -1, 0
        for u in sorted(graph.vertices):
            if u in picked:
                continue
            gain = graph.weight_into(u, picked)
            if gain > best_gain:
                best_u, best_gain = u, gain
        if best_gain <= 0:
            break
        picked.add(best_u)
        got += best_gain
    return tuple(sorted(picked))


def _densest_single_edge(h: Hypergraph) -> tuple[int, ...]:
    """Vertex set of the most repeated edge (ties: smallest vertex tuple)."""
    counts = Counter(h.edges)
    best_edge, best_count = None, 0
    for e, c in sorted(counts.items()):
        if c > best_count:
            best_edge, best_count = e, c
    assert best_edge is not None
    return best_edge


def probe_candidates(h: Hypergraph, probe_size: int) -> Iterator[set[int]]:
    """Pruned link-graph candidates at the given probe size.

    For each vertex and degree threshold, yields the vertex plus either the
    whole pruned graph (when it has fewer than probe_size vertices) or the
    greedy two-stage pick of probe_size - 1 companions.
    """
    for v in range(h.n):
        adj = _link_graph(h, v)
        if not adj:
            continue
        for _, g in _pruned_link_graphs(adj, probe_size - 1):
            if len(g) < probe_size:
                yield {v} | set(g)
            else:
                yield {v} | _st_pick(g, probe_size - 1)


def candidate_generator_3u(
    residual: Hypergraph,
    params: MpU3Params,
    spes_sub: SpESSubroutine = greedy_weighted_spes,
) -> VertexSolution:
    """One cover-loop round: propose anchored candidates, return the densest.

    Candidates, in order: the anchors plus the top k vertices by anchored pair
    count; the anchors plus the coverage subroutine's pick on the pair-weight
    graph; the three-layer greedy at the inflated anchor budget (returned
    immediately if it already covers p edges); the pruned link-graph search at
    probe size khat outside the anchors (whole pruned graphs are returned when
    smaller than the probe size); and the most repeated single edge, which
    guarantees progress.  Density ties keep the earliest candidate.
    """
    if residual.m == 0:
        raise ValueError("generator needs a nonempty residual")
    _require_three_uniform(residual)
    n = residual.n
    anchors = top_by_degree(residual, params.anchor_size)
    anchor_set = set(anchors)
    candidates: list[tuple[str, set[int]]] = []

    pair_counts = k1_pair_weights(residual, anchors)
    top = _top_scoring(pair_counts, params.k)
    candidates.append(("anchored-pairs", anchor_set | set(top)))

    graph = k1_weighted_graph(residual, anchors)
    picked = tuple(spes_sub(graph, params.p))
    candidates.append(("anchored-spes", anchor_set | set(picked)))

    budget = params.anchor_size
    if 3 <= budget <= n:
        layer_anchors = top_by_degree(residual, budget // 3)
        layered = greedy_three_layer(residual, budget, layer_anchors)
        if layered.covered_count >= params.p:
            # Covering p edges in one shot ends the loop for this guess.
            return VertexSolution.from_vertices(residual, layered.vertices, "three-layer")
        candidates.append(("three-layer", set(layered.vertices)))

    rest, lift = induced(residual, set(range(n)) - anchor_set)
    if rest.m > 0 and params.khat >= 2:
        for cand in probe_candidates(rest, params.khat):
            candidates.append(("pruned-neighborhood", {lift[u] for u in cand}))

    candidates.append(("single-edge", set(_densest_single_edge(residual))))

    best: tuple[str, set[int], int, int] | None = None
    for tag, verts in candidates:
        if not verts:
            continue
        num = len(covered_edges(residual, verts))
        den = len(verts)
        if best is None or num * best[3] > best[2] * den:
            best = (tag, verts, num, den)
    assert best is not None
    return VertexSolution.from_vertices(residual, best[1], best[0])


def mpu_3uniform(
    h: Hypergraph,
    p: int,
    *,
    spes_sub: SpESSubroutine = greedy_weighted_spes,
    trace: list[dict] | None = None,
) -> EdgeSolution:
    """Minimum p-union by witness-size guessing, floored by the 2*sqrt(m) solver.

    Tries every k in 1..n, runs the iterative cover with that guess's
    parameters, keeps the smallest union, and finally takes the better of that
    and mpu_sqrt_m so the general guarantee always transfers.  When ``trace``
    is a list, one row per guess is appended: {k, khat, delta, union}.
    """
    _require_three_uniform(h)
    _check_p(h, p)
    scale = h.n ** 0.4
    best: EdgeSolution | None = None
    for k in range(1, h.n + 1):
        params = MpU3Params.for_guess(h, p, k, scale=scale)

        def generator(residual: Hypergraph, _budget: int, _p=params) -> VertexSolution:
            return candidate_generator_3u(residual, _p, spes_sub)

        try:
            sol = iterative_cover(h, p, params.anchor_size, generator)
        except StalledGeneratorError:
            continue
        if trace is not None:
            trace.append(
                {
                    "k": k,
                    "khat": params.khat,
                    "delta": params.delta,
                    "union": sol.union_size,
                }
            )
        if best is None or sol.union_size < best.union_size:
            best = sol
    candidates = []
    if best is not None:
        candidates.append(EdgeSolution.from_indices(h, best.edge_indices, "three-uniform"))
    candidates.append(mpu_sqrt_m(h, p))
    return mpu_best_of(h, p, candidates)
