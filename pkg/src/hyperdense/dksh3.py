"""Densest k-subhypergraph heuristics for 3-uniform hypergraphs.

Several incomparable strategies run side by side and the densest output wins:

- a three-layer greedy anchored on the top-degree vertices,
- a case split that scores vertices against the anchor set and also feeds a
  pair-weight graph into a pluggable dense-subgraph subroutine,
- a per-vertex neighborhood search over iteratively pruned link graphs (with
  either built-in greedy selection or a plugged subroutine),
- a trivial edge packing that guarantees at least floor(k/3) covered edges.

Every candidate is padded to exactly k vertices with the smallest unused ids
(padding never uncovers an edge) and its covered count is always recomputed by
an independent containment scan.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterable, Iterator, Sequence

from hyperdense.core import (
    Hypergraph,
    VertexSolution,
    induced,
    top_by_degree,
)

DkSSubroutine = Callable[["WeightedGraph", int], Sequence[int]]


@dataclass(frozen=True)
class WeightedGraph:
    """Undirected graph with positive integer edge weights and no self-loops."""

    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int, int], ...]  # (u, v, weight), u < v

    def __post_init__(self) -> None:
        vset = set(self.vertices)
        for u, v, w in self.edges:
            if u >= v:
                raise ValueError(f"edge ({u}, {v}) must be ordered and loop-free")
            if w < 1:
                raise ValueError(f"edge ({u}, {v}) has nonpositive weight {w}")
            if u not in vset or v not in vset:
                raise ValueError(f"edge ({u}, {v}) leaves the vertex set")

    @cached_property
    def adjacency(self) -> dict[int, dict[int, int]]:
        adj: dict[int, dict[int, int]] = {v: {} for v in self.vertices}
        for u, v, w in self.edges:
            adj[u][v] = w
            adj[v][u] = w
        return adj

    def weighted_degree(self, u: int) -> int:
        return sum(self.adjacency[u].values())

    def weight_into(self, u: int, targets: set[int]) -> int:
        return sum(w for v, w in self.adjacency[u].items() if v in targets)

    def total_weight(self) -> int:
        return sum(w for _, _, w in self.edges)


def greedy_weighted_dks(graph: WeightedGraph, k: int) -> tuple[int, ...]:
    """Default dense-subgraph subroutine: two greedy stages, at most k vertices.

    Picks floor(k/2) vertices of highest weighted degree, then ceil(k/2)
    vertices with the largest weight into that seed set (overlap allowed).
    """
    if k <= 0 or not graph.vertices:
        return ()
    s_size = k // 2
    t_size = k - s_size
    by_degree = sorted(graph.vertices, key=lambda u: (-graph.weighted_degree(u), u))
    seed = set(by_degree[:s_size])
    by_pull = sorted(graph.vertices, key=lambda u: (-graph.weight_into(u, seed), u))
    return tuple(sorted(seed | set(by_pull[:t_size])))


def _require_three_uniform(h: Hypergraph) -> None:
    if not h.is_uniform(3):
        raise ValueError("instance must be 3-uniform")


def _check_k(h: Hypergraph, k: int) -> None:
    if k < 3 or k > h.n:
        raise ValueError(f"k must be in [3, {h.n}], got {k}")


def _top_scoring(scores: Sequence[int], t: int) -> list[int]:
    order = sorted(range(len(scores)), key=lambda v: (-scores[v], v))
    return order[:t]


def _pad_to_k(n: int, base: Iterable[int], k: int) -> tuple[int, ...]:
    chosen = set(base)
    if len(chosen) > k:
        raise ValueError("candidate exceeds the vertex budget")
    for v in range(n):
        if len(chosen) == k:
            break
        chosen.add(v)
    return tuple(sorted(chosen))


def greedy_three_layer(h: Hypergraph, k: int, k1: Iterable[int]) -> VertexSolution:
    """Three anchored greedy layers of floor(k/3) vertices each.

    Layer two ranks vertices by the number of incident edges meeting the
    anchor layer; layer three by the number of incident edges with one other
    endpoint in each previous layer.  Layers may overlap; the result is padded
    to exactly k vertices.
    """
    _require_three_uniform(h)
    _check_k(h, k)
    anchors = tuple(sorted(set(k1)))
    if len(anchors) != k // 3:
        raise ValueError(f"anchor layer must have {k // 3} vertices")
    k1set = set(anchors)

    deg1 = [0] * h.n
    for e in h.edges:
        if k1set.intersection(e):
            for v in e:
                deg1[v] += 1
    k2 = _top_scoring(deg1, k // 3)
    k2set = set(k2)

    deg2 = [0] * h.n
    for a, b, c in h.edges:
        for u, y, z in ((a, b, c), (b, a, c), (c, a, b)):
            if (y in k2set and z in k1set) or (z in k2set and y in k1set):
                deg2[u] += 1
    k3 = _top_scoring(deg2, k // 3)

    base = k1set | k2set | set(k3)
    return VertexSolution.from_vertices(h, _pad_to_k(h.n, base, k), "greedy-three-layer")


def _link_graph(h: Hypergraph, v: int) -> dict[int, set[int]]:
    """Neighborhood graph of v: one edge (u, x) per hyperedge {v, u, x}."""
    adj: dict[int, set[int]] = {}
    for e in h.edges:
        if v in e:
            u, x = (w for w in e if w != v)
            adj.setdefault(u, set()).add(x)
            adj.setdefault(x, set()).add(u)
    return adj


def _link_pair_counts(h: Hypergraph, v: int) -> dict[tuple[int, int], int]:
    """Multiplicity of each companion pair of v, counting duplicate hyperedges."""
    counts: dict[tuple[int, int], int] = {}
    for e in h.edges:
        if v in e:
            u, x = (w for w in e if w != v)
            pair = (u, x) if u < x else (x, u)
            counts[pair] = counts.get(pair, 0) + 1
    return counts


def _pruned_link_graphs(
    adj: dict[int, set[int]], max_threshold: int
) -> Iterator[tuple[int, dict[int, set[int]]]]:
    """Yield (threshold, graph pruned to min degree >= threshold) until empty.

    Pruning is incremental: raising the threshold keeps shrinking the same
    live graph, so the loop ends as soon as everything is deleted.
    """
    g = {u: set(nb) for u, nb in adj.items()}
    for dhat in range(1, max_threshold + 1):
        stack = [u for u in g if len(g[u]) < dhat]
        while stack:
            u = stack.pop()
            if u not in g:
                continue
            for w in g.pop(u):
                nb = g.get(w)
                if nb is not None:
                    nb.discard(u)
                    if len(nb) < dhat:
                        stack.append(w)
        if not g:
            return
        yield dhat, g


def _st_pick(g: dict[int, set[int]], kk: int) -> set[int]:
    """floor(kk/2) vertices of top degree, then as many with most neighbors there."""
    size = kk // 2
    s = sorted(g, key=lambda u: (-len(g[u]), u))[:size]
    sset = set(s)
    t = sorted(g, key=lambda u: (-len(g[u] & sset), u))[:size]
    return sset | set(t)


def _weighted_from_link(
    g: dict[int, set[int]], counts: dict[tuple[int, int], int]
) -> WeightedGraph:
    """Surviving link pairs as a weighted graph; weights carry edge multiplicity."""
    vertices = tuple(sorted(g))
    edges = tuple(
        (u, v, counts[(u, v)]) for u in vertices for v in sorted(g[u]) if u < v
    )
    return WeightedGraph(vertices, edges)


def neighborhood_search(h: Hypergraph, k: int) -> VertexSolution:
    """Search every vertex's pruned link graph for a dense k-set.

    For each vertex v and each degree threshold, greedily selects two halves of
    k-1 companion vertices from the pruned link graph; the candidate covering
    the most hyperedges wins.
    """

    def factory(_v: int) -> Callable[[dict[int, set[int]]], set[int]]:
        return lambda g: _st_pick(g, k - 1)

    return _neighborhood_best(h, k, factory, "neighborhood")


def neighborhood_search_plugged(
    h: Hypergraph, k: int, sub: DkSSubroutine = greedy_weighted_dks
) -> VertexSolution:
    """Neighborhood search with the companion selection delegated to ``sub``."""

    def factory(v: int) -> Callable[[dict[int, set[int]]], set[int]]:
        counts = _link_pair_counts(h, v)

        def select(g: dict[int, set[int]]) -> set[int]:
            picked = tuple(sub(_weighted_from_link(g, counts), k - 1))
            if len(picked) > k - 1 or not set(picked) <= set(g):
                raise ValueError("subroutine returned an invalid vertex set")
            return set(picked)

        return select

    return _neighborhood_best(h, k, factory, "neighborhood-plugged")


def _neighborhood_best(
    h: Hypergraph,
    k: int,
    select_factory: Callable[[int], Callable[[dict[int, set[int]]], set[int]]],
    tag: str,
) -> VertexSolution:
    _require_three_uniform(h)
    _check_k(h, k)
    best: VertexSolution | None = None
    for v in range(h.n):
        adj = _link_graph(h, v)
        if not adj:
            continue
        select = select_factory(v)
        for _, g in _pruned_link_graphs(adj, k - 1):
            cand = {v} | select(g)
            sol = VertexSolution.from_vertices(h, _pad_to_k(h.n, cand, k), tag)
            if best is None or sol.covered_count > best.covered_count:
                best = sol
    if best is None:
        best = VertexSolution.from_vertices(h, _pad_to_k(h.n, set(), k), tag)
    return best


def k1_pair_weights(h: Hypergraph, k1: Iterable[int]) -> list[int]:
    """Per-vertex count of incident edges whose other two endpoints lie in k1."""
    k1set = set(k1)
    weights = [0] * h.n
    for a, b, c in h.edges:
        for u, y, z in ((a, b, c), (b, a, c), (c, a, b)):
            if y in k1set and z in k1set:
                weights[u] += 1
    return weights


def k1_weighted_graph(h: Hypergraph, k1: Iterable[int]) -> WeightedGraph:
    """Pair-weight graph outside the anchors: w(u, v) counts edges {u, v, x}, x in k1."""
    k1set = set(k1)
    weights: dict[tuple[int, int], int] = {}
    for e in h.edges:
        inside = [v for v in e if v in k1set]
        outside = [v for v in e if v not in k1set]
        if len(inside) == 1 and len(outside) == 2:
            pair = (outside[0], outside[1]) if outside[0] < outside[1] else (outside[1], outside[0])
            weights[pair] = weights.get(pair, 0) + 1
    vertices = tuple(v for v in range(h.n) if v not in k1set)
    edges = tuple((u, v, w) for (u, v), w in sorted(weights.items()))
    return WeightedGraph(vertices, edges)


def k1_case_split(
    h: Hypergraph, k: int, k1: Iterable[int], sub: DkSSubroutine = greedy_weighted_dks
) -> VertexSolution:
    """Run both anchored recovery routes unconditionally and keep the better.

    Route one ranks every vertex by the number of incident edges with both
    other endpoints in the anchor set and takes the top floor(2k/3).  Route two
    builds the pair-weight graph outside the anchors and asks the pluggable
    dense-subgraph subroutine for floor(2k/3) vertices.  Both candidates gain
    the anchors and are padded to exactly k.
    """
    _require_three_uniform(h)
    _check_k(h, k)
    anchors = set(k1)
    if len(anchors) != k // 3:
        raise ValueError(f"anchor layer must have {k // 3} vertices")
    budget = (2 * k) // 3

    top = _top_scoring(k1_pair_weights(h, anchors), budget)
    cand1 = VertexSolution.from_vertices(
        h, _pad_to_k(h.n, anchors | set(top), k), "k1-case-split"
    )

    graph = k1_weighted_graph(h, anchors)
    picked = tuple(sub(graph, budget))
    if len(picked) > budget or not set(picked) <= set(graph.vertices):
        raise ValueError("subroutine returned an invalid vertex set")
    cand2 = VertexSolution.from_vertices(
        h, _pad_to_k(h.n, anchors | set(picked), k), "k1-case-split"
    )
    return cand1 if cand1.covered_count >= cand2.covered_count else cand2


def trivial_pick(h: Hypergraph, k: int) -> VertexSolution:
    """Greedy edge packing floor: spans edges in index order while they fit in k.

    Guarantees at least min(floor(k/3), m) covered edges, the hard floor every
    combined solver inherits.
    """
    _require_three_uniform(h)
    _check_k(h, k)
    span: set[int] = set()
    for e in h.edges:
        grown = span | set(e)
        if len(grown) <= k:
            span = grown
    return VertexSolution.from_vertices(h, _pad_to_k(h.n, span, k), "trivial")


def dksh_candidates(
    h: Hypergraph, k: int, sub: DkSSubroutine = greedy_weighted_dks
) -> list[VertexSolution]:
    """Every component strategy's solution, each on exactly k vertices.

    The neighborhood searches run on the instance induced away from the
    anchors (their results are lifted back to original ids); they are skipped
    when fewer than k vertices remain there.
    """
    _require_three_uniform(h)
    _check_k(h, k)
    anchors = top_by_degree(h, k // 3)
    out = [
        k1_case_split(h, k, anchors, sub),
        greedy_three_layer(h, k, anchors),
    ]
    rest, lift = induced(h, set(range(h.n)) - set(anchors))
    if 3 <= k <= rest.n:
        for sol in (
            neighborhood_search(rest, k),
            neighborhood_search_plugged(rest, k, sub),
        ):
            lifted = {lift[v] for v in sol.vertices}
            out.append(
                VertexSolution.from_vertices(
                    h, _pad_to_k(h.n, lifted, k), sol.algorithm
                )
            )
    out.append(trivial_pick(h, k))
    return out


def dksh_3uniform(
    h: Hypergraph, k: int, sub: DkSSubroutine = greedy_weighted_dks
) -> VertexSolution:
    """Best-of combination of all component strategies; never below any of them."""
    best: VertexSolution | None = None
    for sol in dksh_candidates(h, k, sub):
        if best is None or sol.covered_count > best.covered_count:
            best = sol
    assert best is not None
    return best
