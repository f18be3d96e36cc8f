"""Hypergraph instances, solution containers, and the structural queries all solvers share.

Vertices are dense integer ids ``0..n-1``.  Hyperedges are stored as sorted
tuples and may repeat: multiset semantics matter because edge-selection
objectives count edges, not distinct edges.  Every type here is immutable and
every operation is a pure function, so values can be shared freely between
concurrent tasks.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator


class HypergraphFormatError(ValueError):
    """Malformed instance text; the message carries a 1-based line number."""


@dataclass(frozen=True)
class Hypergraph:
    """A vertex count plus an ordered multiset of hyperedges.

    Each edge is normalised to a strictly increasing vertex tuple at
    construction time; repeated vertices within an edge and out-of-range ids
    are rejected.  Duplicate edges are allowed.
    """

    n: int
    edges: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        canon = []
        for pos, edge in enumerate(self.edges):
            vs = tuple(sorted(edge))
            if not vs:
                raise ValueError(f"edge {pos} is empty")
            for a, b in zip(vs, vs[1:]):
                if a == b:
                    raise ValueError(f"edge {pos} repeats vertex {a}")
            if vs[0] < 0 or vs[-1] >= self.n:
                raise ValueError(f"edge {pos} has a vertex id outside [0, {self.n})")
            canon.append(vs)
        object.__setattr__(self, "edges", tuple(canon))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_masks(self) -> tuple[int, ...]:
        """One bitmask per edge, bit v set iff vertex v belongs to the edge."""
        return tuple(vertex_mask(e) for e in self.edges)

    def is_uniform(self, size: int) -> bool:
        return all(len(e) == size for e in self.edges)


def vertex_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def _content_lines(text: str | bytes) -> Iterator[tuple[int, list[str]]]:
    """Yield (line number, tokens) for non-blank, non-comment lines."""
    if isinstance(text, (bytes, bytearray)):
        text = text.decode("utf-8")
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line.split()


def _int_token(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise HypergraphFormatError(
            f"line {lineno}: non-integer token {token!r}"
        ) from None


def parse_hypergraph(text: str | bytes) -> Hypergraph:
    """Parse an instance: header ``n m`` then one edge (sorted vertex ids) per line.

    ``#`` starts a comment line, blank lines are skipped, and every error is
    reported with its line number.  Edge order and duplicate edges are
    preserved.
    """
    lines = _content_lines(text)
    header = next(lines, None)
    if header is None:
        raise HypergraphFormatError("line 1: missing 'n m' header")
    lineno, tokens = header
    if len(tokens) != 2:
        raise HypergraphFormatError(f"line {lineno}: header must be 'n m'")
    n, m = (_int_token(t, lineno) for t in tokens)
    if n < 0 or m < 0:
        raise HypergraphFormatError(f"line {lineno}: header counts must be nonnegative")
    edges: list[tuple[int, ...]] = []
    for _ in range(m):
        row = next(lines, None)
        if row is None:
            raise HypergraphFormatError(
                f"expected {m} edge lines, found only {len(edges)}"
            )
        lineno, tokens = row
        vs = sorted(_int_token(t, lineno) for t in tokens)
        for a, b in zip(vs, vs[1:]):
            if a == b:
                raise HypergraphFormatError(
                    f"line {lineno}: repeated vertex {a} within edge"
                )
        if vs and (vs[0] < 0 or vs[-1] >= n):
            bad = vs[0] if vs[0] < 0 else vs[-1]
            raise HypergraphFormatError(
                f"line {lineno}: vertex id {bad} out of range [0, {n})"
            )
        edges.append(tuple(vs))
    extra = next(lines, None)
    if extra is not None:
        raise HypergraphFormatError(
            f"line {extra[0]}: trailing content after {m} edges"
        )
    return Hypergraph(n, tuple(edges))


def serialize_hypergraph(h: Hypergraph) -> str:
    """Inverse of :func:`parse_hypergraph` on valid instances."""
    lines = [f"{h.n} {h.m}"]
    lines.extend(" ".join(str(v) for v in e) for e in h.edges)
    return "\n".join(lines) + "\n"


def induced(h: Hypergraph, vertices: Iterable[int]) -> tuple[Hypergraph, tuple[int, ...]]:
    """Subhypergraph induced by a vertex set: keeps exactly the fully contained edges.

    Vertices are relabelled ``0..len-1`` in increasing original order.  Returns
    the relabelled hypergraph together with the new-id -> original-id map.
    """
    keep = sorted(set(vertices))
    if keep and (keep[0] < 0 or keep[-1] >= h.n):
        raise ValueError("vertex set must lie inside [0, n)")
    old_to_new = {old: new for new, old in enumerate(keep)}
    keep_set = set(keep)
    edges = tuple(
        tuple(old_to_new[v] for v in e)
        for e in h.edges
        if all(v in keep_set for v in e)
    )
    return Hypergraph(len(keep), edges), tuple(keep)


def degrees(h: Hypergraph, edge_indices: Iterable[int] | None = None) -> tuple[int, ...]:
    """Per-vertex edge counts, optionally restricted to the given edge indices."""
    counts = [0] * h.n
    if edge_indices is None:
        for e in h.edges:
            for v in e:
                counts[v] += 1
    else:
        for i in edge_indices:
            for v in h.edges[i]:
                counts[v] += 1
    return tuple(counts)


def degree(h: Hypergraph, v: int) -> int:
    """Number of hyperedges containing v, duplicates counted."""
    if not 0 <= v < h.n:
        raise ValueError(f"vertex id {v} out of range [0, {h.n})")
    return sum(1 for e in h.edges if v in e)


def top_by_degree(
    h: Hypergraph, t: int, residual_edges: Iterable[int] | None = None
) -> tuple[int, ...]:
    """The min(t, n) largest-degree vertices, ties broken by smaller vertex id.

    When residual_edges is given, degrees are computed over those edges only.
    """
    if t < 0:
        raise ValueError("t must be nonnegative")
    deg = degrees(h, residual_edges)
    order = sorted(range(h.n), key=lambda v: (-deg[v], v))
    return tuple(sorted(order[: min(t, h.n)]))


def union_of(h: Hypergraph, edge_indices: Iterable[int]) -> tuple[int, ...]:
    """Sorted union of the referenced edges' vertices."""
    out: set[int] = set()
    for i in edge_indices:
        out.update(h.edges[i])
    return tuple(sorted(out))


def covered_edges(h: Hypergraph, vertices: Iterable[int]) -> tuple[int, ...]:
    """Indices of all edges fully contained in the vertex set, ascending."""
    vm = vertex_mask(vertices)
    return tuple(i for i, em in enumerate(h.edge_masks) if em & vm == em)


def edge_subhypergraph(h: Hypergraph, edge_indices: Iterable[int]) -> Hypergraph:
    """Same vertex set, only the selected edges (in the given order)."""
    return Hypergraph(h.n, tuple(h.edges[i] for i in edge_indices))


@dataclass(frozen=True)
class EdgeSolution:
    """A chosen multiset of edge indices with the exact union of their vertices."""

    edge_indices: tuple[int, ...]
    union: tuple[int, ...]
    algorithm: str = ""

    @classmethod
    def from_indices(
        cls, h: Hypergraph, edge_indices: Iterable[int], algorithm: str = ""
    ) -> "EdgeSolution":
        idx = tuple(sorted(edge_indices))
        if len(set(idx)) != len(idx):
            raise ValueError("edge indices must be distinct")
        if idx and (idx[0] < 0 or idx[-1] >= h.m):
            raise ValueError("edge index out of range")
        return cls(idx, union_of(h, idx), algorithm)

    @property
    def union_size(self) -> int:
        return len(self.union)


@dataclass(frozen=True)
class VertexSolution:
    """A chosen vertex set with every edge of the instance it covers."""

    vertices: tuple[int, ...]
    covered: tuple[int, ...]
    algorithm: str = ""

    @classmethod
    def from_vertices(
        cls, h: Hypergraph, vertices: Iterable[int], algorithm: str = ""
    ) -> "VertexSolution":
        vs = tuple(sorted(set(vertices)))
        if vs and (vs[0] < 0 or vs[-1] >= h.n):
            raise ValueError("vertex id out of range")
        return cls(vs, covered_edges(h, vs), algorithm)

    @property
    def covered_count(self) -> int:
        return len(self.covered)


def solution_json(
    problem: str, parameter: int, solution: EdgeSolution | VertexSolution
) -> str:
    """Canonical one-line JSON for a solution; byte-stable for identical inputs."""
    if problem not in ("mpu", "dksh"):
        raise ValueError("problem must be 'mpu' or 'dksh'")
    if isinstance(solution, EdgeSolution):
        vertices = solution.union
        edge_indices = solution.edge_indices
    else:
        vertices = solution.vertices
        edge_indices = solution.covered
    payload = {
        "problem": problem,
        "parameter": parameter,
        "vertices": list(vertices),
        "edge_indices": list(edge_indices),
        "union_size": len(vertices),
        "covered_count": len(edge_indices),
        "algorithm": solution.algorithm,
    }
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))
