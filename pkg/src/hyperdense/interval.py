"""Exact polynomial-time minimum p-union and densest k-set on interval hypergraphs.

Intervals are sorted by right endpoint (ties: left endpoint, then input
order).  A table cell (i, j) holds the minimum union size over solutions that
pick j intervals among the first i+1 sorted ones and force interval i in.
With C_i the intervals contained in interval i (including i itself), cells
with j <= |C_i| cost exactly the length of interval i; larger j extend a
predecessor cell at the last chosen interval outside C_i, paying only for the
part of interval i that predecessor does not reach.  Answers for every p come
from one fill, and the densest k-set query inverts the table: the largest p
whose optimal union fits in k vertices.
"""

from __future__ import annotations

from dataclasses import dataclass

from hyperdense.core import (
    EdgeSolution,
    Hypergraph,
    HypergraphFormatError,
    VertexSolution,
    _content_lines,
    _int_token,
)


@dataclass(frozen=True)
class IntervalInstance:
    """Vertex count plus a multiset of integer intervals (a, b), 0 <= a <= b < n."""

    n: int
    intervals: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        canon = []
        for pos, (a, b) in enumerate(self.intervals):
            if not 0 <= a <= b < self.n:
                raise ValueError(
                    f"interval {pos} = ({a}, {b}) is not well-ordered inside [0, {self.n})"
                )
            canon.append((int(a), int(b)))
        object.__setattr__(self, "intervals", tuple(canon))

    @property
    def m(self) -> int:
        return len(self.intervals)


def parse_intervals(text: str | bytes) -> IntervalInstance:
    """Parse the interval format: header ``n m`` then one ``a b`` pair per line."""
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
    pairs: list[tuple[int, int]] = []
    for _ in range(m):
        row = next(lines, None)
        if row is None:
            raise HypergraphFormatError(
                f"expected {m} interval lines, found only {len(pairs)}"
            )
        lineno, tokens = row
        if len(tokens) != 2:
            raise HypergraphFormatError(f"line {lineno}: interval line must be 'a b'")
        a, b = (_int_token(t, lineno) for t in tokens)
        if not 0 <= a <= b < n:
            raise HypergraphFormatError(
                f"line {lineno}: interval ({a}, {b}) out of range for n={n}"
            )
        pairs.append((a, b))
    extra = next(lines, None)
    if extra is not None:
        raise HypergraphFormatError(
            f"line {extra[0]}: trailing content after {m} intervals"
        )
    return IntervalInstance(n, tuple(pairs))


def serialize_intervals(inst: IntervalInstance) -> str:
    lines = [f"{inst.n} {inst.m}"]
    lines.extend(f"{a} {b}" for a, b in inst.intervals)
    return "\n".join(lines) + "\n"


def to_hypergraph(inst: IntervalInstance) -> Hypergraph:
    """General-format view of the instance: each interval becomes a full range edge."""
    edges = tuple(tuple(range(a, b + 1)) for a, b in inst.intervals)
    return Hypergraph(inst.n, edges)


def sorted_order(inst: IntervalInstance) -> tuple[int, ...]:
    """Positions of the intervals sorted by (right end, left end, input index)."""
    return tuple(
        sorted(range(inst.m), key=lambda i: (inst.intervals[i][1], inst.intervals[i][0], i))
    )


def partition_sets(
    intervals: tuple[tuple[int, int], ...], i: int
) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]:
    """Split positions 0..i into (disjoint-left, overlapping, contained) classes.

    ``intervals`` must already be sorted by right endpoint.  Relative to
    interval i: class A holds intervals ending before it starts, class B those
    that straddle its left end, class C those contained in it (always
    including i itself).
    """
    a_i, b_i = intervals[i]
    disjoint, straddling, contained = [], [], []
    for j in range(i + 1):
        a_j, b_j = intervals[j]
        if b_j > b_i or (b_j == b_i and (a_j, j) > (a_i, i)):
            raise ValueError("intervals must be sorted by right endpoint")
        if b_j < a_i:
            disjoint.append(j)
        elif a_j < a_i:
            straddling.append(j)
        else:
            contained.append(j)
    return tuple(disjoint), tuple(straddling), tuple(contained)


@dataclass(frozen=True)
class DPTable:
    """Filled table with backpointers; queries and reconstruction read from it.

    values[i][j-1] is the minimum union size choosing j intervals among sorted
    positions 0..i with position i forced in; the sentinel infinity is n + 1.
    back[i][j-1] is None for infeasible cells, ("base",) for contained-class
    cells, and ("rec", i*, j*) for cells extending a predecessor.
    """

    instance: IntervalInstance
    order: tuple[int, ...]
    sorted_intervals: tuple[tuple[int, int], ...]
    contained: tuple[tuple[int, ...], ...]
    values: tuple[tuple[int, ...], ...]
    back: tuple[tuple[tuple | None, ...], ...]

    @property
    def infinity(self) -> int:
        return self.instance.n + 1

    def optimum(self, p: int) -> int | None:
        """Minimum union size over all p-subsets, or None if p > m."""
        if not 1 <= p <= self.instance.m:
            return None
        best = min(
            (self.values[i][p - 1] for i in range(p - 1, self.instance.m)),
            default=self.infinity,
        )
        return None if best >= self.infinity else best

    def reconstruct(self, i: int, j: int) -> tuple[int, ...]:
        """Original indices of one optimal j-subset realizing cell (i, j)."""
        picked: list[int] = []
        while True:
            pointer = self.back[i][j - 1]
            if pointer is None:
                raise ValueError(f"cell ({i}, {j}) is infeasible")
            if pointer[0] == "base":
                inside = [q for q in self.contained[i] if q != i]
                picked.append(i)
                picked.extend(inside[: j - 1])
                break
            _, istar, jstar = pointer
            added = sorted(set(self.contained[i]) - set(self.contained[istar]))
            picked.extend(added)
            i, j = istar, jstar
        positions = sorted(picked)
        if len(set(positions)) != len(positions):
            raise RuntimeError("reconstruction picked a duplicate interval")
        return tuple(sorted(self.order[q] for q in positions))


def fill_table(inst: IntervalInstance) -> DPTable:
    """Fill every cell bottom-up; one fill answers all p at once."""
    order = sorted_order(inst)
    ivs = tuple(inst.intervals[i] for i in order)
    m = inst.m
    inf = inst.n + 1
    contained: list[tuple[int, ...]] = []
    for i in range(m):
        _, _, c = partition_sets(ivs, i)
        contained.append(c)
    contained_sets = [set(c) for c in contained]

    values: list[list[int]] = []
    back: list[list[tuple | None]] = []
    for i in range(m):
        a_i, b_i = ivs[i]
        length = b_i - a_i + 1
        row_v: list[int] = []
        row_b: list[tuple | None] = []
        for j in range(1, i + 2):
            if j <= len(contained[i]):
                row_v.append(length)
                row_b.append(("base",))
                continue
            best, best_ptr = inf, None
            for istar in range(i):
                if istar in contained_sets[i]:
                    continue
                newly = len(contained_sets[i] - contained_sets[istar])
                jstar = j - newly
                if not 1 <= jstar <= istar + 1:
                    continue
                prev = values[istar][jstar - 1]
                if prev >= inf:
                    continue
                a_s, b_s = ivs[istar]
                tail = length if b_s < a_i else b_i - b_s
                cand = prev + tail
                if cand < best:
                    best, best_ptr = cand, ("rec", istar, jstar)
            row_v.append(best)
            row_b.append(best_ptr)
        values.append(row_v)
        back.append(row_b)

    return DPTable(
        inst,
        order,
        ivs,
        tuple(contained),
        tuple(tuple(r) for r in values),
        tuple(tuple(r) for r in back),
    )


def _best_cell(table: DPTable, p: int) -> tuple[int, int] | None:
    """Sorted position realizing the optimum for p, or None when infeasible."""
    best, best_i = table.infinity, None
    for i in range(p - 1, table.instance.m):
        v = table.values[i][p - 1]
        if v < best:
            best, best_i = v, i
    if best_i is None or best >= table.infinity:
        return None
    return best_i, best


def mpu_interval(inst: IntervalInstance, p: int) -> EdgeSolution:
    """Exact optimum: p intervals of minimum joint support."""
    if not 1 <= p <= inst.m:
        raise ValueError(f"p must be in [1, {inst.m}], got {p}")
    table = fill_table(inst)
    cell = _best_cell(table, p)
    assert cell is not None, "every p in [1, m] has a feasible cell"
    best_i, best_value = cell
    indices = table.reconstruct(best_i, p)
    sol = EdgeSolution.from_indices(to_hypergraph(inst), indices, "interval-dp")
    if sol.union_size != best_value:
        raise RuntimeError(
            f"table value {best_value} disagrees with recomputed union {sol.union_size}"
        )
    return sol


def dksh_interval(inst: IntervalInstance, k: int) -> VertexSolution:
    """Exact densest k-set: the largest p whose optimal union fits in k vertices.

    One table fill answers every p; the realizing intervals' span is padded to
    exactly k vertices.  When even a single interval exceeds k, any k vertices
    (the smallest ids) are returned with zero covered intervals.
    """
    if not 1 <= k <= inst.n:
        raise ValueError(f"k must be in [1, {inst.n}], got {k}")
    h = to_hypergraph(inst)
    table = fill_table(inst)
    for p in range(inst.m, 0, -1):
        cell = _best_cell(table, p)
        if cell is None:
            continue
        best_i, best_value = cell
        if best_value <= k:
            indices = table.reconstruct(best_i, p)
            span = set()
            for idx in indices:
                span.update(h.edges[idx])
            vertices = sorted(span)
            for v in range(inst.n):
                if len(vertices) == k:
                    break
                if v not in span:
                    vertices.append(v)
                    span.add(v)
            return VertexSolution.from_vertices(h, vertices, "interval-dp")
    return VertexSolution.from_vertices(h, range(k), "interval-dp")
