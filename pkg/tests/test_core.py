import pytest
from hypothesis import given, strategies as st

from hyperdense import (
    EdgeSolution,
    Hypergraph,
    HypergraphFormatError,
    VertexSolution,
    covered_edges,
    degree,
    degrees,
    induced,
    parse_hypergraph,
    serialize_hypergraph,
    solution_json,
    top_by_degree,
    union_of,
)


@st.composite
def hypergraphs(draw, max_n=8, max_m=8, min_size=1, max_size=4):
    n = draw(st.integers(1, max_n))
    m = draw(st.integers(0, max_m))
    edges = []
    for _ in range(m):
        s = draw(st.integers(min_size, min(max_size, n)))
        edges.append(tuple(sorted(draw(st.sets(st.integers(0, n - 1), min_size=s, max_size=s)))))
    return Hypergraph(n, tuple(edges))


class TestParse:
    def test_basic(self):
        h = parse_hypergraph("3 2\n0 1\n1 2\n")
        assert h.n == 3
        assert h.edges == ((0, 1), (1, 2))

    def test_repeated_vertex_in_edge(self):
        with pytest.raises(HypergraphFormatError, match="repeated vertex"):
            parse_hypergraph("2 1\n0 0\n")

    def test_vertex_out_of_range(self):
        with pytest.raises(HypergraphFormatError, match="out of range"):
            parse_hypergraph("2 1\n0 5\n")

    def test_non_integer_token(self):
        with pytest.raises(HypergraphFormatError, match="non-integer token"):
            parse_hypergraph("2 1\n0 x\n")

    def test_malformed_header(self):
        with pytest.raises(HypergraphFormatError, match="header"):
            parse_hypergraph("2\n0 1\n")

    def test_missing_edges(self):
        with pytest.raises(HypergraphFormatError, match="found only 1"):
            parse_hypergraph("3 2\n0 1\n")

    def test_comments_and_blank_lines(self):
        h = parse_hypergraph("# instance\n\n3 1\n# edge\n0 2\n\n")
        assert h.edges == ((0, 2),)

    def test_line_numbers_in_errors(self):
        with pytest.raises(HypergraphFormatError, match="line 3"):
            parse_hypergraph("3 2\n0 1\n0 9\n")

    def test_bytes_accepted(self):
        assert parse_hypergraph(b"2 1\n0 1\n").edges == ((0, 1),)

    @given(hypergraphs())
    def test_roundtrip(self, h):
        assert parse_hypergraph(serialize_hypergraph(h)) == h


class TestHypergraph:
    def test_duplicate_edges_preserved(self):
        h = Hypergraph(2, ((0, 1), (0, 1)))
        assert h.m == 2

    def test_unsorted_input_canonicalized(self):
        h = Hypergraph(3, ((2, 0),))
        assert h.edges == ((0, 2),)

    def test_empty_edge_rejected(self):
        with pytest.raises(ValueError, match="empty"):
            Hypergraph(3, ((),))

    def test_repeated_vertex_rejected(self):
        with pytest.raises(ValueError, match="repeats"):
            Hypergraph(3, ((1, 1),))


class TestInduced:
    def test_keeps_contained_edges(self):
        h = Hypergraph(3, ((0, 1), (1, 2), (0, 2)))
        sub, lift = induced(h, {0, 1})
        assert sub.edges == ((0, 1),)
        assert lift == (0, 1)

    def test_identity_on_full_vertex_set(self):
        h = Hypergraph(4, ((0, 1), (1, 2, 3), (1, 2, 3)))
        sub, lift = induced(h, range(4))
        assert sub.edges == h.edges
        assert lift == (0, 1, 2, 3)

    def test_partial_edge_dropped(self):
        h = Hypergraph(3, ((0, 1, 2),))
        sub, _ = induced(h, {0, 1})
        assert sub.edges == ()

    def test_relabelling(self):
        h = Hypergraph(5, ((2, 4),))
        sub, lift = induced(h, {2, 4})
        assert sub.edges == ((0, 1),)
        assert lift == (2, 4)

    @given(hypergraphs())
    def test_full_set_is_identity(self, h):
        sub, _ = induced(h, range(h.n))
        assert sub.edges == h.edges


class TestDegrees:
    def test_degree(self):
        h = Hypergraph(3, ((0, 1), (0, 2)))
        assert degree(h, 0) == 2

    def test_duplicates_count(self):
        h = Hypergraph(2, ((0, 1), (0, 1)))
        assert degree(h, 1) == 2

    def test_isolated_vertex(self):
        h = Hypergraph(3, ((0, 1),))
        assert degree(h, 2) == 0

    @given(hypergraphs())
    def test_degrees_match_direct_scan(self, h):
        table = degrees(h)
        for v in range(h.n):
            assert table[v] == sum(1 for e in h.edges if v in e)


class TestTopByDegree:
    def test_tie_break_by_id(self):
        h = Hypergraph(4, ((0, 1, 2), (0, 1, 3)))
        assert top_by_degree(h, 1) == (0,)

    def test_t_at_least_n(self):
        h = Hypergraph(3, ((0, 1),))
        assert top_by_degree(h, 5) == (0, 1, 2)

    def test_all_tied(self):
        h = Hypergraph(5, ((2, 3, 4),))
        assert top_by_degree(h, 2) == (2, 3)

    def test_residual_edges(self):
        h = Hypergraph(3, ((0, 1), (1, 2), (1, 2)))
        assert top_by_degree(h, 1, residual_edges=[1, 2]) == (1,)


class TestUnionOf:
    def test_union(self):
        h = Hypergraph(3, ((0, 1), (1, 2)))
        assert union_of(h, (0, 1)) == (0, 1, 2)

    def test_empty(self):
        h = Hypergraph(3, ((0, 1),))
        assert union_of(h, ()) == ()

    def test_duplicates(self):
        h = Hypergraph(2, ((0, 1), (0, 1)))
        assert union_of(h, (0, 1)) == (0, 1)

    @given(hypergraphs(), st.data())
    def test_adding_covered_edge_keeps_union(self, h, data):
        if h.m == 0:
            return
        subset = data.draw(st.sets(st.integers(0, h.m - 1)))
        base = union_of(h, subset)
        extra = data.draw(st.integers(0, h.m - 1))
        grown = union_of(h, set(subset) | {extra})
        assert set(base) <= set(grown)
        if set(h.edges[extra]) <= set(base):
            assert grown == base


class TestSolutions:
    def test_edge_solution(self):
        h = Hypergraph(3, ((0, 1), (1, 2)))
        sol = EdgeSolution.from_indices(h, [1, 0], "x")
        assert sol.edge_indices == (0, 1)
        assert sol.union == (0, 1, 2)

    def test_edge_solution_rejects_duplicates(self):
        h = Hypergraph(3, ((0, 1),))
        with pytest.raises(ValueError):
            EdgeSolution.from_indices(h, [0, 0])

    def test_vertex_solution_covers_all(self):
        h = Hypergraph(4, ((0, 1), (0, 1), (2, 3)))
        sol = VertexSolution.from_vertices(h, [1, 0], "x")
        assert sol.covered == (0, 1)

    def test_covered_edges_scan(self):
        h = Hypergraph(4, ((0, 1, 2), (1, 2), (0, 3)))
        assert covered_edges(h, {0, 1, 2}) == (0, 1)

    def test_solution_json_is_canonical(self):
        h = Hypergraph(3, ((0, 1),))
        sol = EdgeSolution.from_indices(h, [0], "sqrt-m")
        a = solution_json("mpu", 1, sol)
        b = solution_json("mpu", 1, EdgeSolution.from_indices(h, [0], "sqrt-m"))
        assert a == b
        assert '"problem":"mpu"' in a
