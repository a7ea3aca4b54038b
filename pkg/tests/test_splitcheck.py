import random
from itertools import combinations

import pytest
from hypothesis import given, settings

from gksplit.errors import InvalidPartition, PreconditionViolated
from gksplit.graph import Graph
from gksplit.splitcheck import (
    SplitPartition,
    is_split_degree,
    is_split_forbidden,
    m_index,
    specialize,
    validate_partition,
)

from oracles import brute_chromatic, brute_is_split, graphs_on
from test_graph import M22_SOLVABLE, complete, cycle, path, small_graphs


class TestMIndex:
    def test_k3(self):
        assert m_index(complete(3)) == 3

    def test_star(self):
        star = Graph(range(4), [(0, 1), (0, 2), (0, 3)])
        assert m_index(star) == 2

    def test_edgeless(self):
        assert m_index(Graph(range(5))) == 1

    def test_empty_graph(self):
        with pytest.raises(PreconditionViolated):
            m_index(Graph([]))


class TestDegreeRoute:
    def test_2k2_refuted(self):
        v = is_split_degree(Graph(range(4), [(0, 1), (2, 3)]))
        assert not v.split and v.forbidden.kind == "2K2"

    def test_small_graphs_always_split(self):
        for edges in graphs_on(3):
            v = is_split_degree(Graph(range(3), edges))
            assert v.split

    def test_p4(self):
        v = is_split_degree(path(4))
        assert v.split and v.m_index == 2
        ok, _ = validate_partition(path(4), v.partition)
        assert ok

    def test_empty_graph_is_split(self):
        v = is_split_degree(Graph([]))
        assert v.split and v.partition.clique == frozenset()

    def test_partition_always_validates(self):
        for n in range(7):
            for edges in graphs_on(n):
                v = is_split_degree(Graph(range(n), edges))
                if v.split:
                    ok, reason = validate_partition(Graph(range(n), edges), v.partition)
                    assert ok, (n, edges, reason)


class TestForbiddenRoute:
    def test_c4_c5(self):
        assert not is_split_forbidden(cycle(4)).split
        assert not is_split_forbidden(cycle(5)).split

    def test_k5_minus_matching(self):
        g = complete(5)
        trimmed = Graph(g.vertices, [e for e in g.edges if e not in ((0, 1), (2, 3))])
        assert is_split_forbidden(trimmed).split == is_split_degree(trimmed).split

    def test_partition_extraction_independent(self):
        v = is_split_forbidden(path(4))
        assert v.split
        ok, _ = validate_partition(path(4), v.partition)
        assert ok


class TestValidate:
    def test_k3_full_clique(self):
        g = complete(3)
        ok, reason = validate_partition(g, SplitPartition(frozenset(g.vertices), frozenset()))
        assert ok and reason is None

    def test_2k2_never_valid(self):
        g = Graph(range(4), [(0, 1), (2, 3)])
        vs = list(g.vertices)
        for size in range(5):
            for c in combinations(vs, size):
                part = SplitPartition(frozenset(c), frozenset(vs) - set(c))
                ok, reason = validate_partition(g, part)
                assert not ok and reason

    def test_special_flag(self):
        g = path(4)  # 0-1-2-3
        part = SplitPartition(frozenset({1, 2}), frozenset({0, 3}), special=True)
        ok, _ = validate_partition(g, part)
        assert ok

    def test_special_violation_reported(self):
        g = complete(3)
        part = SplitPartition(frozenset({0, 1}), frozenset({2}), special=True)
        ok, reason = validate_partition(g, part)
        assert not ok and "adjacent to all" in reason

    def test_cover_and_overlap(self):
        g = complete(3)
        ok, reason = validate_partition(g, SplitPartition(frozenset({0}), frozenset({1})))
        assert not ok and "cover" in reason
        ok, reason = validate_partition(g, SplitPartition(frozenset({0, 1}), frozenset({1, 2})))
        assert not ok and "overlap" in reason


class TestSpecialize:
    def test_absorbs_dominating_vertex(self):
        g = complete(3)
        out = specialize(g, SplitPartition(frozenset({0, 1}), frozenset({2})))
        assert out.clique == {0, 1, 2} and out.special

    def test_already_special_unchanged(self):
        g = path(4)
        part = SplitPartition(frozenset({1, 2}), frozenset({0, 3}))
        out = specialize(g, part)
        assert out.clique == part.clique and out.special

    def test_invalid_input_rejected(self):
        star = Graph(range(4), [(0, 1), (0, 2), (0, 3)])
        with pytest.raises(InvalidPartition):
            specialize(star, SplitPartition(frozenset(), frozenset({1, 2, 3})))


class TestAgreementSmall:
    def test_exhaustive_up_to_five(self):
        for n in range(6):
            for edges in graphs_on(n):
                g = Graph(range(n), edges)
                a = is_split_degree(g).split
                b = is_split_forbidden(g).split
                c = brute_is_split(g.vertices, g.edges)
                assert a == b == c, (n, edges)


def random_split_graph(rng, n):
    """A random split graph: clique + independent set + random cross edges."""
    k = rng.randrange(n + 1)
    clique = list(range(k))
    rest = list(range(k, n))
    edges = [(u, v) for u, v in combinations(clique, 2)]
    for v in rest:
        for u in clique:
            if rng.random() < 0.4:
                edges.append((u, v))
    return Graph(range(n), edges)


class TestProperties:
    @given(small_graphs())
    @settings(max_examples=200, deadline=None)
    def test_complement_closure(self, g):
        assert is_split_degree(g).split == is_split_degree(g.complement()).split

    @given(small_graphs())
    @settings(max_examples=150, deadline=None)
    def test_hereditary(self, g):
        if not is_split_degree(g).split:
            return
        vs = list(g.vertices)
        rng = random.Random(len(vs) * 31 + len(g.edges))
        for _ in range(3):
            sub = [v for v in vs if rng.random() < 0.6]
            assert is_split_degree(g.induced(sub)).split

    def test_disconnected_split_shape(self):
        # at most one component of a split graph contains an edge
        rng = random.Random(404)
        for _ in range(200):
            g = random_split_graph(rng, rng.randrange(2, 9))
            v = is_split_degree(g)
            if v.split:
                with_edges = [c for c in g.components() if any(
                    g.adjacent(u, w) for u, w in combinations(sorted(c, key=str), 2)
                )]
                assert len(with_edges) <= 1

    def test_m_index_is_chromatic_number_for_split(self):
        rng = random.Random(77)
        for _ in range(60):
            g = random_split_graph(rng, rng.randrange(1, 9))
            v = is_split_degree(g)
            assert v.split
            assert v.m_index == brute_chromatic(g.vertices, g.edges), g.edges


class TestM22:
    def test_degree_and_forbidden_agree(self):
        a = is_split_degree(M22_SOLVABLE)
        b = is_split_forbidden(M22_SOLVABLE)
        assert not a.split and not b.split
        assert set(a.forbidden.vertices) == {3, 5, 7, 11}
