import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gksplit.errors import LoopEdge, UnknownVertex
from gksplit.graph import (
    ClassLabel,
    Graph,
    label_key,
    same_class_graph,
    witness_edges,
)

from oracles import brute_has_forbidden


def small_graphs(max_n=7):
    """Hypothesis strategy: a random labeled graph on up to max_n vertices."""

    @st.composite
    def build(draw):
        n = draw(st.integers(0, max_n))
        verts = list(range(n))
        edges = []
        for i in range(n):
            for j in range(i + 1, n):
                if draw(st.booleans()):
                    edges.append((i, j))
        return Graph(verts, edges)

    return build()


def path(n):
    return Graph(range(n), [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    return Graph(range(n), [(i, (i + 1) % n) for i in range(n)])


def complete(n):
    return Graph(range(n), [(i, j) for i in range(n) for j in range(i + 1, n)])


M22_SOLVABLE = Graph([2, 3, 5, 7, 11], [(11, 5), (5, 2), (2, 3), (2, 7), (3, 7)])


class TestConstruction:
    def test_edgeless(self):
        g = Graph(["a", "b"], []) if False else Graph([1, 2], [])
        assert g.n == 2 and g.edges == ()

    def test_k1(self):
        assert Graph([5]).n == 1

    def test_triangle(self):
        g = complete(3)
        assert len(g.edges) == 3 and g.is_clique(g.vertices)

    def test_unknown_vertex(self):
        with pytest.raises(UnknownVertex):
            Graph([1, 2], [(1, 3)])

    def test_loop(self):
        with pytest.raises(LoopEdge):
            Graph([1, 2], [(1, 1)])

    def test_duplicate_edges_collapse(self):
        g = Graph([1, 2], [(1, 2), (2, 1)])
        assert len(g.edges) == 1


class TestInduced:
    def test_k3_restriction(self):
        assert len(complete(3).induced([0, 1]).edges) == 1

    def test_matching_restriction(self):
        g = Graph([0, 1, 2, 3], [(0, 1), (2, 3)])
        assert g.induced([0, 2]).edges == ()

    def test_c5_any_four_is_path(self):
        # every 4-subset of a pentagon induces a path on 4 vertices
        g = cycle(5)
        for drop in range(5):
            sub = g.induced([v for v in range(5) if v != drop])
            degs = sub.degree_sequence()
            assert degs == [2, 2, 1, 1]

    def test_unknown_subset(self):
        with pytest.raises(UnknownVertex):
            complete(3).induced([7])


class TestNeighborhoods:
    def test_isolated(self):
        g = Graph([1, 2], [])
        assert g.closed_nbhd(1) == {1}

    def test_star_center(self):
        star = Graph(range(4), [(0, 1), (0, 2), (0, 3)])
        assert star.closed_nbhd(0) == {0, 1, 2, 3}

    def test_path_leaf(self):
        assert path(3).closed_nbhd(0) == {0, 1}


class TestComponents:
    def test_connected(self):
        assert len(path(4).components()) == 1

    def test_two_matchings(self):
        g = Graph(range(4), [(0, 1), (2, 3)])
        assert len(g.components()) == 2

    def test_edgeless(self):
        assert len(Graph(range(4)).components()) == 4


class TestCliqueIndependent:
    def test_empty_vacuous(self):
        g = complete(3)
        assert g.is_clique([]) and g.is_independent([])

    def test_k3(self):
        g = complete(3)
        assert g.is_clique(g.vertices) and not g.is_independent(g.vertices)

    def test_matching_transversal(self):
        g = Graph(range(4), [(0, 1), (2, 3)])
        assert g.is_independent([0, 2])


class TestCompactForm:
    def test_complete_collapses(self):
        cf = complete(4).compact_form()
        assert cf.quotient.n == 1
        (label,) = cf.quotient.vertices
        assert label.members == (0, 1, 2, 3)

    def test_edgeless_pair_stays(self):
        cf = Graph([1, 2]).compact_form()
        assert cf.quotient.n == 2

    def test_m22_path(self):
        cf = M22_SOLVABLE.compact_form()
        contents = {tuple(sorted(c)) for c in cf.class_contents.values()}
        assert contents == {(11,), (5,), (2,), (3, 7)}
        q = cf.quotient
        assert q.degree_sequence() == [2, 2, 1, 1]
        by_members = {l.members: l for l in q.vertices}
        assert q.adjacent(by_members[(11,)], by_members[(5,)])
        assert q.adjacent(by_members[(5,)], by_members[(2,)])
        assert q.adjacent(by_members[(2,)], by_members[(3, 7)])

    @given(small_graphs())
    @settings(max_examples=150, deadline=None)
    def test_idempotent(self, g):
        quotient = g.compact_form().quotient
        again = quotient.compact_form()
        assert all(len(c) == 1 for c in again.class_contents.values())

    @given(small_graphs())
    @settings(max_examples=150, deadline=None)
    def test_twin_classes_are_cliques(self, g):
        cf = g.compact_form()
        for members in cf.class_contents.values():
            assert g.is_clique(members)

    @given(small_graphs())
    @settings(max_examples=150, deadline=None)
    def test_component_count_preserved(self, g):
        cf = g.compact_form()
        assert len(cf.quotient.components()) == len(g.components())


class TestForbidden:
    def test_c5_found(self):
        w = cycle(5).find_forbidden(fast=False)
        assert w.kind == "C5" and set(w.vertices) == {0, 1, 2, 3, 4}

    def test_k4_clean(self):
        assert complete(4).find_forbidden(fast=False) is None

    def test_m22_matching(self):
        w = M22_SOLVABLE.find_forbidden(fast=False)
        assert w.kind == "2K2" and set(w.vertices) == {3, 5, 7, 11}
        for u, v in witness_edges(w):
            assert M22_SOLVABLE.adjacent(u, v)

    def test_c4(self):
        w = cycle(4).find_forbidden(fast=False)
        assert w.kind == "C4"

    def test_fast_path_agrees(self):
        for g in (complete(4), path(4), cycle(4), cycle(5), M22_SOLVABLE):
            assert (g.find_forbidden(fast=True) is None) == (
                g.find_forbidden(fast=False) is None
            )

    @given(small_graphs(6))
    @settings(max_examples=200, deadline=None)
    def test_against_brute_scan(self, g):
        got = g.find_forbidden(fast=False)
        expect = brute_has_forbidden(g.vertices, g.edges)
        assert (got is not None) == expect
        if got is not None:
            sub = g.induced(got.vertices)
            claimed = set(map(frozenset, witness_edges(got)))
            assert set(map(frozenset, sub.edges)) == claimed


class TestSerialization:
    def test_json_round_trip_ints(self):
        g = M22_SOLVABLE
        assert Graph.from_json(g.to_json()) == g

    def test_json_round_trip_classes(self):
        g = Graph(
            [ClassLabel("R4", (5,)), ClassLabel("p", (2,)), 3],
            [(ClassLabel("R4", (5,)), 3)],
        )
        assert Graph.from_json(g.to_json()) == g

    def test_schema_field(self):
        doc = json.loads(complete(2).to_json())
        assert doc["schema"] == "gksplit/graph/1"

    def test_dot_stable(self):
        text = M22_SOLVABLE.to_dot()
        assert text == M22_SOLVABLE.to_dot()
        assert '"11" -- "5"' in text or '"5" -- "11"' in text

    def test_same_class_graph(self):
        a = Graph([ClassLabel("x", (2, 3)), ClassLabel("y", (5,))], [])
        b = Graph([ClassLabel("u", (5,)), ClassLabel("w", (2, 3))], [])
        assert same_class_graph(a, b)
        c = Graph(
            [ClassLabel("u", (5,)), ClassLabel("w", (2, 3))],
            [(ClassLabel("u", (5,)), ClassLabel("w", (2, 3)))],
        )
        assert not same_class_graph(a, c)


class TestLabelOrder:
    def test_ints_before_classes(self):
        assert label_key(7) < label_key(ClassLabel("A", ()))

    def test_rejects_unknown(self):
        with pytest.raises(TypeError):
            label_key(3.5)
