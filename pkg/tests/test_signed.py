"""
Tests for signed graphs and the links to digraphs
"""

import random

import pytest

from cyclo.digraph import Digraph, PairState, hermitian_adjacency, pair_count
from cyclo.exceptions import ContractViolation, FormatError
from cyclo.gaussint import GaussInt, IntPoly, char_poly
from cyclo.signed import (
    SignedGraph,
    associated_signed_graph,
    bipartition,
    canonical_digraph,
    check_doubling_properties,
    components,
    signed_char_poly,
)


@pytest.fixture
def negative_square():
    """4-cycle 0-1-2-3-0 with one negative edge"""
    return SignedGraph.from_edges(4, pos=[(0, 1), (1, 2), (2, 3)], neg=[(3, 0)])


class TestSignedGraph:
    """Construction and queries"""

    def test_edges_are_normalised(self, negative_square):
        assert negative_square.edges == ((0, 1, 1), (0, 3, -1), (1, 2, 1), (2, 3, 1))
        assert negative_square.positive_edges == [(0, 1), (1, 2), (2, 3)]
        assert negative_square.negative_edges == [(0, 3)]

    def test_sign(self, negative_square):
        assert negative_square.sign(3, 0) == -1
        assert negative_square.sign(1, 0) == 1
        assert negative_square.sign(0, 2) == 0

    def test_default_labels_and_origin(self, negative_square):
        assert negative_square.labels == ("0", "1", "2", "3")
        assert negative_square.origin == (0, 1, 2, 3)

    def test_from_labelled(self):
        signed = SignedGraph.from_labelled(["a", "b", "c"], pos=[("a", "b")], neg=[("c", "b")])
        assert signed.edges == ((0, 1, 1), (1, 2, -1))
        assert signed.labels == ("a", "b", "c")

    def test_from_labelled_unknown_label(self):
        with pytest.raises(FormatError, match="Unknown vertex label"):
            SignedGraph.from_labelled(["a", "b"], pos=[("a", "z")])

    @pytest.mark.parametrize("pos,neg", [
        ([(0, 0)], []),
        ([(0, 5)], []),
        ([(0, 1)], [(1, 0)]),
    ])
    def test_rejects_bad_edges(self, pos, neg):
        with pytest.raises(FormatError):
            SignedGraph.from_edges(3, pos, neg)

    def test_label_count(self):
        with pytest.raises(ContractViolation):
            SignedGraph(2, (), ("a",))

    def test_adjacency(self, negative_square):
        A = negative_square.adjacency()
        assert A[0, 3] == A[3, 0] == GaussInt(-1)
        assert A[0, 1] == GaussInt(1)

    def test_char_poly(self, negative_square):
        """An unbalanced 4-cycle has eigenvalues +-sqrt 2, each twice"""
        assert signed_char_poly(negative_square) == IntPoly((4, 0, -4, 0, 1))


class TestComponents:
    """Splitting into connected components"""

    def test_components_keep_origin(self):
        signed = SignedGraph.from_edges(5, pos=[(0, 3)], neg=[(1, 4), (4, 2)])
        parts = components(signed)
        assert [p.n for p in parts] == [2, 3]
        assert parts[0].origin == (0, 3)
        assert parts[1].origin == (1, 2, 4)
        assert parts[1].edges == ((0, 2, -1), (1, 2, -1))

    def test_isolated_vertex(self):
        parts = components(SignedGraph.from_edges(3, pos=[(1, 2)]))
        assert [p.origin for p in parts] == [(0,), (1, 2)]


class TestBipartition:
    """Two-colouring with the lowest vertex on the first side"""

    def test_square(self, negative_square):
        assert bipartition(negative_square) == ([0, 2], [1, 3])

    def test_lowest_vertex_first_per_component(self):
        signed = SignedGraph.from_edges(4, pos=[(0, 1), (2, 3)])
        side1, side2 = bipartition(signed)
        assert 0 in side1 and 2 in side1

    def test_odd_cycle(self):
        triangle = SignedGraph.from_edges(3, pos=[(0, 1), (1, 2), (0, 2)])
        with pytest.raises(ContractViolation, match="not bipartite"):
            bipartition(triangle)


class TestCanonicalDigraph:
    """Turning a bipartite signed graph into an all-arc digraph"""

    def test_arc_directions_record_signs(self, negative_square):
        """Positive edges point from V1 to V2, negative ones back"""
        digraph = canonical_digraph(negative_square)
        assert digraph.digons() == []
        assert digraph.arcs() == [(0, 1), (2, 1), (2, 3), (3, 0)]

    def test_same_spectrum(self, negative_square):
        digraph = canonical_digraph(negative_square)
        assert char_poly(hermitian_adjacency(digraph)) == signed_char_poly(negative_square)

    def test_other_side(self, negative_square):
        """Choosing V2 as the first side reverses every arc"""
        digraph = canonical_digraph(negative_square, side1=[1, 3])
        assert digraph.arcs() == [(0, 3), (1, 0), (1, 2), (3, 2)]

    def test_rejects_non_side(self, negative_square):
        with pytest.raises(ContractViolation):
            canonical_digraph(negative_square, side1=[0, 1])

    def test_rejects_disconnected(self):
        with pytest.raises(ContractViolation):
            canonical_digraph(SignedGraph.from_edges(3, pos=[(0, 1)]))


class TestAssociatedSignedGraph:
    """The signed graph on two copies of the vertex set"""

    def test_digon(self):
        signed = associated_signed_graph(Digraph.from_edges(2, digons=[(0, 1)]))
        assert signed.positive_edges == [(0, 1), (2, 3)]
        assert signed.negative_edges == []

    def test_arc(self):
        """x -> y gives +{x1, y2} and -{x2, y1}"""
        signed = associated_signed_graph(Digraph.from_edges(2, arcs=[(0, 1)]))
        assert signed.positive_edges == [(0, 3)]
        assert signed.negative_edges == [(1, 2)]
        assert signed.labels == ("0_1", "1_1", "0_2", "1_2")

    @pytest.mark.parametrize("digraph", [
        Digraph.from_edges(3, arcs=[(0, 1), (1, 2), (2, 0)]),
        Digraph.from_edges(3, digons=[(0, 1)], arcs=[(1, 2), (2, 0)]),
        Digraph.from_edges(4, digons=[(0, 1), (2, 3)], arcs=[(1, 2), (0, 3)]),
    ])
    def test_doubling_properties(self, digraph):
        """Spectrum doubles and twin copies stay apart"""
        check = check_doubling_properties(digraph)
        assert check.ok
        assert check.offending_vertices == []

    @pytest.mark.slow
    def test_doubling_properties_random(self):
        """Seeded sweep over random digraphs with up to 8 vertices"""
        rng = random.Random(20)
        for _ in range(1000):
            n = rng.randint(1, 8)
            digraph = Digraph(n, tuple(rng.choice(list(PairState)) for _ in range(pair_count(n))))
            check = check_doubling_properties(digraph)
            assert check.spectrum_doubled, digraph
            assert check.ok, digraph
