"""
Tests for the catalog of named digraphs, matrices and signed graphs
"""

import pytest

from cyclo.catalog import (
    CatalogRef,
    Family,
    GaussVector,
    Sporadic,
    build,
    build_digraph,
    build_matrix,
    canonical_u,
    complete,
    ctilde,
    ctilde1,
    ctilde2,
    cycle,
    delta_family,
    delta_ref,
    delta_vectors,
    directed_cycle,
    displaced_gram,
    inner,
    path,
    signed_o,
    signed_q,
    signed_family,
    signed_u,
    small_family,
    sporadic_digraph,
    sporadic_matrix,
    sporadic_negation_witness,
    sporadic_witnesses,
    square,
    t_matrix,
    t_vectors,
    utilde1,
    utilde6,
    y_tree,
)
from cyclo.digraph import hermitian_adjacency, is_connected
from cyclo.equivalence import strong_equiv
from cyclo.exceptions import BadRoot, ContractViolation, FormatError, NotAdjacencyClass, ParamRange
from cyclo.gaussint import GaussInt, IntPoly, RadiusClass, char_poly, radius_class, rank_over_gaussian_rationals
from cyclo.signed import SignedGraph, bipartition


def shifted_rank(H):
    """Rank of H + 2I, the Gram matrix of the underlying roots"""
    return rank_over_gaussian_rationals(
        [[H[x, y] + (2 if x == y else 0) for y in range(H.n)] for x in range(H.n)]
    )


class TestCatalogRef:
    """Parsing, validation and naming of references"""

    @pytest.mark.parametrize("text,extra,expected", [
        ("Delta1(3)", (), "Delta1(3)"),
        ("delta1", ("4",), "Delta1(4)"),
        ("DeltaI(5)", (), "DeltaI(5)"),
        ("Square(1, 0, 2, 0)", (), "Square(1,0,2,0)"),
        ("Square", ("1", "0", "2", "0"), "Square(1,0,2,0)"),
        ("S14", (), "Sporadic(S14)"),
        ("Sporadic(S16)", (), "Sporadic(S16)"),
        ("s8dagger", (), "Sporadic(S8dagger)"),
        ("Utilde1", (), "Utilde1"),
        ("SignedQ", ("2", "3"), "SignedQ(2,3)"),
    ])
    def test_parse(self, text, extra, expected):
        assert str(CatalogRef.parse(text, extra)) == expected

    def test_parse_sporadic_enum(self):
        ref = CatalogRef.parse("S14")
        assert ref.family is Family.SPORADIC and ref.sporadic is Sporadic.S14

    @pytest.mark.parametrize("text,extra", [
        ("Nonsense(3)", ()),
        ("Delta1(x)", ()),
        ("Sporadic(S9)", ()),
        ("(3)", ()),
    ])
    def test_parse_errors(self, text, extra):
        with pytest.raises(FormatError):
            CatalogRef.parse(text, extra)

    def test_unknown_family_lists_known(self):
        with pytest.raises(FormatError, match="Known families"):
            CatalogRef.parse("Petersen")

    @pytest.mark.parametrize("family,params", [
        (Family.DELTA1, (2,)),
        (Family.DN, (2,)),
        (Family.PATH, (0,)),
        (Family.SQUARE, (1, -1, 0, 0)),
        (Family.Y, (2, 0, 1)),
        (Family.CANONICAL_U, (12,)),
        (Family.SIGNED_U, (0,)),
        (Family.SIGNED_O, (5,)),
        (Family.SIGNED_O, (2,)),
        (Family.SIGNED_Q, (1, 2)),
        (Family.SIGNED_Q, (-1, 5)),
        (Family.PATH, (1, 2)),
    ])
    def test_param_range(self, family, params):
        with pytest.raises(ParamRange):
            CatalogRef(family, params)

    def test_sporadic_needs_name(self):
        with pytest.raises(ParamRange):
            CatalogRef(Family.SPORADIC)
        with pytest.raises(ParamRange):
            CatalogRef(Family.PATH, (3,), Sporadic.S14)

    def test_small_signed_o_warns(self, caplog):
        CatalogRef(Family.SIGNED_O, (6,))
        assert "below the maximal range" in caplog.text

    @pytest.mark.parametrize("text,order", [
        ("Delta1(5)", 10),
        ("S8dagger", 8),
        ("S16", 16),
        ("Square(3,1,0,0)", 8),
        ("Y(4,2,1)", 8),
        ("Utilde6", 4),
        ("CanonicalU(3)", 8),
        ("SignedQ(2,3)", 9),
        ("Ctilde2(7)", 7),
    ])
    def test_order(self, text, order):
        assert CatalogRef.parse(text).order() == order

    def test_is_signed(self):
        assert CatalogRef.parse("SignedU(3)").is_signed
        assert not CatalogRef.parse("CanonicalU(3)").is_signed

    def test_delta_ref(self):
        assert str(delta_ref("i", 4)) == "DeltaI(4)"
        assert str(delta_ref(1, 3)) == "Delta1(3)"


class TestRootVectors:
    """Gaussian root vectors and displaced Gram matrices"""

    def test_inner_is_sesquilinear(self):
        u = GaussVector.of([1, "i"])
        v = GaussVector.of(["i", 1])
        assert inner(u, v) == GaussInt(0, 0)
        assert inner(u, u) == GaussInt(2)
        assert inner(u.scale(GaussInt(0, 1)), v) == GaussInt(0, 1) * inner(u, v)

    def test_inner_dimension_mismatch(self):
        with pytest.raises(ContractViolation):
            inner(GaussVector.of([1]), GaussVector.of([1, 0]))

    def test_bad_root(self):
        with pytest.raises(BadRoot):
            displaced_gram([GaussVector.of([1, 0])])

    def test_entry_outside_alphabet(self):
        """Antipodal roots give the entry -2"""
        v = GaussVector.of([1, 1])
        with pytest.raises(NotAdjacencyClass):
            displaced_gram([v, v.scale(GaussInt(-1))])

    def test_gram_without_alphabet_check(self):
        v = GaussVector.of([1, 1])
        G = displaced_gram([v, v.scale(GaussInt(-1))], adjacency=False)
        assert G[0, 1] == GaussInt(-2)

    @pytest.mark.parametrize("x", [1, "i"])
    @pytest.mark.parametrize("k", [3, 4, 5])
    def test_t_vectors_are_roots(self, x, k):
        vectors = t_vectors(x, k)
        assert len(vectors) == 2 * k
        assert all(v.norm2() == 2 and v.dimension == k for v in vectors)

    @pytest.mark.parametrize("x", [1, "i"])
    @pytest.mark.parametrize("k", [3, 4, 5])
    def test_delta_vectors_are_roots(self, x, k):
        vectors = delta_vectors(x, k)
        assert len(vectors) == 2 * k
        assert all(v.norm2() == 2 for v in vectors)

    def test_k_too_small(self):
        with pytest.raises(ParamRange):
            t_vectors(1, 2)

    def test_x_must_be_unit_one_or_i(self):
        with pytest.raises(ParamRange):
            t_vectors(-1, 3)


class TestRadiusTwoFamilies:
    """Delta and T matrices"""

    @pytest.mark.parametrize("x", [1, "i"])
    @pytest.mark.parametrize("k", [3, 4, 5])
    def test_t_matrix(self, x, k):
        """2k roots in dimension k: radius exactly 2, H + 2I has rank k"""
        T = t_matrix(x, k)
        assert T.n == 2 * k and T.is_adjacency_class()
        assert radius_class(T) is RadiusClass.EXACTLY_2
        assert shifted_rank(T) == k

    @pytest.mark.parametrize("x", [1, "i"])
    @pytest.mark.parametrize("k", [3, 4, 5])
    def test_delta_is_switched_t(self, x, k):
        digraph = delta_family(x, k)
        assert digraph.n == 2 * k
        assert is_connected(digraph)
        assert strong_equiv(t_matrix(x, k), hermitian_adjacency(digraph)) is not None

    @pytest.mark.parametrize("x", [1, "i"])
    def test_delta_radius_two(self, x):
        assert radius_class(hermitian_adjacency(delta_family(x, 4))) is RadiusClass.EXACTLY_2

    @pytest.mark.slow
    @pytest.mark.parametrize("x", [1, "i"])
    @pytest.mark.parametrize("k", [6, 7, 8])
    def test_larger_delta_is_switched_t(self, x, k):
        """Up to 16 vertices, the largest order the switching search accepts"""
        T = t_matrix(x, k)
        digraph = delta_family(x, k)
        assert radius_class(T) is RadiusClass.EXACTLY_2
        assert radius_class(hermitian_adjacency(digraph)) is RadiusClass.EXACTLY_2
        assert shifted_rank(T) == k
        assert strong_equiv(T, hermitian_adjacency(digraph)) is not None


class TestSporadics:
    """S8dagger, S14 and S16"""

    @pytest.mark.parametrize("name", list(Sporadic))
    def test_matrix_shape(self, name):
        S = sporadic_matrix(name)
        assert S.n == name.order
        assert S.is_adjacency_class()

    @pytest.mark.parametrize("name", list(Sporadic))
    def test_radius_two(self, name):
        assert radius_class(sporadic_matrix(name)) is RadiusClass.EXACTLY_2

    @pytest.mark.parametrize("name", list(Sporadic))
    def test_printed_switchings_reach_digraph(self, name):
        S = sporadic_matrix(name)
        target = hermitian_adjacency(sporadic_digraph(name))
        direct, negative = sporadic_witnesses(name)
        assert direct.apply(S) == target
        assert negative.apply(S) == target

    @pytest.mark.parametrize("name", list(Sporadic))
    def test_negation_witness(self, name):
        S = sporadic_matrix(name)
        assert sporadic_negation_witness(name).apply(S) == -S

    def test_string_names(self):
        assert sporadic_matrix("S14") == sporadic_matrix(Sporadic.S14)

    def test_s14_is_bipartite_shape(self):
        """S14 has zero diagonal blocks of size 7"""
        S = sporadic_matrix(Sporadic.S14)
        assert all(not S[x, y] for x in range(7) for y in range(7))
        assert all(not S[x, y] for x in range(7, 14) for y in range(7, 14))


class TestSmallFamilies:
    """Families with spectral radius below 2 and helpers"""

    @pytest.mark.parametrize("digraph,coefficients", [
        (directed_cycle(3), (0, -3, 0, 1)),
        (cycle(3), (-2, -3, 0, 1)),
        (cycle(4), (0, 0, -4, 0, 1)),
        (directed_cycle(4), (0, 0, -4, 0, 1)),
        (ctilde(4), (4, 0, -4, 0, 1)),
        (complete(4), (-3, -8, -6, 0, 1)),
        (path(2), (-1, 0, 1)),
        (y_tree(1, 1, 1), (0, 0, -3, 0, 1)),
    ])
    def test_char_polys(self, digraph, coefficients):
        assert char_poly(hermitian_adjacency(digraph)) == IntPoly(coefficients)

    @pytest.mark.parametrize("digraph", [
        ctilde(5), ctilde1(6), ctilde2(6), directed_cycle(5),
        path(7), utilde1(), utilde6(), y_tree(2, 2, 1), y_tree(3, 1, 1), square(2, 0, 1, 0),
    ])
    def test_below_two(self, digraph):
        assert radius_class(hermitian_adjacency(digraph)) is RadiusClass.LESS_THAN_2

    @pytest.mark.parametrize("n", range(3, 17))
    def test_cycle_residues(self, n):
        """Radius 2 exactly when the cycle gain is 1, or (-1)^n"""
        expected = {
            directed_cycle: n % 4 == 0,
            ctilde: n % 4 == 2,
            ctilde1: n % 2 == 1,
            ctilde2: n % 2 == 1,
        }
        for build_one, exactly_two in expected.items():
            radius = radius_class(hermitian_adjacency(build_one(n)))
            assert (radius is RadiusClass.EXACTLY_2) == exactly_two, build_one.__name__
            assert radius is not RadiusClass.GREATER_THAN_2

    def test_odd_ctilde1_has_eigenvalue_minus_two(self):
        """Digon 2-0 and arcs 0 -> 1 -> 2 give gain -1 on a triangle"""
        assert char_poly(hermitian_adjacency(ctilde1(3))) == IntPoly((2, -3, 0, 1))

    def test_ctilde_variants_have_one_cycle(self):
        for build_one in (ctilde, ctilde1, ctilde2):
            digraph = build_one(6)
            assert digraph.n == 6 and digraph.edge_count() == 6 and is_connected(digraph)

    def test_ctilde1_has_one_digon(self):
        assert ctilde1(5).digons() == [(0, 4)]
        assert ctilde2(5).digons() == [(3, 4)]

    @pytest.mark.parametrize("params", [(3, 1, 0, 0), (2, 1, 1, 0), (1, 1, 1, 1)])
    def test_squares(self, params):
        digraph = square(*params)
        assert digraph.n == 8
        assert digraph.edge_count() == 8
        assert is_connected(digraph)

    def test_square_paths_leave_their_vertex(self):
        digraph = square(0, 2, 0, 0)
        assert (1, 4) in digraph.arcs() and (4, 5) in digraph.arcs()

    def test_y_tree(self):
        digraph = y_tree(4, 2, 1)
        assert digraph.n == 8
        assert digraph.degree(0) == 3
        assert digraph.edge_count() == 7

    def test_utilde(self):
        assert utilde1().edge_count() == 6
        assert utilde6().edge_count() == 4

    @pytest.mark.parametrize("index", range(1, 12))
    def test_canonical_u(self, index):
        digraph = canonical_u(index)
        assert digraph.n == 8
        assert digraph.digons() == []
        assert is_connected(digraph)

    def test_small_family_rejects_radius_two(self):
        with pytest.raises(ParamRange):
            small_family(CatalogRef.parse("Delta1(3)"))


class TestSignedFamilies:
    """U1..U11, O_2k and Q_hk"""

    @pytest.mark.parametrize("index", range(1, 12))
    def test_u_graphs(self, index):
        signed = signed_u(index)
        assert signed.n == 8
        assert signed.is_connected()
        bipartition(signed)

    def test_u_index_range(self):
        with pytest.raises(ParamRange):
            signed_u(12)

    def test_o(self):
        signed = signed_o(8)
        assert signed.negative_edges == [(0, 7)]
        assert len(signed.positive_edges) == 7

    def test_o6_char_poly(self):
        assert char_poly(signed_o(6).adjacency()) == IntPoly((0, 0, 9, 0, -6, 0, 1))

    def test_o_rejects_odd(self):
        with pytest.raises(ParamRange):
            signed_o(7)

    def test_q_layout(self):
        signed = signed_q(2, 3)
        assert signed.n == 9
        assert signed.labels == ("a2", "a1", "b0", "bm", "bp", "b1", "c1", "c2", "c3")
        assert signed.negative_edges == [(2, 4)]
        assert len(signed.edges) == 9

    def test_q_without_left_path(self):
        signed = signed_q(0, 4)
        assert signed.n == 8
        assert signed.is_connected()

    def test_q_range(self):
        with pytest.raises(ParamRange):
            signed_q(1, 2)

    def test_o_and_q_below_two(self):
        for signed in (signed_o(8), signed_o(10), signed_q(1, 3), signed_q(2, 2)):
            assert radius_class(signed.adjacency()) is RadiusClass.LESS_THAN_2


class TestBuild:
    """Dispatch from references to objects"""

    def test_build_signed(self):
        assert isinstance(build(CatalogRef.parse("SignedU(4)")), SignedGraph)

    def test_build_digraph(self):
        assert build(CatalogRef.parse("Dn(5)")) == directed_cycle(5)
        assert build_digraph(CatalogRef.parse("DeltaI(3)")) == delta_family("i", 3)
        assert build_digraph(CatalogRef.parse("S14")) == sporadic_digraph(Sporadic.S14)

    def test_build_matrix(self):
        assert build_matrix(CatalogRef.parse("S16")) == sporadic_matrix(Sporadic.S16)
        assert build_matrix(CatalogRef.parse("SignedO(8)")) == signed_o(8).adjacency()
        assert build_matrix(CatalogRef.parse("Path(3)")) == hermitian_adjacency(path(3))

    def test_signed_family_dispatch(self):
        assert signed_family(CatalogRef.parse("SignedU(4)")) == signed_u(4)
        assert signed_family(CatalogRef.parse("SignedQ(2,2)")) == signed_q(2, 2)
        with pytest.raises(ParamRange):
            signed_family(CatalogRef.parse("Path(3)"))
