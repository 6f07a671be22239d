"""
Tests for exact Gaussian arithmetic and spectral certification
"""

import random
from fractions import Fraction

import pytest

from cyclo.exceptions import ContractViolation, FormatError
from cyclo.gaussint import (
    I,
    NEG_I,
    NEG_SQRT2,
    ONE,
    SQRT2,
    ZERO,
    GaussInt,
    GaussRational,
    HermMatrix,
    IntPoly,
    QuadRational,
    RadiusClass,
    char_poly,
    count_roots_in,
    displaced_rank,
    min_eigen_exceeds,
    numeric_spectrum,
    polynomial_radius_class,
    radius_class,
    rank_over_gaussian_rationals,
    squarefree_decomposition,
)


def triangle(entry01, entry12, entry20):
    """3x3 matrix with the given entries around the triangle 0 -> 1 -> 2 -> 0"""
    z01, z12, z20 = (GaussInt.coerce(e) for e in (entry01, entry12, entry20))
    return HermMatrix.from_rows([
        [ZERO, z01, z20.conj()],
        [z01.conj(), ZERO, z12],
        [z20, z12.conj(), ZERO],
    ])


def path_matrix(n):
    rows = [[0] * n for _ in range(n)]
    for v in range(n - 1):
        rows[v][v + 1] = rows[v + 1][v] = 1
    return HermMatrix.from_rows(rows)


class TestGaussInt:
    """Gaussian integer arithmetic"""

    def test_units(self):
        """The units are exactly 1, i, -1, -i"""
        assert [GaussInt.unit(k) for k in range(4)] == [ONE, I, GaussInt(-1), NEG_I]
        assert all(GaussInt.unit(k).is_unit() for k in range(4))
        assert not GaussInt(1, 1).is_unit()

    def test_multiplication(self):
        """i * i = -1 and (1+i)(1-i) = 2"""
        assert I * I == GaussInt(-1)
        assert GaussInt(1, 1) * GaussInt(1, -1) == GaussInt(2)

    def test_conjugate_and_norm(self):
        z = GaussInt(3, -4)
        assert z.conj().conj() == z
        assert z.norm() == 25

    def test_unit_exponent(self):
        assert NEG_I.unit_exponent() == 3
        assert GaussInt(2).unit_exponent() is None

    @pytest.mark.parametrize("text,expected", [
        ("0", GaussInt(0)),
        ("-1", GaussInt(-1)),
        ("i", I),
        ("-i", NEG_I),
        ("3i", GaussInt(0, 3)),
        ("2-5i", GaussInt(2, -5)),
        ("1+j", GaussInt(1, 1)),
    ])
    def test_parse(self, text, expected):
        """Strings such as "2-5i" parse exactly"""
        assert GaussInt.parse(text) == expected

    def test_parse_rejects_garbage(self):
        with pytest.raises(FormatError):
            GaussInt.parse("1.5")

    def test_str(self):
        assert str(NEG_I) == "-i"
        assert str(GaussInt(2, -5)) == "2-5i"
        assert str(GaussInt(1, 1)) == "1+i"

    def test_coerce(self):
        """ints, complex numbers and pairs coerce; bools do not"""
        assert GaussInt.coerce(3) == GaussInt(3)
        assert GaussInt.coerce(1j) == I
        assert GaussInt.coerce((2, -1)) == GaussInt(2, -1)
        with pytest.raises(FormatError):
            GaussInt.coerce(True)
        with pytest.raises(FormatError):
            GaussInt.coerce(0.5j)


class TestGaussRational:
    """Gaussian rational field arithmetic"""

    def test_division_inverts_multiplication(self):
        a = GaussRational.coerce(GaussInt(2, 1))
        b = GaussRational.coerce(GaussInt(1, -3))
        assert (a * b) / b == a

    def test_integral(self):
        half = GaussRational(Fraction(1, 2))
        assert not half.is_integral()
        assert (half + half).to_gauss_int() == ONE


class TestQuadRational:
    """Exact sign and ordering in Q(sqrt 2)"""

    def test_sqrt2_squared(self):
        assert SQRT2 * SQRT2 == QuadRational(Fraction(2), Fraction(0))

    def test_sign(self):
        """sqrt 2 lies between 1.41 and 1.42"""
        assert (SQRT2 - Fraction(141, 100)).sign() == 1
        assert (SQRT2 - Fraction(142, 100)).sign() == -1
        assert NEG_SQRT2 < -1
        assert NEG_SQRT2 > Fraction(-3, 2)

    def test_float(self):
        assert float(SQRT2) == pytest.approx(1.41421356)


class TestHermMatrix:
    """Hermitian matrix construction"""

    def test_rejects_non_hermitian(self):
        with pytest.raises(ContractViolation):
            HermMatrix.from_rows([[0, 1], [0, 0]])

    def test_rejects_non_square(self):
        with pytest.raises(ContractViolation):
            HermMatrix(2, ((ZERO, ONE),))

    def test_adjacency_class(self):
        """Zero diagonal and unit-or-zero entries"""
        assert triangle(1, "i", 1).is_adjacency_class()
        H = HermMatrix.from_rows([[0, "1+i"], ["1-i", 0]])
        assert H.offending_entry() == (0, 1, GaussInt(1, 1))

    def test_principal(self):
        H = path_matrix(4)
        assert H.principal([0, 1]) == path_matrix(2)
        with pytest.raises(ContractViolation):
            H.principal([4])


class TestCharPoly:
    """Exact characteristic polynomials"""

    @pytest.mark.parametrize("H,coefficients", [
        (path_matrix(2), (-1, 0, 1)),
        (triangle("i", "i", "i"), (0, -3, 0, 1)),
        (triangle(1, 1, 1), (-2, -3, 0, 1)),
        (triangle(1, 1, -1), (2, -3, 0, 1)),
    ])
    def test_small_matrices(self, H, coefficients):
        """Directed triangle, digon triangle and a gain -1 triangle"""
        assert char_poly(H).coefficients == coefficients

    def test_complete_graph(self):
        K4 = HermMatrix.from_rows([[0 if x == y else 1 for y in range(4)] for x in range(4)])
        assert char_poly(K4).coefficients == (-3, -8, -6, 0, 1)

    def test_empty_matrix(self):
        assert char_poly(HermMatrix.zero(0)).coefficients == (1,)

    def test_matches_numeric_spectrum(self):
        """The float eigenvalues are roots of the exact polynomial"""
        H = triangle("i", 1, "-i")
        p = char_poly(H)
        for x in numeric_spectrum(H):
            assert abs(sum(c * x ** k for k, c in enumerate(p.coefficients))) < 1e-9


class TestIntPoly:
    """Polynomial helpers"""

    def test_must_be_monic(self):
        with pytest.raises(ContractViolation):
            IntPoly((1, 2))

    def test_evaluation(self):
        p = IntPoly((-2, 0, 1))
        assert p(3) == 7
        assert p(SQRT2) == QuadRational(Fraction(0), Fraction(0))

    def test_reflect(self):
        """Characteristic polynomial of -H"""
        assert IntPoly((2, -3, 0, 1)).reflect() == IntPoly((-2, -3, 0, 1))

    def test_product_and_derivative(self):
        p = IntPoly((-1, 1)) * IntPoly((1, 1))
        assert p == IntPoly((-1, 0, 1))
        assert p.derivative() == (0, 2)

    def test_json(self):
        p = IntPoly((4, 0, -4, 0, 1))
        assert p.to_json() == ["4", "0", "-4", "0", "1"]
        assert IntPoly.from_json(["-1", "0", "1"]) == IntPoly((-1, 0, 1))
        with pytest.raises(FormatError):
            IntPoly.from_json(["x", "1"])

    def test_str(self):
        assert str(IntPoly((2, -3, 0, 1))) == "x^3 - 3x + 2"

    def test_squarefree_decomposition(self):
        """x^4 - 4x^2 = x^2 (x^2 - 4)"""
        p = IntPoly((0, 0, -4, 0, 1))
        factors = squarefree_decomposition(p)
        assert sorted((f.coefficients, m) for f, m in factors) == [((-4, 0, 1), 1), ((0, 1), 2)]
        product = IntPoly((1,))
        for factor, multiplicity in factors:
            for _ in range(multiplicity):
                product = product * factor
        assert product == p


class TestCountRoots:
    """Sturm root counting with endpoints in Q(sqrt 2)"""

    @pytest.mark.parametrize("coefficients,lo,hi,closed,expected", [
        ((-1, 0, 1), -2, 2, (True, True), 2),
        ((0, 0, -4, 0, 1), -2, 2, (True, True), 3),
        ((0, 0, -4, 0, 1), -2, 2, (False, False), 1),
        ((0, -3, 0, 1), None, NEG_SQRT2, (True, True), 1),
        ((-2, 0, 1), NEG_SQRT2, SQRT2, (True, True), 2),
        ((-2, 0, 1), NEG_SQRT2, SQRT2, (False, False), 0),
        ((-2, 0, 1), NEG_SQRT2, SQRT2, (False, True), 1),
        ((-2, 0, 1), None, None, (True, True), 2),
    ])
    def test_counts(self, coefficients, lo, hi, closed, expected):
        assert count_roots_in(IntPoly(coefficients), lo, hi, closed) == expected

    def test_degenerate_interval(self):
        """A single point counts only when closed and a root"""
        p = IntPoly((-2, 0, 1))
        assert count_roots_in(p, SQRT2, SQRT2) == 1
        assert count_roots_in(p, SQRT2, SQRT2, (True, False)) == 0

    def test_empty_interval(self):
        with pytest.raises(ContractViolation):
            count_roots_in(IntPoly((-1, 0, 1)), 2, -2)


class TestRadiusClass:
    """Exact classification of the spectral radius against 2"""

    def test_less_than_two(self):
        """The directed triangle has eigenvalues 0 and +-sqrt 3"""
        assert radius_class(triangle("i", "i", "i")) is RadiusClass.LESS_THAN_2

    def test_exactly_two(self):
        assert radius_class(triangle(1, 1, -1)) is RadiusClass.EXACTLY_2
        assert radius_class(path_matrix(3)) is RadiusClass.LESS_THAN_2

    def test_greater_than_two(self):
        K4 = HermMatrix.from_rows([[0 if x == y else 1 for y in range(4)] for x in range(4)])
        assert radius_class(K4) is RadiusClass.GREATER_THAN_2

    def test_agrees_with_sturm_counts(self):
        """Descartes counts on the shifts agree with Sturm counts"""
        for coefficients in [(0, 0, -4, 0, 1), (4, 0, -4, 0, 1), (-3, -8, -6, 0, 1), (0, -3, 0, 1)]:
            p = IntPoly(coefficients)
            outside = count_roots_in(p, None, -2, (True, False)) + count_roots_in(p, 2, None, (False, True))
            on_boundary = count_roots_in(p, -2, -2) + count_roots_in(p, 2, 2)
            expected = (RadiusClass.GREATER_THAN_2 if outside else
                        RadiusClass.EXACTLY_2 if on_boundary else RadiusClass.LESS_THAN_2)
            assert polynomial_radius_class(p) is expected

    def test_principal_submatrices_never_grow_radius(self):
        """Seeded sweep: deleting vertices cannot push the radius up"""
        order = list(RadiusClass)
        rng = random.Random(7)
        for _ in range(200):
            n = rng.randint(2, 7)
            rows = [[ZERO] * n for _ in range(n)]
            for x in range(n):
                for y in range(x + 1, n):
                    if rng.random() < 0.4:
                        entry = rng.choice([ONE, -ONE, I, NEG_I])
                        rows[x][y], rows[y][x] = entry, entry.conj()
            H = HermMatrix.from_rows(rows)
            indices = rng.sample(range(n), rng.randint(1, n - 1))
            sub = H.principal(indices)
            assert order.index(radius_class(sub)) <= order.index(radius_class(H))
            top = max(abs(numeric_spectrum(H)))
            assert max(abs(numeric_spectrum(sub))) <= top + 1e-9


class TestMinEigen:
    """Strict lower bound -sqrt 2 on the spectrum"""

    def test_complete_graph_passes(self):
        K4 = HermMatrix.from_rows([[0 if x == y else 1 for y in range(4)] for x in range(4)])
        assert min_eigen_exceeds(K4)

    def test_boundary_is_excluded(self):
        """P3 has least eigenvalue exactly -sqrt 2"""
        assert not min_eigen_exceeds(path_matrix(3))

    def test_other_bound(self):
        assert min_eigen_exceeds(path_matrix(3), Fraction(-3, 2))


class TestRank:
    """Exact ranks over the Gaussian rationals"""

    def test_dependent_rows(self):
        assert rank_over_gaussian_rationals([[ONE, I], [I, GaussInt(-1)]]) == 1

    def test_empty(self):
        assert rank_over_gaussian_rationals([]) == 0

    def test_displaced_rank(self):
        """2I - H loses one dimension per eigenvalue 2"""
        assert displaced_rank(path_matrix(2)) == 2
        C4 = HermMatrix.from_rows([[0, 1, 0, 1], [1, 0, 1, 0], [0, 1, 0, 1], [1, 0, 1, 0]])
        assert displaced_rank(C4) == 3

    def test_displaced_rank_warns_above_two(self, caplog):
        K4 = HermMatrix.from_rows([[0 if x == y else 1 for y in range(4)] for x in range(4)])
        displaced_rank(K4)
        assert "spectral radius > 2" in caplog.text
