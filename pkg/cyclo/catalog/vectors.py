"""
Root vectors over the Gaussian integers and their displaced Gram matrices

The Hermitian form is <u, v> = sum_j u_j * conj(v_j), linear in the first
argument. A root has squared norm 2; the displaced Gram matrix of roots
v_1..v_m is G - 2I with G_xy = <v_x, v_y>.
"""

import logging
from dataclasses import dataclass
from typing import Any, List, Sequence, Tuple

from cyclo.catalog.refs import CatalogRef, Family
from cyclo.digraph import Digraph, from_hermitian
from cyclo.exceptions import BadRoot, ContractViolation, NotAdjacencyClass, ParamRange
from cyclo.gaussint import ADJACENCY_ALPHABET, GaussInt, HermMatrix, I, ONE, ZERO

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GaussVector:
    """Vector with Gaussian integer coordinates"""
    coordinates: Tuple[GaussInt, ...]

    @classmethod
    def of(cls, values: Sequence[Any]) -> 'GaussVector':
        return cls(tuple(GaussInt.coerce(v) for v in values))

    @classmethod
    def basis(cls, k: int, j: int, scale: GaussInt = ONE) -> 'GaussVector':
        """scale * e_j in dimension k (j is 0-based)"""
        return cls(tuple(scale if m == j else ZERO for m in range(k)))

    @property
    def dimension(self) -> int:
        return len(self.coordinates)

    def __add__(self, other: 'GaussVector') -> 'GaussVector':
        return GaussVector(tuple(a + b for a, b in zip(self.coordinates, other.coordinates)))

    def __sub__(self, other: 'GaussVector') -> 'GaussVector':
        return GaussVector(tuple(a - b for a, b in zip(self.coordinates, other.coordinates)))

    def scale(self, factor: GaussInt) -> 'GaussVector':
        return GaussVector(tuple(factor * a for a in self.coordinates))

    def norm2(self) -> int:
        return sum(a.norm() for a in self.coordinates)

    def __str__(self) -> str:
        return '(' + ', '.join(str(a) for a in self.coordinates) + ')'


def inner(u: GaussVector, v: GaussVector) -> GaussInt:
    if u.dimension != v.dimension:
        raise ContractViolation(f"Vectors of dimension {u.dimension} and {v.dimension}")
    total = ZERO
    for a, b in zip(u.coordinates, v.coordinates):
        total = total + a * b.conj()
    return total


def displaced_gram(vectors: Sequence[GaussVector], adjacency: bool = True) -> HermMatrix:
    """
    Displaced Gram matrix of a set of roots

    Args:
        vectors: Vectors of squared norm 2, all of the same dimension
        adjacency: Demand off-diagonal entries in {0, 1, -1, i, -i}

    Raises:
        BadRoot: If a vector does not have squared norm 2
        NotAdjacencyClass: If ``adjacency`` and an entry leaves the alphabet
    """
    for index, v in enumerate(vectors):
        if v.norm2() != 2:
            raise BadRoot(f"Vector {index} = {v} has squared norm {v.norm2()}, expected 2")
    m = len(vectors)
    rows = [[ZERO] * m for _ in range(m)]
    for x in range(m):
        for y in range(x + 1, m):
            entry = inner(vectors[x], vectors[y])
            if adjacency and entry not in ADJACENCY_ALPHABET:
                raise NotAdjacencyClass(
                    f"<v{x}, v{y}> = {entry} for {vectors[x]} and {vectors[y]}\n"
                    f"Displaced Gram entries must lie in {{0, 1, -1, i, -i}}"
                )
            rows[x][y] = entry
            rows[y][x] = entry.conj()
    return HermMatrix(m, tuple(tuple(row) for row in rows))


def _check_k(k: int) -> None:
    if k < 3:
        raise ParamRange(f"k = {k}: the T and Delta families need k >= 3 (k = 2 gives the entry -2)")


def _pair(k: int, p: int, scale: GaussInt = ONE) -> Tuple[GaussVector, GaussVector]:
    """scale*(e_p + e_{p+1}), scale*(e_p - e_{p+1}) with 1-based p read mod k"""
    a = GaussVector.basis(k, (p - 1) % k)
    b = GaussVector.basis(k, p % k)
    return (a + b).scale(scale), (a - b).scale(scale)


def _check_x(x: GaussInt) -> GaussInt:
    x = GaussInt.coerce(x)
    if x not in (ONE, I):
        raise ParamRange(f"x must be 1 or i, got {x}")
    return x


def t_vectors(x: Any, k: int) -> List[GaussVector]:
    """
    Roots e_p +- e_{p+1} (p = 1..k, indices mod k); for x = i the last
    pair is i*e_k +- e_1. All plus vectors come first, then all minus vectors.
    """
    x = _check_x(x)
    _check_k(k)
    pluses, minuses = [], []
    for p in range(1, k + 1):
        if p == k and x == I:
            ek = GaussVector.basis(k, k - 1, I)
            e1 = GaussVector.basis(k, 0)
            plus, minus = ek + e1, ek - e1
        else:
            plus, minus = _pair(k, p)
        pluses.append(plus)
        minuses.append(minus)
    return pluses + minuses


def t_matrix(x: Any, k: int) -> HermMatrix:
    """The 2k x 2k displaced Gram matrix T_2k^(x)"""
    return displaced_gram(t_vectors(x, k))


def delta_vectors(x: Any, k: int) -> List[GaussVector]:
    """
    Rescaled root set whose displaced Gram matrix is a digraph adjacency

    Pairs with odd p are multiplied by i, which turns every entry between
    neighbouring pairs into an arc; the wrap-around pairs are adjusted per
    parity of k so that no entry -1 remains.
    """
    x = _check_x(x)
    _check_k(k)

    def pair_for(p: int) -> Tuple[GaussVector, GaussVector]:
        return _pair(k, p, I if p % 2 else ONE)

    vectors: List[GaussVector] = []
    ek_i = GaussVector.basis(k, k - 1, I)
    e1 = GaussVector.basis(k, 0)
    if x == ONE and k % 2 == 0:
        for p in range(1, k + 1):
            vectors.extend(pair_for(p))
    elif x == ONE:
        for p in range(1, k):
            vectors.extend(pair_for(p))
        plus, minus = _pair(k, k)
        vectors.extend([plus.scale(I), minus.scale(GaussInt(0, -1))])
    elif k % 2:
        for p in range(1, k):
            vectors.extend(pair_for(p))
        vectors.extend([ek_i + e1, ek_i - e1])
    else:
        for p in range(1, k - 1):
            vectors.extend(pair_for(p))
        ek1_i = GaussVector.basis(k, k - 2, I)
        vectors.extend([ek_i + ek1_i, ek_i - ek1_i, ek_i + e1, ek_i - e1])
    return vectors


def delta_family(x: Any, k: int) -> Digraph:
    """The digraph Delta_2k^(x); its adjacency is strongly equivalent to T_2k^(x)"""
    return from_hermitian(displaced_gram(delta_vectors(x, k)))


def delta_ref(x: Any, k: int) -> CatalogRef:
    return CatalogRef(Family.DELTA1 if _check_x(x) == ONE else Family.DELTAI, (k,))
