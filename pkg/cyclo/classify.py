"""
Constructive classification of connected digraphs with spectral radius at most 2

classify() decides the radius class exactly, then searches the catalog
containers in a fixed order for an embedding up to switching and reports
the first hit together with its witness and a root-lattice description.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Any, Dict, List, Optional, Tuple

from cyclo.catalog import CatalogRef, Family, Sporadic, build_digraph
from cyclo.catalog.families import complete
from cyclo.digraph import Digraph, has_odd_arc_cycle, hermitian_adjacency, is_connected
from cyclo.equivalence import EQUIVALENCE_CAP, SwitchingWitness, contains_up_to_switching, strong_equiv
from cyclo.exceptions import CapExceeded, ContractViolation, NotInTables, TheoremViolation
from cyclo.gaussint import GaussRational, HermMatrix, RadiusClass, displaced_rank, min_eigen_exceeds, radius_class

logger = logging.getLogger(__name__)

# Containers of the strict (radius < 2) half of the classification
_LESS_THAN_2_FAMILIES = frozenset({
    Family.DN, Family.CTILDE, Family.CTILDE1, Family.CTILDE2, Family.PATH,
    Family.SQUARE, Family.Y, Family.UTILDE1, Family.UTILDE6, Family.CANONICAL_U,
})

_BRANCH = {
    Family.DN: "O2k", Family.CTILDE: "O2k", Family.CTILDE1: "O2k", Family.CTILDE2: "O2k",
    Family.PATH: "O2k", Family.SQUARE: "Qhk", Family.Y: "Qhk",
    Family.UTILDE1: "UC", Family.UTILDE6: "UC", Family.CANONICAL_U: "UDC",
    Family.DELTA1: "T", Family.DELTAI: "T", Family.SPORADIC: "S",
}

_E8_GAUSS = "E8⊗Z[i]"
_E7_GAUSS = "E7⊗Z[i]"
_E8_COMPLEX = "E8^C"

_TABLED: Dict[Tuple[Family, Tuple[int, ...]], str] = {
    (Family.UTILDE1, ()): _E8_COMPLEX,
    (Family.UTILDE6, ()): _E8_COMPLEX,
    (Family.Y, (4, 2, 1)): _E8_GAUSS,
    (Family.Y, (3, 2, 1)): _E7_GAUSS,
    (Family.SQUARE, (3, 1, 0, 0)): _E8_GAUSS,
    (Family.SQUARE, (2, 1, 1, 0)): _E8_GAUSS,
    (Family.SQUARE, (1, 1, 1, 1)): _E8_GAUSS,
}

_SPORADIC_LABELS = {
    Sporadic.S8DAGGER: _E8_COMPLEX,
    Sporadic.S14: _E7_GAUSS,
    Sporadic.S16: _E8_GAUSS,
}


def is_less_than_2_container(ref: CatalogRef) -> bool:
    return ref.family in _LESS_THAN_2_FAMILIES


@dataclass
class Container:
    """Embedding of a digraph into a catalog digraph"""
    ref: CatalogRef
    vertices: Tuple[int, ...]
    witness: SwitchingWitness

    def to_dict(self) -> Dict[str, Any]:
        return {
            'ref': str(self.ref),
            'vertices': list(self.vertices),
            'witness': self.witness.to_dict(),
        }


@dataclass
class ClassificationResult:
    """Outcome of classify()"""
    radius: RadiusClass
    container: Optional[Container] = None
    lattice: Optional[str] = None
    rank: Optional[int] = None
    notes: List[str] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'radius': self.radius.value,
            'container': self.container.to_dict() if self.container else None,
            'lattice': self.lattice,
            'rank': self.rank,
            'notes': list(self.notes),
        }


def lattice_label(ref: CatalogRef) -> str:
    """
    Root lattice printed for a maximal catalog digraph

    Raises:
        NotInTables: If the reference has no printed lattice
    """
    if ref.family is Family.DELTA1:
        return f"D{ref.params[0]}⊗Z[i]"
    if ref.family is Family.DELTAI:
        return f"D{2 * ref.params[0]}^C"
    if ref.family is Family.SPORADIC:
        return _SPORADIC_LABELS[ref.sporadic]
    if ref.family is Family.CANONICAL_U:
        return _E8_GAUSS
    key = (ref.family, ref.params)
    if key not in _TABLED:
        raise NotInTables(f"No lattice is tabled for {ref}")
    return _TABLED[key]


def container_refs(n: int, radius: RadiusClass) -> List[CatalogRef]:
    """
    Containers searched by classify for an n-vertex digraph, in order

    For radius < 2 the strict families at matching sizes come first; then,
    for every radius <= 2, Delta1(k) and DeltaI(k) for k = 3..max(3, n)
    and the three sporadics.
    """
    refs: List[CatalogRef] = []
    if radius is RadiusClass.GREATER_THAN_2:
        return refs
    if radius is RadiusClass.LESS_THAN_2:
        if n >= 3:
            if n % 4 != 0:
                refs.append(CatalogRef(Family.DN, (n,)))
            if n % 4 != 2:
                refs.append(CatalogRef(Family.CTILDE, (n,)))
            # Odd n puts gain +-1 on an odd cycle, hence an eigenvalue +-2
            if n % 2 == 0:
                refs.append(CatalogRef(Family.CTILDE1, (n,)))
                refs.append(CatalogRef(Family.CTILDE2, (n,)))
        if n >= 1:
            refs.append(CatalogRef(Family.PATH, (n,)))
        if n >= 4:
            refs.extend(CatalogRef(Family.SQUARE, (a, 0, n - 4 - a, 0)) for a in range(n - 3))
            refs.append(CatalogRef(Family.Y, (n - 3, 1, 1)))
        if n <= 4:
            refs.extend([CatalogRef(Family.UTILDE1), CatalogRef(Family.UTILDE6)])
        if n <= 8:
            refs.extend(CatalogRef(Family.CANONICAL_U, (i,)) for i in range(1, 12))
    for k in range(3, max(3, n) + 1):
        if 2 * k < n:
            continue
        refs.append(CatalogRef(Family.DELTA1, (k,)))
        refs.append(CatalogRef(Family.DELTAI, (k,)))
    for sporadic in Sporadic:
        if n <= sporadic.order:
            refs.append(CatalogRef.sporadic_ref(sporadic))
    return refs


@lru_cache(maxsize=256)
def _container_digraph(ref: CatalogRef) -> Digraph:
    return build_digraph(ref)


def find_container(digraph: Digraph, radius: RadiusClass,
                   cap: int = EQUIVALENCE_CAP) -> Optional[Container]:
    """First catalog container holding the digraph up to switching"""
    for ref in container_refs(digraph.n, radius):
        found = contains_up_to_switching(digraph, _container_digraph(ref), cap)
        if found is not None:
            vertices, witness = found
            logger.debug(f"Digraph on {digraph.n} vertices embeds in {ref} at {vertices}")
            return Container(ref, vertices, witness)
    return None


_CYCLE_FAMILIES = frozenset({Family.DN, Family.CTILDE, Family.CTILDE1, Family.CTILDE2})


def _describe_lattice(digraph: Digraph, container: Optional[Container], rank: int) -> str:
    if container is None:
        return f"rank {rank}"
    ref = container.ref
    if ref.family is Family.PATH:
        return f"A{rank}⊗Z[i]"
    if ref.family in _CYCLE_FAMILIES:
        return f"rank {rank} ({ref.family.value})"
    try:
        label = lattice_label(ref)
    except NotInTables:
        return f"rank {rank}"
    if digraph.n == ref.order():
        return label
    return f"rank {rank}, contained in {label}"


def classify(digraph: Digraph, cap: int = EQUIVALENCE_CAP) -> ClassificationResult:
    """
    Classify a connected digraph by spectral radius

    Args:
        digraph: Connected digraph
        cap: Largest vertex count accepted by the switching search

    Returns:
        ClassificationResult; container and lattice are absent when the
        spectral radius exceeds 2

    Raises:
        ContractViolation: If the digraph is not connected
        CapExceeded: If the digraph has more than ``cap`` vertices
    """
    if not is_connected(digraph):
        raise ContractViolation("classify needs a connected digraph")
    if digraph.n > cap:
        raise CapExceeded(f"Digraph on {digraph.n} vertices exceeds the search cap of {cap}")
    H = hermitian_adjacency(digraph)
    radius = radius_class(H)
    notes = [f"asg:{'connected' if has_odd_arc_cycle(digraph) else 'disconnected'}"]
    if radius is RadiusClass.GREATER_THAN_2:
        return ClassificationResult(radius, notes=notes)
    rank = displaced_rank(H)
    container = find_container(digraph, radius, cap)
    if container is None:
        logger.warning(f"No container found for a digraph with radius {radius.value}")
    else:
        notes.append(f"branch:{_BRANCH[container.ref.family]}")
        notes.append(f"container:{container.ref}")
    return ClassificationResult(
        radius=radius,
        container=container,
        lattice=_describe_lattice(digraph, container, rank),
        rank=rank,
        notes=notes,
    )


def check_complete_equiv(digraph: Digraph) -> Optional[SwitchingWitness]:
    """
    Witness that a digraph with least eigenvalue above -sqrt 2 is switching
    equivalent to a complete graph

    Returns:
        Witness from H(digraph) to H(K_n), or None when the least eigenvalue
        is at most -sqrt 2

    Raises:
        ContractViolation: If the digraph is not connected
        TheoremViolation: If the bound holds but no witness exists
    """
    if not is_connected(digraph):
        raise ContractViolation("check_complete_equiv needs a connected digraph")
    H = hermitian_adjacency(digraph)
    if not min_eigen_exceeds(H):
        return None
    witness = strong_equiv(H, hermitian_adjacency(complete(digraph.n)))
    if witness is None:
        raise TheoremViolation(
            f"Digraph on {digraph.n} vertices has least eigenvalue > -sqrt2 "
            f"but is not switching equivalent to K_{digraph.n}"
        )
    return witness


@dataclass
class RootBasis:
    """
    Vectors with Gaussian rational coordinates and a diagonal metric

    <u, v> = sum_m metric[m] * u_m * conj(v_m); the Gram matrix of the
    vectors under this form is 2I - H.
    """
    vectors: List[Tuple[GaussRational, ...]]
    metric: Tuple[Fraction, ...]
    pivots: Tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.metric)

    def inner(self, x: int, y: int) -> GaussRational:
        total = GaussRational(0)
        for d, a, b in zip(self.metric, self.vectors[x], self.vectors[y]):
            total = total + a * b.conj() * d
        return total

    def gram(self) -> List[List[GaussRational]]:
        n = len(self.vectors)
        return [[self.inner(x, y) for y in range(n)] for x in range(n)]


def gaussian_root_basis(H: HermMatrix) -> RootBasis:
    """
    Factor 2I - H = L D L* exactly over the Gaussian rationals

    Zero pivots are skipped, so the number of columns equals the rank of
    2I - H; row x of L is the coordinate vector of the root for vertex x.

    Raises:
        ContractViolation: If the spectral radius of H exceeds 2
    """
    if radius_class(H) is RadiusClass.GREATER_THAN_2:
        raise ContractViolation("gaussian_root_basis needs spectral radius at most 2")
    n = H.n
    A = [[GaussRational.coerce((2 if x == y else 0)) - H[x, y] for y in range(n)] for x in range(n)]
    columns: List[List[GaussRational]] = []
    metric: List[Fraction] = []
    pivots: List[int] = []
    for j in range(n):
        d = A[j][j]
        if d.im != 0 or d.re < 0:
            raise ContractViolation(f"Pivot {d} at {j}: 2I - H is not positive semidefinite")
        if d.re == 0:
            if any(A[x][j] for x in range(n)):
                raise ContractViolation(f"Zero pivot with nonzero column at {j}: 2I - H is not positive semidefinite")
            continue
        column = [A[x][j] / d for x in range(n)]
        for x in range(n):
            if not column[x]:
                continue
            for y in range(n):
                if column[y]:
                    A[x][y] = A[x][y] - column[x] * column[y].conj() * d
        columns.append(column)
        metric.append(d.re)
        pivots.append(j)
    vectors = [tuple(column[x] for column in columns) for x in range(n)]
    logger.debug(f"Root basis of rank {len(metric)} for a {n}x{n} matrix")
    return RootBasis(vectors, tuple(metric), tuple(pivots))
