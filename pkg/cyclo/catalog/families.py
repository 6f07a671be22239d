"""
Generators for the named digraph families

Vertex numbering is deterministic: cycles run 0 -> 1 -> ... -> n-1 -> 0,
attached paths are appended after the base digraph in attachment order.
"""

import logging
from typing import List, Tuple, Union

from cyclo.catalog.refs import CatalogRef, Family
from cyclo.catalog.signed_families import signed_family, signed_u
from cyclo.catalog.sporadic import sporadic_digraph, sporadic_matrix
from cyclo.catalog.vectors import delta_family
from cyclo.digraph import Digraph, hermitian_adjacency
from cyclo.exceptions import ParamRange
from cyclo.gaussint import HermMatrix
from cyclo.signed import SignedGraph, canonical_digraph

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]


def directed_cycle(n: int) -> Digraph:
    """D_n"""
    return Digraph.from_edges(n, arcs=[(v, (v + 1) % n) for v in range(n)])


def ctilde(n: int) -> Digraph:
    """D_n with the closing arc reversed (0 -> n-1)"""
    arcs = [(v, v + 1) for v in range(n - 1)] + [(0, n - 1)]
    return Digraph.from_edges(n, arcs=arcs)


def ctilde1(n: int) -> Digraph:
    """D_n with the closing arc replaced by the digon {n-1, 0}"""
    arcs = [(v, v + 1) for v in range(n - 1)]
    return Digraph.from_edges(n, digons=[(n - 1, 0)], arcs=arcs)


def ctilde2(n: int) -> Digraph:
    """D_n with arc n-2 -> n-1 made a digon and arc n-1 -> 0 reversed"""
    arcs = [(v, v + 1) for v in range(n - 2)] + [(0, n - 1)]
    return Digraph.from_edges(n, digons=[(n - 2, n - 1)], arcs=arcs)


def path(n: int) -> Digraph:
    return Digraph.from_edges(n, digons=[(v, v + 1) for v in range(n - 1)])


def cycle(n: int) -> Digraph:
    return Digraph.from_edges(n, digons=[(v, (v + 1) % n) for v in range(n)])


def complete(n: int) -> Digraph:
    return Digraph.from_edges(n, digons=[(x, y) for y in range(n) for x in range(y)])


def square(a1: int, a2: int, a3: int, a4: int) -> Digraph:
    """
    Ctilde_4 on vertices 0..3 with a directed path of a_i new vertices
    leaving vertex i-1
    """
    arcs: List[Pair] = [(0, 1), (1, 2), (2, 3), (0, 3)]
    n = 4
    for v, length in enumerate((a1, a2, a3, a4)):
        previous = v
        for _ in range(length):
            arcs.append((previous, n))
            previous = n
            n += 1
    return Digraph.from_edges(n, arcs=arcs)


def y_tree(a: int, b: int, c: int) -> Digraph:
    """Centre 0 with paths of a, b and c further vertices"""
    digons: List[Pair] = []
    n = 1
    for length in (a, b, c):
        previous = 0
        for _ in range(length):
            digons.append((previous, n))
            previous = n
            n += 1
    return Digraph.from_edges(n, digons=digons)


def utilde1() -> Digraph:
    """Directed triangle 0 -> 1 -> 2 -> 0 joined by digons to vertex 3"""
    return Digraph.from_edges(4, digons=[(0, 3), (1, 3), (2, 3)], arcs=[(0, 1), (1, 2), (2, 0)])


def utilde6() -> Digraph:
    """Directed triangle 0 -> 1 -> 2 -> 0 with a pendant digon at 0"""
    return Digraph.from_edges(4, digons=[(0, 3)], arcs=[(0, 1), (1, 2), (2, 0)])


def canonical_u(index: int) -> Digraph:
    return canonical_digraph(signed_u(index))


def small_family(ref: CatalogRef) -> Digraph:
    """Build a digraph of the families D_n .. canonical U_i, plus Cycle and Complete"""
    family, params = ref.family, ref.params
    builders = {
        Family.DN: directed_cycle,
        Family.CTILDE: ctilde,
        Family.CTILDE1: ctilde1,
        Family.CTILDE2: ctilde2,
        Family.PATH: path,
        Family.CYCLE: cycle,
        Family.COMPLETE: complete,
        Family.SQUARE: square,
        Family.Y: y_tree,
        Family.UTILDE1: utilde1,
        Family.UTILDE6: utilde6,
        Family.CANONICAL_U: canonical_u,
    }
    if family not in builders:
        raise ParamRange(f"{ref} is not a small digraph family")
    return builders[family](*params)


def build_digraph(ref: CatalogRef) -> Digraph:
    """Digraph named by any non-signed reference"""
    if ref.family is Family.DELTA1:
        return delta_family(1, ref.params[0])
    if ref.family is Family.DELTAI:
        return delta_family("i", ref.params[0])
    if ref.family is Family.SPORADIC:
        return sporadic_digraph(ref.sporadic)
    return small_family(ref)


def build(ref: CatalogRef) -> Union[Digraph, SignedGraph]:
    """Digraph or signed graph named by a reference"""
    if ref.is_signed:
        return signed_family(ref)
    return build_digraph(ref)


def build_matrix(ref: CatalogRef) -> HermMatrix:
    """
    Matrix of a reference: the literal matrix for sporadics, A(S) for signed
    graphs and H(D) otherwise
    """
    if ref.family is Family.SPORADIC:
        return sporadic_matrix(ref.sporadic)
    built = build(ref)
    if isinstance(built, SignedGraph):
        return built.adjacency()
    return hermitian_adjacency(built)
