"""
Signed graphs, the associated signed graph of a digraph and canonical digraphs
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from cyclo.digraph import Digraph, PairState, from_hermitian, hermitian_adjacency, index_pair, underlying_graph
from cyclo.exceptions import ContractViolation, FormatError
from cyclo.gaussint import GaussInt, HermMatrix, I, IntPoly, ONE, ZERO, char_poly

logger = logging.getLogger(__name__)

SignedEdge = Tuple[int, int, int]


@dataclass(frozen=True)
class SignedGraph:
    """
    Signed graph on vertices 0..n-1

    ``edges`` holds (u, v, sign) with u < v and sign in {+1, -1}, sorted.
    ``labels`` are display names (catalog tables name their vertices);
    ``origin`` maps each vertex to its index in the graph it was cut from.
    """
    n: int
    edges: Tuple[SignedEdge, ...]
    labels: Tuple[str, ...] = field(default=())
    origin: Tuple[int, ...] = field(default=())

    def __post_init__(self):
        seen = set()
        normalised = []
        for u, v, sign in self.edges:
            if u == v or not (0 <= u < self.n and 0 <= v < self.n):
                raise FormatError(f"Signed edge ({u}, {v}) is a loop or leaves 0..{self.n - 1}")
            if sign not in (1, -1):
                raise FormatError(f"Edge ({u}, {v}) has sign {sign}; expected +1 or -1")
            pair = (min(u, v), max(u, v))
            if pair in seen:
                raise FormatError(f"Pair {pair} carries more than one sign")
            seen.add(pair)
            normalised.append((pair[0], pair[1], sign))
        object.__setattr__(self, 'edges', tuple(sorted(normalised)))
        if not self.labels:
            object.__setattr__(self, 'labels', tuple(str(x) for x in range(self.n)))
        if not self.origin:
            object.__setattr__(self, 'origin', tuple(range(self.n)))
        if len(self.labels) != self.n or len(self.origin) != self.n:
            raise ContractViolation("labels and origin must have one entry per vertex")

    @classmethod
    def from_edges(cls, n: int, pos: Iterable[Sequence[int]] = (), neg: Iterable[Sequence[int]] = (),
                   labels: Sequence[str] = ()) -> 'SignedGraph':
        edges = [(int(u), int(v), 1) for u, v in pos] + [(int(u), int(v), -1) for u, v in neg]
        return cls(n, tuple(edges), tuple(labels))

    @classmethod
    def from_labelled(cls, labels: Sequence[str], pos: Iterable[Tuple[str, str]] = (),
                      neg: Iterable[Tuple[str, str]] = ()) -> 'SignedGraph':
        """Build from named vertices, as catalog tables are written"""
        index = {label: k for k, label in enumerate(labels)}
        try:
            positive = [(index[a], index[b]) for a, b in pos]
            negative = [(index[a], index[b]) for a, b in neg]
        except KeyError as e:
            raise FormatError(f"Unknown vertex label {e}")
        return cls.from_edges(len(labels), positive, negative, labels)

    @property
    def positive_edges(self) -> List[Tuple[int, int]]:
        return [(u, v) for u, v, s in self.edges if s > 0]

    @property
    def negative_edges(self) -> List[Tuple[int, int]]:
        return [(u, v) for u, v, s in self.edges if s < 0]

    def sign(self, u: int, v: int) -> int:
        """Sign of the edge {u, v}, or 0 when absent"""
        pair = (min(u, v), max(u, v))
        for a, b, s in self.edges:
            if (a, b) == pair:
                return s
        return 0

    def adjacency(self) -> HermMatrix:
        rows = [[ZERO] * self.n for _ in range(self.n)]
        for u, v, s in self.edges:
            rows[u][v] = rows[v][u] = GaussInt(s)
        return HermMatrix(self.n, tuple(tuple(row) for row in rows))

    def graph(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        for u, v, s in self.edges:
            graph.add_edge(u, v, sign=s)
        return graph

    def is_connected(self) -> bool:
        return self.n > 0 and nx.is_connected(self.graph())


def associated_signed_graph(digraph: Digraph) -> SignedGraph:
    """
    Signed graph on 2n vertices with adjacency [[A, B], [B^T, A]] for H = A + iB

    Vertex x of the digraph becomes x (copy 1) and n + x (copy 2). A digon
    {x, y} gives positive edges {x1, y1} and {x2, y2}; an arc x -> y gives a
    positive edge {x1, y2} and a negative edge {x2, y1}.
    """
    n = digraph.n
    pos: List[Tuple[int, int]] = []
    neg: List[Tuple[int, int]] = []
    for k, s in enumerate(digraph.states):
        if s is PairState.NONE:
            continue
        x, y = index_pair(k)
        if s is PairState.DIGON:
            pos.extend([(x, y), (n + x, n + y)])
            continue
        tail, head = (x, y) if s is PairState.FORWARD else (y, x)
        pos.append((tail, n + head))
        neg.append((n + tail, head))
    labels = [f"{x}_1" for x in range(n)] + [f"{x}_2" for x in range(n)]
    return SignedGraph.from_edges(2 * n, pos, neg, labels)


def components(signed: SignedGraph) -> List[SignedGraph]:
    """
    Connected components, ordered by their smallest vertex

    Each component keeps the ambient vertex order; ``origin`` records the
    vertex of ``signed`` each new vertex came from.
    """
    parts = sorted((sorted(c) for c in nx.connected_components(signed.graph())), key=lambda c: c[0])
    result = []
    for part in parts:
        position = {v: k for k, v in enumerate(part)}
        edges = tuple((position[u], position[v], s) for u, v, s in signed.edges if u in position)
        result.append(SignedGraph(
            len(part),
            edges,
            tuple(signed.labels[v] for v in part),
            tuple(signed.origin[v] for v in part),
        ))
    logger.debug(f"Split signed graph on {signed.n} vertices into {len(result)} components")
    return result


def bipartition(signed: SignedGraph) -> Tuple[List[int], List[int]]:
    """
    Two-colouring of the underlying graph; the side holding the lowest
    vertex of each component is V1

    Raises:
        ContractViolation: If the underlying graph is not bipartite
    """
    graph = signed.graph()
    try:
        colouring = nx.bipartite.color(graph)
    except nx.NetworkXError:
        raise ContractViolation("Signed graph is not bipartite")
    for part in nx.connected_components(graph):
        low = min(part)
        if colouring[low] == 1:
            for v in part:
                colouring[v] ^= 1
    side1 = sorted(v for v, c in colouring.items() if c == 0)
    side2 = sorted(v for v, c in colouring.items() if c == 1)
    return side1, side2


def canonical_digraph(signed: SignedGraph, side1: Optional[Iterable[int]] = None) -> Digraph:
    """
    Canonical digraph of a connected bipartite signed graph

    Its Hermitian adjacency is D* A(S) D with D = 1 on V1 and i on V2, so
    every edge becomes an arc whose direction records its sign.

    Args:
        signed: Connected bipartite signed graph
        side1: Optional explicit choice of V1; defaults to bipartition()

    Raises:
        ContractViolation: If the graph is disconnected, not bipartite, or
            side1 is not one side of a bipartition
    """
    if not signed.is_connected():
        raise ContractViolation("canonical_digraph needs a connected signed graph")
    default1, default2 = bipartition(signed)
    if side1 is None:
        first = set(default1)
    else:
        first = set(side1)
        if first not in (set(default1), set(default2)):
            raise ContractViolation(f"{sorted(first)} is not a side of the bipartition")
    phase: Dict[int, GaussInt] = {v: ONE if v in first else I for v in range(signed.n)}
    A = signed.adjacency()
    rows = [[phase[x].conj() * A[x, y] * phase[y] for y in range(signed.n)] for x in range(signed.n)]
    return from_hermitian(HermMatrix(signed.n, tuple(tuple(row) for row in rows)))


def signed_char_poly(signed: SignedGraph) -> IntPoly:
    return char_poly(signed.adjacency())


@dataclass
class DoublingCheck:
    """Outcome of comparing a digraph with its associated signed graph"""
    spectrum_doubled: bool
    twins_nonadjacent: bool
    twins_share_no_neighbour: bool
    degrees_match: bool
    offending_vertices: List[int] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (self.spectrum_doubled and self.twins_nonadjacent
                and self.twins_share_no_neighbour and self.degrees_match)


def check_doubling_properties(digraph: Digraph) -> DoublingCheck:
    """
    Check the structural links between a digraph and its associated signed graph

    The characteristic polynomial of S(D) must be the square of that of
    H(D); for every vertex x the copies x1 and x2 are non-adjacent, share
    no neighbour and both have the degree of x in the underlying graph.
    """
    n = digraph.n
    signed = associated_signed_graph(digraph)
    p = char_poly(hermitian_adjacency(digraph))
    doubled = signed_char_poly(signed) == p * p
    graph = signed.graph()
    base = underlying_graph(digraph)
    check = DoublingCheck(doubled, True, True, True)
    for x in range(n):
        x1, x2 = x, n + x
        bad = False
        if graph.has_edge(x1, x2):
            check.twins_nonadjacent = False
            bad = True
        if set(graph[x1]) & set(graph[x2]):
            check.twins_share_no_neighbour = False
            bad = True
        if not graph.degree[x1] == graph.degree[x2] == base.degree[x]:
            check.degrees_match = False
            bad = True
        if bad:
            check.offending_vertices.append(x)
    if not check.ok:
        logger.warning(f"Doubling properties fail for vertices {check.offending_vertices}")
    return check
