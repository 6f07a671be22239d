"""
Digraph data model and its Hermitian adjacency matrix
"""

import logging
from dataclasses import dataclass
from enum import IntEnum
from typing import Iterable, List, Optional, Sequence, Tuple, Union

import networkx as nx

from cyclo.exceptions import ContractViolation, FormatError, InvalidAdjacency
from cyclo.gaussint import GaussInt, HermMatrix, I, NEG_I, ONE, ZERO

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]


class PairState(IntEnum):
    """State of an unordered vertex pair {x, y} with x < y"""
    NONE = 0
    DIGON = 1
    FORWARD = 2   # arc x -> y
    BACKWARD = 3  # arc y -> x


def pair_index(x: int, y: int) -> int:
    """Position of the pair {x, y} in colex order (0,1), (0,2), (1,2), (0,3), ..."""
    if x > y:
        x, y = y, x
    return y * (y - 1) // 2 + x


def pair_count(n: int) -> int:
    return n * (n - 1) // 2


def index_pair(index: int) -> Pair:
    """Inverse of pair_index"""
    y = 1
    while pair_index(0, y + 1) <= index:
        y += 1
    return index - pair_index(0, y), y


@dataclass(frozen=True)
class Digraph:
    """
    Digraph on vertices 0..n-1 without loops or multiple edges

    Each unordered pair carries one PairState; states are stored in colex
    pair order.
    """
    n: int
    states: Tuple[PairState, ...]

    def __post_init__(self):
        if self.n < 0:
            raise ContractViolation(f"Negative vertex count {self.n}")
        if len(self.states) != pair_count(self.n):
            raise ContractViolation(
                f"Digraph on {self.n} vertices needs {pair_count(self.n)} pair states, got {len(self.states)}"
            )
        object.__setattr__(self, 'states', tuple(PairState(s) for s in self.states))

    @classmethod
    def empty(cls, n: int) -> 'Digraph':
        return cls(n, (PairState.NONE,) * pair_count(n))

    @classmethod
    def from_edges(cls, n: int, digons: Iterable[Sequence[int]] = (),
                   arcs: Iterable[Sequence[int]] = ()) -> 'Digraph':
        """
        Build a digraph from digon and arc lists

        Args:
            n: Number of vertices
            digons: Unordered pairs joined by a digon
            arcs: Ordered (tail, head) pairs

        Returns:
            Digraph

        Raises:
            FormatError: On loops, out-of-range vertices, duplicate pairs or
                a pair listed both as digon and arc
        """
        states = [PairState.NONE] * pair_count(n)

        def claim(u: int, v: int, state: PairState, kind: str) -> None:
            if not (0 <= u < n and 0 <= v < n):
                raise FormatError(f"{kind} ({u}, {v}) has a vertex outside 0..{n - 1}")
            if u == v:
                raise FormatError(f"{kind} ({u}, {v}) is a loop")
            index = pair_index(u, v)
            if states[index] is not PairState.NONE:
                raise FormatError(f"Pair {{{min(u, v)}, {max(u, v)}}} is listed more than once")
            states[index] = state

        for u, v in digons:
            claim(int(u), int(v), PairState.DIGON, "Digon")
        for u, v in arcs:
            u, v = int(u), int(v)
            claim(u, v, PairState.FORWARD if u < v else PairState.BACKWARD, "Arc")
        return cls(n, tuple(states))

    def state(self, x: int, y: int) -> PairState:
        """State of the pair read in the direction x -> y"""
        if x == y:
            return PairState.NONE
        s = self.states[pair_index(x, y)]
        if x > y and s in (PairState.FORWARD, PairState.BACKWARD):
            return PairState.BACKWARD if s is PairState.FORWARD else PairState.FORWARD
        return s

    def digons(self) -> List[Pair]:
        return sorted(index_pair(k) for k, s in enumerate(self.states) if s is PairState.DIGON)

    def arcs(self) -> List[Pair]:
        """Arcs as (tail, head)"""
        result = []
        for k, s in enumerate(self.states):
            x, y = index_pair(k)
            if s is PairState.FORWARD:
                result.append((x, y))
            elif s is PairState.BACKWARD:
                result.append((y, x))
        return sorted(result)

    def neighbours(self, x: int) -> List[int]:
        return [y for y in range(self.n) if y != x and self.states[pair_index(x, y)] is not PairState.NONE]

    def degree(self, x: int) -> int:
        return len(self.neighbours(x))

    def edge_count(self) -> int:
        return sum(1 for s in self.states if s is not PairState.NONE)


_STATE_ENTRY = {
    PairState.NONE: ZERO,
    PairState.DIGON: ONE,
    PairState.FORWARD: I,
    PairState.BACKWARD: NEG_I,
}
_ENTRY_STATE = {entry: state for state, entry in _STATE_ENTRY.items()}


def hermitian_adjacency(digraph: Digraph) -> HermMatrix:
    """
    Hermitian adjacency matrix: 1 for a digon, i for an arc x -> y,
    -i for an arc y -> x and 0 otherwise
    """
    n = digraph.n
    rows = [[ZERO] * n for _ in range(n)]
    for k, s in enumerate(digraph.states):
        if s is PairState.NONE:
            continue
        x, y = index_pair(k)
        entry = _STATE_ENTRY[s]
        rows[x][y] = entry
        rows[y][x] = entry.conj()
    return HermMatrix(n, tuple(tuple(row) for row in rows))


def from_hermitian(H: HermMatrix) -> Digraph:
    """
    Read a digraph back from its Hermitian adjacency matrix

    Raises:
        InvalidAdjacency: If the diagonal is nonzero or an off-diagonal entry
            lies outside {0, 1, i, -i}
    """
    states = []
    for y in range(1, H.n):
        for x in range(y):
            entry = H[x, y]
            if entry not in _ENTRY_STATE:
                raise InvalidAdjacency(f"Entry ({x},{y}) = {entry} is not a digraph adjacency entry")
            states.append(_ENTRY_STATE[entry])
    for x in range(H.n):
        if H[x, x]:
            raise InvalidAdjacency(f"Entry ({x},{x}) = {H[x, x]}: the diagonal must be zero")
    return Digraph(H.n, tuple(states))


def subdigraph(digraph: Digraph, vertices: Iterable[int]) -> Digraph:
    """
    Induced subdigraph on the given vertex subset

    Vertices of the result are numbered by the sorted order of the subset,
    so its Hermitian adjacency matrix is the principal submatrix of the
    original on those rows.
    """
    subset = sorted(set(vertices))
    for x in subset:
        if not 0 <= x < digraph.n:
            raise ContractViolation(f"Vertex {x} is not in a digraph on {digraph.n} vertices")
    states = []
    for j in range(1, len(subset)):
        for i in range(j):
            states.append(digraph.state(subset[i], subset[j]))
    return Digraph(len(subset), tuple(states))


def converse(digraph: Digraph) -> Digraph:
    """Reverse every arc; digons are unchanged"""
    swap = {PairState.FORWARD: PairState.BACKWARD, PairState.BACKWARD: PairState.FORWARD}
    return Digraph(digraph.n, tuple(swap.get(s, s) for s in digraph.states))


def underlying_graph(digraph: Digraph) -> nx.Graph:
    """Simple graph with an edge per digon or arc; edges carry an ``arc`` flag"""
    graph = nx.Graph()
    graph.add_nodes_from(range(digraph.n))
    for k, s in enumerate(digraph.states):
        if s is not PairState.NONE:
            x, y = index_pair(k)
            graph.add_edge(x, y, arc=s is not PairState.DIGON)
    return graph


def is_connected(digraph: Digraph) -> bool:
    if digraph.n == 0:
        return False
    return nx.is_connected(underlying_graph(digraph))


def has_odd_arc_cycle(digraph: Digraph) -> bool:
    """
    True iff some cycle of the underlying graph uses an odd number of arcs

    Label every vertex with the parity of arcs on its spanning-tree path
    from the root; an odd cycle exists exactly when some edge disagrees
    with the labels.

    Raises:
        ContractViolation: If the digraph is not connected
    """
    if not is_connected(digraph):
        raise ContractViolation("has_odd_arc_cycle needs a connected digraph")
    graph = underlying_graph(digraph)
    parity = {0: 0}
    for u, v in nx.bfs_edges(graph, 0):
        parity[v] = parity[u] ^ int(graph.edges[u, v]['arc'])
    return any(parity[u] ^ parity[v] != int(data['arc']) for u, v, data in graph.edges(data=True))


def cycle_gain(source: Union[Digraph, HermMatrix], cycle: Sequence[int]) -> GaussInt:
    """
    Product of the Hermitian adjacency entries around a closed walk

    Args:
        source: Digraph or Hermitian matrix
        cycle: Vertices v0, v1, ..., v_{m-1}; the walk returns to v0

    Raises:
        ContractViolation: If two consecutive vertices are not adjacent
    """
    H = hermitian_adjacency(source) if isinstance(source, Digraph) else source
    gain = ONE
    for k, x in enumerate(cycle):
        y = cycle[(k + 1) % len(cycle)]
        entry = H[x, y]
        if not entry:
            raise ContractViolation(f"Vertices {x} and {y} are not adjacent")
        gain = gain * entry
    return gain


def find_cycle(digraph: Digraph) -> Optional[List[int]]:
    """Some cycle of the underlying graph as a vertex list, or None for forests"""
    try:
        edges = nx.find_cycle(underlying_graph(digraph))
    except nx.NetworkXNoCycle:
        return None
    return [u for u, _ in edges]
