"""
Switching equivalence of Hermitian adjacency matrices

Strong equivalence is A = Q B Q* or A = Q conj(B) Q* for a monomial matrix Q
with unit entries in {1, i, -1, -i}; equivalence also allows B -> -B. For
digraphs, strong equivalence of the Hermitian adjacency matrices is exactly
switching equivalence (four-way switching plus taking the converse).

Matrices are handled as tables of unit exponents (i**e, None for zero), so
every phase computation is arithmetic mod 4.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, List, Optional, Sequence, Tuple

import networkx as nx

from cyclo.digraph import Digraph, hermitian_adjacency
from cyclo.exceptions import CapExceeded, ContractViolation, FormatError, NotAdjacencyClass
from cyclo.gaussint import GaussInt, HermMatrix, ONE, char_poly

logger = logging.getLogger(__name__)

EQUIVALENCE_CAP = 16

ExpMatrix = List[List[Optional[int]]]

# Rank of i**e in the fixed entry order 0 < 1 < i < -1 < -i (zero has rank 0)
_EXP_RANK = (1, 2, 3, 4)
_RANK_VALUE = (GaussInt(0), GaussInt(1), GaussInt(0, 1), GaussInt(-1), GaussInt(0, -1))


class Mode(Enum):
    """Witness group used by canonical_form"""
    STRONG = "strong"
    EQUIV = "equiv"


@dataclass(frozen=True)
class SwitchingWitness:
    """
    Monomial switching with optional conjugation and negation

    Maps a source matrix to a target by
    target[perm[s], perm[t]] = eps * phases[s] * op(source)[s, t] * conj(phases[t]),
    where op conjugates entrywise when ``conjugated`` and eps is -1 when
    ``negated``.
    """
    perm: Tuple[int, ...]
    phases: Tuple[GaussInt, ...]
    conjugated: bool = False
    negated: bool = False

    def __post_init__(self):
        if sorted(self.perm) != list(range(len(self.perm))):
            raise ContractViolation(f"{list(self.perm)} is not a permutation")
        if len(self.phases) != len(self.perm) or not all(p.is_unit() for p in self.phases):
            raise ContractViolation("Witness needs one unit phase per vertex")

    @property
    def n(self) -> int:
        return len(self.perm)

    @classmethod
    def identity(cls, n: int) -> 'SwitchingWitness':
        return cls(tuple(range(n)), (ONE,) * n)

    @classmethod
    def diagonal(cls, phases: Sequence[Any], conjugated: bool = False, negated: bool = False) -> 'SwitchingWitness':
        """Witness D op(H) D* for the diagonal matrix D = diag(phases)"""
        units = tuple(GaussInt.coerce(p) for p in phases)
        return cls(tuple(range(len(units))), units, conjugated, negated)

    def apply(self, H: HermMatrix) -> HermMatrix:
        if H.n != self.n:
            raise ContractViolation(f"Witness on {self.n} vertices applied to a {H.n}x{H.n} matrix")
        rows = [[GaussInt(0)] * self.n for _ in range(self.n)]
        sign = -1 if self.negated else 1
        for s in range(self.n):
            for t in range(self.n):
                entry = H[s, t].conj() if self.conjugated else H[s, t]
                if entry:
                    rows[self.perm[s]][self.perm[t]] = self.phases[s] * entry * self.phases[t].conj() * sign
        return HermMatrix(self.n, tuple(tuple(row) for row in rows))

    def inverse(self) -> 'SwitchingWitness':
        perm = [0] * self.n
        phases = [ONE] * self.n
        for s, target in enumerate(self.perm):
            perm[target] = s
            phases[target] = self.phases[s] if self.conjugated else self.phases[s].conj()
        return SwitchingWitness(tuple(perm), tuple(phases), self.conjugated, self.negated)

    def compose(self, other: 'SwitchingWitness') -> 'SwitchingWitness':
        """Witness for applying self first and then other"""
        if other.n != self.n:
            raise ContractViolation("Cannot compose witnesses of different sizes")
        perm = tuple(other.perm[self.perm[s]] for s in range(self.n))
        phases = tuple(
            other.phases[self.perm[s]] * (self.phases[s].conj() if other.conjugated else self.phases[s])
            for s in range(self.n)
        )
        return SwitchingWitness(perm, phases, self.conjugated != other.conjugated, self.negated != other.negated)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'perm': list(self.perm),
            'phases': [str(p) for p in self.phases],
            'conj': self.conjugated,
            'neg': self.negated,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'SwitchingWitness':
        try:
            return cls(
                perm=tuple(int(p) for p in data['perm']),
                phases=tuple(GaussInt.parse(str(p)) for p in data['phases']),
                conjugated=bool(data.get('conj', False)),
                negated=bool(data.get('neg', False)),
            )
        except KeyError as e:
            raise FormatError(f"Witness document is missing {e}")


def apply_witness(witness: SwitchingWitness, H: HermMatrix) -> HermMatrix:
    return witness.apply(H)


def _exponents(H: HermMatrix) -> ExpMatrix:
    """Unit exponents of an adjacency-class matrix"""
    offending = H.offending_entry()
    if offending is not None:
        x, y, entry = offending
        raise NotAdjacencyClass(f"Entry ({x},{y}) = {entry} is not in {{0, 1, -1, i, -i}} off a zero diagonal")
    return [[H[x, y].unit_exponent() for y in range(H.n)] for x in range(H.n)]


def _variant(exps: ExpMatrix, conjugated: bool, negated: bool) -> ExpMatrix:
    shift = 2 if negated else 0
    out = []
    for row in exps:
        out.append([None if e is None else ((-e if conjugated else e) + shift) % 4 for e in row])
    return out


def _adjacency_lists(exps: ExpMatrix) -> List[List[int]]:
    return [[y for y, e in enumerate(row) if e is not None] for row in exps]


def _search_order(adjacency: List[List[int]]) -> Tuple[List[int], List[Optional[int]]]:
    """BFS forest order; each component is rooted at a vertex of highest degree"""
    n = len(adjacency)
    graph = nx.Graph()
    graph.add_nodes_from(range(n))
    graph.add_edges_from((x, y) for x in range(n) for y in adjacency[x] if x < y)
    parts = sorted((sorted(c) for c in nx.connected_components(graph)), key=lambda c: (-len(c), c[0]))
    order: List[int] = []
    parent: List[Optional[int]] = [None] * n
    for part in parts:
        root = max(part, key=lambda v: (len(adjacency[v]), -v))
        order.append(root)
        for u, v in nx.bfs_edges(graph, root, sort_neighbors=lambda vs: sorted(vs, key=lambda w: (-len(adjacency[w]), w))):
            parent[v] = u
            order.append(v)
    return order, parent


class _Matcher:
    """
    Backtracking search for perm and phases with
    T[perm s, perm t] = a_s + V[s, t] - a_t (exponents mod 4) on all pairs

    With ``injective`` the source is matched onto an induced part of a
    larger target.
    """

    def __init__(self, source: ExpMatrix, target: ExpMatrix, injective: bool):
        self.V = source
        self.T = target
        self.injective = injective
        self.source_adj = _adjacency_lists(source)
        self.target_adj = _adjacency_lists(target)
        self.source_deg = [len(a) for a in self.source_adj]
        self.target_deg = [len(a) for a in self.target_adj]
        self.source_sig = [sorted(self.source_deg[w] for w in a) for a in self.source_adj]
        self.target_sig = [sorted(self.target_deg[w] for w in a) for a in self.target_adj]
        self.order, self.parent = _search_order(self.source_adj)
        self.nodes = 0

    def _compatible(self, v: int, c: int) -> bool:
        if self.injective:
            return self.target_deg[c] >= self.source_deg[v]
        return self.target_deg[c] == self.source_deg[v] and self.target_sig[c] == self.source_sig[v]

    def run(self) -> Optional[Tuple[List[int], List[int]]]:
        n = len(self.V)
        perm: List[Optional[int]] = [None] * n
        phase = [0] * n
        used = [False] * len(self.T)
        if self._extend(0, perm, phase, used):
            return [p for p in perm], phase
        return None

    def _extend(self, depth: int, perm: List[Optional[int]], phase: List[int], used: List[bool]) -> bool:
        if depth == len(self.order):
            return True
        self.nodes += 1
        v = self.order[depth]
        p = self.parent[v]
        candidates = range(len(self.T)) if p is None else self.target_adj[perm[p]]
        mapped = self.order[:depth]
        for c in candidates:
            if used[c] or not self._compatible(v, c):
                continue
            a = 0 if p is None else (phase[p] + self.V[p][v] - self.T[perm[p]][c]) % 4
            consistent = True
            for u in mapped:
                expected = self.V[u][v]
                actual = self.T[perm[u]][c]
                if expected is None or actual is None:
                    if expected is not actual:
                        consistent = False
                        break
                elif actual != (phase[u] + expected - a) % 4:
                    consistent = False
                    break
            if not consistent:
                continue
            perm[v], phase[v], used[c] = c, a, True
            if self._extend(depth + 1, perm, phase, used):
                return True
            perm[v], used[c] = None, False
        return False


def _check_cap(n: int, cap: int) -> None:
    if n > cap:
        raise CapExceeded(f"Matrix on {n} vertices exceeds the equivalence search cap of {cap}")


def _verified(witness: SwitchingWitness, source: HermMatrix, target: HermMatrix) -> SwitchingWitness:
    if witness.apply(source) != target:
        raise ContractViolation(f"Switching witness failed re-verification: {witness.to_dict()}")
    return witness


def _find(H1: HermMatrix, H2: HermMatrix, negated: bool) -> Optional[SwitchingWitness]:
    source = _exponents(H1)
    target = _exponents(H2)
    for conjugated in (False, True):
        matcher = _Matcher(_variant(source, conjugated, negated), target, injective=False)
        found = matcher.run()
        logger.debug(f"Equivalence search (conj={conjugated}, neg={negated}) explored {matcher.nodes} nodes")
        if found is not None:
            perm, phase = found
            witness = SwitchingWitness(tuple(perm), tuple(GaussInt.unit(a) for a in phase), conjugated, negated)
            return _verified(witness, H1, H2)
    return None


def _same_degrees(H1: HermMatrix, H2: HermMatrix) -> bool:
    def degrees(H):
        return sorted(sum(1 for y in range(H.n) if H[x, y]) for x in range(H.n))
    return degrees(H1) == degrees(H2)


def strong_equiv(H1: HermMatrix, H2: HermMatrix, cap: int = EQUIVALENCE_CAP) -> Optional[SwitchingWitness]:
    """
    Find a witness H2 = Q op(H1) Q*, if one exists

    Returns:
        SwitchingWitness with negated=False, or None

    Raises:
        NotAdjacencyClass: If either matrix leaves the adjacency alphabet
        CapExceeded: If the matrices are larger than ``cap``
    """
    if H1.n != H2.n:
        return None
    _check_cap(H1.n, cap)
    if char_poly(H1) != char_poly(H2) or not _same_degrees(H1, H2):
        return None
    return _find(H1, H2, negated=False)


def equiv(H1: HermMatrix, H2: HermMatrix, cap: int = EQUIVALENCE_CAP) -> Optional[SwitchingWitness]:
    """Like strong_equiv, but also tries to reach -H2 (witness has negated=True)"""
    if H1.n != H2.n:
        return None
    _check_cap(H1.n, cap)
    if not _same_degrees(H1, H2):
        return None
    p1, p2 = char_poly(H1), char_poly(H2)
    if p1 == p2:
        witness = _find(H1, H2, negated=False)
        if witness is not None:
            return witness
    if p1.reflect() == p2:
        return _find(H1, H2, negated=True)
    return None


def switching_equiv(first: Digraph, second: Digraph, cap: int = EQUIVALENCE_CAP) -> Optional[SwitchingWitness]:
    return strong_equiv(hermitian_adjacency(first), hermitian_adjacency(second), cap)


def _dominated(small: Sequence[int], large: Sequence[int]) -> bool:
    """Can the degrees in ``small`` be matched injectively to no smaller degrees in ``large``"""
    ranked = sorted(large, reverse=True)
    return all(d <= ranked[k] for k, d in enumerate(sorted(small, reverse=True)))


def contains_matrix(small: HermMatrix, large: HermMatrix,
                    cap: int = EQUIVALENCE_CAP) -> Optional[Tuple[Tuple[int, ...], SwitchingWitness]]:
    """
    Find W with large.principal(W) strongly equivalent to small

    Returns:
        (W sorted, witness from small to large.principal(W)) or None
    """
    if small.n > large.n:
        return None
    _check_cap(small.n, cap)
    if small.n == 0:
        return (), SwitchingWitness.identity(0)
    source = _exponents(small)
    target = _exponents(large)
    source_deg = [sum(1 for e in row if e is not None) for row in source]
    target_deg = [sum(1 for e in row if e is not None) for row in target]
    if not _dominated(source_deg, target_deg):
        return None
    for conjugated in (False, True):
        matcher = _Matcher(_variant(source, conjugated, False), target, injective=True)
        found = matcher.run()
        logger.debug(f"Containment search (conj={conjugated}) explored {matcher.nodes} nodes")
        if found is None:
            continue
        perm, phase = found
        W = tuple(sorted(perm))
        position = {w: k for k, w in enumerate(W)}
        witness = SwitchingWitness(tuple(position[c] for c in perm),
                                   tuple(GaussInt.unit(a) for a in phase), conjugated, False)
        return W, _verified(witness, small, large.principal(W))
    return None


def contains_up_to_switching(small: Digraph, large: Digraph,
                             cap: int = EQUIVALENCE_CAP) -> Optional[Tuple[Tuple[int, ...], SwitchingWitness]]:
    """
    Find a vertex subset W of ``large`` whose induced subdigraph is
    switching equivalent to ``small``

    Returns:
        (W, witness) where the witness maps H(small) onto H(subdigraph(large, W)),
        or None
    """
    return contains_matrix(hermitian_adjacency(small), hermitian_adjacency(large), cap)


class _Canonizer:
    """
    Branch and bound for the least colex key over all orderings of one
    variant matrix

    Phases are not branched on: for a fixed ordering the least key is
    reached greedily, making the first nonzero entry of each column equal
    to 1 and rotating not yet joined components onto 1 as well.
    """

    def __init__(self, exps: ExpMatrix, best: Optional[Tuple[int, ...]]):
        self.E = exps
        self.n = len(exps)
        self.best = best
        self.best_state: Optional[Tuple[List[int], List[int]]] = None

    def _column(self, order: List[int], phase: List[int], comp: List[int], v: int):
        col = []
        b = None
        rotation: Dict[int, int] = {}
        for q in order:
            e = self.E[q][v]
            if e is None:
                col.append(0)
                continue
            c = comp[q]
            if b is None:
                b = (phase[q] + e) % 4
                rotation[c] = 0
                col.append(1)
            elif c not in rotation:
                rotation[c] = (b - phase[q] - e) % 4
                col.append(1)
            else:
                col.append(_EXP_RANK[(phase[q] + rotation[c] + e - b) % 4])
        return tuple(col), (0 if b is None else b), rotation

    def _twins(self, u: int, v: int) -> bool:
        """A switching swaps u and v and fixes every other vertex"""
        factor = None
        for w in range(self.n):
            if w in (u, v):
                continue
            eu, ev = self.E[u][w], self.E[v][w]
            if (eu is None) != (ev is None):
                return False
            if eu is None:
                continue
            shift = (ev - eu) % 4
            if factor is None:
                factor = shift
            elif factor != shift:
                return False
        euv = self.E[u][v]
        if euv is None or factor is None:
            return True
        return (2 * factor + euv) % 4 == (-euv) % 4

    def run(self) -> None:
        self._extend([], [0] * self.n, list(range(self.n)), ())

    def _extend(self, order: List[int], phase: List[int], comp: List[int], key: Tuple[int, ...]) -> None:
        if len(order) == self.n:
            if self.best is None or key < self.best:
                self.best = key
                self.best_state = (list(order), list(phase))
            return
        placed = set(order)
        options = []
        for v in range(self.n):
            if v not in placed:
                col, b, rotation = self._column(order, phase, comp, v)
                options.append((col, v, b, rotation))
        least = min(option[0] for option in options)
        prefix = key + least
        if self.best is not None and prefix > self.best[:len(prefix)]:
            return
        kept: List[int] = []
        for col, v, b, rotation in options:
            if col != least or any(self._twins(k, v) for k in kept):
                continue
            kept.append(v)
            new_phase = list(phase)
            new_comp = list(comp)
            for w in order:
                if comp[w] in rotation:
                    new_phase[w] = (phase[w] + rotation[comp[w]]) % 4
                    new_comp[w] = v
            new_phase[v] = b
            new_comp[v] = v
            self._extend(order + [v], new_phase, new_comp, prefix)


def _key_matrix(n: int, key: Tuple[int, ...]) -> HermMatrix:
    rows = [[GaussInt(0)] * n for _ in range(n)]
    index = 0
    for y in range(1, n):
        for x in range(y):
            value = _RANK_VALUE[key[index]]
            rows[x][y] = value
            rows[y][x] = value.conj()
            index += 1
    return HermMatrix(n, tuple(tuple(row) for row in rows))


def canonical_form_with_witness(H: HermMatrix, mode: Mode = Mode.STRONG,
                                cap: int = EQUIVALENCE_CAP) -> Tuple[HermMatrix, SwitchingWitness]:
    """
    Canonical representative of the (strong) equivalence class of H

    The representative has the least upper-triangle key, read column by
    column ((0,1), (0,2), (1,2), (0,3), ...) in the entry order
    0 < 1 < i < -1 < -i. Two matrices have the same canonical form exactly
    when they are (strongly) equivalent.

    Args:
        H: Adjacency-class Hermitian matrix
        mode: Mode.STRONG (switching and conjugation) or Mode.EQUIV (also negation)
        cap: Largest vertex count accepted

    Returns:
        (canonical matrix, witness mapping H onto it)

    Raises:
        CapExceeded: If H.n > cap
        NotAdjacencyClass: If H has entries outside the adjacency alphabet
    """
    _check_cap(H.n, cap)
    exps = _exponents(H)
    if H.n <= 1:
        return H, SwitchingWitness.identity(H.n)
    variants = [(False, False), (True, False)]
    if mode is Mode.EQUIV:
        variants += [(False, True), (True, True)]
    best: Optional[Tuple[int, ...]] = None
    best_witness: Optional[SwitchingWitness] = None
    for conjugated, negated in variants:
        canonizer = _Canonizer(_variant(exps, conjugated, negated), best)
        canonizer.run()
        if canonizer.best_state is not None:
            best = canonizer.best
            order, phase = canonizer.best_state
            perm = [0] * H.n
            for position, v in enumerate(order):
                perm[v] = position
            best_witness = SwitchingWitness(tuple(perm), tuple(GaussInt.unit(a) for a in phase), conjugated, negated)
    canonical = _key_matrix(H.n, best)
    return canonical, _verified(best_witness, H, canonical)


def canonical_form(H: HermMatrix, mode: Mode = Mode.STRONG, cap: int = EQUIVALENCE_CAP) -> HermMatrix:
    return canonical_form_with_witness(H, mode, cap)[0]


def canonical_key(H: HermMatrix, mode: Mode = Mode.STRONG, cap: int = EQUIVALENCE_CAP) -> Tuple[int, ...]:
    """Hashable form of canonical_form, as used for deduplication"""
    C = canonical_form(H, mode, cap)
    return tuple(_EXP_RANK[C[x, y].unit_exponent()] if C[x, y] else 0
                 for y in range(1, C.n) for x in range(y))
