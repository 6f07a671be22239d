"""
Exhaustive enumeration of digraphs by pair states

Pairs are assigned column by column, (0,1), (0,2), (1,2), (0,3), ..., so
after column m the leading block on m+1 vertices is complete. Every filter
offered here is hereditary (closed under taking subdigraphs), so a block
that fails it cuts off the whole subtree below it.
"""

import logging
import os
import time
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Iterator, List, Optional, Tuple

from cyclo.digraph import Digraph, PairState, hermitian_adjacency, is_connected, pair_count
from cyclo.equivalence import Mode, canonical_key
from cyclo.exceptions import CapExceeded, ContractViolation
from cyclo.gaussint import HermMatrix, RadiusClass, min_eigen_exceeds, radius_class

logger = logging.getLogger(__name__)

ENUMERATION_CAP = 6
THREADS_ENV = "CYCLO_THREADS"

_STATES = tuple(PairState)


class RadiusFilter(Enum):
    """Hereditary spectral predicates used to filter (and prune) the enumeration"""
    ALL = "all"
    LE2 = "le2"
    LT2 = "lt2"
    MIN_EIGEN = "min_eigen"

    def admits(self, H: HermMatrix) -> bool:
        if self is RadiusFilter.ALL:
            return True
        if self is RadiusFilter.MIN_EIGEN:
            return min_eigen_exceeds(H)
        radius = radius_class(H)
        if self is RadiusFilter.LT2:
            return radius is RadiusClass.LESS_THAN_2
        return radius is not RadiusClass.GREATER_THAN_2


@dataclass
class _Chunk:
    """Digraphs and counters produced from one fixed prefix"""
    digraphs: List[Digraph] = field(default_factory=list)
    scanned: int = 0
    pruned: int = 0


class DigraphEnumerator:
    """
    Enumerate connected digraphs on n vertices passing a filter

    The assignment space is split by the states of the first block; each
    prefix is walked independently and the results are merged in prefix
    order, so the output order does not depend on the worker count.
    """

    def __init__(self, n: int, radius_filter: RadiusFilter = RadiusFilter.LE2,
                 prune: bool = True, threads: int = 1, cap: int = ENUMERATION_CAP):
        """
        Args:
            n: Number of vertices (1..cap)
            radius_filter: Predicate every yielded digraph satisfies
            prune: Abandon subtrees whose leading block fails the filter
            threads: Worker count for the prefix partition
            cap: Largest n accepted

        Raises:
            ContractViolation: If n < 1
            CapExceeded: If n > cap
        """
        if n < 1:
            raise ContractViolation(f"Cannot enumerate digraphs on {n} vertices")
        if n > cap:
            raise CapExceeded(f"Enumeration on {n} vertices exceeds the cap of {cap}")
        self.n = n
        self.radius_filter = radius_filter
        self.prune = prune and radius_filter is not RadiusFilter.ALL
        self.threads = max(1, threads)
        self.pairs = pair_count(n)
        # block boundaries: pair counts after which a leading block is complete
        self.boundaries = {pair_count(m): m for m in range(2, n + 1)}
        self.scanned = 0
        self.pruned = 0

    @property
    def total_space(self) -> int:
        return 4 ** self.pairs

    def _prefix_length(self) -> int:
        return pair_count(min(self.n, 3))

    def _block_ok(self, states: List[PairState], m: int) -> bool:
        block = Digraph(m, tuple(states[:pair_count(m)]))
        return self.radius_filter.admits(hermitian_adjacency(block))

    def _walk(self, prefix: Tuple[PairState, ...]) -> _Chunk:
        chunk = _Chunk()
        states = list(prefix)
        # the prefix itself may close blocks that must be checked
        for length in range(1, len(prefix) + 1):
            m = self.boundaries.get(length)
            if m is not None and m < self.n and self.prune and not self._block_ok(states, m):
                chunk.pruned += 4 ** (self.pairs - length)
                return chunk
        self._descend(states, chunk)
        return chunk

    def _descend(self, states: List[PairState], chunk: _Chunk) -> None:
        depth = len(states)
        if depth == self.pairs:
            chunk.scanned += 1
            digraph = Digraph(self.n, tuple(states))
            if is_connected(digraph) and self.radius_filter.admits(hermitian_adjacency(digraph)):
                chunk.digraphs.append(digraph)
            return
        for state in _STATES:
            states.append(state)
            m = self.boundaries.get(depth + 1)
            if m is not None and m < self.n and self.prune and not self._block_ok(states, m):
                chunk.pruned += 4 ** (self.pairs - depth - 1)
            else:
                self._descend(states, chunk)
            states.pop()

    def _prefixes(self) -> List[Tuple[PairState, ...]]:
        length = min(self._prefix_length(), self.pairs)
        prefixes: List[Tuple[PairState, ...]] = [()]
        for _ in range(length):
            prefixes = [p + (s,) for p in prefixes for s in _STATES]
        return prefixes

    def run(self) -> List[Digraph]:
        """Walk the whole space and return the admitted connected digraphs in order"""
        prefixes = self._prefixes()
        chunks: Dict[int, _Chunk] = {}
        if self.threads == 1:
            for index, prefix in enumerate(prefixes):
                chunks[index] = self._walk(prefix)
        else:
            with ThreadPoolExecutor(max_workers=self.threads) as executor:
                futures = {executor.submit(self._walk, prefix): index for index, prefix in enumerate(prefixes)}
                for future in as_completed(futures):
                    chunks[futures[future]] = future.result()
        result: List[Digraph] = []
        for index in range(len(prefixes)):
            chunk = chunks[index]
            result.extend(chunk.digraphs)
            self.scanned += chunk.scanned
            self.pruned += chunk.pruned
        logger.debug(
            f"n={self.n} filter={self.radius_filter.value}: scanned {self.scanned}, "
            f"pruned {self.pruned}, kept {len(result)}"
        )
        return result


class SwitchingClassCollector:
    """Group digraphs by the canonical form of their Hermitian adjacency"""

    def __init__(self):
        self._classes: Dict[Tuple[int, ...], List[Digraph]] = {}

    def add(self, digraph: Digraph) -> bool:
        """Record a digraph; True when it opens a new class"""
        key = canonical_key(hermitian_adjacency(digraph), Mode.STRONG)
        members = self._classes.setdefault(key, [])
        members.append(digraph)
        return len(members) == 1

    @property
    def representatives(self) -> List[Digraph]:
        return [members[0] for members in self._classes.values()]

    @property
    def sizes(self) -> List[int]:
        return [len(members) for members in self._classes.values()]

    def __len__(self) -> int:
        return len(self._classes)


def resolve_threads(threads: Optional[int] = None, fallback: Optional[int] = None) -> int:
    """
    Worker count for an enumeration run

    The requested count is ``threads``, else ``fallback`` (a profile value),
    else CYCLO_THREADS, else 1. CYCLO_THREADS, when set, caps the result.

    Args:
        threads: Explicit count, e.g. from --threads
        fallback: Count used when no explicit one is given

    Returns:
        Positive worker count

    Raises:
        ValueError: If CYCLO_THREADS is set but not a positive integer
    """
    cap = None
    value = os.environ.get(THREADS_ENV)
    if value:
        message = f"{THREADS_ENV} must be a positive integer, got '{value}'"
        try:
            cap = int(value)
        except ValueError:
            raise ValueError(message)
        if cap < 1:
            raise ValueError(message)
    count = next((max(1, int(requested)) for requested in (threads, fallback, cap) if requested), 1)
    if cap is not None and count > cap:
        logger.debug(f"Worker count {count} capped at {THREADS_ENV}={cap}")
        count = cap
    return count


def enumerate_digraphs(n: int, radius_filter: RadiusFilter = RadiusFilter.LE2, dedup: bool = False,
                       prune: bool = True, threads: Optional[int] = None) -> Iterator[Digraph]:
    """
    Yield connected digraphs on n vertices passing the filter

    Args:
        n: Number of vertices (1..6)
        radius_filter: Hereditary spectral predicate
        dedup: Yield one representative per switching class
        prune: Cut subtrees whose leading block fails the filter
        threads: Worker count, capped by CYCLO_THREADS (see resolve_threads)
    """
    enumerator = DigraphEnumerator(n, radius_filter, prune, resolve_threads(threads))
    digraphs = enumerator.run()
    if not dedup:
        yield from digraphs
        return
    collector = SwitchingClassCollector()
    for digraph in digraphs:
        if collector.add(digraph):
            yield digraph


@dataclass
class EnumerationReport:
    """Counts and outcomes of one exhaustive run"""
    n: int
    radius_filter: RadiusFilter
    scanned: int = 0
    pruned: int = 0
    connected: int = 0
    classes: int = 0
    class_sizes: List[int] = field(default_factory=list)
    radius_counts: Dict[str, int] = field(default_factory=dict)
    outcomes: Dict[str, str] = field(default_factory=dict)
    failures: List[str] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def total_space(self) -> int:
        return 4 ** pair_count(self.n)

    @property
    def is_reconciled(self) -> bool:
        return self.scanned + self.pruned == self.total_space and sum(self.class_sizes) == self.connected

    @property
    def passed(self) -> bool:
        return not self.failures and self.is_reconciled

    def to_dict(self) -> Dict[str, Any]:
        return {
            'n': self.n,
            'filter': self.radius_filter.value,
            'scanned': self.scanned,
            'pruned': self.pruned,
            'total_space': self.total_space,
            'connected': self.connected,
            'classes': self.classes,
            'class_sizes': list(self.class_sizes),
            'radius_counts': dict(self.radius_counts),
            'outcomes': dict(self.outcomes),
            'failures': list(self.failures),
            'elapsed': round(self.elapsed, 3),
            'passed': self.passed,
        }


def collect_classes(n: int, radius_filter: RadiusFilter = RadiusFilter.LE2, prune: bool = True,
                    threads: Optional[int] = None, dedup: bool = True) -> Tuple[EnumerationReport, List[Digraph]]:
    """
    Run the enumeration and group the result into switching classes

    Args:
        dedup: Return one representative per class; otherwise every
            admitted digraph in enumeration order

    Returns:
        (report with counts filled in, digraphs)
    """
    start = time.time()
    enumerator = DigraphEnumerator(n, radius_filter, prune, resolve_threads(threads))
    digraphs = enumerator.run()
    collector = SwitchingClassCollector()
    for digraph in digraphs:
        collector.add(digraph)
    representatives = collector.representatives
    report = EnumerationReport(
        n=n,
        radius_filter=radius_filter,
        scanned=enumerator.scanned,
        pruned=enumerator.pruned,
        connected=len(digraphs),
        classes=len(collector),
        class_sizes=collector.sizes,
    )
    for digraph in representatives:
        radius = radius_class(hermitian_adjacency(digraph)).value
        report.radius_counts[radius] = report.radius_counts.get(radius, 0) + 1
    report.elapsed = time.time() - start
    return report, representatives if dedup else digraphs
