"""
The sporadic matrices S8dagger, S14 and S16 and their digraphs
"""

import logging
from typing import Dict, List, Tuple, Union

from cyclo.catalog.refs import Sporadic
from cyclo.digraph import Digraph, from_hermitian
from cyclo.equivalence import SwitchingWitness
from cyclo.gaussint import GaussInt, HermMatrix

logger = logging.getLogger(__name__)

_S8DAGGER_ROWS = [
    ["0", "-1", "-1", "i", "1", "0", "0", "0"],
    ["-1", "0", "i", "-1", "0", "1", "0", "0"],
    ["-1", "-i", "0", "1", "0", "0", "1", "0"],
    ["-i", "-1", "1", "0", "0", "0", "0", "1"],
    ["1", "0", "0", "0", "0", "1", "1", "-i"],
    ["0", "1", "0", "0", "1", "0", "-i", "1"],
    ["0", "0", "1", "0", "1", "i", "0", "-1"],
    ["0", "0", "0", "1", "i", "1", "-1", "0"],
]

_S14_FIRST_ROW = [1, 1, 0, 1, 0, 0, -1]

# Diagonal switchings D1 (and D2) realising the sporadic digraphs
_DIAGONALS: Dict[Sporadic, Tuple[List[str], List[str]]] = {
    Sporadic.S8DAGGER: (
        ["-i", "i", "i", "1", "1", "1", "1", "-i"],
        ["1", "1", "1", "-i", "i", "-i", "-i", "-1"],
    ),
    Sporadic.S14: (["1"] * 7 + ["i"] * 7, []),
    Sporadic.S16: (
        ["i"] * 8 + ["1"] * 8,
        ["i", "-i"] * 4 + ["1", "-1"] * 4,
    ),
}


def _s14_rows() -> List[List[int]]:
    M = [[_S14_FIRST_ROW[(c - r) % 7] for c in range(7)] for r in range(7)]
    rows = [[0] * 14 for _ in range(14)]
    for r in range(7):
        for c in range(7):
            rows[r][7 + c] = M[r][c]
            rows[7 + c][r] = M[r][c]
    return rows


def _s16_rows() -> List[List[int]]:
    def shift(power: int) -> List[List[int]]:
        return [[int(c == (r + power) % 8) for c in range(8)] for r in range(8)]

    C, Ct, C3, C5 = shift(1), shift(7), shift(3), shift(5)
    blocks = [
        [[[C[r][c] + Ct[r][c] for c in range(8)] for r in range(8)],
         [[-C[r][c] + Ct[r][c] for c in range(8)] for r in range(8)]],
        [[[C[r][c] - Ct[r][c] for c in range(8)] for r in range(8)],
         [[C3[r][c] + C5[r][c] for c in range(8)] for r in range(8)]],
    ]
    return [[blocks[r // 8][c // 8][r % 8][c % 8] for c in range(16)] for r in range(16)]


def _name(name: Union[str, Sporadic]) -> Sporadic:
    return Sporadic(name) if isinstance(name, str) else name


def sporadic_matrix(name: Union[str, Sporadic]) -> HermMatrix:
    """The literal matrix S8dagger, S14 or S16"""
    name = _name(name)
    if name is Sporadic.S8DAGGER:
        return HermMatrix.from_rows(_S8DAGGER_ROWS)
    if name is Sporadic.S14:
        return HermMatrix.from_rows(_s14_rows())
    return HermMatrix.from_rows(_s16_rows())


def sporadic_diagonals(name: Union[str, Sporadic]) -> Tuple[Tuple[GaussInt, ...], Tuple[GaussInt, ...]]:
    first, second = _DIAGONALS[_name(name)]
    return tuple(GaussInt.parse(p) for p in first), tuple(GaussInt.parse(p) for p in second)


def sporadic_witnesses(name: Union[str, Sporadic]) -> Tuple[SwitchingWitness, SwitchingWitness]:
    """
    The printed diagonal switchings as witnesses from S to H(sporadic_digraph)

    The first is D1 S D1*. The second reaches the same matrix through
    negation: -D2* conj(S) D2 for S8dagger, -D1* S D1 for S14 and
    -D2 S D2* for S16.
    """
    name = _name(name)
    d1, d2 = sporadic_diagonals(name)
    direct = SwitchingWitness.diagonal(d1)
    if name is Sporadic.S8DAGGER:
        negative = SwitchingWitness.diagonal([p.conj() for p in d2], conjugated=True, negated=True)
    elif name is Sporadic.S14:
        negative = SwitchingWitness.diagonal([p.conj() for p in d1], negated=True)
    else:
        negative = SwitchingWitness.diagonal(d2, negated=True)
    return direct, negative


def sporadic_negation_witness(name: Union[str, Sporadic]) -> SwitchingWitness:
    """Witness from S to -S assembled from the two printed switchings"""
    direct, negative = sporadic_witnesses(name)
    composite = negative.compose(direct.inverse())
    return SwitchingWitness(composite.perm, composite.phases, composite.conjugated, not composite.negated)


def sporadic_digraph(name: Union[str, Sporadic]) -> Digraph:
    """from_hermitian(D1 S D1*)"""
    name = _name(name)
    direct, _ = sporadic_witnesses(name)
    return from_hermitian(direct.apply(sporadic_matrix(name)))
