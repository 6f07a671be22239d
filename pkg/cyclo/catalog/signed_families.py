"""
Signed graphs U1..U11, O_2k and Q_hk

U1..U11 are the eight-vertex sporadic signed graphs maximal with all
eigenvalues in (-2, 2); O_2k is the 2k-cycle with one negative edge and
Q_hk joins two paths through a four-cycle with one negative edge. All of
them are bipartite.
"""

import logging
from typing import Dict, List, Tuple

from cyclo.catalog.refs import CatalogRef, Family
from cyclo.exceptions import ParamRange
from cyclo.signed import SignedGraph

logger = logging.getLogger(__name__)

# label order, positive edges, negative edges
_U_TABLES: Dict[int, Tuple[List[str], List[Tuple[str, str]], List[Tuple[str, str]]]] = {
    1: (
        ["a1", "a2", "a3", "a4", "b1", "b2", "b3", "b4"],
        [("a1", "a2"), ("a2", "a3"), ("a3", "a4"), ("b2", "b3"), ("b3", "b4"), ("b4", "b1"),
         ("a1", "b1"), ("a2", "b2"), ("a4", "b4")],
        [("a4", "a1"), ("b1", "b2"), ("a3", "b3")],
    ),
    2: (
        ["a0", "a1", "a2", "a3", "a4", "b0", "b1", "b2"],
        [("a0", "a1"), ("a1", "a2"), ("a2", "a3"), ("a3", "a4"), ("b0", "b1"), ("b1", "b2"),
         ("a1", "b1")],
        [("a2", "b2")],
    ),
    3: (
        ["a0", "a1", "a2", "a3", "a4", "a5", "b1", "b2"],
        [("a0", "a1"), ("a1", "a2"), ("a2", "a3"), ("a3", "a4"), ("a4", "a5"), ("b1", "b2"),
         ("a1", "b1")],
        [("a2", "b2")],
    ),
    4: (
        ["a0", "a1", "a2", "a3", "a4", "b0", "b1", "b2"],
        [("a0", "a1"), ("a1", "a2"), ("a2", "a3"), ("a3", "a4"), ("b0", "b1"), ("b1", "b2"),
         ("a0", "b0"), ("a2", "b2")],
        [("a1", "b1")],
    ),
    5: (
        ["a0", "a1", "a2", "a3", "a4", "a5", "a6", "b2"],
        [("a0", "a1"), ("a1", "a2"), ("a2", "a3"), ("a3", "a4"), ("a4", "a5"), ("a5", "a6"),
         ("a2", "b2")],
        [],
    ),
    6: (
        ["h0", "h60", "h120", "h180", "h240", "h300", "xp", "xm"],
        [("h0", "h60"), ("h60", "h120"), ("h180", "h240"), ("h240", "h300"), ("h300", "h0"),
         ("h0", "xp"), ("h180", "xm")],
        [("h120", "h180")],
    ),
    7: (
        ["hm30", "h30", "h90", "h150", "h210", "h270", "yp", "ym"],
        [("h30", "h90"), ("h90", "h150"), ("h210", "h270"), ("h270", "hm30"), ("hm30", "h30"),
         ("h150", "yp"), ("yp", "ym"), ("ym", "h210")],
        [("h150", "h210")],
    ),
    8: (
        ["am1", "a0", "a1", "a2", "b0", "b1", "c0", "c1"],
        [("am1", "a0"), ("a0", "c0"), ("a1", "b0"), ("a1", "c0"), ("a2", "b1"), ("a2", "c1"),
         ("b0", "b1"), ("c0", "c1")],
        [("a0", "b0"), ("a1", "a2")],
    ),
    9: (
        ["a0", "b0", "c0", "d0", "a1", "b1", "c1", "d1"],
        [("a0", "b0"), ("c0", "d0"), ("d0", "a0"), ("a0", "a1"), ("b0", "b1"), ("c0", "c1"),
         ("d0", "d1")],
        [("b0", "c0")],
    ),
    10: (
        ["a0", "a1", "a2", "a3", "b0", "b1", "b2", "b3"],
        [("a0", "a1"), ("a1", "a2"), ("a2", "a3"), ("b0", "b1"), ("b2", "b3"),
         ("a1", "b1"), ("a2", "b2")],
        [("b1", "b2"), ("a0", "b0"), ("a3", "b3")],
    ),
    11: (
        ["a0", "a1", "a2", "a3", "b1", "b2", "b3", "b4"],
        [("a0", "a1"), ("a1", "a2"), ("a2", "a3"), ("b1", "b2"), ("b2", "b3"), ("b3", "b4"),
         ("a1", "b1"), ("a3", "b3")],
        [("a2", "b2")],
    ),
}


def signed_u(index: int) -> SignedGraph:
    if index not in _U_TABLES:
        raise ParamRange(f"U{index}: index must be in 1..11")
    labels, pos, neg = _U_TABLES[index]
    return SignedGraph.from_labelled(labels, pos, neg)


def signed_o(size: int) -> SignedGraph:
    """Cycle on ``size`` vertices whose closing edge {size-1, 0} is negative"""
    CatalogRef(Family.SIGNED_O, (size,))
    pos = [(v, v + 1) for v in range(size - 1)]
    return SignedGraph.from_edges(size, pos, [(size - 1, 0)])


def signed_q(h: int, k: int) -> SignedGraph:
    """
    Q_hk: a path a_h..a_1 into b0, the four-cycle b0-bm-b1-bp with the
    edge b0-bp negative, then a path c_1..c_k out of b1
    """
    CatalogRef(Family.SIGNED_Q, (h, k))
    labels = [f"a{j}" for j in range(h, 0, -1)] + ["b0", "bm", "bp", "b1"] + [f"c{j}" for j in range(1, k + 1)]
    pos = [(f"a{j + 1}", f"a{j}") for j in range(1, h)]
    if h:
        pos.append(("a1", "b0"))
    pos += [("b0", "bm"), ("bm", "b1"), ("bp", "b1")]
    if k:
        pos.append(("b1", "c1"))
    pos += [(f"c{j}", f"c{j + 1}") for j in range(1, k)]
    return SignedGraph.from_labelled(labels, pos, [("b0", "bp")])


def signed_family(ref: CatalogRef) -> SignedGraph:
    """Build the signed graph named by a SignedU, SignedO or SignedQ reference"""
    if ref.family is Family.SIGNED_U:
        return signed_u(ref.params[0])
    if ref.family is Family.SIGNED_O:
        return signed_o(ref.params[0])
    if ref.family is Family.SIGNED_Q:
        return signed_q(*ref.params)
    raise ParamRange(f"{ref} is not a signed-graph family")
