"""
Catalog of the maximal digraphs, matrices and signed graphs with spectral
radius at most 2
"""

from cyclo.catalog.families import (
    build,
    build_digraph,
    build_matrix,
    canonical_u,
    complete,
    ctilde,
    ctilde1,
    ctilde2,
    cycle,
    directed_cycle,
    path,
    small_family,
    square,
    utilde1,
    utilde6,
    y_tree,
)
from cyclo.catalog.refs import RADIUS_TWO_FAMILIES, CatalogRef, Family, Sporadic
from cyclo.catalog.signed_families import signed_family, signed_o, signed_q, signed_u
from cyclo.catalog.sporadic import (
    sporadic_diagonals,
    sporadic_digraph,
    sporadic_matrix,
    sporadic_negation_witness,
    sporadic_witnesses,
)
from cyclo.catalog.vectors import (
    GaussVector,
    delta_family,
    delta_ref,
    delta_vectors,
    displaced_gram,
    inner,
    t_matrix,
    t_vectors,
)

__all__ = [
    'CatalogRef',
    'Family',
    'Sporadic',
    'RADIUS_TWO_FAMILIES',
    'GaussVector',
    'inner',
    'displaced_gram',
    't_vectors',
    't_matrix',
    'delta_vectors',
    'delta_family',
    'delta_ref',
    'sporadic_matrix',
    'sporadic_digraph',
    'sporadic_diagonals',
    'sporadic_witnesses',
    'sporadic_negation_witness',
    'directed_cycle',
    'ctilde',
    'ctilde1',
    'ctilde2',
    'path',
    'cycle',
    'complete',
    'square',
    'y_tree',
    'utilde1',
    'utilde6',
    'canonical_u',
    'small_family',
    'signed_u',
    'signed_o',
    'signed_q',
    'signed_family',
    'build',
    'build_digraph',
    'build_matrix',
]
