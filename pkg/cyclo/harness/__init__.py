"""
Exhaustive enumeration and verification runs
"""

from cyclo.harness.enumeration import (
    ENUMERATION_CAP,
    DigraphEnumerator,
    EnumerationReport,
    RadiusFilter,
    SwitchingClassCollector,
    collect_classes,
    enumerate_digraphs,
    resolve_threads,
)
from cyclo.harness.verify import (
    CheckStatus,
    RowCheck,
    TableReport,
    verify_gm2_table,
    verify_lattice_table,
    verify_mckee_smyth,
    verify_sqrt2,
    verify_theorem,
)

__all__ = [
    'ENUMERATION_CAP',
    'DigraphEnumerator',
    'EnumerationReport',
    'RadiusFilter',
    'SwitchingClassCollector',
    'collect_classes',
    'enumerate_digraphs',
    'resolve_threads',
    'CheckStatus',
    'RowCheck',
    'TableReport',
    'verify_theorem',
    'verify_sqrt2',
    'verify_gm2_table',
    'verify_lattice_table',
    'verify_mckee_smyth',
]
