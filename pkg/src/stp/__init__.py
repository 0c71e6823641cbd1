"""DK-STP Produkte, Brückenmatrizen und Gewichtsschemata"""

from .weights import WeightScheme, weight_vector, ONES, AVERAGE, GAUSS
from .bridge import (
    ProductKind, BridgeCache, bridge_matrix, bridge_cache, check_dimension, lcm,
    LEFT, RIGHT, MAX_DIMENSION,
)
from .products import (
    lift, vv_stp, dk_stp, dk_stp_entrywise, dk_stp_vector, dk_power,
    mm_stp_classic, mv_stp_classic, require_same_shape,
)

__all__ = [
    'WeightScheme', 'weight_vector', 'ONES', 'AVERAGE', 'GAUSS',
    'ProductKind', 'BridgeCache', 'bridge_matrix', 'bridge_cache', 'check_dimension', 'lcm',
    'LEFT', 'RIGHT', 'MAX_DIMENSION',
    'lift', 'vv_stp', 'dk_stp', 'dk_stp_entrywise', 'dk_stp_vector', 'dk_power',
    'mm_stp_classic', 'mv_stp_classic', 'require_same_shape',
]
