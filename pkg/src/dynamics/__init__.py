"""Dimensionsfreier Raum R^∞ und DK-STP-Dynamik"""

from .space import DimVector, vec_add, inner_product, norm, distance, equivalent, zero
from .norms import dk_norm_formula, dk_norm_empirical, bounded_operator
from .trajectory import Trajectory, dt_trajectory, mv_trajectory, ct_trajectory, ct_samples

__all__ = [
    'DimVector', 'vec_add', 'inner_product', 'norm', 'distance', 'equivalent', 'zero',
    'dk_norm_formula', 'dk_norm_empirical', 'bounded_operator',
    'Trajectory', 'dt_trajectory', 'mv_trajectory', 'ct_trajectory', 'ct_samples',
]
