"""Die nicht-quadratische allgemeine lineare Gruppe GL(m×n, F)"""

from .element import GroupElement, identity, group_mul, group_power, as_element
from .inverse import e_matrix, group_inverse, is_invertible
from .exponential import e0_map, exp_map, phi_algebra, phi_hom

__all__ = [
    'GroupElement', 'identity', 'group_mul', 'group_power', 'as_element',
    'e_matrix', 'group_inverse', 'is_invertible',
    'e0_map', 'exp_map', 'phi_algebra', 'phi_hom',
]
