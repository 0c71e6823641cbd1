"""Ringmorphismen und die Lie-Algebra gl(m×n, F)"""

from .morphisms import averaging_matrix, ring_hom_pi, ring_iso_phi, ring_auto_psi
from .algebra import AdjointMatrix, bracket, constraint_matrix, ad_matrix, killing_form
from .center import gamma_matrix, center_dim, center_basis

__all__ = [
    'averaging_matrix', 'ring_hom_pi', 'ring_iso_phi', 'ring_auto_psi',
    'AdjointMatrix', 'bracket', 'constraint_matrix', 'ad_matrix', 'killing_form',
    'gamma_matrix', 'center_dim', 'center_basis',
]
