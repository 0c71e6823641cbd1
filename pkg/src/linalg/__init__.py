"""Lineare Algebra: Kronecker-Produkt, Stacking, charakteristisches Polynom, Eigenwerte, Rang"""

from .matrix import Matrix, Vector, as_matrix, as_vector, freeze, kron, vec_stack, unstack, require_square
from .spectral import CharPoly, EigenPair, charpoly, eigen, expm
from .solve import rank_nullspace, lsq_solve

__all__ = [
    'Matrix', 'Vector', 'as_matrix', 'as_vector', 'freeze', 'kron', 'vec_stack', 'unstack', 'require_square',
    'CharPoly', 'EigenPair', 'charpoly', 'eigen', 'expm',
    'rank_nullspace', 'lsq_solve',
]
