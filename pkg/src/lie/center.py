"""
Zentrum von gl(m×n, F)

A liegt im Zentrum genau dann, wenn C(A) = 0; als lineares System in V_r(A): Γ_{m×n} V_r(A) = 0.
Γ hat (mn)² Zeilen (C(A) zeilenweise gelesen) und mn Spalten.
"""

from typing import List

import numpy as np
from loguru import logger

from src.linalg.matrix import Matrix, freeze
from src.linalg.solve import DEFAULT_RANK_TOL, rank_nullspace
from src.stp.bridge import LEFT, ProductKind, check_dimension
from .algebra import constraint_matrix


def gamma_matrix(m: int, n: int, kind: ProductKind = LEFT) -> Matrix:
    """
    Koeffizientenmatrix Γ_{m×n}

    Spalte k ist C(E_k) zeilenweise gelesen, E_k die k-te Basismatrix in V_r-Reihenfolge.
    Speicherbedarf (mn)³ Einträge.
    """
    check_dimension(m, "m")
    check_dimension(n, "n")
    size = m * n
    logger.debug(f"gamma_matrix: building {size * size}×{size} coefficient matrix")

    gamma = np.empty((size * size, size))
    for k in range(size):
        basis = np.zeros((m, n))
        basis[k // n, k % n] = 1.0
        gamma[:, k] = constraint_matrix(basis, kind).reshape(-1)
    return freeze(gamma)


def center_dim(m: int, n: int, kind: ProductKind = LEFT, tol: float = DEFAULT_RANK_TOL) -> int:
    """Dimension des Zentrums = Nullität von Γ_{m×n}"""
    _, basis = rank_nullspace(gamma_matrix(m, n, kind), tol)
    return len(basis)


def center_basis(m: int, n: int, kind: ProductKind = LEFT,
                 tol: float = DEFAULT_RANK_TOL) -> List[Matrix]:
    """Basis des Zentrums als m×n Matrizen"""
    _, basis = rank_nullspace(gamma_matrix(m, n, kind), tol)
    return [freeze(v.reshape(m, n)) for v in basis]
