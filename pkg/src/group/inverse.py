"""
Inverse in GL(m×n, F)

X ist Inverse von A genau dann, wenn A + X + A ⋉̄ X = 0 und A ⋉̄ X = X ⋉̄ A.
In V_c-Koordinaten: E_{m×n}(A) V_c(X) = [-V_c(A); 0].
"""

from typing import Any

import numpy as np
from loguru import logger

from src.utils.errors import NotInvertibleError
from src.linalg.matrix import Matrix, as_matrix, freeze, unstack, vec_stack
from src.linalg.solve import rank_nullspace
from src.stp.bridge import LEFT, ProductKind, bridge_matrix
from .element import GroupElement, as_element, group_mul

DEFAULT_GROUP_TOL = 1e-9


def e_matrix(A: Any, kind: ProductKind = LEFT) -> Matrix:
    """
    E_{m×n}(A), 2mn×mn

    oben:  I_n ⊗ (A Ψ_{n×m}) + I_{mn}
    unten: I_n ⊗ (A Ψ_{n×m}) - (A^T Ψ_{m×n}) ⊗ I_m
    """
    A = as_matrix(A, "A")
    m, n = A.shape
    left = np.kron(np.eye(n), A @ bridge_matrix(n, m, kind))
    right = np.kron(A.T @ bridge_matrix(m, n, kind), np.eye(m))
    return freeze(np.vstack([left + np.eye(m * n), left - right]))


def group_inverse(a: Any, tol: float = DEFAULT_GROUP_TOL, kind: ProductKind = LEFT) -> GroupElement:
    """
    Inverses Element per Kleinste-Quadrate-Lösung mit Residuenprüfung

    Args:
        a: GroupElement (oder Koordinatenmatrix)
        tol: relative Toleranz (mal max(1, ‖A‖_F)) für Residuum und Gruppengesetz

    Returns:
        a⁻¹ mit a ∘ a⁻¹ = a⁻¹ ∘ a = e

    Raises:
        NotInvertibleError: E_{m×n}(A) rangdefizient oder System nicht lösbar
    """
    a = as_element(a)
    m, n = a.shape
    E = np.array(e_matrix(a.coord, kind))
    rhs = np.concatenate([-vec_stack(a.coord, "column"), np.zeros(m * n)])
    scale = max(1.0, float(np.linalg.norm(a.coord)))

    rank, _ = rank_nullspace(E)
    if rank < m * n:
        raise NotInvertibleError(f"E(A) has rank {rank} < {m * n}: element is not invertible")

    x, *_ = np.linalg.lstsq(E, rhs, rcond=None)
    residual = float(np.linalg.norm(E @ x - rhs))
    if residual > tol * scale:
        logger.warning(f"Group inverse rejected: residual {residual:.3e} exceeds {tol * scale:.3e}")
        raise NotInvertibleError(f"inverse equations are inconsistent (residual {residual:.3e})")

    inverse = GroupElement(unstack(x, m, n, "column"))
    for product in (group_mul(a, inverse, kind), group_mul(inverse, a, kind)):
        if not product.is_identity(tol * scale):
            raise NotInvertibleError("candidate inverse violates the group law")
    return inverse


def is_invertible(a: Any, tol: float = DEFAULT_GROUP_TOL, kind: ProductKind = LEFT) -> bool:
    """a ∈ GL(m×n, F)"""
    try:
        group_inverse(a, tol, kind)
    except NotInvertibleError:
        return False
    return True
