"""Rang, Nullraum und Kleinste-Quadrate-Lösung"""

from typing import Any, List, Tuple

import numpy as np
import scipy.linalg

from src.utils.errors import ConvergenceError, DomainError, RankError, DimensionError
from .matrix import Vector, as_matrix, as_vector, freeze

DEFAULT_RANK_TOL = 1e-10


def rank_nullspace(M: Any, tol: float = DEFAULT_RANK_TOL) -> Tuple[int, List[Vector]]:
    """
    Rang und Nullraum-Basis über die Singulärwertzerlegung

    Args:
        M: beliebige Matrix
        tol: relative Schwelle (mal größter Singulärwert)

    Returns:
        (rank, Orthonormalbasis des Nullraums)
    """
    if tol <= 0:
        raise DomainError(f"tol must be positive, got {tol}")

    M = as_matrix(M)
    try:
        basis = scipy.linalg.null_space(M, rcond=tol)
    except np.linalg.LinAlgError as e:
        raise ConvergenceError(f"SVD did not converge: {e}") from e

    rank = M.shape[1] - basis.shape[1]
    return rank, [freeze(basis[:, j]) for j in range(basis.shape[1])]


def lsq_solve(M: Any, b: Any, tol: float = DEFAULT_RANK_TOL) -> Vector:
    """
    Eindeutige Kleinste-Quadrate-Lösung argmin ||Mx - b||

    Raises:
        DimensionError: len(b) passt nicht zu M
        RankError: M hat nicht vollen Spaltenrang
    """
    M = as_matrix(M)
    b = as_vector(b, "b")
    if b.size != M.shape[0]:
        raise DimensionError(f"right-hand side has length {b.size}, expected {M.shape[0]}")

    rank, _ = rank_nullspace(M, tol)
    if rank < M.shape[1]:
        raise RankError(f"matrix has rank {rank} < {M.shape[1]} columns")

    try:
        x, *_ = np.linalg.lstsq(M, b, rcond=None)
    except np.linalg.LinAlgError as e:
        raise ConvergenceError(f"least squares did not converge: {e}") from e
    return freeze(x)
