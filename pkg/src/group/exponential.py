"""
Exponentialabbildungen und Homomorphismus nach GL(m, F)

E₀(A) = Σ_{i≥1} A^<i>/i!, Exp(A) = I_{m×n} + E₀(A),
φ(I_{m×n} + A) = I_m + Π_A.
"""

from typing import Any

import numpy as np
from loguru import logger

from src.utils.errors import ConvergenceError, DomainError
from src.linalg.matrix import Matrix, as_matrix, freeze
from src.stp.bridge import LEFT, ProductKind, bridge_matrix
from .element import GroupElement, as_element
from .inverse import DEFAULT_GROUP_TOL, group_inverse

DEFAULT_SERIES_TOL = 1e-12
DEFAULT_MAX_TERMS = 10_000


def e0_map(A: Any, tol: float = DEFAULT_SERIES_TOL, kind: ProductKind = LEFT,
           max_terms: int = DEFAULT_MAX_TERMS) -> GroupElement:
    """
    E₀(A) = Σ_{i≥1} A^<i>/i!

    Direkte Summation (ohne Scaling and Squaring), Abbruch wenn ‖Term‖_F < tol
    und i > ‖Ψ A‖_F.

    Raises:
        ConvergenceError: mehr als max_terms Terme nötig
    """
    if tol <= 0:
        raise DomainError(f"tol must be positive, got {tol}")
    A = as_matrix(A, "A")
    m, n = A.shape

    # A^<i+1>/(i+1)! = A^<i>/i! · (Ψ A)/(i+1)
    step = bridge_matrix(n, m, kind) @ A
    hump = float(np.linalg.norm(step))
    term = np.array(A)
    total = term.copy()
    for i in range(1, max_terms):
        if i > hump and np.linalg.norm(term) < tol:
            logger.debug(f"E0 series converged after {i} terms")
            return GroupElement(total)
        term = term @ step / (i + 1)
        total += term

    raise ConvergenceError(f"E0 series did not converge within {max_terms} terms")


def exp_map(A: Any, tol: float = DEFAULT_SERIES_TOL, t: float = 1.0, kind: ProductKind = LEFT,
            verify: bool = True, group_tol: float = DEFAULT_GROUP_TOL) -> GroupElement:
    """
    Exp(tA) als Gruppenelement mit Koordinate E₀(tA)

    verify=True prüft die Zugehörigkeit zu GL(m×n, F) über die Lösbarkeit der Inversengleichungen.
    """
    A = as_matrix(A, "A")
    element = e0_map(t * A, tol, kind)
    if verify:
        group_inverse(element, group_tol, kind)
    return element


def phi_algebra(A: Any, kind: ProductKind = LEFT) -> Matrix:
    """φ(A) = Π_A ∈ gl(m, F)"""
    A = as_matrix(A, "A")
    return freeze(A @ bridge_matrix(A.shape[1], A.shape[0], kind))


def phi_hom(a: Any, kind: ProductKind = LEFT) -> Matrix:
    """φ(I_{m×n} + A) = I_m + Π_A ∈ GL(m, F)"""
    a = as_element(a)
    return freeze(np.eye(a.m) + phi_algebra(a.coord, kind))
