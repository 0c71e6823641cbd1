"""
Π-Determinante, Π-Inverse und Π-Eigenstruktur nicht-quadratischer Matrizen
"""

from dataclasses import dataclass
from typing import Any, List

import numpy as np
from loguru import logger

from src.utils.errors import BridgeDegeneracyError, SingularityError
from src.linalg.matrix import Matrix, as_matrix, freeze
from src.linalg.spectral import EigenPair, charpoly, eigen
from src.stp.bridge import LEFT, ProductKind, bridge_matrix
from .restriction import pi_of

DEFAULT_PI_TOL = 1e-10
DEFAULT_BRIDGE_CONDITION = 1e12


def pdet(A: Any, kind: ProductKind = LEFT) -> float:
    """
    Π-Determinante Det(A) = det(Π(A)) = (-1)^r · p_0

    Für quadratische A ist das die gewöhnliche Determinante.
    """
    return charpoly(pi_of(A, kind).value).determinant


def pi_invertible(A: Any, kind: ProductKind = LEFT, tol: float = DEFAULT_PI_TOL) -> bool:
    """|Det(A)| > tol · max(1, ‖Π(A)‖_F^r)"""
    restriction = pi_of(A, kind)
    det = charpoly(restriction.value).determinant
    scale = max(1.0, float(np.linalg.norm(restriction.value)) ** restriction.order)
    return abs(det) > tol * scale


def _left_inverse(A: np.ndarray, kind: ProductKind, tol: float, max_condition: float) -> np.ndarray:
    # Fall m ≤ n:
    # B = -(1/p_0) [A^<m-1> + p_{m-1} A^<m-2> + ... + p_2 A + p_1 (Ψ_{m×n}Ψ_{n×m})^{-1} Ψ_{m×n}]
    m, n = A.shape
    psi_nm = bridge_matrix(n, m, kind)
    psi_mn = bridge_matrix(m, n, kind)
    pi_a = A @ psi_nm

    poly = charpoly(pi_a)
    p = poly.monic()
    scale = max(1.0, float(np.linalg.norm(pi_a)) ** m)
    if abs(poly.coeffs[0]) <= tol * scale:
        raise SingularityError(f"matrix is Π-singular (p_0 = {poly.coeffs[0]:.3e})")

    gram = psi_mn @ psi_nm
    condition = np.linalg.cond(gram)
    if not condition < max_condition:
        logger.warning(f"Bridge Gram matrix {m}×{m} is ill-conditioned (cond = {condition:.3e})")
        raise BridgeDegeneracyError(
            f"Ψ_{{{m}×{n}}}Ψ_{{{n}×{m}}} is numerically singular (cond = {condition:.3e})"
        )

    total = p[1] * np.linalg.solve(gram, psi_mn)
    # A^<k-1> für k = 2..m
    step = psi_nm @ A
    power = A.copy()
    for k in range(2, m + 1):
        total += p[k] * power
        power = power @ step

    return -total / poly.coeffs[0]


def pi_inverse(
    A: Any,
    kind: ProductKind = LEFT,
    tol: float = DEFAULT_PI_TOL,
    max_condition: float = DEFAULT_BRIDGE_CONDITION,
) -> Matrix:
    """
    Π-Inverse einer Π-invertierbaren Matrix

    m ≤ n: B ⋉̄ A ⋉̄ I_m = I_m
    m > n: I_n ⋉̄ A ⋉̄ B = I_n (Inverse von A^T, transponiert)

    Args:
        A: m×n Matrix
        kind: Produktvariante
        tol: relative Schwelle für die Π-Singularität
        max_condition: maximale Kondition der Gram-Matrix der Brücken

    Returns:
        m×n Matrix B

    Raises:
        SingularityError: A ist Π-singulär
        BridgeDegeneracyError: Gram-Matrix der Brücken ist singulär
    """
    A = as_matrix(A, "A")
    m, n = A.shape
    if m <= n:
        return freeze(_left_inverse(np.array(A), kind, tol, max_condition))
    return freeze(_left_inverse(np.array(A.T), kind, tol, max_condition).T)


@dataclass(frozen=True)
class InverseCheck:
    """
    Residuen der Π-Inversen (Frobenius-Norm)

    proven: B ⋉̄ A ⋉̄ I_m - I_m (m ≤ n) bzw. I_n ⋉̄ A ⋉̄ B - I_n (m > n)
    reverse: A ⋉̄ B ⋉̄ I_m - I_m bzw. I_n ⋉̄ B ⋉̄ A - I_n
    """
    proven: float
    reverse: float


def pi_inverse_check(A: Any, B: Any, kind: ProductKind = LEFT) -> InverseCheck:
    """Beide einseitigen Identitäten der Π-Inversen auswerten"""
    A = as_matrix(A, "A")
    B = as_matrix(B, "B")
    m, n = A.shape
    psi_nm = bridge_matrix(n, m, kind)

    if m <= n:
        identity = np.eye(m)
        proven = B @ psi_nm @ A @ psi_nm
        reverse = A @ psi_nm @ B @ psi_nm
    else:
        identity = np.eye(n)
        proven = psi_nm @ A @ psi_nm @ B
        reverse = psi_nm @ B @ psi_nm @ A

    return InverseCheck(
        proven=float(np.linalg.norm(proven - identity)),
        reverse=float(np.linalg.norm(reverse - identity)),
    )


def pi_eigen(A: Any, kind: ProductKind = LEFT) -> List[EigenPair]:
    """
    Π-Eigenwerte und -vektoren: Eigenzerlegung von Π(A)

    Jedes Paar erfüllt A ⋉̄ v = λv (m ≤ n) bzw. A^T ⋉̄ v = λv (m > n).
    """
    return eigen(pi_of(A, kind).value)
