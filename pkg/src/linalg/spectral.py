"""
Spektrale Werkzeuge für quadratische Matrizen
Charakteristisches Polynom (Faddeev-LeVerrier), Eigenzerlegung, Matrix-Exponential
"""

from dataclasses import dataclass
from typing import Any, List, Tuple

import numpy as np
import scipy.linalg
from loguru import logger

from src.utils.errors import ConvergenceError
from .matrix import Matrix, Vector, as_matrix, freeze, require_square


@dataclass(frozen=True)
class CharPoly:
    """
    Monisches charakteristisches Polynom x^r + p_{r-1}x^{r-1} + ... + p_0

    coeffs enthält [p_0, ..., p_{r-1}]; der führende Koeffizient 1 wird nicht gespeichert.
    """
    coeffs: Tuple[float, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs)

    @property
    def determinant(self) -> float:
        """det(M) = (-1)^r · p_0"""
        if self.degree == 0:
            return 1.0
        return (-1) ** self.degree * self.coeffs[0]

    def monic(self) -> List[float]:
        """Alle Koeffizienten aufsteigend inklusive führender 1"""
        return [*self.coeffs, 1.0]

    def __call__(self, x: complex) -> complex:
        """Skalare Auswertung nach Horner"""
        value: complex = 1.0
        for c in reversed(self.coeffs):
            value = value * x + c
        return value

    def evaluate_matrix(self, M: Any) -> Matrix:
        """p(M) nach Horner mit Matrixpotenzen (klassisches Cayley-Hamilton: Ergebnis ≈ 0)"""
        M = as_matrix(M)
        r = require_square(M)
        identity = np.eye(r)
        value = identity.copy()
        for c in reversed(self.coeffs):
            value = value @ M + c * identity
        return freeze(value)


@dataclass(frozen=True)
class EigenPair:
    """Eigenwert mit normiertem Eigenvektor"""
    value: complex
    vector: np.ndarray


def charpoly(M: Any) -> CharPoly:
    """
    Charakteristisches Polynom det(xI - M) per Faddeev-LeVerrier

    Args:
        M: quadratische Matrix r×r

    Returns:
        CharPoly vom Grad r

    Raises:
        DimensionError: M nicht quadratisch
    """
    M = as_matrix(M)
    r = require_square(M)
    identity = np.eye(r)

    coeffs = np.zeros(r)
    # M_1 = I, c_{r-1} = -tr(M)
    Mk = identity.copy()
    for k in range(1, r + 1):
        if k > 1:
            Mk = M @ Mk + coeffs[r - k + 1] * identity
        coeffs[r - k] = -np.trace(M @ Mk) / k

    return CharPoly(coeffs=tuple(float(c) for c in coeffs))


def eigen(M: Any) -> List[EigenPair]:
    """
    Alle Eigenwerte (mit Vielfachheit) und Eigenvektoren mit Länge 1

    LAPACK geev: Hessenberg-Reduktion + QR-Iteration mit Shifts.

    Raises:
        DimensionError: M nicht quadratisch
        ConvergenceError: QR-Iteration konvergiert nicht
    """
    M = as_matrix(M)
    require_square(M)

    try:
        values, vectors = np.linalg.eig(M)
    except np.linalg.LinAlgError as e:
        raise ConvergenceError(f"Eigenvalue iteration did not converge: {e}") from e

    pairs = []
    for i, value in enumerate(values):
        v = vectors[:, i].astype(np.complex128)
        v = v / np.linalg.norm(v)
        pairs.append(EigenPair(value=complex(value), vector=freeze(v)))

    logger.debug(f"eigen: {len(pairs)} eigenpairs of {M.shape[0]}×{M.shape[0]} matrix")
    return pairs


def expm(M: Any) -> Matrix:
    """Matrix-Exponential (Scaling and Squaring mit Padé-Approximation)"""
    M = as_matrix(M)
    require_square(M)
    return freeze(scipy.linalg.expm(M))
