"""
Verallgemeinerter Satz von Cayley-Hamilton

Mit p(x) = x^r + p_{r-1}x^{r-1} + ... + p_0 dem charakteristischen Polynom von Π(A) gilt
A^<r+1> + p_{r-1}A^<r> + ... + p_0 A = 0.
"""

from typing import Any, Tuple

import numpy as np

from src.linalg.matrix import Matrix, freeze
from src.linalg.spectral import CharPoly, charpoly
from src.stp.bridge import LEFT, ProductKind, bridge_matrix
from .restriction import Restriction, pi_of


def annihilating_coefficients(A: Any, kind: ProductKind = LEFT) -> Tuple[CharPoly, Restriction]:
    """Charakteristisches Polynom von Π(A) samt gewähltem Zweig"""
    restriction = pi_of(A, kind)
    return charpoly(restriction.value), restriction


def annihilator_value(A: Any, kind: ProductKind = LEFT) -> Matrix:
    """
    f(A) = A^<r+1> + p_{r-1}A^<r> + ... + p_0 A

    Für m > n wird die Identität für A^T ausgewertet und zurück transponiert.
    """
    poly, restriction = annihilating_coefficients(A, kind)
    return _annihilate(poly, restriction)


def _annihilate(poly: CharPoly, restriction: Restriction) -> Matrix:
    B = np.array(restriction.operand)
    kind = restriction.kind

    # B^<k+1> = B^<k> · (Ψ B)
    step = bridge_matrix(B.shape[1], B.shape[0], kind) @ B
    power = B.copy()
    total = np.zeros_like(B)
    for c in poly.monic():
        total += c * power
        power = power @ step

    return freeze(total.T if restriction.transposed else total)


def gch_residual(A: Any, kind: ProductKind = LEFT) -> float:
    """
    Relatives Residuum ‖f(A)‖_F / max(1, ‖A‖_F^{r+1})

    Returns:
        ≈ 0 im Rahmen der Rundungsfehler
    """
    poly, restriction = annihilating_coefficients(A, kind)
    value = _annihilate(poly, restriction)
    scale = max(1.0, float(np.linalg.norm(restriction.source)) ** (poly.degree + 1))
    return float(np.linalg.norm(value)) / scale
