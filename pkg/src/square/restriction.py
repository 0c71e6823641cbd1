"""
Quadratische Einschränkung nicht-quadratischer Matrizen

Π_A = A ⋉̄ I_m = A Ψ_{n×m} ist die eindeutige m×m Matrix mit A ⋉̄ x = Π_A x für alle x ∈ R^m.
Mit der rechten Variante entsteht coΠ_A = A Φ_{n×m}.
"""

from dataclasses import dataclass
from typing import Any

from loguru import logger

from src.linalg.matrix import Matrix, as_matrix, freeze
from src.stp.bridge import LEFT, ProductKind, bridge_matrix


@dataclass(frozen=True, eq=False)
class Restriction:
    """
    Quadratische Einschränkung

    source: ursprüngliche m×n Matrix
    kind: Produktvariante der Brückenmatrix
    value: r×r Einschränkung
    transposed: True wenn value = Π_{A^T} (Zweig m > n von Π(A))
    """
    source: Matrix
    kind: ProductKind
    value: Matrix
    transposed: bool = False

    @property
    def order(self) -> int:
        return self.value.shape[0]

    @property
    def branch(self) -> str:
        return "A^T" if self.transposed else "A"

    @property
    def operand(self) -> Matrix:
        """Die Matrix, deren Einschränkung value ist (A oder A^T)"""
        return freeze(self.source.T) if self.transposed else self.source


def square_restriction(A: Any, kind: ProductKind = LEFT) -> Restriction:
    """
    Π_A = A · B_{n×m} für die Brückenmatrix B der Variante kind

    Args:
        A: m×n Matrix
        kind: LEFT liefert Π_A, RIGHT liefert coΠ_A, gewichtet Πʷ_A bzw. coΠʷ_A

    Returns:
        Restriction mit m×m value
    """
    A = as_matrix(A, "A")
    m, n = A.shape
    value = freeze(A @ bridge_matrix(n, m, kind))
    return Restriction(source=A, kind=kind, value=value)


def pi_of(A: Any, kind: ProductKind = LEFT) -> Restriction:
    """
    Π(A): Π_A für m ≤ n, sonst Π_{A^T}

    Bei m = n wird der Zweig Π_A gewählt.
    """
    A = as_matrix(A, "A")
    m, n = A.shape
    if m <= n:
        return square_restriction(A, kind)

    logger.debug(f"pi_of: {m}×{n} input uses the transposed branch (r = {n})")
    inner = square_restriction(A.T, kind)
    return Restriction(source=A, kind=kind, value=inner.value, transposed=True)
