"""
Nicht-quadratische allgemeine lineare Algebra gl(m×n, F)
Lie-Klammer, adjungierte Darstellung und Killing-Form
"""

from dataclasses import dataclass
from typing import Any

import numpy as np

from src.linalg.matrix import Matrix, as_matrix, freeze
from src.stp.bridge import LEFT, ProductKind, bridge_matrix
from src.stp.products import dk_stp, require_same_shape


def bracket(A: Any, B: Any, kind: ProductKind = LEFT) -> Matrix:
    """[A, B] = A ⋉̄ B - B ⋉̄ A"""
    A = as_matrix(A, "A")
    B = as_matrix(B, "B")
    require_same_shape(A, B, "bracket")
    return freeze(dk_stp(A, B, kind) - dk_stp(B, A, kind))


@dataclass(frozen=True, eq=False)
class AdjointMatrix:
    """
    Matrix von ad_A: X ↦ [A, X] in V_c-Koordinaten

    value = I_n ⊗ (A Ψ_{n×m}) - (A^T Ψ_{m×n}) ⊗ I_m
    """
    source: Matrix
    kind: ProductKind
    value: Matrix

    def apply(self, X: Any) -> Matrix:
        """ad_A(X) über die Matrixdarstellung"""
        X = as_matrix(X, "X")
        require_same_shape(self.source, X, "ad")
        m, n = X.shape
        return freeze((self.value @ X.reshape(-1, order='F')).reshape(m, n, order='F'))


def constraint_matrix(A: Any, kind: ProductKind = LEFT) -> Matrix:
    """C(A) = I_n ⊗ (A Ψ_{n×m}) - (A^T Ψ_{m×n}) ⊗ I_m"""
    A = as_matrix(A, "A")
    m, n = A.shape
    pi_a = A @ bridge_matrix(n, m, kind)
    co = A.T @ bridge_matrix(m, n, kind)
    return freeze(np.kron(np.eye(n), pi_a) - np.kron(co, np.eye(m)))


def ad_matrix(A: Any, kind: ProductKind = LEFT) -> AdjointMatrix:
    """mn×mn Matrix der adjungierten Abbildung von A"""
    A = as_matrix(A, "A")
    return AdjointMatrix(source=A, kind=kind, value=constraint_matrix(A, kind))


def killing_form(X: Any, Y: Any, kind: ProductKind = LEFT) -> float:
    """(X, Y) = tr(ad_X · ad_Y)"""
    X = as_matrix(X, "X")
    Y = as_matrix(Y, "Y")
    require_same_shape(X, Y, "killing_form")
    return float(np.trace(constraint_matrix(X, kind) @ constraint_matrix(Y, kind)))
