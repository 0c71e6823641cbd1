"""
Ringmorphismen von R(m×n, F)

π₁: A ↦ J_s ⊗ A, π₂: A ↦ A ⊗ J_s (Homomorphismen),
φ: J_s ⊗ A ↦ A ⊗ J_s (Isomorphismus der Bilder),
ψ: A ↦ (M ⊗ I_a) A (M^T ⊗ I_b) für orthogonales M (Automorphismus).
"""

import math
from typing import Any, Optional

import numpy as np

from src.utils.errors import DimensionError, DomainError, OrthogonalityError
from src.linalg.matrix import Matrix, as_matrix, freeze
from src.stp.bridge import LEFT, ProductKind

ORTHOGONALITY_TOL = 1e-10
EMBEDDING_TOL = 1e-10


def averaging_matrix(s: int) -> np.ndarray:
    """J_s = (1/s) · 𝟙_{s×s}"""
    if s < 1:
        raise DomainError(f"s must be at least 1, got {s}")
    return np.full((s, s), 1.0 / s)


def ring_hom_pi(A: Any, s: int, side: str = "left") -> Matrix:
    """
    Einbettung in R(sm×sn, F)

    left: J_s ⊗ A, right: A ⊗ J_s
    """
    A = as_matrix(A, "A")
    J = averaging_matrix(s)
    if side == "left":
        return freeze(np.kron(J, A))
    if side == "right":
        return freeze(np.kron(A, J))
    raise DomainError(f"side must be 'left' or 'right', got {side!r}")


def _extract(M: Matrix, s: int, side: str) -> np.ndarray:
    rows, cols = M.shape
    if rows % s or cols % s:
        raise DimensionError(f"{rows}×{cols} is not divisible by s = {s}")
    m, n = rows // s, cols // s
    if side == "left":
        # J_s ⊗ A: Block (0, 0) ist A / s
        A = s * M[:m, :n]
    else:
        # A ⊗ J_s: Eintrag (i·s, j·s) ist a_ij / s
        A = s * M[::s, ::s]

    if not np.allclose(ring_hom_pi(A, s, side), M, rtol=0.0, atol=EMBEDDING_TOL * max(1.0, np.abs(M).max())):
        kind = "J_s ⊗ A" if side == "left" else "A ⊗ J_s"
        raise DomainError(f"matrix is not of the form {kind} with s = {s}")
    return A


def ring_iso_phi(M: Any, s: int, inverse: bool = False) -> Matrix:
    """
    Isomorphismus J_s ⊗ A ↦ A ⊗ J_s (inverse=True: A ⊗ J_s ↦ J_s ⊗ A)

    Raises:
        DomainError: M liegt nicht im Bild der Einbettung
    """
    M = as_matrix(M, "M")
    if s < 1:
        raise DomainError(f"s must be at least 1, got {s}")
    if not inverse:
        return ring_hom_pi(_extract(M, s, "left"), s, "right")
    return ring_hom_pi(_extract(M, s, "right"), s, "left")


def ring_auto_psi(A: Any, M: Any, s: Optional[int] = None, kind: ProductKind = LEFT) -> Matrix:
    """
    Automorphismus ψ(A) = (M ⊗ I_a) A (M^T ⊗ I_b), a = m/s, b = n/s

    Args:
        A: m×n Matrix
        M: orthogonale s×s Matrix
        s: Teiler von gcd(m, n); Standard gcd(m, n)
        kind: linke (ggf. gewichtete) Produktvariante

    Raises:
        OrthogonalityError: M^T M ≠ I
        DimensionError: s teilt m oder n nicht, oder M hat nicht die Form s×s
    """
    if not kind.is_left:
        raise DomainError("ψ is a ring automorphism for the left product variants only")

    A = as_matrix(A, "A")
    M = as_matrix(M, "M")
    m, n = A.shape
    s = s if s is not None else math.gcd(m, n)

    if s < 1 or m % s or n % s:
        raise DimensionError(f"s = {s} does not divide both {m} and {n}")
    if M.shape != (s, s):
        raise DimensionError(f"M must be {s}×{s}, got {M.shape[0]}×{M.shape[1]}")
    if np.linalg.norm(M.T @ M - np.eye(s)) > ORTHOGONALITY_TOL:
        raise OrthogonalityError("M is not orthogonal")

    left = np.kron(M, np.eye(m // s))
    right = np.kron(M.T, np.eye(n // s))
    return freeze(left @ A @ right)
