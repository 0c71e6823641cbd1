"""
DK-STP Produkte und klassische Semi-Tensor-Produkte erster Art
"""

from typing import Any

import numpy as np

from src.utils.errors import DimensionError, DomainError
from src.linalg.matrix import Matrix, Vector, as_matrix, as_vector, freeze
from .bridge import LEFT, ProductKind, bridge_matrix, check_dimension, lcm
from .weights import weight_vector


def _check_shape(M: Matrix, name: str) -> Matrix:
    check_dimension(M.shape[0], f"{name} rows")
    check_dimension(M.shape[1], f"{name} cols")
    return M


def lift(x: Any, k: int, kind: ProductKind = LEFT) -> Vector:
    """Kronecker-Hebung: x ⊗ W_k (links) bzw. W_k ⊗ x (rechts)"""
    x = as_vector(x, "x")
    w = weight_vector(kind.weights, k)
    if kind.is_left:
        return freeze(np.kron(x, w))
    return freeze(np.kron(w, x))


def vv_stp(x: Any, y: Any, kind: ProductKind = LEFT) -> float:
    """
    VV-STP zweier Vektoren beliebiger Dimension

    links:  (x ⊗ W_{t/m})^T (y ⊗ W_{t/n})
    rechts: (W_{t/m} ⊗ x)^T (W_{t/n} ⊗ y)
    mit t = lcm(m, n)
    """
    x = as_vector(x, "x")
    y = as_vector(y, "y")
    t = lcm(x.size, y.size)
    return float(np.dot(lift(x, t // x.size, kind), lift(y, t // y.size, kind)))


def dk_stp(A: Any, B: Any, kind: ProductKind = LEFT) -> Matrix:
    """
    DK-STP A ⋉̄ B = A · Ψ_{n×p} · B

    Args:
        A: m×n Matrix
        B: p×q Matrix
        kind: Produktvariante

    Returns:
        m×q Matrix
    """
    A = _check_shape(as_matrix(A, "A"), "A")
    B = _check_shape(as_matrix(B, "B"), "B")
    bridge = bridge_matrix(A.shape[1], B.shape[0], kind)
    return freeze(A @ bridge @ B)


def dk_stp_entrywise(A: Any, B: Any, kind: ProductKind = LEFT) -> Matrix:
    """Eintragsweise Form c_ij = Row_i(A) · Col_j(B) über die VV-STP"""
    A = _check_shape(as_matrix(A, "A"), "A")
    B = _check_shape(as_matrix(B, "B"), "B")
    C = np.empty((A.shape[0], B.shape[1]))
    for i in range(A.shape[0]):
        for j in range(B.shape[1]):
            C[i, j] = vv_stp(A[i, :], B[:, j], kind)
    return freeze(C)


def dk_stp_vector(A: Any, x: Any, kind: ProductKind = LEFT) -> Vector:
    """A ⋉̄ x für einen Vektor x beliebiger Dimension; Ergebnis liegt in R^m"""
    x = as_vector(x, "x")
    return freeze(dk_stp(A, x.reshape(-1, 1), kind).reshape(-1))


def dk_power(A: Any, k: int, kind: ProductKind = LEFT) -> Matrix:
    """
    k-fache DK-STP-Potenz A^<k> = A ⋉̄ ... ⋉̄ A

    Raises:
        DomainError: k < 1 (kein Einselement in M_{m×n})
    """
    if k < 1:
        raise DomainError(f"DK power requires k >= 1, got {k}")
    A = _check_shape(as_matrix(A, "A"), "A")

    # A^<k> = A (Ψ_{n×m} A)^{k-1}
    step = bridge_matrix(A.shape[1], A.shape[0], kind) @ A
    power = np.array(A)
    for _ in range(k - 1):
        power = power @ step
    return freeze(power)


def mm_stp_classic(A: Any, B: Any) -> Matrix:
    """Klassisches MM-STP erster Art: (A ⊗ I_{t/n})(B ⊗ I_{t/p}), t = lcm(n, p)"""
    A = _check_shape(as_matrix(A, "A"), "A")
    B = _check_shape(as_matrix(B, "B"), "B")
    (m, n), (p, q) = A.shape, B.shape
    t = lcm(n, p)
    a, b = t // n, t // p

    # Index l des gemeinsamen Raums R^t trägt A[:, l // a] ⊗ B[l // b, :] zum
    # Block (l % a, l % b) bei; a, b teilerfremd, also Periode a·b in l
    period = a * b
    l = np.arange(t)
    left = A[:, l // a].reshape(m, t // period, period)
    right = B[l // b, :].reshape(t // period, period, q)
    blocks = np.einsum('ick,ckj->kij', left, right)

    k = np.arange(period)
    result = np.zeros((m, a, q, b))
    result[:, k % a, :, k % b] = blocks
    return freeze(result.reshape(m * a, q * b))


def mv_stp_classic(A: Any, x: Any) -> Vector:
    """Klassisches MV-STP erster Art: (A ⊗ I_{t/n})(x ⊗ 𝟙_{t/p}), t = lcm(n, dim x)"""
    A = _check_shape(as_matrix(A, "A"), "A")
    x = as_vector(x, "x")
    m, n = A.shape
    t = lcm(n, x.size)
    # (A ⊗ I_a) v = vec(A · V) mit V = v als n×a Matrix
    lifted = x[np.arange(t) // (t // x.size)].reshape(n, t // n)
    return freeze((A @ lifted).reshape(m * (t // n)))


def require_same_shape(A: Matrix, B: Matrix, operation: str):
    """DimensionError wenn die Formen verschieden sind"""
    if A.shape != B.shape:
        raise DimensionError(
            f"{operation} requires equal shapes, got {A.shape[0]}×{A.shape[1]} "
            f"and {B.shape[0]}×{B.shape[1]}"
        )
