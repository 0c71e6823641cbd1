"""
Dichte reelle Matrizen als unveränderliche numpy-Arrays
Konstruktoren mit Validierung, Kronecker-Produkt und Stacking-Operatoren
"""

from typing import Any, Literal

import numpy as np
from numpy.typing import NDArray

from src.utils.errors import DimensionError, DomainError

# Matrix = 2-D, Vector = 1-D; beide float64 und schreibgeschützt
Matrix = NDArray[np.float64]
Vector = NDArray[np.float64]


def freeze(array: Any) -> NDArray:
    """Kopiert nach float64 (bzw. complex128) und setzt das Array schreibgeschützt"""
    dtype = np.complex128 if np.iscomplexobj(array) else np.float64
    out = np.array(array, dtype=dtype, copy=True)
    out.setflags(write=False)
    return out


def as_matrix(obj: Any, name: str = "matrix") -> Matrix:
    """
    Validiert und konvertiert zu einer Matrix

    Args:
        obj: verschachtelte Liste, numpy-Array oder Matrix
        name: Name für Fehlermeldungen

    Returns:
        schreibgeschützte 2-D float64 Matrix

    Raises:
        DimensionError: nicht 2-D, leere Form oder nicht-endliche Einträge
    """
    try:
        array = np.asarray(obj, dtype=np.float64)
    except (TypeError, ValueError) as e:
        raise DimensionError(f"{name} is not a rectangular real array: {e}") from e

    if array.ndim != 2:
        raise DimensionError(f"{name} must be 2-D, got {array.ndim}-D")
    if array.shape[0] == 0 or array.shape[1] == 0:
        raise DimensionError(f"{name} must not be empty, got shape {array.shape}")
    if not np.all(np.isfinite(array)):
        raise DimensionError(f"{name} contains non-finite entries")

    return freeze(array)


def as_vector(obj: Any, name: str = "vector") -> Vector:
    """
    Validiert und konvertiert zu einem Vektor

    Spaltenvektoren (n×1) und Zeilenvektoren (1×n) werden abgeflacht.
    """
    try:
        array = np.asarray(obj, dtype=np.float64)
    except (TypeError, ValueError) as e:
        raise DimensionError(f"{name} is not a real array: {e}") from e

    if array.ndim == 2 and 1 in array.shape:
        array = array.reshape(-1)
    if array.ndim != 1:
        raise DimensionError(f"{name} must be 1-D, got shape {array.shape}")
    if array.size == 0:
        raise DimensionError(f"{name} must not be empty")
    if not np.all(np.isfinite(array)):
        raise DimensionError(f"{name} contains non-finite entries")

    return freeze(array)


def require_square(M: Matrix, name: str = "matrix") -> int:
    """Prüft Quadratform und gibt die Dimension zurück"""
    if M.shape[0] != M.shape[1]:
        raise DimensionError(f"{name} must be square, got {M.shape[0]}×{M.shape[1]}")
    return M.shape[0]


def kron(A: Any, B: Any) -> Matrix:
    """Kronecker-Produkt A ⊗ B, Block (i,j) = a_ij · B"""
    return freeze(np.kron(as_matrix(A, "A"), as_matrix(B, "B")))


def vec_stack(A: Any, mode: Literal["column", "row"] = "column") -> Vector:
    """
    Stacking-Operator

    column: V_c(A), Spalten hintereinander
    row:    V_r(A), Zeilen hintereinander
    """
    M = as_matrix(A)
    if mode == "column":
        return freeze(M.reshape(-1, order='F'))
    if mode == "row":
        return freeze(M.reshape(-1, order='C'))
    raise DomainError(f"Unknown stacking mode: {mode}")


def unstack(v: Any, rows: int, cols: int, mode: Literal["column", "row"] = "column") -> Matrix:
    """Umkehrung von vec_stack"""
    order = 'F' if mode == "column" else 'C'
    vector = as_vector(v)
    if vector.size != rows * cols:
        raise DimensionError(f"cannot reshape length {vector.size} into {rows}×{cols}")
    return freeze(vector.reshape(rows, cols, order=order))
