"""
DK-Norm einer Matrix und Beschränktheit des klassischen MV-STP-Systems
"""

import math
from typing import Any, Iterable

import numpy as np
from loguru import logger

from src.utils.errors import DomainError
from src.linalg.matrix import as_matrix
from src.stp.bridge import LEFT, ProductKind, bridge_matrix, check_dimension

DEFAULT_SAMPLES = 10_000
DEFAULT_SEED = 0


def dk_norm_formula(A: Any) -> float:
    """
    Zeilennorm-Formel sqrt((1/m) · Σ_j ‖Row_j(A)‖²_V)

    ‖Row_j‖²_V = (1/n) · Σ_k a_jk² für eine Zeile der Länge n.
    """
    A = as_matrix(A, "A")
    m, n = A.shape
    row_norms_sq = np.sum(A * A, axis=1) / n
    return math.sqrt(float(np.sum(row_norms_sq)) / m)


def dk_norm_empirical(
    A: Any,
    dims: Iterable[int],
    samples: int = DEFAULT_SAMPLES,
    seed: int = DEFAULT_SEED,
    kind: ProductKind = LEFT,
) -> float:
    """
    Monte-Carlo-Schätzung von sup ‖A ⋉̄ x‖_V / ‖x‖_V

    Args:
        A: m×n Matrix
        dims: Dimensionen, aus denen x gezogen wird
        samples: Anzahl Zufallsvektoren (≥ 1)
        seed: Seed des Generators (deterministisch)

    Returns:
        größtes beobachtetes Verhältnis
    """
    if samples < 1:
        raise DomainError(f"samples must be at least 1, got {samples}")
    dims = sorted({check_dimension(int(d), "sample dimension") for d in dims})
    if not dims:
        raise DomainError("at least one sample dimension is required")

    A = as_matrix(A, "A")
    rng = np.random.default_rng(seed)
    chosen = rng.choice(dims, size=samples)

    best = 0.0
    for d in dims:
        count = int(np.sum(chosen == d))
        if count == 0:
            continue
        X = rng.standard_normal((count, d))
        # Zeile i von Y ist A ⋉̄ X[i]
        Y = X @ (A @ bridge_matrix(A.shape[1], d, kind)).T
        x_norms = np.sqrt(np.mean(X * X, axis=1))
        y_norms = np.sqrt(np.mean(Y * Y, axis=1))
        valid = x_norms > 0
        if np.any(valid):
            best = max(best, float(np.max(y_norms[valid] / x_norms[valid])))

    logger.debug(f"dk_norm_empirical: {samples} samples over dims {dims} -> {best:.6f}")
    return best


def bounded_operator(m: int, n: int) -> bool:
    """
    Beschränktheit von A ∈ M_{m×n} im System x(k+1) = A ⊢⋉ x(k)

    Returns:
        True genau dann, wenn m | n
    """
    check_dimension(m, "m")
    check_dimension(n, "n")
    return n % m == 0
