"""
Gewichtsschemata für gewichtete DK-STPs
Jedes Schema liefert für jede Länge k ≥ 1 einen positiven Gewichtsvektor W_k mit W_1 = (1)
"""

from dataclasses import dataclass

import numpy as np
from scipy.special import ndtr

from src.utils.errors import DimensionError, DomainError
from src.linalg.matrix import Vector, freeze

SCHEMES = ("ones", "average", "gauss")

# Schrittweite der Stützstellen für das Gauß-Schema
GAUSS_STEP = 0.1


@dataclass(frozen=True)
class WeightScheme:
    """Regel für W_k: ones (𝟙_k), average ((1/k)𝟙_k) oder gauss (Normalverteilung)"""
    kind: str = "ones"

    def __post_init__(self):
        if self.kind not in SCHEMES:
            raise DomainError(f"Unknown weight scheme '{self.kind}', expected one of {SCHEMES}")

    def vector(self, k: int) -> Vector:
        return weight_vector(self, k)


ONES = WeightScheme("ones")
AVERAGE = WeightScheme("average")
GAUSS = WeightScheme("gauss")


def _gauss_weights(k: int) -> np.ndarray:
    # W_{2j}   = (φ(-0.1j), ..., φ(-0.1), φ(-0.1), ..., φ(-0.1j))
    # W_{2j+1} = (φ(-0.1j), ..., φ(-0.1), φ(0), φ(-0.1), ..., φ(-0.1j))
    half = k // 2
    left = ndtr(-GAUSS_STEP * np.arange(half, 0, -1))
    center = ndtr(np.zeros(k % 2))
    return np.concatenate([left, center, left[::-1]])


def weight_vector(scheme: WeightScheme, k: int) -> Vector:
    """
    Gewichtsvektor W_k

    Args:
        scheme: Gewichtsschema
        k: Länge (≥ 1)

    Returns:
        positiver Vektor der Länge k

    Raises:
        DimensionError: k < 1
    """
    if k < 1:
        raise DimensionError(f"weight length must be at least 1, got {k}")
    if k == 1:
        return freeze(np.ones(1))

    if scheme.kind == "ones":
        return freeze(np.ones(k))
    if scheme.kind == "average":
        return freeze(np.full(k, 1.0 / k))
    return freeze(_gauss_weights(k))
