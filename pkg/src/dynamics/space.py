"""
Dimensionsfreier Raum R^∞
Addition, Skalarprodukt, Norm, Abstand und Äquivalenz von Vektoren verschiedener Dimension
"""

import math
from dataclasses import dataclass
from typing import Any, Union

import numpy as np

from src.utils.errors import DomainError
from src.linalg.matrix import Vector, as_vector
from src.stp.bridge import LEFT, lcm
from src.stp.products import lift, vv_stp

DEFAULT_EQUIVALENCE_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class DimVector:
    """Element von R^∞: reeller Vektor mit seiner Dimension"""
    entries: Vector

    def __post_init__(self):
        object.__setattr__(self, 'entries', as_vector(self.entries, "entries"))

    @property
    def dim(self) -> int:
        return int(self.entries.size)

    @classmethod
    def of(cls, value: Union['DimVector', Any]) -> 'DimVector':
        if isinstance(value, DimVector):
            return value
        return cls(value)

    def tolist(self):
        return self.entries.tolist()

    def __repr__(self) -> str:
        return f"DimVector(dim={self.dim}, entries={self.entries.tolist()})"


def vec_add(x: Any, y: Any, sign: str = "+") -> DimVector:
    """
    x ⊕ y bzw. x ⊖ y in Dimension t = lcm(m, n)

    (x ⊗ 𝟙_{t/m}) ± (y ⊗ 𝟙_{t/n})
    """
    if sign not in ("+", "-"):
        raise DomainError(f"sign must be '+' or '-', got {sign!r}")
    x, y = DimVector.of(x), DimVector.of(y)
    t = lcm(x.dim, y.dim)
    lx = lift(x.entries, t // x.dim, LEFT)
    ly = lift(y.entries, t // y.dim, LEFT)
    return DimVector(lx + ly if sign == "+" else lx - ly)


def inner_product(x: Any, y: Any) -> float:
    """⟨x, y⟩_V = (1/t) · (x vv_stp y), t = lcm(m, n)"""
    x, y = DimVector.of(x), DimVector.of(y)
    t = lcm(x.dim, y.dim)
    return vv_stp(x.entries, y.entries, LEFT) / t


def norm(x: Any) -> float:
    """‖x‖_V = sqrt(⟨x, x⟩_V)"""
    x = DimVector.of(x)
    return math.sqrt(max(inner_product(x, x), 0.0))


def distance(x: Any, y: Any) -> float:
    """d(x, y) = ‖x ⊖ y‖_V"""
    return norm(vec_add(x, y, "-"))


def equivalent(x: Any, y: Any, tol: float = DEFAULT_EQUIVALENCE_TOL) -> bool:
    """x ↔ y genau dann, wenn d(x, y) ≤ tol"""
    if tol < 0:
        raise DomainError(f"tol must be non-negative, got {tol}")
    return distance(x, y) <= tol


def zero(dim: int) -> DimVector:
    return DimVector(np.zeros(dim))
