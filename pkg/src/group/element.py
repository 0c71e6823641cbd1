"""
Elemente der Gruppe GL(m×n, F) in affinen Koordinaten

Ein Element I_{m×n} + A wird durch seine Koordinate A gespeichert;
das formale Einselement I_{m×n} ist keine Matrix und wird nie gebildet.
"""

from dataclasses import dataclass
from typing import Any

import numpy as np

from src.utils.errors import DomainError
from src.linalg.matrix import Matrix, as_matrix, freeze
from src.stp.bridge import LEFT, ProductKind
from src.stp.products import dk_stp, require_same_shape


@dataclass(frozen=True, eq=False)
class GroupElement:
    """I_{m×n} + coord"""
    coord: Matrix

    def __post_init__(self):
        object.__setattr__(self, 'coord', as_matrix(self.coord, "coord"))

    @property
    def m(self) -> int:
        return self.coord.shape[0]

    @property
    def n(self) -> int:
        return self.coord.shape[1]

    @property
    def shape(self):
        return self.coord.shape

    def is_identity(self, tol: float = 0.0) -> bool:
        return bool(np.linalg.norm(self.coord) <= tol)

    def __repr__(self) -> str:
        return f"GroupElement({self.m}×{self.n}, coord={self.coord.tolist()})"


def identity(m: int, n: int) -> GroupElement:
    """e_{m×n} = 0_{m×n}"""
    return GroupElement(np.zeros((m, n)))


def group_mul(a: GroupElement, b: GroupElement, kind: ProductKind = LEFT) -> GroupElement:
    """a ∘ b = A + B + A ⋉̄ B"""
    require_same_shape(a.coord, b.coord, "group_mul")
    return GroupElement(a.coord + b.coord + dk_stp(a.coord, b.coord, kind))


def group_power(a: GroupElement, k: int, kind: ProductKind = LEFT) -> GroupElement:
    """a ∘ a ∘ ... ∘ a (k-fach); k = 0 liefert das Einselement"""
    if k < 0:
        raise DomainError(f"group power requires k >= 0, got {k}")
    result = identity(a.m, a.n)
    for _ in range(k):
        result = group_mul(result, a, kind)
    return result


def as_element(value: Any) -> GroupElement:
    if isinstance(value, GroupElement):
        return value
    return GroupElement(freeze(as_matrix(value, "coord")))
