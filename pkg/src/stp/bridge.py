"""
Produktvarianten und Brückenmatrizen

A ⋉̄ B = A Ψ_{n×p} B (links), A ⋊̄ B = A Φ_{n×p} B (rechts),
gewichtete Varianten ersetzen 𝟙 durch W_k.
"""

import math
import threading
from dataclasses import dataclass
from typing import Dict, Optional, Tuple

import numpy as np
from loguru import logger

from src.utils.errors import DimensionError, DomainError
from src.linalg.matrix import Matrix, freeze
from .weights import WeightScheme, weight_vector, ONES

MAX_DIMENSION = 4096

SIDES = ("left", "right")


@dataclass(frozen=True)
class ProductKind:
    """
    Variante des DK-STP

    side: left (⋉̄) oder right (⋊̄)
    scheme: Gewichtsschema; None = ungewichtet
    """
    side: str = "left"
    scheme: Optional[WeightScheme] = None

    def __post_init__(self):
        if self.side not in SIDES:
            raise DomainError(f"Unknown product side '{self.side}', expected one of {SIDES}")

    @property
    def weighted(self) -> bool:
        return self.scheme is not None

    @property
    def weights(self) -> WeightScheme:
        return self.scheme if self.scheme is not None else ONES

    @property
    def is_left(self) -> bool:
        return self.side == "left"

    @classmethod
    def left_weighted(cls, scheme: WeightScheme) -> 'ProductKind':
        return cls("left", scheme)

    @classmethod
    def right_weighted(cls, scheme: WeightScheme) -> 'ProductKind':
        return cls("right", scheme)

    @classmethod
    def parse(cls, side: str = "left", weighted: Optional[str] = None) -> 'ProductKind':
        """Aus CLI-Optionen (--kind, --weighted)"""
        scheme = WeightScheme(weighted) if weighted else None
        return cls(side, scheme)

    def label(self) -> str:
        if self.scheme is None:
            return self.side
        return f"{self.side}-{self.scheme.kind}"


LEFT = ProductKind("left")
RIGHT = ProductKind("right")


def check_dimension(value: int, name: str = "dimension", limit: int = MAX_DIMENSION) -> int:
    """Prüft 1 ≤ value ≤ limit"""
    if value < 1:
        raise DimensionError(f"{name} must be positive, got {value}")
    if value > limit:
        raise DimensionError(f"{name} {value} exceeds the limit of {limit}")
    return value


def lcm(a: int, b: int) -> int:
    """kgV zweier Dimensionen (beide ≤ MAX_DIMENSION)"""
    check_dimension(a)
    check_dimension(b)
    return math.lcm(a, b)


def _build_bridge(n: int, p: int, kind: ProductKind) -> np.ndarray:
    t = lcm(n, p)
    w_n = weight_vector(kind.weights, t // n)
    w_p = weight_vector(kind.weights, t // p)

    # Spalte l des gemeinsamen Raums R^t trifft Zeile rows[l] und Spalte cols[l]
    l = np.arange(t)
    if kind.is_left:
        # (I_n ⊗ W^T_{t/n})(I_p ⊗ W_{t/p})
        rows, cols = l // (t // n), l // (t // p)
        values = w_n[l % (t // n)] * w_p[l % (t // p)]
    else:
        # (W^T_{t/n} ⊗ I_n)(W_{t/p} ⊗ I_p)
        rows, cols = l % n, l % p
        values = w_n[l // n] * w_p[l // p]

    bridge = np.zeros((n, p))
    np.add.at(bridge, (rows, cols), values)
    return bridge


class BridgeCache:
    """Thread-sicherer Cache für Brückenmatrizen, Schlüssel (n, p, kind)"""

    def __init__(self):
        self._entries: Dict[Tuple[int, int, ProductKind], Matrix] = {}
        self._lock = threading.Lock()

    def get(self, n: int, p: int, kind: ProductKind) -> Matrix:
        key = (n, p, kind)
        with self._lock:
            cached = self._entries.get(key)
        if cached is not None:
            return cached

        # Doppelte Berechnung bei gleichzeitigem Miss ist zulässig
        bridge = freeze(_build_bridge(n, p, kind))
        logger.debug(f"Bridge cache miss: {n}×{p} ({kind.label()})")
        with self._lock:
            return self._entries.setdefault(key, bridge)

    def clear(self):
        with self._lock:
            self._entries.clear()

    def __len__(self) -> int:
        with self._lock:
            return len(self._entries)


_cache = BridgeCache()


def bridge_matrix(n: int, p: int, kind: ProductKind = LEFT) -> Matrix:
    """
    Brückenmatrix der Dimension n×p

    Args:
        n: Spaltenzahl des linken Faktors
        p: Zeilenzahl des rechten Faktors
        kind: Produktvariante

    Returns:
        Ψ_{n×p}, Φ_{n×p} oder die gewichteten Varianten
    """
    check_dimension(n, "n")
    check_dimension(p, "p")
    return _cache.get(n, p, kind)


def bridge_cache() -> BridgeCache:
    """Gemeinsamer Prozess-Cache"""
    return _cache
