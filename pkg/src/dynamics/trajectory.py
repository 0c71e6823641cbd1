"""
Trajektorien von DK-STP-Systemen auf R^∞

Diskret:      x(k+1) = A ⋉̄ x(k)
Klassisch:    x(k+1) = A ⊢⋉ x(k)
Kontinuierlich: ẋ = A ⋉̄ x, gelöst über die Potenzreihe oder geschlossen über exp(Π_A t)
"""

from dataclasses import dataclass
from typing import Any, Iterable, Tuple

import numpy as np
from loguru import logger

from src.utils.errors import ConvergenceError, DomainError, SingularityError
from src.linalg.matrix import as_matrix
from src.linalg.spectral import expm
from src.stp.bridge import LEFT, ProductKind, bridge_matrix
from src.stp.products import dk_stp_vector, mv_stp_classic
from .space import DimVector, norm, vec_add

DEFAULT_SERIES_TOL = 1e-12
DEFAULT_MAX_TERMS = 10_000

# Kondition, ab der Π_A für die geschlossene Lösung als singulär gilt
CLOSED_FORM_MAX_CONDITION = 1e12

METHODS = ("auto", "series", "closed")


@dataclass(frozen=True)
class Trajectory:
    """Zeitlich geordnete Folge (Zeit bzw. Schritt, Zustand)"""
    samples: Tuple[Tuple[float, DimVector], ...]

    def __post_init__(self):
        times = [t for t, _ in self.samples]
        if any(b <= a for a, b in zip(times, times[1:])):
            raise DomainError("trajectory time stamps must be strictly increasing")

    @property
    def times(self) -> Tuple[float, ...]:
        return tuple(t for t, _ in self.samples)

    @property
    def states(self) -> Tuple[DimVector, ...]:
        return tuple(x for _, x in self.samples)

    @property
    def final(self) -> DimVector:
        return self.samples[-1][1]

    def __len__(self) -> int:
        return len(self.samples)


def _restriction(A: np.ndarray, kind: ProductKind) -> np.ndarray:
    # Π_A = A Ψ_{n×m}
    return A @ bridge_matrix(A.shape[1], A.shape[0], kind)


def dt_trajectory(A: Any, x0: Any, steps: int, kind: ProductKind = LEFT) -> Trajectory:
    """
    Diskrete Trajektorie x(k+1) = A ⋉̄ x(k)

    Ab k = 1 liegen alle Zustände in R^m.
    """
    if steps < 0:
        raise DomainError(f"steps must be non-negative, got {steps}")
    A = as_matrix(A, "A")
    state = DimVector.of(x0)

    samples = [(0.0, state)]
    for k in range(1, steps + 1):
        state = DimVector(dk_stp_vector(A, state.entries, kind))
        samples.append((float(k), state))
    return Trajectory(tuple(samples))


def mv_trajectory(A: Any, x0: Any, steps: int) -> Trajectory:
    """
    Trajektorie des klassischen MV-STP-Systems x(k+1) = A ⊢⋉ x(k)

    Die Zustandsdimension bleibt beschränkt, wenn m | n, und wächst sonst.
    """
    if steps < 0:
        raise DomainError(f"steps must be non-negative, got {steps}")
    A = as_matrix(A, "A")
    state = DimVector.of(x0)

    samples = [(0.0, state)]
    for k in range(1, steps + 1):
        state = DimVector(mv_stp_classic(A, state.entries))
        samples.append((float(k), state))
    return Trajectory(tuple(samples))


def _series_increment(pi_a: np.ndarray, x1: np.ndarray, t: float,
                      tol: float, max_terms: int) -> np.ndarray:
    # Σ_{i≥1} t^i/i! A^<i> ⋉̄ x0 = Σ_{i≥1} t^i/i! Π_A^{i-1} x1
    hump = np.linalg.norm(pi_a) * abs(t)
    term = t * x1
    total = term.copy()
    for i in range(2, max_terms + 1):
        with np.errstate(over="ignore", invalid="ignore"):
            term = (t / i) * (pi_a @ term)
            total += term
        if not (np.isfinite(term).all() and np.isfinite(total).all()):
            raise ConvergenceError(f"continuous-time series overflowed after {i} terms")
        if i > hump and norm(term) < tol:
            logger.debug(f"ct series converged after {i} terms")
            return total
    raise ConvergenceError(f"continuous-time series did not converge within {max_terms} terms")


def _closed_increment(pi_a: np.ndarray, x1: np.ndarray, t: float) -> np.ndarray:
    # (exp(Π_A t) - I) ξ mit ξ = Π_A^{-1} x1
    xi = np.linalg.solve(pi_a, x1)
    return expm(pi_a * t) @ xi - xi


def ct_trajectory(
    A: Any,
    x0: Any,
    t: float,
    tol: float = DEFAULT_SERIES_TOL,
    method: str = "auto",
    kind: ProductKind = LEFT,
    max_terms: int = DEFAULT_MAX_TERMS,
) -> DimVector:
    """
    Lösung von ẋ = A ⋉̄ x zum Zeitpunkt t

    x(t) = x0 ⊕ Σ_{i≥1} (t^i/i!) A^<i> ⋉̄ x0

    Args:
        A: m×n Matrix
        x0: Startvektor beliebiger Dimension
        t: Zeitpunkt
        tol: Abbruchschwelle für die Reihenglieder (‖·‖_V)
        method: auto (geschlossen falls Π_A regulär, sonst Reihe), series oder closed

    Returns:
        x(t) in Dimension lcm(dim x0, m); x0 selbst für t = 0

    Raises:
        SingularityError: method='closed' mit singulärem Π_A
        ConvergenceError: Reihe überschreitet max_terms
    """
    if tol <= 0:
        raise DomainError(f"tol must be positive, got {tol}")
    if method not in METHODS:
        raise DomainError(f"Unknown method '{method}', expected one of {METHODS}")

    A = as_matrix(A, "A")
    x0 = DimVector.of(x0)
    if t == 0:
        return x0

    pi_a = _restriction(A, kind)
    x1 = np.array(dk_stp_vector(A, x0.entries, kind))

    regular = np.linalg.cond(pi_a) < CLOSED_FORM_MAX_CONDITION
    if method == "closed" and not regular:
        raise SingularityError("closed-form solution requires a regular square restriction Π_A")
    if method == "auto" and not regular:
        logger.warning("Π_A is singular or ill-conditioned, using the power series")

    if method == "series" or not regular:
        increment = _series_increment(pi_a, x1, t, tol, max_terms)
    else:
        increment = _closed_increment(pi_a, x1, t)
        if not np.isfinite(increment).all():
            raise ConvergenceError(f"closed-form solution overflows at t = {t}")

    return vec_add(x0, increment, "+")


def ct_samples(
    A: Any,
    x0: Any,
    times: Iterable[float],
    tol: float = DEFAULT_SERIES_TOL,
    method: str = "auto",
    kind: ProductKind = LEFT,
) -> Trajectory:
    """Kontinuierliche Trajektorie an streng wachsenden Zeitpunkten"""
    samples = tuple(
        (float(t), ct_trajectory(A, x0, float(t), tol=tol, method=method, kind=kind))
        for t in times
    )
    if not samples:
        raise DomainError("at least one sample time is required")
    return Trajectory(samples)

