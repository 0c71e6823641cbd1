"""Fehlerklassen für das DK-STP Toolkit"""

from typing import Optional


class DKSTPError(Exception):
    """Basis-Exception aller Toolkit-Fehler"""
    pass


class DimensionError(DKSTPError, ValueError):
    """Unpassende Dimensionen (Form-Konflikt, k = 0, nicht-quadratisch, Größenlimit)"""
    pass


class DomainError(DKSTPError, ValueError):
    """Parameter außerhalb des Definitionsbereichs"""
    pass


class ConvergenceError(DKSTPError, ArithmeticError):
    """Iteration oder Reihe hat innerhalb des Limits nicht konvergiert"""
    pass


class RankError(DKSTPError, ArithmeticError):
    """Matrix hat nicht vollen Spaltenrang"""
    pass


class SingularityError(DKSTPError, ArithmeticError):
    """Π-singuläre Matrix"""
    pass


class BridgeDegeneracyError(SingularityError):
    """Gram-Matrix der Brückenmatrizen ist (numerisch) singulär"""
    pass


class OrthogonalityError(DKSTPError, ValueError):
    """Matrix ist nicht orthogonal"""
    pass


class NotInvertibleError(DKSTPError, ArithmeticError):
    """Gruppenelement liegt nicht in GL(m×n)"""
    pass


class ParseError(DKSTPError, ValueError):
    """Eingabe konnte nicht als Matrix gelesen werden"""

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.line = line
        self.column = column
        if line is not None and column is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)


class ConfigValidationError(DKSTPError):
    """Custom exception for configuration validation errors"""
    pass
