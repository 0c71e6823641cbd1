"""
DK-STP Toolkit
Dimensionserhaltendes Semi-Tensor-Produkt für nicht-quadratische Matrizen:
Produkte, Ringstruktur, Dynamik auf R^∞, Π-Spektraltheorie, Lie-Algebra und Lie-Gruppe
"""

__version__ = "1.0.0"
