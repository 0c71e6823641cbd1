"""Kommandozeile: Matrix-Dokumente und Befehle"""

from .documents import MatrixDocument, parse_matrix, serialize_matrix, load_matrix
from .commands import COMMANDS, build_parser, run_command, setup_logging

__all__ = [
    'MatrixDocument', 'parse_matrix', 'serialize_matrix', 'load_matrix',
    'COMMANDS', 'build_parser', 'run_command', 'setup_logging',
]
