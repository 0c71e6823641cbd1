#!/usr/bin/env python3
"""
DK-STP Toolkit
Hauptprogramm
"""

import sys
from pathlib import Path

# Füge src zum Python-Path hinzu
sys.path.insert(0, str(Path(__file__).parent))

from src.cli.commands import run_command


def main() -> int:
    """Hauptfunktion"""
    return run_command(sys.argv[1:])


if __name__ == '__main__':
    sys.exit(main())
