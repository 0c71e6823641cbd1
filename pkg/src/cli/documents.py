"""
Matrix-Dokumente für die Kommandozeile

JSON-Form:  {"rows": r, "cols": c, "data": [...]} (zeilenweise, Vektoren mit cols = 1)
Textform:   Zeilen durch ';' oder Zeilenumbruch getrennt, Einträge durch Leerzeichen ("1 2; 3 4")
"""

import json
import math
import re
from pathlib import Path
from typing import Any, Dict, List

import numpy as np
from pydantic import BaseModel, Field, ValidationError, model_validator

from src.utils.errors import DimensionError, ParseError
from src.linalg.matrix import Matrix, as_matrix, freeze

# Trenner oder Token
_TOKEN = re.compile(r"[;\n]|[^\s;]+")

# JSON-Dokument direkt auf der Kommandozeile
_JSON_START = re.compile(r"\s*\{")


class MatrixDocument(BaseModel):
    """Serialisierte Matrix"""
    rows: int = Field(ge=1, description="Number of rows")
    cols: int = Field(ge=1, description="Number of columns")
    data: List[float] = Field(description="Row-major entries")

    @model_validator(mode='after')
    def validate_data(self) -> 'MatrixDocument':
        if len(self.data) != self.rows * self.cols:
            raise ValueError(
                f"data has {len(self.data)} entries, expected rows*cols = {self.rows * self.cols}"
            )
        if not all(math.isfinite(v) for v in self.data):
            raise ValueError("data contains non-finite entries")
        return self

    model_config = {"extra": "forbid"}

    @classmethod
    def from_matrix(cls, M: Any) -> 'MatrixDocument':
        array = np.asarray(M, dtype=np.float64)
        if array.ndim == 1:
            array = array.reshape(-1, 1)
        return cls(rows=array.shape[0], cols=array.shape[1], data=array.reshape(-1).tolist())

    def to_matrix(self) -> Matrix:
        return freeze(np.array(self.data, dtype=np.float64).reshape(self.rows, self.cols))

    def to_dict(self) -> Dict[str, Any]:
        return {"rows": self.rows, "cols": self.cols, "data": list(self.data)}


def _position(text: str, offset: int):
    line = text.count("\n", 0, offset) + 1
    column = offset - (text.rfind("\n", 0, offset) + 1) + 1
    return line, column


def _parse_json(text: str) -> Matrix:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e.msg}", e.lineno, e.colno) from e

    try:
        document = MatrixDocument.model_validate(payload)
    except ValidationError as e:
        details = "; ".join(
            f"{'.'.join(str(loc) for loc in error['loc']) or 'document'}: {error['msg']}"
            for error in e.errors()
        )
        raise ParseError(f"invalid matrix document: {details}", 1, 1) from e
    return document.to_matrix()


def _parse_text(text: str) -> Matrix:
    rows: List[List[float]] = []
    current: List[float] = []
    row_start = 0

    def close_row():
        nonlocal current
        if not current:
            return
        if rows and len(current) != len(rows[0]):
            line, column = _position(text, row_start)
            raise ParseError(
                f"ragged rows: row {len(rows) + 1} has {len(current)} entries, expected {len(rows[0])}",
                line, column,
            )
        rows.append(current)
        current = []

    for match in _TOKEN.finditer(text):
        token = match.group()
        if token in (";", "\n"):
            close_row()
            continue
        if not current:
            row_start = match.start()
        try:
            value = float(token)
        except ValueError:
            line, column = _position(text, match.start())
            raise ParseError(f"non-numeric token {token!r}", line, column)
        if not math.isfinite(value):
            line, column = _position(text, match.start())
            raise ParseError(f"non-finite token {token!r}", line, column)
        current.append(value)
    close_row()

    if not rows:
        raise ParseError("empty matrix input", 1, 1)
    return freeze(np.array(rows, dtype=np.float64))


def parse_matrix(text: str) -> Matrix:
    """
    Liest eine Matrix aus JSON- oder Textform

    Raises:
        ParseError: leere Eingabe, ungleich lange Zeilen, nicht-numerische Tokens, ungültiges JSON
    """
    if text.lstrip().startswith("{"):
        return _parse_json(text)
    return _parse_text(text)


def serialize_matrix(M: Any) -> str:
    """MatrixDocument-JSON mit kürzester verlustfreier Dezimaldarstellung"""
    return json.dumps(MatrixDocument.from_matrix(M).to_dict())


def _is_inline(source: str) -> bool:
    if ";" in source or _JSON_START.match(source):
        return True
    tokens = source.split()
    if not tokens:
        return True
    try:
        float(tokens[0])
    except ValueError:
        return False
    return True


def load_matrix(source: str) -> Matrix:
    """
    Inline-Matrix oder Pfad zu einer Matrix-Datei

    Inline wenn ';' vorkommt, die Eingabe mit '{' beginnt oder das erste Token eine Zahl ist.
    """
    if _is_inline(source):
        matrix = parse_matrix(source)
    else:
        path = Path(source)
        if not path.is_file():
            raise ParseError(f"matrix file not found: {source}")
        try:
            text = path.read_text(encoding="utf-8")
        except UnicodeDecodeError as e:
            raise ParseError(f"matrix file is not valid UTF-8: {source} ({e.reason} at byte {e.start})") from e
        except OSError as e:
            raise ParseError(f"cannot read matrix file {source}: {e.strerror or e}") from e
        matrix = parse_matrix(text)

    try:
        return as_matrix(matrix)
    except DimensionError as e:
        raise ParseError(str(e)) from e
