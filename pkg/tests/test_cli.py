"""
Tests für die Kommandozeile (Matrix-Dokumente, Befehle, Exit-Codes)

Jedes ausgearbeitete Beispiel ist ein einzelner Aufruf mit Dateien aus tests/fixtures.
"""

import json
import math
import sys

import pytest
import numpy as np
from loguru import logger

from src.cli import run_command
from src.cli.documents import MatrixDocument, load_matrix, parse_matrix, serialize_matrix
from src.utils.errors import ParseError
from tests.conftest import FIXTURES_DIR, load_fixture


def fixture(name: str) -> str:
    return str(FIXTURES_DIR / f"{name}.json")


@pytest.fixture
def cli(capsys, tmp_path, monkeypatch):
    """Führt einen Befehl aus und liefert (Exit-Code, JSON-Ausgabe oder None)"""
    monkeypatch.setenv('DKSTP_CONFIG', str(tmp_path / "missing.yaml"))

    def run(*argv: str):
        code = run_command(list(argv))
        out = capsys.readouterr().out
        return code, (json.loads(out) if code == 0 and out.strip() else None)

    yield run

    # run_command hat Handler auf den abgefangenen stderr gesetzt
    logger.remove()
    logger.add(sys.stderr, level="WARNING")


def data(document) -> list:
    return document["data"]


class TestMatrixDocuments:
    """Tests für Parsen und Serialisieren"""

    def test_text_form(self):
        assert parse_matrix("1 2; 3 4").tolist() == [[1, 2], [3, 4]]
        assert parse_matrix("1 2\n3 4\n").tolist() == [[1, 2], [3, 4]]
        assert parse_matrix("-1.5e0 2").tolist() == [[-1.5, 2.0]]

    def test_json_form(self):
        M = parse_matrix('{"rows": 2, "cols": 1, "data": [1, 2]}')
        assert M.tolist() == [[1], [2]]

    def test_ragged_rows_report_position(self):
        with pytest.raises(ParseError) as excinfo:
            parse_matrix("1 2\n3")
        assert excinfo.value.line == 2
        assert excinfo.value.column == 1

    def test_non_numeric_token(self):
        with pytest.raises(ParseError) as excinfo:
            parse_matrix("1 2; 3 x")
        assert (excinfo.value.line, excinfo.value.column) == (1, 8)

    @pytest.mark.parametrize("text", ["", " ; ", "1 nan", "1 inf"])
    def test_invalid_text(self, text):
        with pytest.raises(ParseError):
            parse_matrix(text)

    @pytest.mark.parametrize("text", [
        '{"rows": 2, "cols": 2, "data": [1, 2, 3]}',
        '{"rows": 0, "cols": 2, "data": []}',
        '{"rows": 1, "cols": 1, "data": [1], "extra": true}',
        '{"rows": 1, "cols": 1, "data": [1]',
    ])
    def test_invalid_json(self, text):
        with pytest.raises(ParseError):
            parse_matrix(text)

    def test_serialize_is_lossless(self):
        M = np.array([[0.1, 1 / 3], [math.pi, -2e-300]])
        assert np.array_equal(parse_matrix(serialize_matrix(M)), M)

    def test_vector_document(self):
        assert MatrixDocument.from_matrix([1, 2, 3]).to_dict() == {"rows": 3, "cols": 1, "data": [1, 2, 3]}

    def test_load_from_file_and_inline(self, tmp_path):
        path = tmp_path / "m.txt"
        path.write_text("1 2\n3 4\n", encoding="utf-8")
        assert load_matrix(str(path)).tolist() == [[1, 2], [3, 4]]
        assert load_matrix("5").tolist() == [[5]]
        with pytest.raises(ParseError):
            load_matrix(str(tmp_path / "missing.json"))


class TestWorkedExamples:
    """Ausgearbeitete Beispiele als einzelne Aufrufe"""

    def test_adjoint_and_killing(self, cli):
        code, out = cli("bridge", "--m", "3", "--n", "2")
        assert code == 0
        assert data(out["result"]) == [2, 0, 1, 1, 0, 2]

        for name in "ABC":
            code, out = cli("adjoint", "--a", fixture(f"lie_{name}"))
            assert code == 0
            assert data(out["result"]) == load_fixture(f"lie_ad_{name}").reshape(-1).tolist()

        code, out = cli("killing", "--a", fixture("lie_A"), "--b", fixture("lie_B"))
        assert out["result"] == pytest.approx(35.0)
        code, out = cli("killing", "--a", fixture("lie_B"), "--b", fixture("lie_C"))
        assert out["result"] == pytest.approx(-11.0)

    def test_square_restriction_example(self, cli):
        code, out = cli("restrict", "--a", fixture("wide_3x4"))
        assert code == 0
        assert data(out["result"]) == [5, 2, 11, 10, 2, -6, 13, 4, 1]
        assert out["meta"]["kind"] == "left"

        code, out = cli("product", "--a", fixture("wide_3x4"), "--x", "2; -1; 3")
        assert out["result"] == {"rows": 3, "cols": 1, "data": [41, 0, 25]}

        code, out = cli("restrict", "--a", fixture("wide_3x4"), "--kind", "right")
        assert data(out["result"]) == [6, 6, 6, 2, 2, 2, 6, 6, 6]

        code, out = cli("restrict", "--a", fixture("wide_3x4"), "--weighted", "gauss")
        assert out["meta"]["kind"] == "left-gauss"
        assert data(out["result"])[0] == pytest.approx(1.0227, abs=5e-4)

        code, out = cli("pdet", "--a", fixture("wide_3x4"))
        assert out["result"] == pytest.approx(108.0)

    def test_cayley_hamilton_example(self, cli):
        code, out = cli("charpoly", "--a", fixture("decimal_3x4"))
        assert code == 0
        assert out["result"] == pytest.approx([-2.2366, 10.7830, -9.2336], abs=2e-3)
        assert out["meta"]["branch"] == "A"

        code, out = cli("gch-check", "--a", fixture("decimal_3x4"), "--kind", "right")
        assert out["result"] <= 1e-6
        assert out["meta"]["coefficients"] == pytest.approx([0.0, 0.0, -7.9485], abs=2e-3)

    @pytest.mark.parametrize("m, n", [(1, 2), (2, 3), (2, 4)])
    def test_gamma_matrices(self, cli, m, n):
        code, out = cli("gamma", "--m", str(m), "--n", str(n))
        assert code == 0
        assert data(out["result"]) == load_fixture(f"gamma_{m}x{n}").reshape(-1).tolist()

        code, out = cli("center-dim", "--m", str(m), "--n", str(n))
        assert out["result"] == 0

    def test_pi_singular_witness(self, cli):
        code, out = cli("pdet", "--a", "1 -2 1; 1 0 0")
        assert out["result"] == pytest.approx(0.0)
        code, _ = cli("pinv", "--a", "1 -2 1; 1 0 0")
        assert code == 1


class TestCommands:
    """Tests für die übrigen Befehle"""

    def test_product_with_matrix(self, cli):
        code, out = cli("product", "--a", "1 2", "--b", "1; 1; 1")
        assert code == 0
        assert data(out["result"]) == [9]
        assert out["meta"]["b"] == [3, 1]

    def test_power(self, cli):
        code, out = cli("power", "--a", "1 0 1; 0 1 0", "--k", "2")
        assert data(out["result"]) == [2, 2, 2, 1, 1, 1]

    def test_pinv(self, cli):
        code, out = cli("pinv", "--a", fixture("wide_3x4"))
        assert code == 0
        assert out["meta"]["residual"] <= 1e-9
        assert out["result"]["rows"] == 3 and out["result"]["cols"] == 4

    def test_pi_eigen_complex_encoding(self, cli):
        code, out = cli("pi-eigen", "--a", "0 -1; 1 0")
        assert code == 0
        values = sorted(pair["value"]["im"] for pair in out["result"])
        assert values == pytest.approx([-1.0, 1.0])
        assert {"re", "im"} <= set(out["result"][0]["vector"][0])

    def test_bracket(self, cli):
        code, out = cli("bracket", "--a", "0 1; 0 0", "--b", "0 0; 1 0")
        assert data(out["result"]) == [1, 0, 0, -1]

    def test_center_dim_square(self, cli):
        code, out = cli("center-dim", "--m", "2", "--n", "2")
        assert out["result"] == 1

    def test_group_commands(self, cli):
        code, out = cli("group-mul", "--a", "1 2", "--b", "0 0")
        assert data(out["result"]) == [1, 2]

        code, out = cli("group-inv", "--a", "1 0; 0 1")
        assert data(out["result"]) == pytest.approx([-0.5, 0, 0, -0.5])

        code, _ = cli("group-inv", "--a=-1 0; 0 -1")
        assert code == 1

    def test_exponentials(self, cli):
        code, out = cli("e0", "--a", "1")
        assert data(out["result"])[0] == pytest.approx(math.e - 1.0)

        code, out = cli("exp", "--a", "1", "--t", "2")
        assert data(out["result"])[0] == pytest.approx(math.exp(2.0) - 1.0)
        assert out["meta"]["t"] == 2.0

    def test_norms(self, cli):
        code, out = cli("norm", "--a", "1 1")
        assert out["result"] == pytest.approx(1.0)

        code, out = cli("norm", "--a", "1 1", "--mode", "empirical", "--dims", "2",
                        "--samples", "5000", "--seed", "3")
        assert 1.9 <= out["result"] <= 2.0 + 1e-12
        assert out["meta"]["samples"] == 5000

        code, _ = cli("norm", "--a", "1 1", "--mode", "empirical", "--dims", "2,x")
        assert code == 2

    def test_simulations(self, cli):
        code, out = cli("simulate-dt", "--a", fixture("wide_3x4"), "--x", "2; -1; 3", "--steps", "2")
        assert code == 0
        assert out["result"]["times"] == [0.0, 1.0, 2.0]
        assert data(out["result"]["states"][2]) == [480, 260, 558]
        assert out["meta"]["dims"] == [3, 3, 3]

        code, out = cli("simulate-ct", "--a", "1", "--x", "1; 2", "--t", "0.7")
        increment = 3.0 * (math.exp(0.7) - 1.0)
        assert data(out["result"]) == pytest.approx([1 + increment, 2 + increment])
        assert out["meta"]["dim"] == 2

    def test_vector_commands(self, cli):
        code, out = cli("vv", "--x", "1 2", "--y", "1 0 0", "--kind", "right")
        assert out["result"] == pytest.approx(3.0)

        code, out = cli("vec-add", "--x", "1 2", "--y", "1 1 1")
        assert data(out["result"]) == [2, 2, 2, 3, 3, 3]

        code, out = cli("vec-add", "--x", "1 2", "--y", "1 2", "--subtract")
        assert data(out["result"]) == [0, 0]

        code, out = cli("inner", "--x", "1 2", "--y", "1 1 1")
        assert out["result"] == pytest.approx(1.5)
        assert out["meta"]["equivalent"] is False
        assert out["meta"]["tol"] == pytest.approx(1e-9)

    def test_inner_reports_equivalence(self, cli, tmp_path):
        """Test: (1, 2) ↔ (1, 1, 2, 2) mit Toleranz aus config"""
        code, out = cli("inner", "--x", "1 2", "--y", "1 1 2 2")
        assert code == 0
        assert out["meta"]["equivalent"] is True
        assert out["meta"]["distance"] == pytest.approx(0.0, abs=1e-12)

        config = tmp_path / "loose.yaml"
        config.write_text("tolerances:\n  equivalence: 1.0\n", encoding="utf-8")
        code, out = cli("inner", "--x", "1 2", "--y", "1 2.5", "--config", str(config))
        assert out["meta"]["tol"] == pytest.approx(1.0)
        assert out["meta"]["equivalent"] is True

        code, out = cli("inner", "--x", "1 2", "--y", "1 2.5", "--tol", "0.1")
        assert out["meta"]["equivalent"] is False

    def test_output_file(self, cli, tmp_path):
        target = tmp_path / "result.json"
        code, out = cli("bridge", "--m", "2", "--n", "2", "--out", str(target))
        assert code == 0
        assert out is None
        assert json.loads(target.read_text(encoding="utf-8"))["result"]["data"] == [1, 0, 0, 1]


class TestExitCodes:
    """Tests für Fehlerbehandlung"""

    def test_missing_argument(self, cli):
        code, _ = cli("product", "--b", "1")
        assert code == 2

    def test_unknown_command(self, cli):
        code, _ = cli("transmogrify")
        assert code == 2

    def test_parse_error(self, cli):
        code, _ = cli("restrict", "--a", "1 2; 3")
        assert code == 2

    def test_missing_file(self, cli, tmp_path):
        code, _ = cli("restrict", "--a", str(tmp_path / "nope.json"))
        assert code == 2

    def test_undecodable_file(self, cli, tmp_path):
        """Test: Datei ohne gültiges UTF-8 ist ein Parse-Fehler"""
        path = tmp_path / "binary.json"
        path.write_bytes(b"\xff\xfe\x00garbage")
        code, _ = cli("restrict", "--a", str(path))
        assert code == 2
        with pytest.raises(ParseError):
            load_matrix(str(path))

    def test_directory_instead_of_file(self, cli, tmp_path):
        code, _ = cli("restrict", "--a", str(tmp_path))
        assert code == 2

    def test_vector_required(self, cli):
        code, _ = cli("vv", "--x", "1 2; 3 4", "--y", "1")
        assert code == 2

    def test_domain_errors(self, cli):
        code, _ = cli("bracket", "--a", "1 2", "--b", "1; 2")
        assert code == 1
        code, _ = cli("power", "--a", "1 2", "--k", "0")
        assert code == 1
        code, _ = cli("simulate-ct", "--a", "1 1; 1 1", "--x", "1; 0", "--t", "1", "--method", "closed")
        assert code == 1

    def test_dimension_limit_from_config(self, cli, tmp_path):
        config = tmp_path / "small.yaml"
        config.write_text("limits:\n  max_dimension: 2\n", encoding="utf-8")
        code, _ = cli("restrict", "--a", "1 2 3", "--config", str(config))
        assert code == 1

    def test_invalid_config(self, cli, tmp_path):
        config = tmp_path / "bad.yaml"
        config.write_text("series:\n  max_terms: 1\n", encoding="utf-8")
        code, _ = cli("bridge", "--m", "1", "--n", "1", "--config", str(config))
        assert code == 1

    def test_help(self, capsys):
        assert run_command(["--help"]) == 0
        assert "simulate-ct" in capsys.readouterr().out
