"""
Tests für Konfiguration (YAML, Umgebungsvariablen, Pydantic-Validierung)
"""

import pytest

from src.utils.config_loader import ConfigLoader, ENV_OVERRIDES
from src.utils.config_schema import DKSTPConfig
from src.utils.errors import ConfigValidationError


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
    """Keine Overrides aus der Umgebung des Testlaufs"""
    for name in (*ENV_OVERRIDES, 'DKSTP_CONFIG'):
        monkeypatch.delenv(name, raising=False)


@pytest.fixture
def config_file(tmp_path):
    def write(text: str):
        path = tmp_path / "config.yaml"
        path.write_text(text, encoding="utf-8")
        return str(path)
    return write


class TestConfigLoader:
    """Tests für ConfigLoader"""

    def test_missing_file_uses_defaults(self, tmp_path):
        config = ConfigLoader(str(tmp_path / "missing.yaml"))
        assert config.get('tolerances.rank') == pytest.approx(1e-10)
        assert config.get('series.max_terms') == 10_000
        assert config.get('logging.level') == "WARNING"
        assert config.get('logging.path') is None

    def test_project_config_is_valid(self):
        """Test: config/config.yaml validiert"""
        config = ConfigLoader()
        assert config.get('limits.max_dimension') == 4096
        assert config['sampling']['seed'] == 0

    def test_yaml_values(self, config_file):
        config = ConfigLoader(config_file("series:\n  tol: 1.0e-11\nsampling:\n  samples: 50\n"))
        assert config.get('series.tol') == pytest.approx(1e-11)
        assert config.get('sampling.samples') == 50
        # nicht angegebene Sektionen behalten Defaults
        assert config.get('tolerances.group_residual') == pytest.approx(1e-9)

    def test_dot_notation_default(self, tmp_path):
        config = ConfigLoader(str(tmp_path / "missing.yaml"))
        assert config.get('tolerances.unknown', 'fallback') == 'fallback'
        assert config.get('series.tol.deeper', 3) == 3
        assert set(config.get_all()) == {'tolerances', 'series', 'sampling', 'limits', 'logging'}

    def test_environment_overrides(self, tmp_path, monkeypatch):
        monkeypatch.setenv('DKSTP_RANK_TOL', '1e-8')
        monkeypatch.setenv('DKSTP_MAX_TERMS', '500')
        monkeypatch.setenv('DKSTP_LOG_LEVEL', 'DEBUG')
        config = ConfigLoader(str(tmp_path / "missing.yaml"))
        assert config.get('tolerances.rank') == pytest.approx(1e-8)
        assert config.get('series.max_terms') == 500
        assert config.get('logging.level') == 'DEBUG'

    def test_config_path_from_environment(self, config_file, monkeypatch):
        monkeypatch.setenv('DKSTP_CONFIG', config_file("sampling:\n  seed: 42\n"))
        assert ConfigLoader().get('sampling.seed') == 42

    def test_invalid_environment_value(self, tmp_path, monkeypatch):
        monkeypatch.setenv('DKSTP_MAX_TERMS', 'many')
        with pytest.raises(ConfigValidationError):
            ConfigLoader(str(tmp_path / "missing.yaml"))

    @pytest.mark.parametrize("text", [
        "tolerances:\n  rank: -1.0\n",
        "series:\n  max_terms: 3\n",
        "logging:\n  level: VERBOSE\n",
        "unknown_section:\n  value: 1\n",
        "series:\n  tol: 1.0e-6\n",
    ])
    def test_invalid_values(self, config_file, text):
        with pytest.raises(ConfigValidationError):
            ConfigLoader(config_file(text))

    def test_validation_can_be_disabled(self, config_file):
        config = ConfigLoader(config_file("series:\n  max_terms: 3\n"), validate=False)
        assert config.get('series.max_terms') == 3


class TestConfigSchema:
    """Tests für DKSTPConfig"""

    def test_defaults(self):
        config = DKSTPConfig()
        assert config.tolerances.bridge_condition == pytest.approx(1e12)
        assert config.series.tol <= config.tolerances.group_residual

    def test_assignment_is_validated(self):
        config = DKSTPConfig()
        with pytest.raises(ValueError):
            config.sampling = {"samples": 0}
