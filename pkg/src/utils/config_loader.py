"""Konfiguration laden und verwalten"""

import os
from pathlib import Path
from typing import Any, Dict, Optional

import yaml
from dotenv import load_dotenv
from loguru import logger
from pydantic import ValidationError

from .config_schema import DKSTPConfig
from .errors import ConfigValidationError


# Umgebungsvariable -> (Sektion, Schlüssel, Typ)
ENV_OVERRIDES = {
    'DKSTP_LOG_LEVEL': ('logging', 'level', str),
    'DKSTP_LOG_PATH': ('logging', 'path', str),
    'DKSTP_RANK_TOL': ('tolerances', 'rank', float),
    'DKSTP_SERIES_TOL': ('series', 'tol', float),
    'DKSTP_MAX_TERMS': ('series', 'max_terms', int),
}


class ConfigLoader:
    """Lädt und verwaltet Konfiguration aus YAML und .env Dateien"""

    def __init__(self, config_path: Optional[str] = None, validate: bool = True):
        """
        Initialize ConfigLoader

        Args:
            config_path: Path to config.yaml file (None = config/config.yaml im Projekt)
            validate: Whether to validate config with Pydantic (default: True)
        """
        # Load environment variables
        load_dotenv()

        if config_path is None:
            config_path = os.getenv('DKSTP_CONFIG') or (
                Path(__file__).parent.parent.parent / "config" / "config.yaml"
            )

        self.config_path = Path(config_path)
        self.config = self._load_config()
        self._merge_env_variables()

        if validate:
            self._validate_config()

    def _load_config(self) -> Dict[str, Any]:
        """Lädt die YAML-Konfiguration (fehlende Datei = Schema-Defaults)"""
        if not self.config_path.exists():
            logger.debug(f"Config file not found, using defaults: {self.config_path}")
            return {}

        with open(self.config_path, 'r', encoding='utf-8') as f:
            return yaml.safe_load(f) or {}

    def _merge_env_variables(self):
        """Überschreibt Config-Werte mit Umgebungsvariablen"""
        for env_name, (section, key, cast) in ENV_OVERRIDES.items():
            raw = os.getenv(env_name)
            if not raw:
                continue
            try:
                value = cast(raw)
            except ValueError:
                raise ConfigValidationError(f"Invalid value for {env_name}: {raw!r}")
            self.config.setdefault(section, {})[key] = value

    def _validate_config(self):
        """
        Validates configuration using Pydantic schema

        Raises:
            ConfigValidationError: If configuration is invalid
        """
        try:
            validated_config = DKSTPConfig(**self.config)
            logger.debug("Configuration validated successfully")

            # Update config with validated data (ensures all defaults are set)
            self.config = validated_config.model_dump(mode='python')

        except ValidationError as e:
            error_messages = []
            for error in e.errors():
                location = " -> ".join(str(loc) for loc in error['loc'])
                error_messages.append(f"  • {location}: {error['msg']}")

            error_text = "\n".join([
                "Configuration validation failed:",
                *error_messages,
                "",
                "Please check your config/config.yaml file and .env variables."
            ])

            logger.error(error_text)
            raise ConfigValidationError(error_text) from e

    def get(self, key: str, default: Any = None) -> Any:
        """
        Holt einen Config-Wert mit Dot-Notation
        Beispiel: config.get('tolerances.rank')
        """
        value: Any = self.config

        for k in key.split('.'):
            if isinstance(value, dict):
                value = value.get(k)
                if value is None:
                    return default
            else:
                return default

        return value

    def __getitem__(self, key: str) -> Any:
        """Ermöglicht dict-ähnlichen Zugriff"""
        return self.config[key]

    def get_all(self) -> Dict[str, Any]:
        """Gibt die gesamte Konfiguration zurück"""
        return self.config
