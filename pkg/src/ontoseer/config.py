"""Service configuration with key=value file loading."""

from __future__ import annotations

from dataclasses import dataclass, fields
from pathlib import Path

from ontoseer.errors import OntoSeerError

DEFAULT_MAX_UPLOAD_BYTES = 10 * 1024 * 1024


class ConfigError(OntoSeerError):
    pass


@dataclass
class ServiceConfig:
    index_path: str = ""
    odp_dir: str = ""
    corpus_dir: str = ""
    port: int = 8000
    axiom_threshold: float = 0.85
    odp_threshold: float = 0.65
    term_floor: float = 0.5
    remote_enabled: bool = False
    max_upload_bytes: int = DEFAULT_MAX_UPLOAD_BYTES

    def __post_init__(self):
        for name in ("axiom_threshold", "odp_threshold", "term_floor"):
            value = getattr(self, name)
            if not 0.0 <= value <= 1.0:
                raise ConfigError(f"{name} must be within [0, 1], got {value}")
        if self.port < 1 or self.port > 65535:
            raise ConfigError(f"port {self.port} out of range")


def _coerce(name: str, kind: type, raw: str):
    if kind is bool:
        lowered = raw.strip().lower()
        if lowered in ("1", "true", "yes", "on"):
            return True
        if lowered in ("0", "false", "no", "off"):
            return False
        raise ConfigError(f"{name} expects a boolean, got {raw!r}")
    try:
        return kind(raw.strip())
    except ValueError:
        raise ConfigError(f"{name} expects {kind.__name__}, got {raw!r}")


def load_config(path: str | Path) -> ServiceConfig:
    """Read a key=value config file; unknown keys are errors, missing keys
    keep their defaults.  Lines starting with # are comments."""
    known = {f.name: f.type for f in fields(ServiceConfig)}
    types = {"str": str, "int": int, "float": float, "bool": bool}
    values = {}
    for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        key, sep, raw = stripped.partition("=")
        key = key.strip()
        if not sep:
            raise ConfigError(f"{path}:{lineno}: expected key=value")
        if key not in known:
            raise ConfigError(f"{path}:{lineno}: unknown setting {key!r}")
        values[key] = _coerce(key, types[known[key]], raw)
    return ServiceConfig(**values)
