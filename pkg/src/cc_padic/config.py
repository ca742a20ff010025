"""Configuration files: one JSON object describing (p, alpha, mu1, mu2).

All numbers except p and ball levels are exact rational literals given
as strings ("1/2", "-3", "9"), so nothing passes through floating point.

    {
      "p": 3,
      "alpha": "9",
      "mu1": [{"weight": "1/2", "kind": "ball", "level": 1, "shift": "0"}, ...],
      "mu2": [...]
    }

Instead of "alpha" a config may give the four coefficients "alpha1",
"alpha2", "beta1", "beta2" of the forms a1 xi1 + a2 xi2 and
b1 xi1 + b2 xi2; they are reduced to a single alpha on load.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from .errors import ConfigError, DistributionError, NotAutomorphismError
from .independence import canonicalize_forms
from .logging_config import get_logger
from .measure import Component, Distribution, make_component, make_distribution
from .padic import PAdicScalar, Prime, as_prime, format_literal, parse_scalar

log = get_logger("config")

FORM_KEYS = ("alpha1", "alpha2", "beta1", "beta2")
COMPONENT_KINDS = ("ball", "point")


@dataclass(frozen=True, slots=True)
class Config:
    """A validated configuration.

    alpha, mu1 and mu2 are always in the reduced form L1 = xi1 + xi2,
    L2 = xi1 + alpha xi2. forms keeps the four original coefficients when
    the file gave them.
    """

    prime: Prime
    alpha: PAdicScalar
    mu1: Distribution
    mu2: Distribution
    label: str | None = None
    forms: tuple[PAdicScalar, PAdicScalar, PAdicScalar, PAdicScalar] | None = None

    @property
    def p(self) -> int:
        return self.prime.p


def _literal(value: Any, prime: Prime, where: str) -> PAdicScalar:
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise ConfigError(f"{where}: expected a rational literal string, got {value!r}")
    return parse_scalar(str(value), prime)


def _component(item: Any, prime: Prime, where: str) -> Component:
    if not isinstance(item, dict):
        raise ConfigError(f"{where}: a component must be an object, got {type(item).__name__}")
    unknown = set(item) - {"weight", "kind", "level", "shift"}
    if unknown:
        raise ConfigError(f"{where}: unknown keys {sorted(unknown)}")
    if "weight" not in item:
        raise ConfigError(f"{where}: missing key 'weight'")
    kind = item.get("kind", "ball")
    if kind not in COMPONENT_KINDS:
        raise ConfigError(f"{where}: kind must be 'ball' or 'point', got {kind!r}")
    weight = _literal(item["weight"], prime, f"{where}.weight")
    shift = _literal(item.get("shift", "0"), prime, f"{where}.shift")
    if kind == "point":
        if "level" in item:
            raise ConfigError(f"{where}: a point component takes no level")
        level = None
    else:
        level = item.get("level")
        if isinstance(level, bool) or not isinstance(level, int):
            raise ConfigError(f"{where}: a ball component needs an integer level, got {level!r}")
    return make_component(weight.value, shift, level, prime)


def _distribution(items: Any, prime: Prime, key: str) -> Distribution:
    if not isinstance(items, list) or not items:
        raise ConfigError(f"{key}: expected a nonempty list of components")
    components = [_component(item, prime, f"{key}[{i}]") for i, item in enumerate(items)]
    try:
        return make_distribution(components, prime)
    except DistributionError as e:
        raise DistributionError(f"{key}: {e}") from e


def config_from_dict(data: Any) -> Config:
    """Validate an already decoded JSON object.

    Raises:
        ConfigError: schema problems
        NotPrimeError, LiteralError, NotAutomorphismError, DistributionError
    """
    if not isinstance(data, dict):
        raise ConfigError(f"config must be a JSON object, got {type(data).__name__}")
    for key in ("p", "mu1", "mu2"):
        if key not in data:
            raise ConfigError(f"missing key {key!r}")
    p = data["p"]
    if isinstance(p, bool) or not isinstance(p, int):
        raise ConfigError(f"p must be a JSON integer, got {p!r}")
    prime = as_prime(p)

    mu1 = _distribution(data["mu1"], prime, "mu1")
    mu2 = _distribution(data["mu2"], prime, "mu2")
    label = data.get("label")

    has_forms = any(key in data for key in FORM_KEYS)
    if has_forms:
        if "alpha" in data:
            raise ConfigError("give either 'alpha' or the four form coefficients, not both")
        missing = [key for key in FORM_KEYS if key not in data]
        if missing:
            raise ConfigError(f"missing form coefficients {missing}")
        forms = tuple(_literal(data[key], prime, key) for key in FORM_KEYS)
        alpha, mu1, mu2 = canonicalize_forms(*forms, mu1, mu2)
        log.debug(f"forms {[str(f) for f in forms]} reduced to alpha={alpha}")
        return Config(prime, alpha, mu1, mu2, label, forms)

    if "alpha" not in data:
        raise ConfigError("missing key 'alpha'")
    alpha = _literal(data["alpha"], prime, "alpha")
    if alpha.is_zero():
        raise NotAutomorphismError("alpha = 0 is not an automorphism of Omega_p")
    return Config(prime, alpha, mu1, mu2, label)


def parse_config(path: Path | str) -> Config:
    """Read and validate a config file.

    Raises:
        ConfigError: unreadable file, JSON syntax error (with line and column), schema problems
        NotPrimeError, LiteralError, NotAutomorphismError, DistributionError
    """
    path = Path(path)
    log.debug(f"Reading config {path}")
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise ConfigError(f"cannot read {path}: {e.strerror or e}") from e
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ConfigError(f"{path}: JSON syntax error at line {e.lineno} column {e.colno}: {e.msg}") from e
    return config_from_dict(data)


def _component_dict(c: Component) -> dict[str, Any]:
    out: dict[str, Any] = {"weight": format_literal(c.weight)}
    if c.is_point:
        out["kind"] = "point"
    else:
        out["kind"] = "ball"
        out["level"] = c.level
    out["shift"] = format_literal(c.shift.value)
    return out


def config_to_dict(config: Config) -> dict[str, Any]:
    data: dict[str, Any] = {"p": config.p}
    if config.label:
        data["label"] = config.label
    data["alpha"] = format_literal(config.alpha.value)
    data["mu1"] = [_component_dict(c) for c in config.mu1.components]
    data["mu2"] = [_component_dict(c) for c in config.mu2.components]
    return data


def dump_config(config: Config, path: Path | str | None = None) -> str:
    """Serialize a config (always with a single alpha); write it when path is given."""
    text = json.dumps(config_to_dict(config), indent=2) + "\n"
    if path is not None:
        Path(path).write_text(text, encoding="utf-8")
        log.info(f"Config written to {path}")
    return text
