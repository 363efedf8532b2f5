"""Load and validate config.yaml → AnalysisConfig."""
from pathlib import Path

import yaml

from src.types import AnalysisConfig, BoundRule

DEFAULT_CONFIG_PATH = Path(__file__).parent / "config.yaml"
VALID_BOUND_KINDS = {"smooth", "nodal", "k", "explicit"}
KNOWN_KEYS = {
    "bound_rule",
    "max_degree",
    "shear_seed",
    "branch_depth_cap",
    "max_certified_class_degree",
    "max_branches",
    "workers",
}


def load_config(config_path: Path = DEFAULT_CONFIG_PATH) -> AnalysisConfig:
    """Load and validate a config.yaml file; missing keys take their defaults."""
    with open(config_path) as f:
        raw = yaml.safe_load(f) or {}
    if not isinstance(raw, dict):
        raise ValueError(f"Config must be a mapping, got {type(raw).__name__}")

    unknown = sorted(set(raw) - KNOWN_KEYS)
    if unknown:
        raise ValueError(f"Unknown config key(s): {unknown}. Must be among: {sorted(KNOWN_KEYS)}")

    defaults = AnalysisConfig()
    bound_rule = str(raw.get("bound_rule", defaults.bound_rule))
    parse_bound_rule(bound_rule)

    max_degree = raw.get("max_degree")
    if max_degree is not None:
        max_degree = _require_int(raw, "max_degree", minimum=1)

    return AnalysisConfig(
        bound_rule=bound_rule,
        max_degree=max_degree,
        shear_seed=_optional_int(raw, "shear_seed", defaults.shear_seed, minimum=0),
        branch_depth_cap=_optional_int(raw, "branch_depth_cap", defaults.branch_depth_cap, minimum=1),
        max_certified_class_degree=_optional_int(
            raw, "max_certified_class_degree", defaults.max_certified_class_degree, minimum=1
        ),
        max_branches=_optional_int(raw, "max_branches", defaults.max_branches, minimum=1),
        workers=_optional_int(raw, "workers", defaults.workers, minimum=1),
    )


def parse_bound_rule(text: str) -> BoundRule:
    """'smooth', 'nodal', 'k:<K>' or 'explicit:<n>'."""
    kind, sep, value = text.strip().partition(":")
    if kind not in VALID_BOUND_KINDS:
        raise ValueError(f"Invalid bound_rule '{text}'. Must be one of: {sorted(VALID_BOUND_KINDS)}")
    if kind in ("smooth", "nodal"):
        if sep:
            raise ValueError(f"Bound rule '{kind}' takes no value, got '{text}'")
        return BoundRule(kind)
    if not value.strip().isdigit() or int(value) < 1:
        raise ValueError(f"Bound rule '{kind}' needs a positive integer, got '{text}'")
    return BoundRule(kind, int(value))


def _require_int(raw: dict, key: str, minimum: int) -> int:
    value = raw.get(key)
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValueError(f"Config field '{key}' must be an integer, got: '{value}'")
    if value < minimum:
        raise ValueError(f"Config field '{key}' must be >= {minimum}, got: {value}")
    return value


def _optional_int(raw: dict, key: str, default: int, minimum: int) -> int:
    if raw.get(key) is None:
        return default
    return _require_int(raw, key, minimum)
