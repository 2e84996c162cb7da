"""Preset catalog of Cartan specs, loaded from the bundled YAML file.

Setting ``E6SP4_PRESETS`` to a YAML file of the same shape overlays (and can
override) the bundled entries.
"""

from __future__ import annotations

import os
from functools import lru_cache
from importlib import resources
from pathlib import Path

import yaml

from .rootcore import CartanSpec, InvalidCartanError

ENV_VAR = "E6SP4_PRESETS"
REQUIRED = ("E6-bourbaki", "E6-paper", "C2", "A1", "A2", "G2")


class UnknownPresetError(KeyError):
    def __str__(self):
        return f"unknown preset {self.args[0]!r}"


def parse_presets(text: str, source: str = "<string>") -> dict[str, CartanSpec]:
    data = yaml.safe_load(text) or {}
    if not isinstance(data, dict):
        raise InvalidCartanError(f"{source}: top level must be a mapping of preset ids")
    out = {}
    for name, entry in data.items():
        try:
            spec = CartanSpec(
                name=str(name),
                matrix=tuple(tuple(row) for row in entry["matrix"]),
                labels=tuple(entry["labels"]),
                lengths=tuple(str(x) for x in entry["lengths"]),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidCartanError(f"{source}: preset {name!r} is malformed ({exc})") from exc
        spec.validate()
        out[spec.name] = spec
    return out


def _bundled_text() -> str:
    return resources.files("e6sp4").joinpath("data/presets.yaml").read_text(encoding="utf-8")


@lru_cache(maxsize=None)
def _load(override: str | None) -> dict[str, CartanSpec]:
    catalog = parse_presets(_bundled_text(), "bundled presets.yaml")
    if override:
        catalog.update(parse_presets(Path(override).read_text(encoding="utf-8"), override))
    missing = [k for k in REQUIRED if k not in catalog]
    if missing:
        raise InvalidCartanError(f"preset catalog lacks required ids {missing}")
    return catalog


def catalog(override: str | None = None) -> dict[str, CartanSpec]:
    """All presets; ``override`` defaults to the E6SP4_PRESETS environment variable."""
    if override is None:
        override = os.environ.get(ENV_VAR) or None
    return dict(_load(override))


def get(name: str, override: str | None = None) -> CartanSpec:
    cat = catalog(override)
    if name not in cat:
        raise UnknownPresetError(name)
    return cat[name]
