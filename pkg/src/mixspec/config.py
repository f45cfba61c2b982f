"""Run configuration: JSON in, validated module inputs out.

Every failure is reported as a :class:`~mixspec.errors.ConfigError` carrying
the JSON pointer of the offending value.
"""
from __future__ import annotations

import inspect
import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Any

from .errors import ConfigError, MixspecError
from .experiments import CHECKS
from .grid import Grid, grid_from_json
from .measure import SignedMeasure, measure_from_json

SWEEP_AXES = ("h", "n_per_unit", "s_minus")


@dataclass
class CheckSpec:
    name: str
    kind: str
    params: dict
    pointer: str


@dataclass
class RunConfig:
    domain: dict | None = None
    measure: dict | None = None
    k: int = 1
    tol: float = 1e-8
    seed: int = 0
    sweep: dict | None = None
    checks: list[CheckSpec] = field(default_factory=list)

    def grid(self) -> Grid:
        if self.domain is None:
            raise ConfigError("/domain", "required for this command")
        try:
            return grid_from_json(self.domain)
        except (MixspecError, KeyError, TypeError) as exc:
            raise ConfigError("/domain", str(exc)) from None

    def signed_measure(self) -> SignedMeasure:
        if self.measure is None:
            raise ConfigError("/measure", "required for this command")
        try:
            return measure_from_json(self.measure)
        except (MixspecError, KeyError, TypeError) as exc:
            raise ConfigError("/measure", str(exc)) from None


def _expect(obj: Any, kind: type | tuple, pointer: str) -> Any:
    if isinstance(obj, bool) and kind in (int, float, (int, float)):
        raise ConfigError(pointer, "expected a number, got a boolean")
    if not isinstance(obj, kind):
        name = kind.__name__ if isinstance(kind, type) else "/".join(k.__name__ for k in kind)
        raise ConfigError(pointer, f"expected {name}, got {type(obj).__name__}")
    return obj


def parse_config(raw: Any) -> RunConfig:
    _expect(raw, dict, "/")
    cfg = RunConfig()
    if "domain" in raw:
        dom = _expect(raw["domain"], dict, "/domain")
        _expect(dom.get("intervals"), list, "/domain/intervals")
        for i, iv in enumerate(dom["intervals"]):
            if not (isinstance(iv, list) and len(iv) == 2):
                raise ConfigError(f"/domain/intervals/{i}", "expected [a, b]")
            for j, v in enumerate(iv):
                _expect(v, (int, float), f"/domain/intervals/{i}/{j}")
        cfg.domain = dom
    if "measure" in raw:
        cfg.measure = _expect(raw["measure"], dict, "/measure")
    if "k" in raw:
        cfg.k = _expect(raw["k"], int, "/k")
        if cfg.k < 1:
            raise ConfigError("/k", "must be >= 1")
    if "tol" in raw:
        cfg.tol = float(_expect(raw["tol"], (int, float), "/tol"))
    if "seed" in raw:
        cfg.seed = _expect(raw["seed"], int, "/seed")
    if "sweep" in raw:
        sw = _expect(raw["sweep"], dict, "/sweep")
        if sw.get("axis") not in SWEEP_AXES:
            raise ConfigError("/sweep/axis", f"must be one of {SWEEP_AXES}")
        values = _expect(sw.get("values"), list, "/sweep/values")
        if not values:
            raise ConfigError("/sweep/values", "sweep axis is empty")
        for i, v in enumerate(values):
            _expect(v, (int, float), f"/sweep/values/{i}")
        cfg.sweep = sw
    if "checks" in raw:
        names = set()
        for i, item in enumerate(_expect(raw["checks"], list, "/checks")):
            ptr = f"/checks/{i}"
            _expect(item, dict, ptr)
            kind = item.get("kind")
            if kind not in CHECKS:
                raise ConfigError(f"{ptr}/kind", f"unknown check {kind!r}; known: {sorted(CHECKS)}")
            params = _expect(item.get("params", {}), dict, f"{ptr}/params")
            sig = inspect.signature(CHECKS[kind])
            unknown = set(params) - set(sig.parameters)
            if unknown:
                raise ConfigError(f"{ptr}/params/{sorted(unknown)[0]}", f"not a parameter of {kind}")
            name = item.get("name", kind)
            if name in names:
                raise ConfigError(f"{ptr}/name", f"duplicate check name {name!r}")
            names.add(name)
            cfg.checks.append(CheckSpec(name, kind, params, ptr))
    return cfg


def load_config(path: str | Path) -> RunConfig:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError("/", f"cannot read {path}: {exc.strerror}") from None
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError("/", f"malformed JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    return parse_config(raw)


def preset_path(name: str) -> Path:
    return Path(str(resources.files("mixspec") / "presets" / f"{name}.json"))


def load_preset(name: str) -> RunConfig:
    return load_config(preset_path(name))
