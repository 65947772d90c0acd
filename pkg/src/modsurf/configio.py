"""Serialization and config loading: surfaces, classes, series problems, data files.

Series configs are JSON or TOML files with the shape

    {"surface": "p2" | {...}, "gamma": {...}, "gamma0": {...},
     "k_min": int, "bases": {"<k>": {"coeffs": [...]}, ...}}

Class payloads accept either the object form {"r":, "c1":, "chi":} or the
compact string "r,c1...,chi".  A registry of base-case polynomials with
provenance ships as data/base_cases.json.
"""

from __future__ import annotations

import json
import sys
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Mapping

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from .ktheory import KClass, PairingContext
from .qpoly import QPoly
from .series import SeriesSpec
from .surface import SurfaceModel, preset_p1xp1, preset_p2

_PRESETS = {"p2": preset_p2}

BUNDLED_SERIES = {
    "p2-series-a": "p2_series_a.json",
    "p2-series-b": "p2_series_b.json",
    "p2-series-c": "p2_series_c.json",
    "p2-sanity-a2": "p2_sanity_a2.json",
}


def parse_surface(spec: "str | Mapping") -> SurfaceModel:
    """Build a surface from a preset name ("p2", "p1xp1:n") or a JSON object."""
    if isinstance(spec, str):
        name = spec.strip().lower()
        if name in _PRESETS:
            return _PRESETS[name]()
        if name.startswith("p1xp1:"):
            try:
                n = int(name.split(":", 1)[1])
            except ValueError:
                raise ValueError(f"bad polarization parameter in {spec!r}") from None
            return preset_p1xp1(n)
        raise ValueError(f"unknown surface preset {spec!r}")
    if isinstance(spec, Mapping):
        if "preset" in spec:
            preset = dict(spec)
            name = preset.pop("preset")
            if name == "p1xp1":
                return preset_p1xp1(int(preset.get("n", 0)))
            if preset:
                raise ValueError(f"unexpected keys {sorted(preset)} for preset")
            return parse_surface(name)
        return SurfaceModel.from_dict(spec)
    raise ValueError("surface must be a preset name or an object")


def parse_kclass(data: "str | Mapping", rho: int) -> KClass:
    """Parse a class from "r,c1...,chi" or {"r":, "c1":, "chi":}."""
    if isinstance(data, str):
        try:
            nums = [int(part) for part in data.split(",")]
        except ValueError:
            raise ValueError(f"malformed class string {data!r}") from None
        if len(nums) != rho + 2:
            raise ValueError(
                f"class string {data!r} needs {rho + 2} entries (r, {rho} for c1, chi)"
            )
        return KClass.from_dict({"r": nums[0], "c1": nums[1:-1], "chi": nums[-1]})
    if isinstance(data, Mapping):
        cls = KClass.from_dict(data)
        if len(cls.c1) != rho:
            raise ValueError("dimension mismatch")
        return cls
    raise ValueError("class must be a comma string or an object")


def format_kclass(cls: KClass) -> str:
    return ",".join(str(v) for v in (cls.r, *cls.c1.coords, cls.chi))


def moduli_label(cls: KClass) -> str:
    """Human label M_H(r, c1, chi); c1 printed as a multiple of H when rho = 1."""
    if len(cls.c1) == 1:
        c = cls.c1.coords[0]
        if c == 0:
            c1 = "0"
        elif c == 1:
            c1 = "H"
        elif c == -1:
            c1 = "-H"
        else:
            c1 = f"{c}H"
    else:
        c1 = "(" + ",".join(str(v) for v in cls.c1.coords) + ")"
    return f"M_H({cls.r},{c1},{cls.chi})"


def parse_qpoly(data) -> QPoly:
    if isinstance(data, Mapping):
        return QPoly.from_dict(data)
    if isinstance(data, (list, tuple)):
        return QPoly.from_dict({"coeffs": list(data)})
    raise ValueError("polynomial must be {'coeffs': [...]} or a coefficient list")


@dataclass(frozen=True)
class SeriesConfig:
    name: str
    surface_name: str
    spec: SeriesSpec


def parse_series_config(data: Mapping, default_name: str = "series") -> SeriesConfig:
    for key in ("surface", "gamma", "gamma0", "k_min", "bases"):
        if key not in data:
            raise ValueError(f"series config is missing {key!r}")
    surface_spec = data["surface"]
    surface = parse_surface(surface_spec)
    ctx = PairingContext(surface)
    gamma = parse_kclass(data["gamma"], surface.rho)
    gamma0 = parse_kclass(data["gamma0"], surface.rho)
    bases = {}
    for key, entry in data["bases"].items():
        try:
            k = int(key)
        except ValueError:
            raise ValueError(f"bad base index {key!r}") from None
        bases[k] = parse_qpoly(entry)
    spec = SeriesSpec(ctx, gamma, gamma0, int(data["k_min"]), bases)
    name = str(data.get("name", default_name))
    surface_name = surface_spec if isinstance(surface_spec, str) else "custom"
    return SeriesConfig(name, surface_name, spec)


def load_series_file(path: "str | Path") -> SeriesConfig:
    path = Path(path)
    if not path.is_file():
        raise FileNotFoundError(f"no series config at {path}")
    if path.suffix.lower() == ".toml":
        with path.open("rb") as fh:
            data = tomllib.load(fh)
    else:
        data = json.loads(path.read_text())
    return parse_series_config(data, default_name=path.stem)


def bundled_series_names() -> list[str]:
    return sorted(BUNDLED_SERIES)


def load_bundled_series(name: str) -> SeriesConfig:
    if name not in BUNDLED_SERIES:
        raise ValueError(
            f"unknown bundled series {name!r}; available: {', '.join(bundled_series_names())}"
        )
    payload = (
        resources.files("modsurf")
        .joinpath("data/series/" + BUNDLED_SERIES[name])
        .read_text()
    )
    return parse_series_config(json.loads(payload), default_name=name)


def resolve_series(ref: str) -> SeriesConfig:
    """Accept either a bundled series name or a filesystem path."""
    if ref in BUNDLED_SERIES:
        return load_bundled_series(ref)
    path = Path(ref)
    if path.exists():
        return load_series_file(path)
    raise FileNotFoundError(
        f"{ref!r} is neither a bundled series ({', '.join(bundled_series_names())}) "
        "nor an existing file"
    )


def load_base_cases() -> dict[str, dict]:
    """Registry of base-case polynomials keyed "surface/r,c1...,chi".

    Each entry carries "coeffs" plus a "source" field, either "paper-table"
    (transcribed from the published tables) or "goettsche" (recomputable by
    the product formula).
    """
    payload = resources.files("modsurf").joinpath("data/base_cases.json").read_text()
    data = json.loads(payload)
    for label, entry in data.items():
        if "coeffs" not in entry or entry.get("source") not in ("paper-table", "goettsche"):
            raise ValueError(f"malformed base-case entry {label!r}")
    return data
