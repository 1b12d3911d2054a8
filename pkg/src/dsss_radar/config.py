"""Scenario files: sectioned ``key = value`` text parsed with :mod:`configparser`.

Recognized sections and keys are listed in ``SCHEMA``; anything else is
rejected before a simulation starts. Scatterers live in numbered sections
``[scatterer.1]``, ``[scatterer.2]``, ... kept in numeric order.
"""

from __future__ import annotations

import configparser
import re
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import ConfigurationError, RadarError
from .pncode import PnCode, generate_msequence
from .scene import NoiseSpec, PathLossModel, Scatterer, Scene
from .waveform import (
    NOMINAL_SPEED_OF_LIGHT,
    SPEED_OF_LIGHT,
    CarrierConfig,
    FrequencyPlan,
    make_frequency_plan,
)

__all__ = ["ScenarioConfig", "load_config", "parse_config"]

SCHEMA = {
    "run": {"seed"},
    "carrier": {"carrier_hz", "nominal_wavelength_m"},
    "code": {"width", "taps", "seed", "chip_rate", "samples_per_chip", "repetitions"},
    "scene": {"propagation_convention", "target_present"},
    "scatterer": {"attenuation_db", "phase_deg", "doppler_hz", "range_m", "grid_ft"},
    "noise": {"snr_db", "power"},
    "receiver": {"integration_time_s", "detection_threshold_db", "floor_cap_db"},
    "plan": {"start_hz", "bandwidth_hz", "steps", "propagation_speed"},
    "imaging": {"window", "min_separation_bins", "relative_threshold_db"},
    "sweep": {"distances_cm", "d_min_cm", "d_max_cm", "step_cm"},
    "geometry": {"pairs", "attenuation_db", "ft_decimals"},
    "map": {
        "x_min_ft", "x_max_ft", "y_min_ft", "y_max_ft", "step_ft", "exponent",
        "reference_dbm", "reference_distance_ft", "background_dbm", "attenuation_db",
    },
    "output": {"directory", "svg"},
}

_SCATTERER_SECTION = re.compile(r"scatterer\.(\d+)$")


@dataclass(frozen=True)
class CodeConfig:
    width: int = 10
    taps: tuple[int, ...] | None = None
    seed: int = 1
    chip_rate: float = 1.023e6
    samples_per_chip: int = 1
    repetitions: int = 10

    def build(self) -> PnCode:
        return generate_msequence(self.width, self.taps, self.seed)


@dataclass(frozen=True)
class ReceiverConfig:
    integration_time_s: float = 0.01
    detection_threshold_db: float = 20.0
    floor_cap_db: float = 200.0


@dataclass(frozen=True)
class ImagingConfig:
    window: str = "rectangular"
    min_separation_bins: int = 2
    relative_threshold_db: float = 10.0


@dataclass(frozen=True)
class MapConfig:
    x_ft: np.ndarray = field(repr=False)
    y_ft: np.ndarray = field(repr=False)
    path_model: PathLossModel = PathLossModel()
    attenuation_db: float = 10.0


@dataclass(frozen=True)
class ScenarioConfig:
    seed: int = 0
    carrier: CarrierConfig = CarrierConfig()
    code: CodeConfig = CodeConfig()
    scene: Scene | None = None
    receiver: ReceiverConfig = ReceiverConfig()
    plan: FrequencyPlan | None = None
    imaging: ImagingConfig = ImagingConfig()
    distances_cm: np.ndarray | None = None
    pairs: tuple = ()
    geometry_attenuation_db: float = 10.0
    geometry_ft_decimals: int | None = 4
    map: MapConfig | None = None
    output_dir: str = "out"
    svg: bool = False


def _floats(text, key):
    try:
        return [float(v) for v in re.split(r"[,\s]+", text.strip()) if v]
    except ValueError:
        raise ConfigurationError(f"{key}: expected numbers, got {text!r}") from None


class _Section:
    """Typed accessors that name the offending key on failure."""

    def __init__(self, parser, name):
        self.name = name
        self.data = parser[name] if parser.has_section(name) else {}

    def __contains__(self, key):
        return key in self.data

    def _get(self, key, cast, default):
        if key not in self.data:
            return default
        try:
            return cast(self.data[key])
        except ValueError:
            raise ConfigurationError(
                f"[{self.name}] {key}: cannot parse {self.data[key]!r}"
            ) from None

    def float(self, key, default=None):
        return self._get(key, float, default)

    def int(self, key, default=None):
        return self._get(key, lambda s: int(s, 0), default)

    def str(self, key, default=None):
        return self._get(key, str.strip, default)

    def bool(self, key, default=None):
        def cast(s):
            v = s.strip().lower()
            if v in ("1", "true", "yes", "on"):
                return True
            if v in ("0", "false", "no", "off"):
                return False
            raise ValueError(s)

        return self._get(key, cast, default)

    def floats(self, key, default=None):
        if key not in self.data:
            return default
        return _floats(self.data[key], f"[{self.name}] {key}")


def _check_schema(parser):
    for name in parser.sections():
        m = _SCATTERER_SECTION.match(name)
        kind = "scatterer" if m else name
        if kind not in SCHEMA:
            raise ConfigurationError(f"unknown section [{name}]")
        unknown = set(parser[name]) - SCHEMA[kind]
        if unknown:
            raise ConfigurationError(f"unknown key(s) in [{name}]: {', '.join(sorted(unknown))}")


def _scatterer(sec):
    grid = sec.floats("grid_ft")
    if grid is not None and len(grid) != 2:
        raise ConfigurationError(f"[{sec.name}] grid_ft needs two values (x, y)")
    if "attenuation_db" not in sec:
        raise ConfigurationError(f"[{sec.name}] attenuation_db is required")
    return Scatterer(
        attenuation_db=sec.float("attenuation_db"),
        phase_deg=sec.float("phase_deg", 0.0),
        doppler_hz=sec.float("doppler_hz", 0.1),
        range_m=sec.float("range_m"),
        grid_ft=tuple(grid) if grid is not None else None,
    )


def _pairs(text):
    pairs = []
    for line in text.strip().splitlines():
        line = line.strip()
        if not line:
            continue
        values = _floats(line.replace(";", " "), "[geometry] pairs")
        if len(values) != 4:
            raise ConfigurationError(f"[geometry] pairs: need 'xa,ya xb,yb' per line, got {line!r}")
        pairs.append(((values[0], values[1]), (values[2], values[3])))
    return tuple(pairs)


def _speed(text):
    if text is None:
        return SPEED_OF_LIGHT
    if text.strip().lower() == "nominal":
        return NOMINAL_SPEED_OF_LIGHT
    return float(text)


def _ft_decimals(text):
    if text.lower() == "none":
        return None
    try:
        value = int(text)
    except ValueError:
        raise ConfigurationError(f"[geometry] ft_decimals: expected an integer or none, got {text!r}") from None
    if value < 0:
        raise ConfigurationError("[geometry] ft_decimals must be >= 0")
    return value


def parse_config(text: str) -> ScenarioConfig:
    """Parse and validate a scenario; raises :class:`ConfigurationError`."""
    parser = configparser.ConfigParser(interpolation=None, inline_comment_prefixes=("#", ";"))
    parser.optionxform = str
    try:
        parser.read_string(text)
    except configparser.Error as exc:
        raise ConfigurationError(f"malformed config: {exc}") from None
    _check_schema(parser)

    try:
        return _build(parser)
    except ConfigurationError:
        raise
    except RadarError as exc:
        raise ConfigurationError(str(exc)) from None


def _build(parser):
    run = _Section(parser, "run")
    carrier_sec = _Section(parser, "carrier")
    carrier = CarrierConfig(
        carrier_sec.float("carrier_hz", 2.4e9), carrier_sec.float("nominal_wavelength_m")
    )

    code_sec = _Section(parser, "code")
    taps = code_sec.floats("taps")
    code = CodeConfig(
        width=code_sec.int("width", 10),
        taps=tuple(int(t) for t in taps) if taps else None,
        seed=code_sec.int("seed", 1),
        chip_rate=code_sec.float("chip_rate", 1.023e6),
        samples_per_chip=code_sec.int("samples_per_chip", 1),
        repetitions=code_sec.int("repetitions", 10),
    )
    code.build()  # validates taps and seed up front

    scatterer_sections = sorted(
        (int(m.group(1)), name)
        for name in parser.sections()
        if (m := _SCATTERER_SECTION.match(name))
    )
    scene = None
    if scatterer_sections:
        noise = None
        if parser.has_section("noise"):
            ns = _Section(parser, "noise")
            noise = NoiseSpec(ns.float("snr_db"), ns.float("power"))
        scene_sec = _Section(parser, "scene")
        scene = Scene(
            tuple(_scatterer(_Section(parser, name)) for _, name in scatterer_sections),
            noise=noise,
            propagation_convention=scene_sec.str("propagation_convention", "one_way"),
            target_present=scene_sec.bool("target_present", True),
        )

    rx = _Section(parser, "receiver")
    receiver = ReceiverConfig(
        rx.float("integration_time_s", 0.01),
        rx.float("detection_threshold_db", 20.0),
        rx.float("floor_cap_db", 200.0),
    )

    plan = None
    if parser.has_section("plan"):
        ps = _Section(parser, "plan")
        plan = make_frequency_plan(
            ps.float("start_hz", carrier.carrier_hz),
            ps.float("bandwidth_hz", 3e9),
            ps.int("steps", 128),
            _speed(ps.str("propagation_speed")),
        )
    im = _Section(parser, "imaging")
    imaging = ImagingConfig(
        im.str("window", "rectangular"),
        im.int("min_separation_bins", 2),
        im.float("relative_threshold_db", 10.0),
    )

    distances = None
    if parser.has_section("sweep"):
        sw = _Section(parser, "sweep")
        if "distances_cm" in sw:
            distances = np.array(sw.floats("distances_cm"))
        else:
            step = sw.float("step_cm", 1.0)
            if not step > 0:
                raise ConfigurationError("[sweep] step_cm must be positive")
            lo, hi = sw.float("d_min_cm", 0.0), sw.float("d_max_cm", 300.0)
            distances = lo + np.arange(int(np.floor((hi - lo) / step + 1e-9)) + 1) * step
        if distances.size == 0 or np.any(distances < 0):
            raise ConfigurationError("[sweep] distances must be a nonempty list of values >= 0")

    geo = _Section(parser, "geometry")
    pairs = _pairs(geo.data["pairs"]) if "pairs" in geo else ()

    map_cfg = None
    if parser.has_section("map"):
        ms = _Section(parser, "map")
        step = ms.float("step_ft", 1.0)
        if not step > 0:
            raise ConfigurationError("[map] step_ft must be positive")

        def axis(lo, hi):
            if hi < lo:
                raise ConfigurationError("[map] grid extents must satisfy min <= max")
            return lo + np.arange(int(np.floor((hi - lo) / step + 1e-9)) + 1) * step

        map_cfg = MapConfig(
            axis(ms.float("x_min_ft", -10.0), ms.float("x_max_ft", 10.0)),
            axis(ms.float("y_min_ft", 0.0), ms.float("y_max_ft", 25.0)),
            PathLossModel(
                ms.float("exponent", 2.0),
                ms.float("reference_dbm", -40.0),
                ms.float("reference_distance_ft", 1.0),
                ms.float("background_dbm", -78.0),
            ),
            ms.float("attenuation_db", 10.0),
        )

    out = _Section(parser, "output")
    return ScenarioConfig(
        seed=run.int("seed", 0),
        carrier=carrier,
        code=code,
        scene=scene,
        receiver=receiver,
        plan=plan,
        imaging=imaging,
        distances_cm=distances,
        pairs=pairs,
        geometry_attenuation_db=geo.float("attenuation_db", 10.0),
        geometry_ft_decimals=_ft_decimals(geo.str("ft_decimals", "4")),
        map=map_cfg,
        output_dir=out.str("directory", "out"),
        svg=out.bool("svg", False),
    )


def load_config(path) -> ScenarioConfig:
    return parse_config(Path(path).read_text())
