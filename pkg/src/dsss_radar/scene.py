"""Point-scatterer targets, rooftop grid geometry and the propagation channel.

Each scatterer is a complex gain ``g * exp(j*phi)`` with a Doppler rotation
and a (sample-rounded) delay. Placement adds a phase of ``360 * d / lambda``
degrees under the one-way convention, ``720 * d / lambda`` under two-way.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, ValidationError
from .waveform import SPEED_OF_LIGHT, BasebandSignal, CarrierConfig

__all__ = [
    "FEET_TO_CM",
    "Scatterer",
    "NoiseSpec",
    "Scene",
    "PathLossModel",
    "ContourMap",
    "wrap_phase_deg",
    "db_to_gain",
    "apply_channel",
    "relative_distance_cm",
    "placement_phase_deg",
    "generate_contour_map",
]

FEET_TO_CM = 30.48
CONVENTIONS = ("one_way", "two_way")


def wrap_phase_deg(phase):
    """Map degrees into (-180, 180]."""
    wrapped = 180.0 - np.mod(180.0 - np.asarray(phase, dtype=float), 360.0)
    return float(wrapped) if wrapped.ndim == 0 else wrapped


def db_to_gain(attenuation_db):
    return 10.0 ** (-np.asarray(attenuation_db, dtype=float) / 20.0)


@dataclass(frozen=True)
class Scatterer:
    """A point target.

    Placement is optional: give ``range_m`` (distance from the radar) or
    ``grid_ft`` (rooftop coordinates with the radar at the origin). An
    unplaced scatterer sits at zero distance.
    """

    attenuation_db: float
    phase_deg: float = 0.0
    doppler_hz: float = 0.1
    range_m: float | None = None
    grid_ft: tuple[float, float] | None = None

    def __post_init__(self):
        if not (math.isfinite(self.attenuation_db) and self.attenuation_db >= 0):
            raise ValidationError(
                f"attenuation_db must be finite and >= 0, got {self.attenuation_db}"
            )
        if not math.isfinite(self.phase_deg) or not math.isfinite(self.doppler_hz):
            raise ValidationError("phase_deg and doppler_hz must be finite")
        if self.range_m is not None and self.grid_ft is not None:
            raise ValidationError("give either range_m or grid_ft, not both")
        if self.range_m is not None and not self.range_m >= 0:
            raise ValidationError(f"range_m must be >= 0, got {self.range_m}")
        if self.grid_ft is not None:
            x, y = (float(v) for v in self.grid_ft)
            object.__setattr__(self, "grid_ft", (x, y))
        object.__setattr__(self, "phase_deg", wrap_phase_deg(self.phase_deg))

    @property
    def gain(self) -> float:
        return float(db_to_gain(self.attenuation_db))

    @property
    def distance_m(self) -> float:
        if self.range_m is not None:
            return float(self.range_m)
        if self.grid_ft is not None:
            return math.hypot(*self.grid_ft) * FEET_TO_CM / 100.0
        return 0.0


@dataclass(frozen=True)
class NoiseSpec:
    """Complex AWGN, either relative (``snr_db``) or absolute (``power``)."""

    snr_db: float | None = None
    power: float | None = None

    def __post_init__(self):
        if (self.snr_db is None) == (self.power is None):
            raise ValidationError("noise needs exactly one of snr_db or power")
        if self.power is not None and not self.power >= 0:
            raise ValidationError(f"noise power must be >= 0, got {self.power}")


@dataclass(frozen=True)
class Scene:
    """Scatterers plus channel-wide settings.

    With ``target_present=False`` the echo is removed and only noise is
    received; an SNR is then taken relative to the echo that would have been.
    """

    scatterers: tuple[Scatterer, ...]
    noise: NoiseSpec | None = None
    propagation_convention: str = "one_way"
    target_present: bool = True

    def __post_init__(self):
        object.__setattr__(self, "scatterers", tuple(self.scatterers))
        if self.propagation_convention not in CONVENTIONS:
            raise ValidationError(
                f"propagation_convention must be one of {CONVENTIONS}, "
                f"got {self.propagation_convention!r}"
            )

    @property
    def path_factor(self) -> int:
        return 1 if self.propagation_convention == "one_way" else 2


def _delayed(samples, delay):
    if delay == 0:
        return samples
    out = np.zeros_like(samples)
    out[delay:] = samples[:-delay]
    return out


def apply_channel(
    signal: BasebandSignal,
    scene: Scene,
    carrier: CarrierConfig | None = None,
    rng_seed: int = 0,
) -> BasebandSignal:
    """Pass ``signal`` through every scatterer of ``scene`` and sum the echoes."""
    if not scene.scatterers:
        raise ValidationError("scene has no scatterers")
    carrier = carrier or CarrierConfig()
    k = scene.path_factor
    x = signal.samples
    t = signal.times
    echo = np.zeros_like(x)
    for i, sc in enumerate(scene.scatterers):
        d = sc.distance_m
        delay = int(round(k * d / SPEED_OF_LIGHT * signal.sample_rate))
        if delay >= x.size:
            raise DomainError(
                f"scatterer {i} at {d:g} m is delayed {delay} samples, "
                f"beyond the {x.size}-sample signal"
            )
        phase = math.radians(sc.phase_deg) + 2 * math.pi * k * d / carrier.wavelength_m
        contrib = sc.gain * np.exp(1j * phase) * _delayed(x, delay)
        if sc.doppler_hz:
            contrib = contrib * np.exp(2j * math.pi * sc.doppler_hz * t)
        echo += contrib

    if scene.noise is not None:
        if scene.noise.power is not None:
            noise_power = scene.noise.power
        else:
            noise_power = np.mean(np.abs(echo) ** 2) / 10.0 ** (scene.noise.snr_db / 10.0)
        rng = np.random.default_rng(rng_seed)
        noise = rng.standard_normal(x.size) + 1j * rng.standard_normal(x.size)
        noise *= math.sqrt(noise_power / 2.0)
    else:
        noise = 0.0
    if not scene.target_present:
        echo = np.zeros_like(echo)
    return BasebandSignal(echo + noise, signal.sample_rate, signal.start_time)


def relative_distance_cm(a, b, ft_decimals: int | None = None) -> float:
    """Euclidean distance between two grid points given in feet, returned in cm.

    With ``ft_decimals`` the distance in feet is truncated to that many
    decimals before conversion, as in a hand-worked table (4 decimals turns
    (-3, 6)-(3, 12) into 8.4852 ft = 258.6289 cm instead of 258.6314 cm).
    """
    feet = math.hypot(a[0] - b[0], a[1] - b[1])
    if ft_decimals is not None:
        scale = 10**ft_decimals
        feet = math.floor(feet * scale + 1e-9) / scale
    return feet * FEET_TO_CM


def placement_phase_deg(distance_cm, wavelength_cm=12.5):
    """Phase in [0, 360) accumulated over ``distance_cm``; 1 wavelength = 360 deg.

    Pass the result through :func:`wrap_phase_deg` for the (-180, 180] form.
    """
    if not wavelength_cm > 0:
        raise ValidationError(f"wavelength_cm must be positive, got {wavelength_cm}")
    frac = np.mod(np.asarray(distance_cm, dtype=float), wavelength_cm) / wavelength_cm
    phase = 360.0 * frac
    return float(phase) if phase.ndim == 0 else phase


@dataclass(frozen=True)
class PathLossModel:
    """Log-distance path loss; a stand-in with no hardware calibration."""

    exponent: float = 2.0
    reference_dbm: float = -40.0
    reference_distance_ft: float = 1.0
    background_dbm: float = -78.0


@dataclass(frozen=True)
class ContourMap:
    x_ft: np.ndarray = field(repr=False)
    y_ft: np.ndarray = field(repr=False)
    power_dbm: np.ndarray = field(repr=False)  # shape (len(y_ft), len(x_ft))

    def rows(self):
        """Yield ``(x_ft, y_ft, power_dbm)`` cell by cell, x varying fastest."""
        for j, y in enumerate(self.y_ft):
            for i, x in enumerate(self.x_ft):
                yield float(x), float(y), float(self.power_dbm[j, i])


def generate_contour_map(
    x_ft=None,
    y_ft=None,
    cell_target: Scatterer | None = None,
    path_model: PathLossModel | None = None,
) -> ContourMap:
    """Received power with the template target placed in each grid cell.

    The radar sits at the origin. The default grid covers 20 ft across by
    25 ft ahead in 1 ft squares. A cell on the radar itself gets the reference
    power.
    """
    x_ft = np.arange(-10.0, 11.0) if x_ft is None else np.asarray(x_ft, dtype=float)
    y_ft = np.arange(0.0, 26.0) if y_ft is None else np.asarray(y_ft, dtype=float)
    if x_ft.size == 0 or y_ft.size == 0:
        raise ValidationError("contour grid must be nonempty")
    cell_target = cell_target or Scatterer(attenuation_db=10.0, doppler_hz=0.0)
    pm = path_model or PathLossModel()

    xx, yy = np.meshgrid(x_ft, y_ft)
    dist = np.hypot(xx, yy)
    at_origin = dist == 0
    with np.errstate(divide="ignore"):
        loss = 10.0 * pm.exponent * np.log10(dist / pm.reference_distance_ft)
    power = pm.reference_dbm - loss - cell_target.attenuation_db
    power = np.where(at_origin, pm.reference_dbm, power)
    power = np.maximum(power, pm.background_dbm)
    return ContourMap(x_ft, y_ft, power)
