"""Baseband signals, carrier bookkeeping and stepped-frequency plans."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import ValidationError
from .pncode import PnCode

__all__ = [
    "SPEED_OF_LIGHT",
    "NOMINAL_SPEED_OF_LIGHT",
    "BasebandSignal",
    "CarrierConfig",
    "FrequencyPlan",
    "chips_to_baseband",
    "make_frequency_plan",
]

SPEED_OF_LIGHT = 2.99792458e8
# Rounded value under which 2.4 GHz has a wavelength of exactly 12.5 cm.
NOMINAL_SPEED_OF_LIGHT = 3.0e8


@dataclass(frozen=True)
class BasebandSignal:
    """Uniformly sampled complex baseband samples."""

    samples: np.ndarray = field(repr=False)
    sample_rate: float
    start_time: float = 0.0

    def __post_init__(self):
        samples = np.array(self.samples, dtype=complex)
        if samples.ndim != 1 or samples.size == 0:
            raise ValidationError("samples must be a nonempty 1-D sequence")
        if not self.sample_rate > 0:
            raise ValidationError(f"sample_rate must be positive, got {self.sample_rate}")
        samples.setflags(write=False)
        object.__setattr__(self, "samples", samples)

    def __len__(self):
        return self.samples.size

    @property
    def duration(self) -> float:
        return self.samples.size / self.sample_rate

    @property
    def times(self) -> np.ndarray:
        return self.start_time + np.arange(self.samples.size) / self.sample_rate

    @property
    def power(self) -> float:
        return float(np.mean(np.abs(self.samples) ** 2))

    def head(self, n: int) -> "BasebandSignal":
        """First ``n`` samples as a new signal."""
        return BasebandSignal(self.samples[:n], self.sample_rate, self.start_time)


@dataclass(frozen=True)
class CarrierConfig:
    """RF carrier used only for phase bookkeeping.

    ``nominal_wavelength_m`` overrides the wavelength derived from the exact
    speed of light, e.g. 0.125 m for the rounded 2.4 GHz value.
    """

    carrier_hz: float = 2.4e9
    nominal_wavelength_m: float | None = None

    def __post_init__(self):
        if not self.carrier_hz > 0:
            raise ValidationError(f"carrier_hz must be positive, got {self.carrier_hz}")
        if self.nominal_wavelength_m is not None and not self.nominal_wavelength_m > 0:
            raise ValidationError("nominal_wavelength_m must be positive")

    @classmethod
    def nominal(cls, carrier_hz: float = 2.4e9) -> "CarrierConfig":
        return cls(carrier_hz, NOMINAL_SPEED_OF_LIGHT / carrier_hz)

    @property
    def wavelength_m(self) -> float:
        if self.nominal_wavelength_m is not None:
            return self.nominal_wavelength_m
        return SPEED_OF_LIGHT / self.carrier_hz


@dataclass(frozen=True)
class FrequencyPlan:
    """Evenly stepped carrier grid ``start_hz + n * step_hz``, n = 0..steps-1.

    ``propagation_speed`` sets the range scale of the plan. The exact speed of
    light is the default; :data:`NOMINAL_SPEED_OF_LIGHT` gives round bins
    (0.1 m for a 3 GHz sweep).
    """

    start_hz: float
    step_hz: float
    steps: int
    propagation_speed: float = SPEED_OF_LIGHT

    def __post_init__(self):
        if not self.step_hz > 0:
            raise ValidationError(f"step_hz must be positive, got {self.step_hz}")
        if int(self.steps) != self.steps or self.steps < 2:
            raise ValidationError(f"steps must be an integer >= 2, got {self.steps}")
        if not self.propagation_speed > 0:
            raise ValidationError("propagation_speed must be positive")
        object.__setattr__(self, "steps", int(self.steps))

    @property
    def bandwidth(self) -> float:
        return self.step_hz * self.steps

    @property
    def frequencies(self) -> np.ndarray:
        return self.start_hz + np.arange(self.steps) * self.step_hz

    @property
    def unambiguous_range_m(self) -> float:
        return self.propagation_speed / self.step_hz

    @property
    def bin_spacing_m(self) -> float:
        return self.propagation_speed / (self.step_hz * self.steps)


def chips_to_baseband(
    code: PnCode,
    chip_rate: float,
    samples_per_chip: int = 1,
    repetitions: int = 1,
) -> BasebandSignal:
    """Sample-and-hold BPSK waveform of ``repetitions`` code periods."""
    if not chip_rate > 0:
        raise ValidationError(f"chip_rate must be positive, got {chip_rate}")
    if int(samples_per_chip) != samples_per_chip or samples_per_chip < 1:
        raise ValidationError(f"samples_per_chip must be an integer >= 1, got {samples_per_chip}")
    if int(repetitions) != repetitions or repetitions < 1:
        raise ValidationError(f"repetitions must be an integer >= 1, got {repetitions}")
    held = np.repeat(code.chips, int(samples_per_chip))
    return BasebandSignal(np.tile(held, int(repetitions)), chip_rate * samples_per_chip)


def make_frequency_plan(
    start_hz: float,
    bandwidth_hz: float,
    steps: int,
    propagation_speed: float = SPEED_OF_LIGHT,
) -> FrequencyPlan:
    """Split ``bandwidth_hz`` into ``steps`` equal steps (step = bandwidth / steps)."""
    if not bandwidth_hz > 0:
        raise ValidationError(f"bandwidth_hz must be positive, got {bandwidth_hz}")
    if int(steps) != steps or steps < 2:
        raise ValidationError(f"steps must be an integer >= 2, got {steps}")
    return FrequencyPlan(start_hz, bandwidth_hz / steps, int(steps), propagation_speed)
