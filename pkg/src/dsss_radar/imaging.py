"""Stepped-frequency sweeps and 1D range profiles."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.signal import get_window

from .errors import ValidationError
from .scene import Scene
from .waveform import FrequencyPlan

__all__ = ["SweepResponse", "RangeProfile", "Peak", "sweep_scene", "range_profile", "extract_peaks"]

WINDOWS = ("rectangular", "hann")


@dataclass(frozen=True)
class SweepResponse:
    """Composite channel gain at each frequency step of ``plan``."""

    plan: FrequencyPlan
    samples: np.ndarray = field(repr=False)
    propagation_convention: str = "one_way"

    def __post_init__(self):
        samples = np.asarray(self.samples, dtype=complex)
        if samples.shape != (self.plan.steps,):
            raise ValidationError(f"expected {self.plan.steps} samples, got shape {samples.shape}")
        if not np.all(np.isfinite(samples)):
            raise ValidationError("sweep samples must be finite")
        object.__setattr__(self, "samples", samples)

    @property
    def bin_spacing_m(self) -> float:
        k = 1 if self.propagation_convention == "one_way" else 2
        return self.plan.bin_spacing_m / k


@dataclass(frozen=True)
class RangeProfile:
    bins: np.ndarray = field(repr=False)
    bin_spacing_m: float
    window: str = "rectangular"

    @property
    def ranges_m(self) -> np.ndarray:
        return np.arange(self.bins.size) * self.bin_spacing_m

    @property
    def unambiguous_range_m(self) -> float:
        return self.bins.size * self.bin_spacing_m

    @property
    def db(self) -> np.ndarray:
        with np.errstate(divide="ignore"):
            return 20.0 * np.log10(self.bins)


class Peak(tuple):
    """``(range_m, magnitude, attenuation_db)``."""

    __slots__ = ()

    def __new__(cls, range_m, magnitude, attenuation_db):
        return super().__new__(cls, (range_m, magnitude, attenuation_db))

    range_m = property(lambda self: self[0])
    magnitude = property(lambda self: self[1])
    attenuation_db = property(lambda self: self[2])


def sweep_scene(scene: Scene, plan: FrequencyPlan) -> SweepResponse:
    """Analytic composite gain of ``scene`` at every step of ``plan``.

    Phases are referenced to the start frequency: the phase a scatterer
    shows at ``plan.start_hz`` is taken to be part of its own ``phase_deg``.
    """
    if not scene.scatterers:
        raise ValidationError("scene has no scatterers")
    k = scene.path_factor
    offsets = np.arange(plan.steps) * plan.step_hz
    samples = np.zeros(plan.steps, dtype=complex)
    for i, sc in enumerate(scene.scatterers):
        if sc.range_m is None:
            raise ValidationError(f"scatterer {i} has no range_m; imaging needs ranged targets")
        delay = k * sc.range_m / plan.propagation_speed
        samples += sc.gain * np.exp(1j * math.radians(sc.phase_deg)) * np.exp(
            -2j * math.pi * offsets * delay
        )
    if not scene.target_present:
        samples[:] = 0
    return SweepResponse(plan, samples, scene.propagation_convention)


def range_profile(resp: SweepResponse, window: str = "rectangular") -> RangeProfile:
    """Inverse DFT of the windowed sweep.

    Scaled so that an on-bin scatterer reads its linear gain: the IDFT carries
    ``1/N`` and a window is normalized by its mean (coherent gain).
    """
    if window not in WINDOWS:
        raise ValidationError(f"window must be one of {WINDOWS}, got {window!r}")
    n = resp.plan.steps
    if window == "rectangular":
        weighted = resp.samples
    else:
        w = get_window("hann", n)
        weighted = resp.samples * w / w.mean()
    bins = np.abs(np.fft.ifft(weighted))
    return RangeProfile(bins, resp.bin_spacing_m, window)


def extract_peaks(
    profile: RangeProfile,
    min_separation_bins: int = 2,
    relative_threshold_db: float = 10.0,
) -> list[Peak]:
    """Circular local maxima within ``relative_threshold_db`` of the strongest.

    A maximum closer than ``min_separation_bins`` (circularly) to a stronger
    one is dropped. Peaks are returned sorted by range.
    """
    mags = profile.bins
    n = mags.size
    top = mags.max() if n else 0.0
    if top == 0:
        return []
    threshold = top * 10.0 ** (-relative_threshold_db / 20.0)
    left, right = np.roll(mags, 1), np.roll(mags, -1)
    candidates = np.flatnonzero((mags >= left) & (mags >= right) & (mags >= threshold))
    # strongest first; ties broken by bin index for determinism
    order = sorted(candidates.tolist(), key=lambda b: (-mags[b], b))
    kept: list[int] = []
    for b in order:
        if all(min(abs(b - k), n - abs(b - k)) >= min_separation_bins for k in kept):
            kept.append(b)
    kept.sort()
    return [
        Peak(b * profile.bin_spacing_m, float(mags[b]), -20.0 * math.log10(mags[b])) for b in kept
    ]
