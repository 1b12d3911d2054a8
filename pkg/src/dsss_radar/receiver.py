"""Correlation receiver: despreading, target estimation and rake combining."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import NamedTuple

import numpy as np
from scipy import signal as sps

from .errors import DetectionError, DomainError, ValidationError
from .scene import wrap_phase_deg
from .waveform import BasebandSignal

__all__ = [
    "DEFAULT_FLOOR_CAP_DB",
    "CorrelationResult",
    "EstimateReport",
    "Zone",
    "Classification",
    "RakeResult",
    "gain_to_db",
    "correlate",
    "peak_to_floor_db",
    "estimate_single_target",
    "measure_composite_attenuation",
    "classify_interference",
    "rake_combine",
]

DEFAULT_FLOOR_CAP_DB = 200.0


def gain_to_db(gain, floor_cap_db: float = DEFAULT_FLOOR_CAP_DB) -> float:
    """Attenuation ``-20 log10 |gain|``, reported as ``floor_cap_db`` once the
    gain falls below ``10 ** (-floor_cap_db / 20)``."""
    mag = abs(gain)
    if not mag >= 10.0 ** (-floor_cap_db / 20.0):
        return float(floor_cap_db)
    return -20.0 * math.log10(mag)


@dataclass(frozen=True)
class CorrelationResult:
    """Complex cross-correlation normalized by the reference energy."""

    lags: np.ndarray = field(repr=False)
    values: np.ndarray = field(repr=False)

    @property
    def peak_index(self) -> int:
        return int(np.argmax(np.abs(self.values)))

    @property
    def peak_lag(self) -> int:
        return int(self.lags[self.peak_index])

    @property
    def peak_value(self) -> complex:
        return complex(self.values[self.peak_index])

    def at_lag(self, lag: int) -> complex:
        return complex(self.values[lag - int(self.lags[0])])


@dataclass(frozen=True)
class EstimateReport:
    attenuation_db: float
    phase_deg: float
    doppler_bias_deg: float = 0.0
    n_fingers_used: int = 1
    peak_lag: int = 0


class Zone(str, Enum):
    ADDITIVE = "Additive"
    SUBTRACTIVE = "Subtractive"


class Classification(NamedTuple):
    zone: Zone
    boundary: bool = False


@dataclass(frozen=True)
class RakeResult:
    gain: complex
    fingers: list[tuple[int, complex]]

    @property
    def n_fingers(self) -> int:
        return len(self.fingers)


def correlate(received: BasebandSignal, reference: BasebandSignal) -> CorrelationResult:
    """``values[l] = sum_n received[n + l] * conj(reference[n]) / E_ref`` over
    every lag with partial or full overlap."""
    if not math.isclose(received.sample_rate, reference.sample_rate, rel_tol=1e-12):
        raise ValidationError(
            f"sample rates differ: received {received.sample_rate:g} Hz, "
            f"reference {reference.sample_rate:g} Hz"
        )
    ref = reference.samples
    energy = float(np.vdot(ref, ref).real)
    if energy == 0:
        raise ValidationError("reference has zero energy")
    values = sps.correlate(received.samples, ref, mode="full") / energy
    lags = sps.correlation_lags(received.samples.size, ref.size, mode="full")
    return CorrelationResult(lags, values)


def peak_to_floor_db(corr: CorrelationResult) -> float:
    """Peak magnitude over a Rayleigh-median estimate of the correlation floor."""
    mags = np.abs(corr.values)
    peak = mags.max()
    floor = np.median(mags) / math.sqrt(math.log(2.0))
    if peak == 0:
        return -math.inf
    if floor == 0:
        return math.inf
    return 20.0 * math.log10(peak / floor)


def estimate_single_target(
    received: BasebandSignal,
    reference: BasebandSignal,
    integration_time_s: float = 0.01,
    doppler_hz: float = 0.0,
    detection_threshold_db: float = 20.0,
    floor_cap_db: float = DEFAULT_FLOOR_CAP_DB,
) -> EstimateReport:
    """Read attenuation and phase of a single target off the correlation peak.

    Both signals are cut to the first ``integration_time_s`` seconds. A target
    Doppler of ``doppler_hz`` rotates the echo during the window, which biases
    the measured phase by the mean of the ramp, ``360 * f_d * T / 2`` degrees;
    that expected bias is returned as ``doppler_bias_deg`` (it is not removed).

    Raises
    ------
    DetectionError
        If the peak is less than ``detection_threshold_db`` above the floor.
    """
    n = int(round(integration_time_s * received.sample_rate))
    if n < 1 or n > min(len(received), len(reference)):
        raise DomainError(
            f"integration time {integration_time_s:g} s does not fit the "
            f"{min(received.duration, reference.duration):g} s signals"
        )
    corr = correlate(received.head(n), reference.head(n))
    margin = peak_to_floor_db(corr)
    if not margin >= detection_threshold_db:
        raise DetectionError(
            f"no correlation peak above threshold ({margin:.1f} dB < {detection_threshold_db:g} dB)",
            peak_to_floor_db=margin,
        )
    peak = corr.peak_value
    return EstimateReport(
        attenuation_db=gain_to_db(peak, floor_cap_db),
        phase_deg=wrap_phase_deg(math.degrees(np.angle(peak))),
        doppler_bias_deg=360.0 * doppler_hz * (n / received.sample_rate) / 2.0,
        n_fingers_used=1,
        peak_lag=corr.peak_lag,
    )


def measure_composite_attenuation(
    received: BasebandSignal,
    reference: BasebandSignal,
    floor_cap_db: float = DEFAULT_FLOOR_CAP_DB,
) -> float:
    """Attenuation of the strongest correlation peak, in dB."""
    return gain_to_db(correlate(received, reference).peak_value, floor_cap_db)


def classify_interference(composite_db: float, single_target_db: float) -> Classification:
    """Additive if the pair attenuates less than one target alone, else Subtractive.

    Equality is reported as Additive with ``boundary=True``.
    """
    if composite_db < single_target_db:
        return Classification(Zone.ADDITIVE)
    if composite_db > single_target_db:
        return Classification(Zone.SUBTRACTIVE)
    return Classification(Zone.ADDITIVE, boundary=True)


def rake_combine(
    corr: CorrelationResult,
    max_fingers: int = 4,
    relative_threshold_db: float = 6.0,
    min_separation: int = 1,
) -> RakeResult:
    """Pick resolvable correlation peaks as rake fingers and co-phase them.

    Fingers are chosen greedily by magnitude; each pick blanks the lags closer
    than ``min_separation`` samples (one chip, i.e. ``samples_per_chip``), so
    every finger is the maximum of its own resolution cell. Picks stop below
    ``relative_threshold_db`` under the strongest peak. Each finger is rotated
    by its own conjugate phase, so the combined gain is the sum of finger
    magnitudes.
    """
    if max_fingers < 1:
        raise ValidationError(f"max_fingers must be >= 1, got {max_fingers}")
    if min_separation < 1:
        raise ValidationError(f"min_separation must be >= 1, got {min_separation}")
    mags = np.abs(corr.values).astype(float)
    peak = mags.max()
    if peak == 0:
        raise DetectionError("correlation is identically zero")
    threshold = peak * 10.0 ** (-relative_threshold_db / 20.0)

    available = np.ones(mags.size, dtype=bool)
    fingers = []
    while len(fingers) < max_fingers:
        masked = np.where(available, mags, -1.0)
        i = int(np.argmax(masked))
        if masked[i] < threshold:
            break
        fingers.append((int(corr.lags[i]), complex(corr.values[i])))
        available[max(0, i - min_separation + 1): i + min_separation] = False

    fingers.sort()
    gain = sum(v * np.conj(v) / abs(v) for _, v in fingers)
    return RakeResult(complex(gain), fingers)
