"""Closed-form two-target interference arithmetic.

These functions are the independent check on the signal-domain receiver:
they never touch a sampled waveform.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ValidationError
from .receiver import DEFAULT_FLOOR_CAP_DB, Zone, classify_interference, gain_to_db
from .scene import placement_phase_deg

__all__ = [
    "NOMINAL_WAVELENGTH_CM",
    "TwoTargetCase",
    "resultant_attenuation_db",
    "equal_gain_attenuation_db",
    "received_power_example",
    "SweepCurve",
    "sweep_curve",
]

NOMINAL_WAVELENGTH_CM = 12.5


@dataclass(frozen=True)
class TwoTargetCase:
    a1_db: float
    a2_db: float
    phi1_deg: float = 0.0
    phi2_deg: float = 0.0

    def __post_init__(self):
        values = (self.a1_db, self.a2_db, self.phi1_deg, self.phi2_deg)
        if not all(math.isfinite(v) for v in values):
            raise ValidationError("two-target case needs finite values")
        if self.a1_db < 0 or self.a2_db < 0:
            raise ValidationError("attenuations must be >= 0 dB")

    @classmethod
    def from_distance(
        cls,
        a_db: float,
        distance_cm: float,
        wavelength_cm: float = NOMINAL_WAVELENGTH_CM,
        a2_db: float | None = None,
        phi1_deg: float = 0.0,
    ) -> "TwoTargetCase":
        """Target 1 fixed at ``phi1_deg``; target 2 offset by ``distance_cm``."""
        phi2 = phi1_deg + placement_phase_deg(distance_cm, wavelength_cm)
        return cls(a_db, a_db if a2_db is None else a2_db, phi1_deg, phi2)


def resultant_attenuation_db(
    case: TwoTargetCase, floor_cap_db: float = DEFAULT_FLOOR_CAP_DB
) -> float:
    """``-20 log10 |g1 e^(j phi1) + g2 e^(j phi2)|`` with the floor cap."""
    g1 = 10.0 ** (-case.a1_db / 20.0)
    g2 = 10.0 ** (-case.a2_db / 20.0)
    total = g1 * np.exp(1j * math.radians(case.phi1_deg)) + g2 * np.exp(
        1j * math.radians(case.phi2_deg)
    )
    return gain_to_db(total, floor_cap_db)


def equal_gain_attenuation_db(a_db, delta_phi_deg, floor_cap_db=DEFAULT_FLOOR_CAP_DB):
    """Equal-gain law ``A - 20 log10(2 |cos(dphi / 2)|)``, vectorized."""
    factor = 2.0 * np.abs(np.cos(np.radians(np.asarray(delta_phi_deg, dtype=float)) / 2.0))
    cap_factor = 10.0 ** ((a_db - floor_cap_db) / 20.0)
    with np.errstate(divide="ignore"):
        att = a_db - 20.0 * np.log10(factor)
    att = np.where(factor < cap_factor, floor_cap_db, att)
    return float(att) if att.ndim == 0 else att


def received_power_example(tx_db: float, attenuation_db: float) -> float:
    return tx_db - attenuation_db


@dataclass(frozen=True)
class SweepCurve:
    distance_cm: np.ndarray
    attenuation_db: np.ndarray
    single_target_db: float

    @property
    def zones(self) -> list[Zone]:
        return [
            classify_interference(a, self.single_target_db).zone for a in self.attenuation_db
        ]

    def __iter__(self):
        return iter(zip(self.distance_cm.tolist(), self.attenuation_db.tolist()))


def sweep_curve(
    a_db: float = 10.0,
    wavelength_cm: float = NOMINAL_WAVELENGTH_CM,
    d_max_cm: float = 300.0,
    step_cm: float = 1.0,
    floor_cap_db: float = DEFAULT_FLOOR_CAP_DB,
) -> SweepCurve:
    """Resultant attenuation of two equal targets versus their separation.

    Distances run from 0 to ``d_max_cm`` inclusive.
    """
    if not step_cm > 0:
        raise ValidationError(f"step_cm must be positive, got {step_cm}")
    n = int(math.floor(d_max_cm / step_cm + 1e-9)) + 1
    d = np.arange(n) * step_cm
    att = np.array(
        [
            resultant_attenuation_db(TwoTargetCase.from_distance(a_db, x, wavelength_cm), floor_cap_db)
            for x in d
        ]
    )
    return SweepCurve(d, att, a_db)
