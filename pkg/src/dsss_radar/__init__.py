"""Simulator for a direct-sequence spread-spectrum vehicle radar.

Targets are point scatterers with an attenuation, a phase change and a
Doppler offset. The package covers PN code generation, the baseband
channel, a correlation/rake receiver, closed-form two-target interference
and stepped-frequency 1D range imaging.
"""

from .analytic import (
    TwoTargetCase,
    equal_gain_attenuation_db,
    received_power_example,
    resultant_attenuation_db,
    sweep_curve,
)
from .errors import ConfigurationError, DetectionError, DomainError, RadarError, ValidationError
from .imaging import RangeProfile, SweepResponse, extract_peaks, range_profile, sweep_scene
from .pncode import PnCode, circular_autocorrelation, generate_msequence, spread
from .receiver import (
    Classification,
    CorrelationResult,
    EstimateReport,
    Zone,
    classify_interference,
    correlate,
    estimate_single_target,
    measure_composite_attenuation,
    rake_combine,
)
from .scene import (
    NoiseSpec,
    PathLossModel,
    Scatterer,
    Scene,
    apply_channel,
    generate_contour_map,
    placement_phase_deg,
    relative_distance_cm,
    wrap_phase_deg,
)
from .waveform import (
    NOMINAL_SPEED_OF_LIGHT,
    SPEED_OF_LIGHT,
    BasebandSignal,
    CarrierConfig,
    FrequencyPlan,
    chips_to_baseband,
    make_frequency_plan,
)

__version__ = "0.1.0"
