"""Exception types raised by the simulator."""


class RadarError(Exception):
    """Base class for every error raised by :mod:`dsss_radar`."""


class ValidationError(RadarError, ValueError):
    """An argument or config value is outside its allowed set."""


class ConfigurationError(ValidationError):
    """A generator or scenario configuration is inconsistent."""


class DomainError(RadarError, ValueError):
    """An argument is valid on its own but out of range for this operation."""


class DetectionError(RadarError):
    """The receiver found no correlation peak above its detection threshold."""

    def __init__(self, message, peak_to_floor_db=None):
        super().__init__(message)
        self.peak_to_floor_db = peak_to_floor_db
