"""Maximal-length pseudo-noise spreading codes.

Codes come from a Fibonacci linear feedback shift register. Stage ``k`` of
the register holds bit ``k - 1`` of the integer seed; on each clock the
feedback bit (XOR of the tapped stages) shifts in at stage 1 and the chip is
read from the last stage. Bits are mapped to chips as 0 -> +1, 1 -> -1.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import ConfigurationError, DomainError, ValidationError

__all__ = [
    "PnCode",
    "PRIMITIVE_TAPS",
    "DEFAULT_TAPS",
    "generate_msequence",
    "circular_autocorrelation",
    "spread",
]

# Tap sets (polynomial exponents, register width first) that yield period
# 2**width - 1. Reciprocal polynomials are included alongside each entry.
PRIMITIVE_TAPS: dict[int, frozenset[tuple[int, ...]]] = {
    w: frozenset(sets)
    for w, sets in {
        2: [(2, 1)],
        3: [(3, 2), (3, 1)],
        4: [(4, 3), (4, 1)],
        5: [(5, 3), (5, 2), (5, 4, 3, 2), (5, 4, 3, 1), (5, 4, 2, 1), (5, 3, 2, 1)],
        6: [(6, 5), (6, 1), (6, 5, 4, 1), (6, 5, 3, 2), (6, 5, 2, 1), (6, 4, 3, 1)],
        7: [(7, 6), (7, 4), (7, 3), (7, 1), (7, 6, 5, 4), (7, 6, 5, 2), (7, 6, 4, 2),
            (7, 6, 4, 1), (7, 6, 3, 1), (7, 5, 4, 3), (7, 5, 3, 1), (7, 5, 2, 1),
            (7, 4, 3, 2), (7, 3, 2, 1)],
        8: [(8, 7, 6, 1), (8, 7, 5, 3), (8, 7, 3, 2), (8, 7, 2, 1), (8, 6, 5, 4),
            (8, 6, 5, 3), (8, 6, 5, 1), (8, 5, 3, 2), (8, 5, 3, 1), (8, 4, 3, 2)],
        9: [(9, 5), (9, 4), (9, 8, 7, 2), (9, 8, 6, 5), (9, 8, 5, 4), (9, 8, 5, 1),
            (9, 8, 4, 2), (9, 8, 4, 1), (9, 7, 5, 1), (9, 7, 2, 1), (9, 5, 4, 1),
            (9, 4, 3, 1)],
        10: [(10, 7), (10, 3), (10, 9, 8, 5), (10, 9, 7, 6), (10, 9, 7, 3), (10, 9, 6, 1),
             (10, 9, 5, 2), (10, 9, 4, 2), (10, 9, 4, 1), (10, 8, 6, 1), (10, 8, 5, 1),
             (10, 7, 3, 1), (10, 5, 2, 1), (10, 4, 3, 1)],
        11: [(11, 9), (11, 2), (11, 10, 9, 7), (11, 10, 9, 5), (11, 10, 9, 2),
             (11, 10, 8, 6), (11, 10, 8, 1), (11, 10, 7, 3), (11, 10, 3, 1), (11, 9, 2, 1),
             (11, 8, 4, 1), (11, 6, 2, 1), (11, 5, 3, 1), (11, 4, 2, 1)],
        12: [(12, 11, 10, 4), (12, 11, 10, 2), (12, 11, 8, 6), (12, 11, 7, 4),
             (12, 10, 9, 3), (12, 10, 5, 4), (12, 10, 2, 1), (12, 9, 3, 2), (12, 8, 7, 2),
             (12, 8, 5, 1), (12, 8, 2, 1), (12, 6, 4, 1)],
        13: [(13, 12, 11, 8), (13, 12, 11, 2), (13, 12, 11, 1), (13, 12, 10, 9),
             (13, 12, 10, 6), (13, 12, 10, 3), (13, 12, 2, 1), (13, 11, 2, 1),
             (13, 10, 3, 1), (13, 7, 3, 1), (13, 5, 2, 1), (13, 4, 3, 1)],
        14: [(14, 13, 12, 2), (14, 13, 11, 9), (14, 13, 11, 4), (14, 13, 10, 8),
             (14, 13, 10, 6), (14, 13, 10, 3), (14, 12, 2, 1), (14, 11, 4, 1),
             (14, 10, 3, 1), (14, 8, 4, 1), (14, 6, 4, 1), (14, 5, 3, 1)],
        15: [(15, 14), (15, 11), (15, 8), (15, 7), (15, 4), (15, 1), (15, 14, 13, 11),
             (15, 14, 13, 8), (15, 14, 13, 1), (15, 14, 12, 3), (15, 14, 12, 2),
             (15, 14, 11, 8), (15, 14, 2, 1), (15, 13, 3, 1), (15, 12, 3, 1),
             (15, 7, 4, 1), (15, 7, 2, 1), (15, 4, 2, 1)],
        16: [(16, 15, 13, 4), (16, 15, 12, 10), (16, 15, 12, 1), (16, 15, 10, 4),
             (16, 15, 9, 6), (16, 15, 9, 4), (16, 15, 4, 1), (16, 12, 7, 1),
             (16, 12, 6, 1), (16, 12, 3, 1), (16, 10, 7, 1), (16, 6, 4, 1)],
    }.items()
}

DEFAULT_TAPS: dict[int, tuple[int, ...]] = {
    2: (2, 1), 3: (3, 2), 4: (4, 3), 5: (5, 3), 6: (6, 5), 7: (7, 6),
    8: (8, 6, 5, 4), 9: (9, 5), 10: (10, 7), 11: (11, 9), 12: (12, 6, 4, 1),
    13: (13, 4, 3, 1), 14: (14, 5, 3, 1), 15: (15, 14), 16: (16, 15, 13, 4),
}


def _polynomial(taps):
    terms = [f"x^{t}" if t > 1 else "x" for t in sorted(taps, reverse=True)]
    return " + ".join(terms + ["1"])


def _normalize_taps(register_width, taps):
    taps = tuple(sorted({int(t) for t in taps}, reverse=True))
    if register_width not in taps:
        # allow the caller to omit the implicit highest-order term
        taps = (register_width,) + taps
    return taps


@dataclass(frozen=True)
class PnCode:
    """A bipolar chip sequence together with the register that produced it."""

    chips: np.ndarray = field(repr=False)
    taps: tuple[int, ...]
    seed: int

    def __post_init__(self):
        chips = np.asarray(self.chips, dtype=float)
        if chips.ndim != 1 or chips.size == 0:
            raise ValidationError("chips must be a nonempty 1-D sequence")
        if not np.all(np.abs(chips) == 1.0):
            raise ValidationError("every chip must be exactly +1 or -1")
        chips.setflags(write=False)
        object.__setattr__(self, "chips", chips)

    @property
    def length(self) -> int:
        return int(self.chips.size)

    @property
    def register_width(self) -> int:
        return max(self.taps)

    def __len__(self):
        return self.length


def generate_msequence(register_width: int = 10, taps=None, seed: int = 1) -> PnCode:
    """Generate one period of a maximal-length sequence.

    Parameters
    ----------
    register_width : int
        Number of shift-register stages, 2 through 16.
    taps : iterable of int, optional
        Feedback polynomial exponents, e.g. ``(3, 2)`` for x^3 + x^2 + 1.
        The register width itself may be omitted. Defaults to
        ``DEFAULT_TAPS[register_width]``.
    seed : int
        Initial register contents, nonzero and below ``2**register_width``.

    Returns
    -------
    PnCode
        ``2**register_width - 1`` chips.
    """
    register_width = int(register_width)
    if register_width < 2:
        raise ValidationError(f"register_width must be >= 2, got {register_width}")
    if register_width not in PRIMITIVE_TAPS:
        raise ConfigurationError(
            f"no primitive-polynomial table for register width {register_width} (supported: 2..16)"
        )
    taps = DEFAULT_TAPS[register_width] if taps is None else _normalize_taps(register_width, taps)
    if max(taps) != register_width or min(taps) < 1:
        raise ConfigurationError(f"taps {taps} do not fit a {register_width}-stage register")
    if taps not in PRIMITIVE_TAPS[register_width]:
        raise ConfigurationError(
            f"feedback polynomial {_polynomial(taps)} is not a known primitive polynomial"
        )
    seed = int(seed)
    mask = (1 << register_width) - 1
    if seed & mask == 0 or seed >> register_width:
        raise ValidationError(
            f"seed must be a nonzero {register_width}-bit register state, got {seed:#x}"
        )

    length = mask
    shifts = [t - 1 for t in taps]
    out_shift = register_width - 1
    bits = np.empty(length, dtype=np.int8)
    state = seed
    for n in range(length):
        bits[n] = (state >> out_shift) & 1
        fb = 0
        for s in shifts:
            fb ^= state >> s
        state = ((state << 1) | (fb & 1)) & mask
    return PnCode(chips=1.0 - 2.0 * bits, taps=taps, seed=seed)


def circular_autocorrelation(code: PnCode, lag: int) -> float:
    """Periodic autocorrelation ``sum(c[n] * c[(n + lag) % L])``."""
    if not 0 <= lag < code.length:
        raise DomainError(f"lag must lie in [0, {code.length}), got {lag}")
    return float(np.dot(code.chips, np.roll(code.chips, -lag)))


def spread(data, code: PnCode) -> np.ndarray:
    """Multiply ``data`` chip-wise by the code, repeating the code as needed.

    Applying it twice returns ``data`` unchanged.
    """
    data = np.asarray(data)
    reps = -(-data.size // code.length)
    return data * np.tile(code.chips, reps)[: data.size]
