"""
Rooftop grid
============

Targets on the 1 ft rooftop grid: the distance between two squares fixes
their relative phase, which predicts whether the pair reads stronger or
weaker than one target alone. The contour map is a log-distance stand-in for
the measured radio map, floored at the -78 dBm background.
"""

import numpy as np

from dsss_radar import (
    TwoTargetCase,
    classify_interference,
    generate_contour_map,
    placement_phase_deg,
    relative_distance_cm,
    resultant_attenuation_db,
)

for a, b in [((-3, 6), (3, 12)), ((-3, 6), (0, 9))]:
    d = relative_distance_cm(a, b, ft_decimals=4)
    phase = placement_phase_deg(d, 12.5)
    att = resultant_attenuation_db(TwoTargetCase(10, 10, 0, phase))
    print(f"{a} - {b}: {d:.4f} cm, {phase:6.1f} deg, {att:6.2f} dB, {classify_interference(att, 10).zone.value}")

cmap = generate_contour_map()
print("grid", cmap.power_dbm.shape, "range", cmap.power_dbm.min(), "to", cmap.power_dbm.max(), "dBm")
print(np.round(cmap.power_dbm[::5, ::5], 1))
