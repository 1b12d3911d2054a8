"""
Rake combining
==============

Echoes that arrive at least a chip apart give separate correlation peaks.
The rake picks them as fingers, co-phases each one and sums magnitudes.
"""

from dsss_radar import (
    CarrierConfig,
    Scatterer,
    Scene,
    apply_channel,
    chips_to_baseband,
    correlate,
    generate_msequence,
    rake_combine,
)

# 100 Mchip/s: one chip is 3 m of one-way path
tx = chips_to_baseband(generate_msequence(8), 100e6)
carrier = CarrierConfig.nominal()

paths = [Scatterer(6, 0, 0, range_m=0.0), Scatterer(6, 70, 0, range_m=3.0), Scatterer(9, -20, 0, range_m=9.0)]
corr = correlate(apply_channel(tx, Scene(paths), carrier), tx)
rake = rake_combine(corr, max_fingers=4, relative_threshold_db=10)
for lag, value in rake.fingers:
    print(f"finger at lag {lag}: |g| = {abs(value):.4f}")
print(f"strongest single finger {abs(corr.peak_value):.4f}, combined {abs(rake.gain):.4f}")
