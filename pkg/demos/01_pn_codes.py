"""
Spreading codes
===============

The transmitter spreads with a maximal-length LFSR sequence. Its periodic
autocorrelation is two-valued, which is what lets the receiver read a clean
complex gain off the correlation peak.
"""

import numpy as np

from dsss_radar import circular_autocorrelation, generate_msequence, spread
from dsss_radar.pncode import PRIMITIVE_TAPS

code = generate_msequence(10)
print(f"width 10, taps {code.taps}: {code.length} chips, sum = {code.chips.sum():+.0f}")

acf = np.array([circular_autocorrelation(code, k) for k in range(code.length)])
print("lag 0:", acf[0], "| off-peak values:", sorted(set(acf[1:].tolist())))

###############################################################################
# Every tap set in the table gives the same two-valued autocorrelation.

for taps in sorted(PRIMITIVE_TAPS[7])[:4]:
    c = generate_msequence(7, taps)
    side = {circular_autocorrelation(c, k) for k in range(1, c.length)}
    print(f"taps {taps}: sidelobes {side}")

###############################################################################
# Spreading twice with the same code returns the data.

data = np.array([1, -1, -1, 1, 1], dtype=float)
print("despread:", spread(spread(data, code), code))
