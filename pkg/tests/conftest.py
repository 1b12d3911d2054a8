import numpy as np
import pytest

from dsss_radar import CarrierConfig, chips_to_baseband, generate_msequence


@pytest.fixture(scope="session")
def code10():
    return generate_msequence(10)


@pytest.fixture(scope="session")
def tx(code10):
    """10 ms of the default width-10 code at 1.023 Mchip/s, one sample per chip."""
    return chips_to_baseband(code10, 1.023e6, 1, 10)


@pytest.fixture(scope="session")
def tx_short(code10):
    return chips_to_baseband(code10, 1.023e6, 1, 1)


@pytest.fixture(scope="session")
def nominal():
    return CarrierConfig.nominal()


def brute_correlation(received, reference, lag):
    """Direct overlap sum, independent of the FFT path."""
    total = 0j
    for n, r in enumerate(reference):
        m = n + lag
        if 0 <= m < len(received):
            total += received[m] * np.conj(r)
    return total / np.sum(np.abs(reference) ** 2)


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome, verdict in (("passed", "PASS"), ("failed", "FAIL")):
        for rep in terminalreporter.stats.get(outcome, []):
            props = dict(getattr(rep, "user_properties", ()))
            if "criterion" in props and rep.when == "call":
                lines.append((props["criterion"], props["title"], verdict))
    if lines:
        terminalreporter.section("acceptance criteria")
        for number, title, verdict in sorted(lines):
            terminalreporter.write_line(f"[{verdict}] criterion {number}: {title}")
