import csv
import math
from pathlib import Path

import pytest

from dsss_radar import ConfigurationError
from dsss_radar.cli import EXIT_CONFIG, EXIT_DETECTION, EXIT_IO, EXIT_OK, main, run_geometry
from dsss_radar.config import parse_config

SCENARIOS = Path(__file__).resolve().parents[1] / "scenarios"


def read_csv(path):
    with open(path, newline="") as fh:
        return list(csv.DictReader(fh))


def run(command, scenario, out, *extra):
    return main([command, "--config", str(SCENARIOS / scenario), "--out", str(out), *extra])


def write(tmp_path, text, name="s.ini"):
    p = tmp_path / name
    p.write_text(text)
    return p


def test_detect_single_target_rows(tmp_path):
    assert run("detect", "single_target.ini", tmp_path) == EXIT_OK
    rows = read_csv(tmp_path / "detect.csv")
    assert len(rows) == 9
    reference = [(1.167, 2.09), (10.1, 4.026), (15.06, 5.986), (18.05, 6.972), (20.04, 7.961),
             (25.03, 8.953), (30.02, 9.946), (40.02, 10.94), (45.01, 11.94)]
    for row, (ph, att) in zip(rows, reference):
        assert row["detected"] == "1"
        measured_phase = float(row["measured_phase_deg"])
        assert measured_phase - float(row["injected_phase_deg"]) == pytest.approx(0.18, abs=0.02)
        assert abs(measured_phase - ph) < 0.2
        assert abs(float(row["measured_attenuation_db"]) - att) < 0.1


def test_detect_identity_scene(tmp_path):
    cfg = write(tmp_path, "[code]\nwidth = 7\nrepetitions = 1\n[receiver]\nintegration_time_s = 1.2e-4\n"
                          "[scatterer.1]\nattenuation_db = 0\ndoppler_hz = 0\n")
    assert main(["detect", "--config", str(cfg), "--out", str(tmp_path / "o")]) == EXIT_OK
    row = read_csv(tmp_path / "o" / "detect.csv")[0]
    assert float(row["measured_phase_deg"]) == 0.0
    assert float(row["measured_attenuation_db"]) == pytest.approx(0.0, abs=1e-6)


def test_detect_absent_target_exit_3(tmp_path):
    assert run("detect", "absent.ini", tmp_path) == EXIT_DETECTION
    assert read_csv(tmp_path / "detect.csv")[0]["detected"] == "0"


def test_interfere_two_target_rows(tmp_path):
    assert run("interfere", "two_target.ini", tmp_path) == EXIT_OK
    rows = read_csv(tmp_path / "interfere.csv")
    reference = {0: (4.006, "Additive"), 20: (14.11, "Subtractive"), 40: (5.809, "Additive"),
             134: (7.853, "Additive"), 172: (6.701, "Additive"), 244: (27.94, "Subtractive")}
    assert [int(float(r["relative_distance_cm"])) for r in rows] == list(reference)
    for r in rows:
        att, zone = reference[int(float(r["relative_distance_cm"]))]
        assert abs(float(r["measured_db"]) - att) <= 0.15
        assert r["zone"] == zone


def test_interfere_sweep_matches_oracle(tmp_path):
    assert run("interfere", "sweep.ini", tmp_path, "--svg") == EXIT_OK
    rows = read_csv(tmp_path / "interfere.csv")
    assert len(rows) == 301
    # CSV carries 6 significant digits; compare at that resolution
    for r in rows:
        assert abs(float(r["measured_db"]) - float(r["analytic_db"])) <= 0.05
    by_d = {int(float(r["relative_distance_cm"])): float(r["measured_db"]) for r in rows}
    assert by_d[0] == by_d[25] == by_d[50]
    assert (tmp_path / "interfere.svg").read_text().startswith("<svg")


def test_interfere_periodicity_half_cm(tmp_path):
    cfg = (SCENARIOS / "two_target.ini").read_text().replace(
        "distances_cm = 0, 20, 40, 134, 172, 244", "distances_cm = 3, 15.5, 7.25, 19.75"
    )
    p = write(tmp_path, cfg)
    assert main(["interfere", "--config", str(p), "--out", str(tmp_path / "o")]) == EXIT_OK
    rows = read_csv(tmp_path / "o" / "interfere.csv")
    assert float(rows[0]["measured_db"]) == pytest.approx(float(rows[1]["measured_db"]), abs=1e-6)
    assert float(rows[2]["measured_db"]) == pytest.approx(float(rows[3]["measured_db"]), abs=1e-6)


def test_interfere_needs_two_scatterers(tmp_path):
    cfg = write(tmp_path, "[scatterer.1]\nattenuation_db = 10\n[sweep]\nd_max_cm = 5\n")
    assert main(["interfere", "--config", str(cfg), "--out", str(tmp_path / "o")]) == EXIT_CONFIG


def test_geometry(tmp_path):
    assert run("geometry", "geometry.ini", tmp_path) == EXIT_OK
    rows = read_csv(tmp_path / "geometry.csv")
    assert [r["predicted_zone"] for r in rows] == ["Additive", "Subtractive", "Additive"]
    assert float(rows[2]["distance_cm"]) == 0.0


def test_geometry_distances_exact():
    cfg = parse_config((SCENARIOS / "geometry.ini").read_text())
    _, rows = run_geometry(cfg)
    assert rows[0][4] == pytest.approx(258.6288, abs=1e-4)
    assert rows[1][4] == pytest.approx(129.3144, abs=1e-4)


def test_image(tmp_path):
    assert run("image", "image.ini", tmp_path, "--svg") == EXIT_OK
    profile = read_csv(tmp_path / "profile.csv")
    assert len(profile) == 128
    assert float(profile[10]["magnitude"]) == pytest.approx(0.316228, abs=1e-6)
    peaks = read_csv(tmp_path / "peaks.csv")
    assert [float(p["range_m"]) for p in peaks] == [1.0, 1.6]
    assert (tmp_path / "profile.svg").exists()


def test_image_single_and_merged(tmp_path):
    base = (SCENARIOS / "image.ini").read_text()
    single = base.split("[scatterer.2]")[0] + "[output]\n"
    p = write(tmp_path, single, "single.ini")
    assert main(["image", "--config", str(p), "--out", str(tmp_path / "a")]) == EXIT_OK
    assert len(read_csv(tmp_path / "a" / "peaks.csv")) == 1
    p = write(tmp_path, base.replace("range_m = 1.6", "range_m = 1.05"), "merged.ini")
    assert main(["image", "--config", str(p), "--out", str(tmp_path / "b")]) == EXIT_OK
    assert len(read_csv(tmp_path / "b" / "peaks.csv")) == 1


def test_image_unranged(tmp_path):
    p = write(tmp_path, "[plan]\n[scatterer.1]\nattenuation_db = 3\ngrid_ft = 1, 2\n")
    assert main(["image", "--config", str(p), "--out", str(tmp_path / "o")]) == EXIT_CONFIG


def test_map(tmp_path):
    assert run("map", "map.ini", tmp_path) == EXIT_OK
    rows = read_csv(tmp_path / "map.csv")
    assert len(rows) == 21 * 26
    cells = {(float(r["x_ft"]), float(r["y_ft"])): float(r["power_dbm"]) for r in rows}
    assert min(cells.values()) >= -78.0
    assert cells[(-4.0, 7.0)] == cells[(4.0, 7.0)]
    ray = [cells[(0.0, y)] for y in range(1, 26)]
    assert all(a >= b for a, b in zip(ray, ray[1:]))


def test_map_default_grid(tmp_path):
    p = write(tmp_path, "[run]\nseed = 1\n")
    assert main(["map", "--config", str(p), "--out", str(tmp_path / "o")]) == EXIT_OK
    assert len(read_csv(tmp_path / "o" / "map.csv")) == 21 * 26


@pytest.mark.parametrize(
    "text, match",
    [
        ("[bogus]\na = 1\n", "unknown section"),
        ("[code]\nwidht = 10\n", "unknown key"),
        ("[code]\nwidth = ten\n", "width"),
        ("[code]\nwidth = 4\ntaps = 4, 2\n", "primitive"),
        ("[scatterer.1]\nphase_deg = 3\n", "attenuation_db is required"),
        ("[scatterer.1]\nattenuation_db = -3\n", "attenuation_db"),
        ("[scene]\npropagation_convention = sideways\n[scatterer.1]\nattenuation_db = 1\n", "convention"),
        ("[noise]\nsnr_db = 1\npower = 2\n[scatterer.1]\nattenuation_db = 1\n", "exactly one"),
        ("[plan]\nsteps = 1\n", "steps"),
        ("[sweep]\nstep_cm = 0\n", "step_cm"),
        ("[geometry]\npairs = 1,2 3\n", "pairs"),
        ("no section header\n", "malformed"),
    ],
)
def test_config_rejections(text, match):
    with pytest.raises(ConfigurationError, match=match):
        parse_config(text)


def test_config_error_exit_code(tmp_path):
    p = write(tmp_path, "[code]\nwidht = 10\n")
    assert main(["map", "--config", str(p), "--out", str(tmp_path / "o")]) == EXIT_CONFIG


def test_missing_config_is_io_error(tmp_path):
    assert main(["map", "--config", str(tmp_path / "nope.ini")]) == EXIT_IO


def test_unwritable_output_is_io_error(tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("x")
    assert run("map", "map.ini", blocker / "sub") == EXIT_IO


def test_seed_override_changes_noise(tmp_path):
    text = "[noise]\nsnr_db = 0\n[scatterer.1]\nattenuation_db = 3\ndoppler_hz = 0\n"
    p = write(tmp_path, text)
    main(["detect", "--config", str(p), "--out", str(tmp_path / "a"), "--seed", "1"])
    main(["detect", "--config", str(p), "--out", str(tmp_path / "b"), "--seed", "2"])
    main(["detect", "--config", str(p), "--out", str(tmp_path / "c"), "--seed", "1"])
    a, b, c = ((tmp_path / d / "detect.csv").read_bytes() for d in "abc")
    assert a == c and a != b


def test_headers_name_units(tmp_path):
    run("image", "image.ini", tmp_path)
    header = (tmp_path / "profile.csv").read_text().splitlines()[0]
    assert header == "bin_index,range_m,magnitude,db"


def test_six_significant_digits(tmp_path):
    run("geometry", "geometry.ini", tmp_path)
    row = (tmp_path / "geometry.csv").read_text().splitlines()[1].split(",")
    assert row[4] == "258.629"
    assert all(len(v.lstrip("-").replace(".", "")) <= 6 for v in row[:7])


def test_defaults_parse():
    cfg = parse_config("")
    assert cfg.code.width == 10 and cfg.carrier.carrier_hz == 2.4e9
    assert cfg.scene is None and cfg.plan is None
    assert math.isclose(cfg.receiver.integration_time_s, 0.01)
