"""Command-line front end.

    dsss-radar detect|interfere|geometry|image|map --config FILE [--out DIR] [--seed N] [--svg]

Exit codes: 0 success, 2 config error, 3 detection failure, 4 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import logging
import sys
from pathlib import Path

from . import svg
from .analytic import TwoTargetCase, resultant_attenuation_db
from .config import ScenarioConfig, load_config
from .errors import ConfigurationError, DetectionError, RadarError
from .imaging import extract_peaks, range_profile, sweep_scene
from .receiver import (
    classify_interference,
    estimate_single_target,
    gain_to_db,
    measure_composite_attenuation,
)
from .scene import (
    Scatterer,
    Scene,
    apply_channel,
    generate_contour_map,
    placement_phase_deg,
    relative_distance_cm,
)
from .waveform import chips_to_baseband

log = logging.getLogger("dsss_radar")

EXIT_OK, EXIT_CONFIG, EXIT_DETECTION, EXIT_IO = 0, 2, 3, 4


def fmt(x) -> str:
    if isinstance(x, str):
        return x
    if isinstance(x, bool):
        return str(int(x))
    if isinstance(x, int):
        return str(x)
    s = format(float(x), ".6g")
    return "0" if s == "-0" else s


def _transmit(cfg: ScenarioConfig):
    c = cfg.code
    return chips_to_baseband(c.build(), c.chip_rate, c.samples_per_chip, c.repetitions)


def _require_scene(cfg, command):
    if cfg.scene is None or not cfg.scene.scatterers:
        raise ConfigurationError(f"{command} needs at least one [scatterer.N] section")
    return cfg.scene


def run_detect(cfg: ScenarioConfig):
    """One single-target experiment per configured scatterer.

    Returns ``(header, rows, failures)``.
    """
    scene = _require_scene(cfg, "detect")
    tx = _transmit(cfg)
    rx_cfg = cfg.receiver
    header = [
        "target", "injected_phase_deg", "measured_phase_deg", "injected_attenuation_db",
        "measured_attenuation_db", "expected_doppler_bias_deg", "detected",
    ]
    rows, failures = [], 0
    for i, sc in enumerate(scene.scatterers, start=1):
        single = dataclasses.replace(scene, scatterers=(sc,))
        rx = apply_channel(tx, single, cfg.carrier, cfg.seed + i - 1)
        try:
            rep = estimate_single_target(
                rx, tx, rx_cfg.integration_time_s, sc.doppler_hz,
                rx_cfg.detection_threshold_db, rx_cfg.floor_cap_db,
            )
        except DetectionError as exc:
            log.warning("target %d: %s", i, exc)
            failures += 1
            rows.append([i, sc.phase_deg, "", sc.attenuation_db, "", "", False])
            continue
        rows.append([
            i, sc.phase_deg, rep.phase_deg, sc.attenuation_db,
            rep.attenuation_db, rep.doppler_bias_deg, True,
        ])
    return header, rows, failures


def run_interfere(cfg: ScenarioConfig):
    """Sweep target 2 away from target 1; signal-domain vs closed form."""
    scene = _require_scene(cfg, "interfere")
    if len(scene.scatterers) != 2:
        raise ConfigurationError(
            f"interfere needs exactly two scatterers, got {len(scene.scatterers)}"
        )
    if cfg.distances_cm is None:
        raise ConfigurationError("interfere needs a [sweep] section")
    t1, t2 = scene.scatterers
    tx = _transmit(cfg)
    k = scene.path_factor
    lam_cm = cfg.carrier.wavelength_m * 100.0
    base_m = t1.distance_m
    cap = cfg.receiver.floor_cap_db

    header = ["relative_distance_cm", "measured_db", "analytic_db", "zone"]
    rows = []
    for j, d_cm in enumerate(cfg.distances_cm):
        moved = Scatterer(
            t2.attenuation_db, t2.phase_deg, t2.doppler_hz, range_m=base_m + d_cm / 100.0
        )
        pair = dataclasses.replace(scene, scatterers=(t1, moved))
        rx = apply_channel(tx, pair, cfg.carrier, cfg.seed + j)
        measured = measure_composite_attenuation(rx, tx, cap)
        case = TwoTargetCase(
            t1.attenuation_db,
            t2.attenuation_db,
            t1.phase_deg + placement_phase_deg(k * base_m * 100.0, lam_cm),
            t2.phase_deg + placement_phase_deg(k * (base_m * 100.0 + d_cm), lam_cm),
        )
        analytic = resultant_attenuation_db(case, cap)
        zone = classify_interference(measured, t1.attenuation_db).zone
        rows.append([float(d_cm), measured, analytic, zone.value])
    return header, rows


def run_geometry(cfg: ScenarioConfig):
    """Predict the interference zone for pairs of rooftop grid points."""
    if not cfg.pairs:
        raise ConfigurationError("geometry needs [geometry] pairs")
    lam_cm = cfg.carrier.wavelength_m * 100.0
    k = cfg.scene.path_factor if cfg.scene is not None else 1
    a = cfg.geometry_attenuation_db
    header = [
        "x_a_ft", "y_a_ft", "x_b_ft", "y_b_ft", "distance_cm", "phase_deg",
        "resultant_db", "predicted_zone",
    ]
    rows = []
    for pa, pb in cfg.pairs:
        d = relative_distance_cm(pa, pb, cfg.geometry_ft_decimals)
        phase = placement_phase_deg(k * d, lam_cm)
        att = resultant_attenuation_db(TwoTargetCase(a, a, 0.0, phase), cfg.receiver.floor_cap_db)
        zone = classify_interference(att, a).zone
        rows.append([pa[0], pa[1], pb[0], pb[1], d, phase, att, zone.value])
    return header, rows


def run_image(cfg: ScenarioConfig):
    """Returns ``(profile, peaks)`` for the configured scene and plan."""
    scene = _require_scene(cfg, "image")
    if cfg.plan is None:
        raise ConfigurationError("image needs a [plan] section")
    resp = sweep_scene(scene, cfg.plan)
    profile = range_profile(resp, cfg.imaging.window)
    peaks = extract_peaks(
        profile, cfg.imaging.min_separation_bins, cfg.imaging.relative_threshold_db
    )
    return profile, peaks


def run_map(cfg: ScenarioConfig):
    m = cfg.map
    if m is None:
        return generate_contour_map()
    template = Scatterer(m.attenuation_db, doppler_hz=0.0)
    return generate_contour_map(m.x_ft, m.y_ft, template, m.path_model)


def _write_csv(path: Path, header, rows):
    with path.open("w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        for row in rows:
            w.writerow([fmt(v) for v in row])


def _execute(command, cfg: ScenarioConfig, out: Path, want_svg: bool) -> int:
    outputs = {}
    status = EXIT_OK
    if command == "detect":
        header, rows, failures = run_detect(cfg)
        outputs["detect.csv"] = (header, rows)
        if failures:
            status = EXIT_DETECTION
    elif command == "interfere":
        header, rows = run_interfere(cfg)
        outputs["interfere.csv"] = (header, rows)
        if want_svg:
            outputs["interfere.svg"] = svg.line_plot(
                [r[0] for r in rows], [r[1] for r in rows],
                "relative distance (cm)", "attenuation (dB)",
                hline=cfg.scene.scatterers[0].attenuation_db,
            )
    elif command == "geometry":
        outputs["geometry.csv"] = run_geometry(cfg)
    elif command == "image":
        profile, peaks = run_image(cfg)
        cap = cfg.receiver.floor_cap_db
        db = [-gain_to_db(m, cap) for m in profile.bins]
        outputs["profile.csv"] = (
            ["bin_index", "range_m", "magnitude", "db"],
            [[i, r, m, v] for i, (r, m, v) in enumerate(zip(profile.ranges_m, profile.bins, db))],
        )
        outputs["peaks.csv"] = (["range_m", "attenuation_db"], [[p.range_m, p.attenuation_db] for p in peaks])
        if want_svg:
            outputs["profile.svg"] = svg.line_plot(
                profile.ranges_m.tolist(), profile.bins.tolist(), "range (m)", "magnitude"
            )
    elif command == "map":
        cmap = run_map(cfg)
        outputs["map.csv"] = (["x_ft", "y_ft", "power_dbm"], list(cmap.rows()))

    out.mkdir(parents=True, exist_ok=True)
    for name, content in outputs.items():
        if isinstance(content, str):
            (out / name).write_text(content)
        else:
            _write_csv(out / name, *content)
        log.info("wrote %s", out / name)
    return status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dsss-radar", description=__doc__.splitlines()[0])
    parser.add_argument("command", choices=["detect", "interfere", "geometry", "image", "map"])
    parser.add_argument("--config", required=True, help="scenario file")
    parser.add_argument("--out", help="output directory (overrides [output] directory)")
    parser.add_argument("--seed", type=int, help="noise seed (overrides [run] seed)")
    parser.add_argument("--svg", action="store_true", help="also write SVG line plots")
    parser.add_argument("-v", "--verbose", action="store_true")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s"
    )
    try:
        cfg = load_config(args.config)
    except OSError as exc:
        log.error("cannot read config: %s", exc)
        return EXIT_IO
    except ConfigurationError as exc:
        log.error("config error: %s", exc)
        return EXIT_CONFIG
    if args.seed is not None:
        if args.seed < 0:
            log.error("config error: --seed must be >= 0")
            return EXIT_CONFIG
        cfg = dataclasses.replace(cfg, seed=args.seed)
    out = Path(args.out or cfg.output_dir)
    try:
        return _execute(args.command, cfg, out, args.svg or cfg.svg)
    except ConfigurationError as exc:
        log.error("config error: %s", exc)
        return EXIT_CONFIG
    except OSError as exc:
        log.error("I/O error: %s", exc)
        return EXIT_IO
    except RadarError as exc:
        log.error("%s", exc)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
