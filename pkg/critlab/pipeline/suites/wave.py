"""Suites for the wave growth laws and the heat/wave/range identities."""

from __future__ import annotations

import math

import numpy as np

from ...operators import classify, parse_operator
from ...semigroup import NotApplicableError, seminorm_freq
from ...spectral import ProfileSpline, random_profiles
from ...wave import (
    GrowthKind,
    INTERPOLATION_SLACK,
    TRANSMUTATION_TOL,
    decay_curve,
    interpolation_check,
    reduce_to_2d,
    transmutation_check,
    wave_norm,
)
from ..config import ExperimentConfig
from .registry import SuiteReport, data_for, engine_for, suite

BOUND_KINDS = ["free1d", "free:2", "free:3", "hardy:3:-0.25", "hardy:3:0"]
BOUND_ALPHAS = [0.1, 0.2, 0.3, 0.4, 0.5]
IDENTITY_KINDS = ["free1d", "free:2", "free:3", "hardy:3:-0.25", "hardy:3:1"]
IDENTITY_DATA = ["gaussian(1)", "bump(3,1)"]
LOG_GROWTH_TIMES = (1e2, 1e3)
LOG_GROWTH_TOL = 0.10
LINE_EXPONENT_TOL = 0.02
MODEL_MARGIN = 10.0


@suite("decay-bound", "Weighted wave norms stay below the range-seminorm bound")
def decay_bound_suite(config: ExperimentConfig, report: SuiteReport) -> None:
    times = config.wave_times()
    for spec in BOUND_KINDS:
        op = parse_operator(spec)
        sup = classify(op).analytic_sup_alpha
        g = data_for(spec, "bump(3,1)", config)
        curve = decay_curve(op, g, times, max_workers=config.workers)
        t = np.asarray(curve.times)
        n = np.asarray(curve.norms)
        for alpha in (a for a in BOUND_ALPHAS if a < sup):
            seminorm = seminorm_freq(op, g, alpha)
            if not seminorm.is_finite:
                continue
            weighted = float(np.max(t ** (2.0 * alpha - 1.0) * n))
            bound = 2.0 ** (0.5 + alpha * (1.0 - 2.0 * alpha)) * seminorm.value
            report.add(
                f"bound[{spec},alpha={alpha:g}]",
                weighted <= bound + 1e-8,
                f"sup t^(2a-1)|W| = {weighted:.6g}, bound {bound:.6g}",
            )


@suite("subcritical-boundedness", "Subcritical radial wave norms stay bounded")
def subcritical_boundedness_suite(config: ExperimentConfig, report: SuiteReport) -> None:
    for spec in ("free:3", "hardy:3:0"):
        op = parse_operator(spec)
        curve = decay_curve(op, data_for(spec, "bump(3,1)", config), config.wave_times(), max_workers=config.workers)
        bounded = curve.residuals[GrowthKind.BOUNDED.value]
        others = [m.residual for m in curve.candidates if m.kind is not GrowthKind.BOUNDED]
        report.add(
            f"bounded[{spec}]",
            curve.model.kind is GrowthKind.BOUNDED and all(r >= MODEL_MARGIN * bounded for r in others),
            f"best {curve.model.kind.value}, residuals {curve.residuals}",
        )


@suite("critical-log-growth", "Critical Hardy wave norms grow like sqrt(log t) and match the planar reduction")
def critical_log_growth_suite(config: ExperimentConfig, report: SuiteReport) -> None:
    op = parse_operator("hardy:3:-0.25")
    g = data_for(op.spec, "bump(2.5,1)", config)
    plane = reduce_to_2d(3, g)
    spline = ProfileSpline(g)
    plane_spline = ProfileSpline(plane)
    # ω_2 / ω_1 between the sphere measures of R³ and R²
    ratio = op.sphere_measure / plane.op.sphere_measure

    shares = []
    for t in LOG_GROWTH_TIMES:
        n = wave_norm(op, g, t, spline)
        n_plane = wave_norm(plane.op, plane, t, plane_spline)
        gap = abs(n * n / (n_plane * n_plane) - ratio) / ratio
        report.add(f"reduction[t={t:g}]", gap < 1e-10, f"rel gap {gap:.3e}")
        shares.append(n * n / math.log(t))
    spread = abs(shares[1] - shares[0]) / shares[1]
    report.add("sqrt_log_rate", spread < LOG_GROWTH_TOL, f"|W|²/log t spread {spread:.3%}")

    curve = decay_curve(plane.op, plane, config.wave_times(), max_workers=config.workers)
    report.add("planar_model", curve.model.kind is GrowthKind.SQRT_LOG, f"best {curve.model.kind.value}")


@suite("line-growth", "Line wave norms grow like t^(1/2) unless the data integrates to zero")
def line_growth_suite(config: ExperimentConfig, report: SuiteReport) -> None:
    op = parse_operator("free1d")
    curve = decay_curve(op, data_for(op.spec, "bump(0,2)", config), config.wave_times(), max_workers=config.workers)
    exponent = curve.model.parameter
    report.add(
        "sqrt_t_growth",
        curve.model.kind is GrowthKind.POWER and abs(exponent - 0.5) <= LINE_EXPONENT_TOL,
        f"best {curve.model.kind.value} with parameter {exponent:.4f}",
    )
    cancelled = decay_curve(op, data_for(op.spec, "dipole(4,10,2)", config), config.wave_times(), max_workers=config.workers)
    report.add("zero_mean_bounded", cancelled.model.kind is GrowthKind.BOUNDED, f"best {cancelled.model.kind.value}")


@suite("transmutation", "Heat flow recovered from the wave flow by transmutation")
def transmutation_suite(config: ExperimentConfig, report: SuiteReport) -> None:
    for spec in IDENTITY_KINDS:
        op = parse_operator(spec)
        for data in IDENTITY_DATA:
            g = data_for(spec, data, config)
            worst = max(transmutation_check(op, g, t) for t in config.transmute_times)
            report.add(f"transmutation[{spec},{data}]", worst < TRANSMUTATION_TOL, f"max rel error {worst:.3e}")


@suite("interpolation", "Interpolation inequality between L² and R(S^α)")
def interpolation_suite(config: ExperimentConfig, report: SuiteReport) -> None:
    for spec in IDENTITY_KINDS:
        op = parse_operator(spec)
        functions = random_profiles(engine_for(spec, config), config.samples, seed=config.seed)
        for alpha in (0.1, 0.25, 0.4):
            worst, skipped = 0.0, 0
            for f in functions:
                try:
                    worst = max(worst, interpolation_check(op, f, alpha).ratio)
                except NotApplicableError:
                    skipped += 1
            report.add(
                f"inequality[{spec},alpha={alpha:g}]",
                worst <= 1.0 + INTERPOLATION_SLACK,
                f"max ratio {worst:.6f}, {skipped} not applicable",
            )
        equality = interpolation_check(op, functions[0], 0.5)
        report.add(
            f"equality[{spec}]",
            abs(equality.ratio - 1.0) <= INTERPOLATION_SLACK,
            f"ratio at alpha = 1/2 is {equality.ratio:.9f}",
        )


__all__ = [
    "decay_bound_suite",
    "subcritical_boundedness_suite",
    "critical_log_growth_suite",
    "line_growth_suite",
    "transmutation_suite",
    "interpolation_suite",
]
