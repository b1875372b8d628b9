"""Suites for the range seminorms, the α-interval and the heat decay."""

from __future__ import annotations

import math

import numpy as np

from ...operators import classify, parse_operator
from ...semigroup import (
    green_kernel_alpha,
    heat_decay_rate,
    SeminormVerdict,
    riesz_kernel,
    scan_interval,
    seminorm_freq,
    seminorm_time,
)
from ..config import ExperimentConfig
from .registry import SuiteReport, data_for, suite

ENDPOINT_KINDS = [
    "free1d",
    "free:2",
    "free:3",
    "free:4",
    "free:5",
    "hardy:3:-0.25",
    "hardy:3:0",
    "hardy:3:1",
]
ORACLE_KINDS = ["free1d", "free:2", "free:3", "hardy:3:-0.25", "hardy:3:1"]
ORACLE_DATA = ["gaussian(1)", "bump(3,1)"]
ORACLE_TOL = 1e-3
GREEN_TOL = 1e-4
ENDPOINT_SLACK = 0.03
HEAT_RATE_TOL = 0.03
HEAT_TIMES = np.logspace(0.0, 4.0, 33)
# Line data centred at the origin keeps the even extension a single bump.
ENDPOINT_DATA = {"free1d": "bump(0,2)"}


@suite("interval-endpoints", "Scanned bracket of sup I_S against the analytic endpoint")
def interval_endpoints_suite(config: ExperimentConfig, report: SuiteReport) -> None:
    step = config.alpha_step
    for spec in ENDPOINT_KINDS:
        op = parse_operator(spec)
        expected = classify(op).analytic_sup_alpha
        g = data_for(spec, ENDPOINT_DATA.get(spec, "bump(3,1)"), config)
        estimate = scan_interval(
            op, g, step, expected + 0.2, step, t_min=config.t_min, t_max=config.t_max, max_workers=config.workers
        )
        lo, hi = estimate.sup_bracket
        report.add(
            f"bracket[{spec}]",
            estimate.contains(expected, slack=ENDPOINT_SLACK) and estimate.width <= 2.0 * step + 1e-9,
            f"sup I_S = {expected:g}, bracket [{lo:g}, {hi:g}]",
        )


@suite("oracle-agreement", "Time- and frequency-side seminorms agree wherever both are Finite")
def oracle_agreement_suite(config: ExperimentConfig, report: SuiteReport) -> None:
    for spec in ORACLE_KINDS:
        op = parse_operator(spec)
        sup = classify(op).analytic_sup_alpha
        alphas = [a for a in (0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0) if a <= sup - 0.05]
        for data in ORACLE_DATA:
            g = data_for(spec, data, config)
            worst, compared = 0.0, 0
            for alpha in alphas:
                by_time = seminorm_time(op, g, alpha, t_min=config.t_min, t_max=config.t_max)
                by_freq = seminorm_freq(op, g, alpha)
                if by_time.is_finite and by_freq.is_finite:
                    compared += 1
                    worst = max(worst, abs(by_time.value - by_freq.value) / by_freq.value)
            report.add(
                f"agreement[{spec},{data}]",
                worst < ORACLE_TOL,
                f"{compared} Finite pairs, max rel diff {worst:.3e}",
            )


@suite("green-kernels", "Generalized Green kernels against the Riesz closed form")
def green_kernels_suite(config: ExperimentConfig, report: SuiteReport) -> None:
    op3 = parse_operator("free:3")
    newton = green_kernel_alpha(op3, 0.0, 1.0, 0.5)
    gap = abs(newton.value - 1.0 / (4.0 * math.pi)) * 4.0 * math.pi
    report.add("newton[free:3]", gap < GREEN_TOL, f"rel error {gap:.3e} against 1/(4π)")

    for alpha in (0.3, 0.6):
        result = green_kernel_alpha(op3, 0.0, 1.0, alpha)
        expected = riesz_kernel(3, alpha, 1.0)
        gap = abs(result.value - expected) / expected
        report.add(f"riesz[free:3,alpha={alpha:g}]", gap < GREEN_TOL, f"rel error {gap:.3e}")

    result = green_kernel_alpha(parse_operator("free:2"), 0.0, 1.0, 0.5)
    report.add("divergent[free:2]", result.verdict is SeminormVerdict.DIVERGENT, f"verdict {result.verdict.value}")


@suite("heat-decay", "Fitted heat decay rate against sup I_S")
def heat_decay_suite(config: ExperimentConfig, report: SuiteReport) -> None:
    for spec in ("free1d", "free:3", "hardy:3:-0.25"):
        op = parse_operator(spec)
        expected = classify(op).analytic_sup_alpha
        g = data_for(spec, ENDPOINT_DATA.get(spec, "bump(3,1)"), config)
        rate = heat_decay_rate(op, g, HEAT_TIMES)
        report.add(
            f"rate[{spec}]",
            abs(rate - expected) <= HEAT_RATE_TOL,
            f"fitted {rate:.4f}, expected {expected:g}",
        )
        report.add(f"rate_vs_interval[{spec}]", rate >= expected - 0.05, f"fitted {rate:.4f}")


__all__ = [
    "ENDPOINT_KINDS",
    "interval_endpoints_suite",
    "oracle_agreement_suite",
    "green_kernels_suite",
    "heat_decay_suite",
]
