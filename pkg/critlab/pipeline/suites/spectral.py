"""Transform suite: Plancherel, round trips, linearity and energy conservation."""

from __future__ import annotations

import numpy as np

from ...spectral import check_resolved, forward, inverse, random_profiles
from ...wave import energy, wave_evolve
from ..config import ExperimentConfig
from .registry import SuiteReport, data_for, engine_for, suite

TRANSFORM_KINDS = ["free1d", "free:2", "free:3", "free:4", "hardy:3:-0.25", "hardy:3:1"]
PLANCHEREL_TOL = 1e-8
LINEARITY_TOL = 1e-12
ENERGY_TOL = 1e-10
ENERGY_TIMES = [0.0, 1.0, 10.0, 100.0, 1e4]


@suite("transforms", "Plancherel, round trip and linearity of every transform; wave energy conservation")
def transforms_suite(config: ExperimentConfig, report: SuiteReport) -> None:
    for spec in TRANSFORM_KINDS:
        engine = engine_for(spec, config)
        functions = random_profiles(engine, config.samples, seed=config.seed)
        worst_plancherel = worst_round_trip = 0.0
        for f in functions:
            check_resolved(f)
            F = forward(f)
            norm = f.norm()
            worst_plancherel = max(worst_plancherel, abs(F.norm() - norm) / norm)
            back = inverse(F)
            worst_round_trip = max(worst_round_trip, (back - f).norm() / norm)
        report.add(f"plancherel[{spec}]", worst_plancherel < PLANCHEREL_TOL, f"max rel error {worst_plancherel:.3e}")
        report.add(f"round_trip[{spec}]", worst_round_trip < PLANCHEREL_TOL, f"max rel error {worst_round_trip:.3e}")

        if len(functions) >= 2:
            f, g = functions[0], functions[1]
            combined = forward(f * 2.0 + g * -3.0).samples
            separate = 2.0 * forward(f).samples - 3.0 * forward(g).samples
            gap = float(np.max(np.abs(combined - separate)) / np.max(np.abs(separate)))
            report.add(f"linearity[{spec}]", gap < LINEARITY_TOL, f"max rel gap {gap:.3e}")

        g = data_for(spec, "bump(3,1)", config)
        e0 = energy(wave_evolve(engine.op, g, 0.0))
        drift = max(abs(energy(wave_evolve(engine.op, g, t)) - e0) / e0 for t in ENERGY_TIMES)
        report.add(f"energy[{spec}]", drift < ENERGY_TOL, f"max rel drift {drift:.3e}")


__all__ = ["TRANSFORM_KINDS", "transforms_suite"]
