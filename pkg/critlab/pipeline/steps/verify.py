"""Verify step running the registered property suites."""

from __future__ import annotations

from typing import Any, Optional

from absl import logging

from ...io import write_csv
from ..context import ExperimentContext
from ..step import register_step
from ..suites import list_suites, run_suite


@register_step("verify")
class VerifyStep:
    """Run the configured suites (all when none are named) into ``verify_report.csv``.

    Failed checks become violations and stopped suites become guard trips.
    """

    def __init__(self, suites: Optional[list[str]] = None):
        self.suites = suites

    def process(self, context: ExperimentContext, **kwargs: Any) -> ExperimentContext:
        config = context.config
        names = self.suites or config.suites or [name for name, _ in list_suites()]
        reports = []
        for name in names:
            logging.info("Running verify suite %s", name)
            report = run_suite(name, config)
            reports.append(report)
            context.violations.extend(f"{name}/{c.check}: {c.detail}" for c in report.failures)
            context.guard_trips.extend(f"{name}: {trip}" for trip in report.guard_trips)

        rows = [[c.suite, c.check, c.passed, c.detail] for report in reports for c in report.checks]
        rows += [[report.suite, "guard", False, trip] for report in reports for trip in report.guard_trips]
        path = write_csv(context.output_path("verify_report.csv"), ["suite", "check", "passed", "detail"], rows)
        context.results["verify"] = reports
        context.artifacts["verify_csv"] = str(path)
        return context


__all__ = ["VerifyStep"]
