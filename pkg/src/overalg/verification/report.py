"""
overalg.verification.report
===========================

Records produced by the verification suites and their JSON serialization.

Apart from the ``generated_at`` timestamp, the content of a report is a deterministic function of
the run configuration.

Classes
-------
CheckRecord
    Outcome of one check.
SuiteReport
    Outcomes of one suite.
Report
    Outcomes of a run.

Functions
---------
to_jsonable
    Convert nested results into JSON-compatible values.
write_report
    Write a report as JSON.
"""
import json
import logging
import math
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Dict, List, Optional

import numpy as np

logger = logging.getLogger(__name__)

REPORT_SCHEMA = 1
JSON_INDENT = 2


def to_jsonable(value: Any) -> Any:
    """
    Convert a nested structure of results into values accepted by ``json``.

    - numpy scalars and arrays become Python numbers and lists;
    - complex numbers become ``[real, imag]`` pairs;
    - non-finite floats become ``None``.
    """
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, np.ndarray):
        return to_jsonable(value.tolist())
    if isinstance(value, np.generic):
        return to_jsonable(value.item())
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, complex):
        return [to_jsonable(value.real), to_jsonable(value.imag)]
    if isinstance(value, float):
        return value if math.isfinite(value) else None
    return str(value)


@dataclass(frozen=True)
class CheckRecord:
    """
    Outcome of one check.

    Attributes
    ----------
    pair : str
        Name of the check (e.g. ``"M0/Q0"``).
    alpha : float
        Weight.
    num_points : int
        Number of sample points.
    max_residual : float
        Largest residual over inputs and points.
    pole_margin : float
        Exclusion radius around the coefficient poles.
    seed : int
        Seed of the run.
    passed : bool
        Whether the residual is within the tolerance of the check.
    details : Dict[str, Any]
        Check-specific values.
    """
    pair: str
    alpha: float
    num_points: int
    max_residual: float
    pole_margin: float
    seed: int
    passed: bool
    details: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "pair": self.pair,
            "alpha": self.alpha,
            "num_points": self.num_points,
            "max_residual": self.max_residual,
            "pole_margin": self.pole_margin,
            "seed": self.seed,
            "passed": self.passed,
            "details": self.details,
        }


@dataclass(frozen=True)
class SuiteReport:
    """Records of one suite, with suite-level values in ``extras``."""
    suite: str
    records: List[CheckRecord]
    passed: bool
    extras: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "suite": self.suite,
            "records": [r.to_dict() for r in self.records],
            "passed": self.passed,
            "extras": self.extras,
        }


@dataclass(frozen=True)
class Report:
    """
    Outcomes of a verification run.

    Attributes
    ----------
    config : Dict[str, Any]
        Run configuration.
    suites : List[SuiteReport]
        Suite reports, in suite order.
    passed : bool
        Whether every suite passed.
    schema : int
        Version of the report layout.
    generated_at : str, optional
        ISO timestamp, set when the report is written.
    """
    config: Dict[str, Any]
    suites: List[SuiteReport]
    passed: bool
    schema: int = REPORT_SCHEMA
    generated_at: Optional[str] = None

    @classmethod
    def from_suites(cls, config: Dict[str, Any], suites: List[SuiteReport]) -> "Report":
        return cls(config, suites, all(s.passed for s in suites))

    def to_dict(self) -> Dict[str, Any]:
        return to_jsonable({
            "schema": self.schema,
            "config": self.config,
            "seed": self.config.get("seed"),
            "suites": [s.to_dict() for s in self.suites],
            "passed": self.passed,
            "generated_at": self.generated_at,
        })


def write_report(report: Report, path: str | Path, include_timestamp: bool = True) -> Path:
    """
    Write a report as JSON with sorted keys.

    Parameters
    ----------
    report : Report
        Report to write.
    path : str | Path
        Destination; parent directories are created.
    include_timestamp : bool, default True
        Fill ``generated_at`` with the current UTC time (otherwise ``null``).

    Returns
    -------
    Path
        Path of the written file.
    """
    path = Path(path)
    data = report.to_dict()
    data["generated_at"] = (datetime.now(timezone.utc).isoformat(timespec="seconds")
                            if include_timestamp else None)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(data, sort_keys=True, indent=JSON_INDENT) + "\n", encoding="utf-8")
    logger.info("Report written to %s", path)
    return path
