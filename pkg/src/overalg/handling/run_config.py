"""
overalg.handling.run_config
===========================

Run configuration of the verification suites.

Values are resolved from the following sources, lowest precedence first:

1. defaults declared in the schema;
2. a YAML file;
3. the ``OVERALG_THREADS`` environment variable;
4. explicit overrides (command-line flags).

All values are validated together, so that every invalid entry is reported at once.

Classes
-------
RunConfig
    Frozen, validated run configuration.

Functions
---------
run_config_schema
    Declarative schema of the run parameters.
build_run_config
    Resolve and validate a configuration from its sources.
"""
import logging
import os
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Any, Dict, Mapping, Optional

from overalg.core.parameters import Param, ParameterSet
from overalg.handling.config_io import read_run_section
from overalg.validation.rules import CustomRule, OptionRule, RangeRule, TypeRule
from overalg.validation.validator import Validator
from overalg.verification.catalog import SUITE_NAMES

logger = logging.getLogger(__name__)

THREADS_ENV = "OVERALG_THREADS"


@dataclass(frozen=True)
class RunConfig:
    """
    Validated run configuration.

    Attributes
    ----------
    alpha : float
        Weight, ``> 1``.
    degree : int
        Degree bound of the random test vectors in each variable.
    num_points : int
        Number of sample points per check.
    pole_margin : float
        Exclusion radius around the coefficient poles, in ``(0, 0.5)``.
    seed : int
        Seed of the random generators.
    tolerance : float
        Largest residual accepted by a check.
    s_max : float | str
        Truncation of the spectral integrals, or ``"auto"``.
    output : str, optional
        Path of the JSON report.
    threads : int
        Worker threads for the suites (0 = automatic).
    suite : str
        Suite to run, one of the names in ``SUITE_NAMES`` (``"all"`` runs every suite).
    """
    alpha: float = 2.0
    degree: int = 6
    num_points: int = 100
    pole_margin: float = 0.05
    seed: int = 0
    tolerance: float = 1e-9
    s_max: float | str = "auto"
    output: Optional[str] = None
    threads: int = 0
    suite: str = "all"

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


def _is_auto_or_positive(value: Any) -> bool:
    if value == "auto":
        return True
    return isinstance(value, (int, float)) and not isinstance(value, bool) and value > 0


def run_config_schema() -> ParameterSet:
    """Parameters of a run with their defaults and constraints."""
    defaults = RunConfig()
    number = (int, float)
    return ParameterSet(
        alpha=Param(defaults.alpha, [TypeRule(number), RangeRule(gt=1)]),
        degree=Param(defaults.degree, [TypeRule(int), RangeRule(ge=0)]),
        num_points=Param(defaults.num_points, [TypeRule(int), RangeRule(ge=1)]),
        pole_margin=Param(defaults.pole_margin, [TypeRule(number), RangeRule(gt=0, lt=0.5)]),
        seed=Param(defaults.seed, [TypeRule(int), RangeRule(ge=0)]),
        tolerance=Param(defaults.tolerance, [TypeRule(number), RangeRule(gt=0)]),
        s_max=Param(defaults.s_max, [CustomRule(_is_auto_or_positive)]),
        output=Param(defaults.output, [TypeRule((str, type(None)))]),
        threads=Param(defaults.threads, [TypeRule(int), RangeRule(ge=0)]),
        suite=Param(defaults.suite, [OptionRule(SUITE_NAMES)]),
    )


def _threads_from_env(environ: Mapping[str, str]) -> Any:
    raw = environ.get(THREADS_ENV)
    if raw is None or raw.strip() == "":
        return None
    try:
        return int(raw)
    except ValueError:
        return raw  # rejected by the type rule


def build_run_config(
    overrides: Optional[Mapping[str, Any]] = None,
    config_path: Optional[str | Path] = None,
    environ: Optional[Mapping[str, str]] = None,
) -> RunConfig:
    """
    Resolve a run configuration from its sources and validate it.

    Parameters
    ----------
    overrides : Mapping[str, Any], optional
        Highest-precedence values; ``None`` entries are ignored.
    config_path : str | Path, optional
        YAML file with run parameters.
    environ : Mapping[str, str], optional
        Environment (defaults to ``os.environ``).

    Returns
    -------
    RunConfig
        Validated configuration.

    Raises
    ------
    UnknownParameterError
        If a source names an undeclared parameter.
    GlobalValidationError
        If any value violates its constraints.
    """
    params = run_config_schema()
    if config_path is not None:
        params.update_values(read_run_section(config_path), source=str(config_path))
    threads = _threads_from_env(os.environ if environ is None else environ)
    if threads is not None:
        params.set("threads", threads)
    if overrides:
        params.update_values({k: v for k, v in overrides.items() if v is not None},
                             source="overrides")
    Validator(params, strict=True).validate()
    values = params.to_values()
    if values["output"] is not None:
        values["output"] = str(values["output"])
    if isinstance(values["alpha"], int):
        values["alpha"] = float(values["alpha"])
    config = RunConfig(**values)
    logger.debug("Resolved run configuration %s", config)
    return config
