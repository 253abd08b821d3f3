"""
overalg.verification.suites
===========================

Verification suites over random inputs and sample points.

Each suite receives its own generator ``default_rng((seed, index))``, where ``index`` is the
position of the suite in ``SUITE_ORDER``, so that a suite produces the same records whether it
runs alone or within ``all``.

Suites
------
intertwine
    ``J(X f) = S (J f)`` for the six generator pairs, on real and complex spectral values.
kernel-identity
    Differential identity of the kernel against ``Q0`` at random points of the bidisk.
parseval
    Constancy of the Parseval ratio, polarised version and closed-form constant.
eigen
    Eigen-equation ``Q0 g_k = (2k + alpha) g_k`` on the zero mode.
hahn
    Continuous dual Hahn parameters of ``Q0`` and orthogonality of the zero-mode profiles.

A suite interrupted by a numerical error (e.g. a truncation that fails its tail bound) yields a
failed report with a single ``aborted`` record carrying the error.

Functions
---------
run_suite
    Run a single suite.
run_suites
    Run suites in a thread pool and assemble their reports in suite order.
"""
import itertools
import logging
import math
import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Dict, List, Sequence

import numpy as np

from overalg.core.errors.numerics import NumericsError
from overalg.handling.run_config import RunConfig
from overalg.model.holomorphic import CoefMatrix, inner_product
from overalg.spectral.hahn import (
    MAX_DEGREE, cdh_match_report, mode_zero_orthogonality, q0_eigen_residual
)
from overalg.spectral.operators import (
    PAIRS, SamplePoint, kernel_identity_residual, sample_points, verify_intertwine
)
from overalg.spectral.plancherel import cross_parseval, parseval_check, parseval_constant
from overalg.verification.catalog import SUITE_ORDER, Suite
from overalg.verification.report import CheckRecord, SuiteReport

__all__ = ["Suite", "SUITE_ORDER", "RUNNERS", "run_suite", "run_suites"]

logger = logging.getLogger(__name__)

INTERTWINE_INPUTS = 20
REAL_S_RANGE = (0.1, 6.0)
COMPLEX_POINTS = 20
COMPLEX_S_RANGE = (0.0, 6.0)
COMPLEX_IMAG_RANGE = (-1.0, 1.0)
FIRST_ORDER_TOL = 1e-10

KERNEL_POINTS = 200
KERNEL_S_RANGE = (0.1, 5.0)
KERNEL_DISC_RADIUS = 0.8

PARSEVAL_INPUTS = 10
PARSEVAL_SPREAD_TOL = 1e-7
PARSEVAL_QUADRATURE_TOL = 1e-11

EIGEN_MAX_K = 10
EIGEN_S_RANGE = (0.2, 6.0)
ORTHOGONALITY_MAX_K = 6


def _record(config: RunConfig, pair: str, residual: float, tolerance: float,
            num_points: int, **details) -> CheckRecord:
    return CheckRecord(
        pair=pair,
        alpha=config.alpha,
        num_points=num_points,
        max_residual=float(residual),
        pole_margin=config.pole_margin,
        seed=config.seed,
        passed=bool(residual <= tolerance),
        details=details,
    )


def _random_inputs(config: RunConfig, rng: np.random.Generator, n: int) -> List[CoefMatrix]:
    return [CoefMatrix.random(config.alpha, config.degree, rng) for _ in range(n)]


def _disc_point(rng: np.random.Generator, radius: float) -> complex:
    """Uniform point of the closed disc of given radius."""
    return complex(radius * math.sqrt(rng.random()) * np.exp(2j * np.pi * rng.random()))


# --- Suites ---------------------------------------------------------------------------------------

def _intertwine_points(config: RunConfig, rng: np.random.Generator) -> List[SamplePoint]:
    """``num_points`` real spectral values, then a block of complex ones."""
    real = sample_points(rng, config.num_points, s_range=REAL_S_RANGE, imag_range=(0.0, 0.0),
                         margin=config.pole_margin)
    shifted = sample_points(rng, COMPLEX_POINTS, s_range=COMPLEX_S_RANGE,
                            imag_range=COMPLEX_IMAG_RANGE, margin=config.pole_margin)
    return real + shifted


def _intertwine(config: RunConfig, rng: np.random.Generator) -> SuiteReport:
    inputs = _random_inputs(config, rng, INTERTWINE_INPUTS)
    points = _intertwine_points(config, rng)
    records = []
    for algebra_op, spectral_op in PAIRS.items():
        residuals = [verify_intertwine(f, algebra_op, spectral_op, points) for f in inputs]
        first_order = spectral_op.value.startswith("D")
        tolerance = min(config.tolerance, FIRST_ORDER_TOL) if first_order else config.tolerance
        records.append(_record(config, f"{algebra_op.value}/{spectral_op.value}", max(residuals),
                               tolerance, len(points), per_input=residuals, tolerance=tolerance))
    return SuiteReport(Suite.INTERTWINE.value, records, all(r.passed for r in records))


def _kernel_identity(config: RunConfig, rng: np.random.Generator) -> SuiteReport:
    residuals = []
    for _ in range(KERNEL_POINTS):
        point = SamplePoint.checked(rng.uniform(0, 2 * np.pi), rng.uniform(*KERNEL_S_RANGE),
                                    config.pole_margin)
        z = _disc_point(rng, KERNEL_DISC_RADIUS)
        u = _disc_point(rng, KERNEL_DISC_RADIUS)
        residuals.append(kernel_identity_residual(point, config.alpha, z=z, u=u))
    record = _record(config, "kernel/Q0", max(residuals), config.tolerance, KERNEL_POINTS)
    return SuiteReport(Suite.KERNEL_IDENTITY.value, [record], record.passed)


def _parseval(config: RunConfig, rng: np.random.Generator) -> SuiteReport:
    inputs = _random_inputs(config, rng, PARSEVAL_INPUTS)
    constant = parseval_constant(config.alpha)
    results = [parseval_check(f, config.s_max, PARSEVAL_QUADRATURE_TOL) for f in inputs]
    ratios = np.array([r.ratio for r in results], dtype=float)
    mean = float(np.mean(ratios))
    spread = float((ratios.max() - ratios.min()) / abs(mean)) if mean else float("inf")

    cross = []
    for f, g in itertools.pairwise(inputs):
        result = cross_parseval(f, g, config.s_max, PARSEVAL_QUADRATURE_TOL)
        scale = constant * np.sqrt(inner_product(f, f).real * inner_product(g, g).real)
        cross.append(float(abs(result.value - constant * result.norm2) / scale))

    records = [
        _record(config, "ratio spread", spread, PARSEVAL_SPREAD_TOL, PARSEVAL_INPUTS,
                ratios=ratios.tolist(), s_max=[r.s_max for r in results]),
        _record(config, "polarised", max(cross), PARSEVAL_SPREAD_TOL, len(cross)),
        _record(config, "closed form", abs(mean / constant - 1), PARSEVAL_SPREAD_TOL,
                PARSEVAL_INPUTS, mean_ratio=mean),
    ]
    extras = {"constant": constant, "spread_tolerance": PARSEVAL_SPREAD_TOL}
    return SuiteReport(Suite.PARSEVAL.value, records, all(r.passed for r in records), extras)


def _eigen(config: RunConfig, rng: np.random.Generator) -> SuiteReport:
    grid = np.linspace(*EIGEN_S_RANGE, config.num_points)
    residuals = {k: q0_eigen_residual(k, config.alpha, grid) for k in range(EIGEN_MAX_K + 1)}
    record = _record(config, "Q0 g_k", max(residuals.values()), config.tolerance, len(grid),
                     per_degree=list(residuals.values()))
    return SuiteReport(Suite.EIGEN.value, [record], record.passed)


def _hahn(config: RunConfig, rng: np.random.Generator) -> SuiteReport:
    n_max = min(max(config.degree, 1), MAX_DEGREE)
    report = cdh_match_report(config.alpha, n_max)
    best = report.best
    match = _record(config, "continuous dual Hahn", best.max_residual, config.tolerance,
                    n_max + 1, params=list(best.params.as_tuple()), slope=best.slope,
                    intercept=best.intercept)
    k_max = min(n_max, ORTHOGONALITY_MAX_K)
    overlaps = [mode_zero_orthogonality(k, l, config.alpha)
                for k, l in itertools.combinations(range(k_max + 1), 2)]
    ortho = _record(config, "zero-mode orthogonality", max(overlaps), config.tolerance, k_max + 1)
    records = [match, ortho]
    return SuiteReport(Suite.HAHN.value, records, all(r.passed for r in records),
                       {"match": report.to_dict()})


RUNNERS: Dict[Suite, Callable[[RunConfig, np.random.Generator], SuiteReport]] = {
    Suite.INTERTWINE: _intertwine,
    Suite.KERNEL_IDENTITY: _kernel_identity,
    Suite.PARSEVAL: _parseval,
    Suite.EIGEN: _eigen,
    Suite.HAHN: _hahn,
}


# --- Execution ------------------------------------------------------------------------------------

def _aborted(suite: Suite, config: RunConfig, exc: NumericsError) -> SuiteReport:
    record = CheckRecord(
        pair="aborted",
        alpha=config.alpha,
        num_points=0,
        max_residual=math.inf,
        pole_margin=config.pole_margin,
        seed=config.seed,
        passed=False,
        details={"error": type(exc).__name__, "message": str(exc)},
    )
    return SuiteReport(suite.value, [record], False)


def run_suite(suite: Suite | str, config: RunConfig) -> SuiteReport:
    """
    Run one concrete suite with its dedicated generator.

    Numerical errors raised by the suite are turned into a failed report.

    Raises
    ------
    ValueError
        If ``suite`` is ``all`` or not a suite name.
    """
    suite = Suite(suite)
    if suite is Suite.ALL:
        raise ValueError("'all' is not a concrete suite; use run_suites.")
    rng = np.random.default_rng((config.seed, SUITE_ORDER.index(suite)))
    try:
        report = RUNNERS[suite](config, rng)
    except NumericsError as exc:
        logger.warning("Suite %s aborted: %s", suite.value, exc)
        return _aborted(suite, config, exc)
    logger.debug("Suite %s: %s", suite.value,
                 ", ".join(f"{r.pair}={r.max_residual:.2e}" for r in report.records))
    return report


def _max_workers(config: RunConfig, n_suites: int) -> int:
    threads = config.threads or os.cpu_count() or 1
    return max(1, min(threads, n_suites))


def run_suites(suites: Sequence[Suite | str], config: RunConfig) -> List[SuiteReport]:
    """
    Run the selected suites in a thread pool.

    ``all`` expands to every suite; duplicates are run once. Reports are returned in suite
    order regardless of completion order.
    """
    selected = {s for name in suites for s in Suite(name).expand()}
    ordered = [s for s in SUITE_ORDER if s in selected]
    workers = _max_workers(config, len(ordered))
    logger.info("Running %d suite(s) on %d thread(s)", len(ordered), workers)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda s: run_suite(s, config), ordered))
