"""
Experiment runners: figure reproduction, decay sweeps, the identity suite and trace dumps
"""

import logging
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Tuple

import numpy as np
import pandas as pd

from ...shared.errors import ConfigError
from ...shared.types import (
    EXIT_ACCEPTANCE_FAILURE,
    EXIT_OK,
    IDENTITY_TOLERANCE,
    RECURRENCE_TOLERANCE,
    CheckStatus,
)
from ..analysis.rates import decay_slope
from ..bandlimited.kernel import DirichletKernel
from ..bandlimited.presets import preset_signal
from ..bandlimited.signal import TorusSignal, sample
from ..quantizer.filters import build_scheme
from ..quantizer.modulator import QuantizationRun, quantize
from ..reconstruction.error import default_grid_factor, error_report, measure_error
from ..update.plan import UpdatePlan, apply_update
from .config import ExperimentConfig, orders_with_taps
from .reports import ReportBundle, render_csv, render_json, render_line_plot, spike_ratio

logger = logging.getLogger(__name__)

MIN_SWEEP_POINTS = 6
RANDOM_SUITE_SIZE = 50
RANDOM_MAX_BANDWIDTH = 20
RANDOM_EXTRA_SAMPLES = 300
SECOND_ORDER_MIN_SAMPLES = 12

# scheme name -> (comparison, slope threshold)
SLOPE_THRESHOLDS: Dict[str, Tuple[str, float]] = {
    "order1-updated": ("<=", -0.8),
    "order2-updated": ("<=", -1.8),
    "order2-baseline": (">=", -1.3),
}


@dataclass
class ExperimentResult:
    """Rendered files, a JSON-ready summary and the command exit code"""
    summary: Dict[str, Any]
    files: ReportBundle = field(default_factory=dict)
    exit_code: int = EXIT_OK


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: CheckStatus
    detail: str

    @property
    def passed(self) -> bool:
        return self.status == CheckStatus.PASS

    def to_dict(self) -> dict:
        return {"name": self.name, "status": self.status.value, "detail": self.detail}


def _grid_resolution(config: ExperimentConfig, N: int) -> int:
    if config.grid_resolution is not None and config.grid_resolution >= N:
        return config.grid_resolution
    return default_grid_factor() * N


# Figure 1

def _figure1_order(config: ExperimentConfig, signal: TorusSignal, order: int, taps) -> Tuple[pd.DataFrame, dict]:
    N = config.n
    M = _grid_resolution(config, N)
    kernel = DirichletKernel(signal.bandwidth)
    scheme = build_scheme(order, config.tabs, taps)
    plan = apply_update(scheme, sample(signal, N))

    before = error_report(signal, plan.baseline_run, M, kernel)
    after = error_report(signal.shifted(plan.delta), plan.updated_run, M, kernel)
    versus_original = measure_error(signal, plan.updated_run.bits, N, M, kernel)

    f = signal.on_uniform_grid(M)
    frame = pd.DataFrame({
        "t": before.grid_points,
        "f": f,
        "f_r": f - before.signed_error,
        "f_tilde_r": f - versus_original.signed_error,
        "f_minus_f_r": before.signed_error,
        "f_minus_f_tilde_r": versus_original.signed_error,
        "e_tilde": after.pointwise_error,
    })

    delta = plan.delta
    mean_after = versus_original.signed_mean
    ratio_before = spike_ratio(before.signed_error)
    ratio_after = spike_ratio(versus_original.signed_error)
    summary = {
        "order": order,
        "n_samples": N,
        "grid_resolution": M,
        "scheme": scheme.describe(),
        "delta": delta,
        "remainder_before": plan.baseline_remainder,
        "remainder_after": plan.updated_remainder,
        "final_state_before": float(plan.baseline_run.u[-1]),
        "final_state_after": float(plan.updated_run.u[-1]),
        "sup_error_before": before.sup_error,
        "sup_error_after": after.sup_error,
        "sup_error_after_vs_original": versus_original.sup_error,
        "bound_before": before.theoretical_bound,
        "bound_after": after.theoretical_bound,
        "mean_error_after_vs_original": mean_after,
        "spike_ratio_before": ratio_before,
        "spike_ratio_after": ratio_after,
        "shape_checks": {
            "mean_near_minus_delta": abs(mean_after + delta) <= 2 * abs(delta) + 1e-12,
            "no_spike_after_update": ratio_after <= 3.0,
            "spike_without_update": ratio_before > 10.0,
        },
        "update": plan.summary(),
    }
    return frame, summary


def run_figure1(config: ExperimentConfig) -> ExperimentResult:
    """
    Errors before and after the update for every configured order

    Files: figure1_order{m}.csv per order, figure1_panel_a.svg (e~ for all
    orders), figure1_panel_b.svg / figure1_panel_c.svg (f - f_r against
    f - f~_r for orders 1 and 2), figure1_summary.json.
    """
    signal = config.signal(config.n)
    files: ReportBundle = {}
    frames: Dict[int, pd.DataFrame] = {}
    per_order: Dict[str, dict] = {}

    for order, taps in orders_with_taps(config):
        frame, summary = _figure1_order(config, signal, order, taps)
        frames[order] = frame
        per_order[str(order)] = summary
        files[f"figure1_order{order}.csv"] = render_csv(frame)
        logger.info(
            f"figure1 order {order}: sup error {summary['sup_error_before']:.3e} -> "
            f"{summary['sup_error_after']:.3e}, delta={summary['delta']:.3e}"
        )

    t = next(iter(frames.values()))["t"].to_numpy()
    files["figure1_panel_a.svg"] = render_line_plot(
        t,
        {f"order {m}": frame["e_tilde"].to_numpy() for m, frame in frames.items()},
        title="Error after the update", xlabel="t", ylabel="|f~(t) - f~_r(t)|",
    )
    for panel, m in (("b", 1), ("c", 2)):
        if m in frames:
            files[f"figure1_panel_{panel}.svg"] = render_line_plot(
                t,
                {
                    "f - f_r": frames[m]["f_minus_f_r"].to_numpy(),
                    "f - f~_r": frames[m]["f_minus_f_tilde_r"].to_numpy(),
                },
                title=f"Order {m} errors", xlabel="t", ylabel="error",
            )

    summary: Dict[str, Any] = {
        "signal": {"bandwidth": signal.bandwidth, "preset": config.preset if not config.signal_rows else None},
        "orders": per_order,
    }
    if "1" in per_order and "2" in per_order:
        summary["order2_better_after_update"] = per_order["2"]["sup_error_after"] < per_order["1"]["sup_error_after"]
    files["figure1_summary.json"] = render_json(summary)
    return ExperimentResult(summary=summary, files=files)


# Decay sweep

def _sweep_rows(config: ExperimentConfig, order: int, taps, N: int) -> List[dict]:
    signal = config.signal(N)
    grid = sample(signal, N)
    kernel = DirichletKernel(signal.bandwidth)
    M = default_grid_factor() * N
    scheme = build_scheme(order, config.tabs, taps)

    def row(name: str, updated: bool, target: TorusSignal, run: QuantizationRun) -> dict:
        report = error_report(target, run, M, kernel)
        return {
            "scheme": name,
            "order": order,
            "updated": updated,
            "n_samples": N,
            "sup_error": report.sup_error,
            "bound": report.theoretical_bound,
            "stable": run.stable,
        }

    if not config.update:
        return [row(f"order{order}-baseline", False, signal, quantize(scheme, grid))]
    plan = apply_update(scheme, grid)
    return [
        row(f"order{order}-baseline", False, signal, plan.baseline_run),
        row(f"order{order}-updated", True, signal.shifted(plan.delta), plan.updated_run),
    ]


def run_decay_sweep(config: ExperimentConfig, max_workers: Optional[int] = None) -> ExperimentResult:
    """
    Sup error against N for each scheme, with fitted log-log slopes

    Raises:
        ConfigError: for fewer than six N values or a span under one decade
    """
    ns = config.sweep_values()
    if len(ns) < MIN_SWEEP_POINTS:
        raise ConfigError(f"A sweep needs at least {MIN_SWEEP_POINTS} values of N, got {len(ns)}")
    if ns[-1] < 10 * ns[0]:
        raise ConfigError(f"Sweep must span at least one decade, got N from {ns[0]} to {ns[-1]}")
    K = config.signal(ns[0]).bandwidth
    if ns[0] < 2 * K + 1:
        raise ConfigError(f"Sweep value N={ns[0]} is below 2K+1={2 * K + 1}")

    jobs = [(order, taps, N) for order, taps in orders_with_taps(config) for N in ns]
    workers = max_workers or min(8, os.cpu_count() or 1)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(lambda job: _sweep_rows(config, *job), jobs))
    frame = pd.DataFrame([r for rows in results for r in rows])
    frame = frame.sort_values(["scheme", "n_samples"], kind="stable").reset_index(drop=True)

    slopes: Dict[str, float] = {}
    checks: Dict[str, dict] = {}
    for scheme, group in frame.groupby("scheme", sort=True):
        slope = decay_slope(group["n_samples"].to_numpy(), group["sup_error"].to_numpy())
        slopes[scheme] = slope
        if scheme in SLOPE_THRESHOLDS:
            comparison, threshold = SLOPE_THRESHOLDS[scheme]
            passed = slope <= threshold if comparison == "<=" else slope >= threshold
            checks[scheme] = {"slope": slope, "comparison": comparison, "threshold": threshold, "passed": passed}
            if not passed:
                logger.warning(f"{scheme}: slope {slope:.3f} misses {comparison} {threshold}")

    bounded = frame[frame["stable"] & frame["bound"].notna()]
    bound_violations = int((bounded["sup_error"] > bounded["bound"].astype(float)).sum())
    passed = all(c["passed"] for c in checks.values())

    summary = {
        "n_values": ns,
        "slopes": slopes,
        "checks": checks,
        "bound_violations": bound_violations,
        "passed": passed,
    }
    plot_series = {
        scheme: group["sup_error"].to_numpy() for scheme, group in frame.groupby("scheme", sort=True)
    }
    files = {
        "sweep.csv": render_csv(frame),
        "sweep_summary.json": render_json(summary),
        "sweep.svg": render_line_plot(
            np.asarray(ns, dtype=float), plot_series,
            title="Sup error against N", xlabel="N", ylabel="sup error", loglog=True,
        ),
    }
    logger.info(f"Sweep over {len(ns)} values of N: " + ", ".join(f"{k}={v:.3f}" for k, v in slopes.items()))
    return ExperimentResult(
        summary=summary,
        files=files,
        exit_code=EXIT_OK if passed else EXIT_ACCEPTANCE_FAILURE,
    )


# Trace dump

def _trace_frame(run: QuantizationRun) -> pd.DataFrame:
    return pd.DataFrame({
        "n": np.arange(run.n_samples),
        "y": run.samples,
        "q": run.bits,
        "v": run.v,
        "u": run.u,
    })


def dump_traces(config: ExperimentConfig) -> ExperimentResult:
    """n, y, q, v, u traces per order; updated traces too when the update is on"""
    signal = config.signal(config.n)
    grid = sample(signal, config.n)
    files: ReportBundle = {}
    summary: Dict[str, Any] = {}
    for order, taps in orders_with_taps(config):
        scheme = build_scheme(order, config.tabs, taps)
        if config.update:
            plan = apply_update(scheme, grid)
            run = plan.baseline_run
            files[f"quantize_order{order}_updated.csv"] = render_csv(_trace_frame(plan.updated_run))
            summary[str(order)] = plan.summary()
        else:
            run = quantize(scheme, grid)
            summary[str(order)] = {"order": order, "baseline_remainder": run.remainder, "stable": run.stable}
        files[f"quantize_order{order}.csv"] = render_csv(_trace_frame(run))
    return ExperimentResult(summary=summary, files=files)


# Identity suite

def random_bounded_signal(
    rng: np.random.Generator,
    limit: Callable[[int], float],
    min_samples: int = 0,
    jitter: bool = True,
) -> Tuple[TorusSignal, int]:
    """
    Random real signal with K <= 20 and a sample count N

    The samples peak at limit(N), times a uniform factor in [0.1, 1) when
    jitter is on. limit receives N so N-dependent margins can be honored.
    """
    K = int(rng.integers(1, RANDOM_MAX_BANDWIDTH + 1))
    low = max(2 * K + 1, min_samples)
    N = int(rng.integers(low, low + RANDOM_EXTRA_SAMPLES + 1))
    signal = TorusSignal.random(K, rng)
    target = limit(N) * (float(rng.uniform(0.1, 1.0)) if jitter else 1.0)
    return signal.scaled(target / sample(signal, N).max_abs), N


def _check(name: str, ok: bool, detail: str) -> CheckResult:
    return CheckResult(name, CheckStatus.PASS if ok else CheckStatus.FAIL, detail)


def _random_zeroing(
    config: ExperimentConfig,
    order: int,
    limit: Callable[[int], float],
    min_samples: int = 0,
) -> Tuple[bool, float, List[UpdatePlan]]:
    rng = np.random.default_rng(config.seed + order)
    scheme = build_scheme(order, config.tabs)
    plans = []
    worst = 0.0
    for _ in range(RANDOM_SUITE_SIZE):
        signal, N = random_bounded_signal(rng, limit, min_samples=min_samples)
        plan = apply_update(scheme, sample(signal, N))
        plans.append(plan)
        worst = max(worst, abs(plan.updated_remainder), plan.lower_bound_after * N)
    return worst < IDENTITY_TOLERANCE, worst, plans


def run_verification(config: ExperimentConfig) -> List[CheckResult]:
    """Run the identity suite on the configured signal and on seeded random signals"""
    N = config.n
    signal = config.signal(N)
    grid = sample(signal, N)
    kernel = DirichletKernel(signal.bandwidth)
    M = _grid_resolution(config, N)
    results: List[CheckResult] = []

    exact = measure_error(signal, grid.samples, N, M, kernel)
    results.append(_check("interpolation_exactness", exact.sup_error < 1e-8, f"sup error {exact.sup_error:.3e}"))

    plans: Dict[int, UpdatePlan] = {
        m: apply_update(build_scheme(m, config.tabs, config.taps if m >= 3 else None), grid)
        for m in (1, 2, 3)
    }
    runs: List[QuantizationRun] = [r for p in plans.values() for r in (p.baseline_run, p.updated_run)]

    first = plans[1]
    ok1, worst1, random1 = _random_zeroing(config, 1, lambda n: 1.0)
    own1 = max(abs(first.updated_remainder), first.lower_bound_after * N)
    results.append(_check(
        "first_order_zeroing",
        own1 < IDENTITY_TOLERANCE and ok1,
        f"|u~_(N-1)|={own1:.3e}, worst of {RANDOM_SUITE_SIZE} random signals {worst1:.3e}",
    ))

    second = plans[2]
    ok2, worst2, random2 = _random_zeroing(config, 2, lambda n: 1.0 / 3.0 - 2.0 / n, min_samples=SECOND_ORDER_MIN_SAMPLES)
    own2 = abs(second.updated_remainder)
    results.append(_check(
        "second_order_zeroing",
        own2 < IDENTITY_TOLERANCE and ok2,
        f"|Delta u~_(N-1)|={own2:.3e}, worst of {RANDOM_SUITE_SIZE} random signals {worst2:.3e}",
    ))

    drift = max(r.remainder_drift for r in runs)
    results.append(_check(
        "remainder_identity", drift < IDENTITY_TOLERANCE,
        f"max |sum(y) - sum(q) - r| over orders 1-3: {drift:.3e}",
    ))

    violations = []
    for m in (1, 2):
        plan = plans[m]
        for target, run in ((signal, plan.baseline_run), (signal.shifted(plan.delta), plan.updated_run)):
            report = error_report(target, run, M, kernel)
            if run.stable and not report.sup_error <= report.theoretical_bound:
                violations.append(f"order {m}: {report.sup_error:.3e} > {report.theoretical_bound:.3e}")
    results.append(_check(
        "error_bound_validity", not violations,
        "; ".join(violations) or "sup error within bound on every stable run",
    ))

    floor_signal = preset_signal("half-step", N)
    floor_grid = sample(floor_signal, N)
    floor = 1.0 / (2 * N)
    worst_floor = np.inf
    for m in (1, 2):
        plan = apply_update(build_scheme(m, config.tabs), floor_grid)
        for run in (plan.baseline_run, plan.updated_run):
            worst_floor = min(worst_floor, measure_error(floor_signal, run.bits, N, M).sup_error)
    results.append(_check(
        "constant_signal_lower_bound", worst_floor >= floor - 1e-12,
        f"smallest sup error {worst_floor:.6e} against 1/(2N)={floor:.6e}",
    ))

    rng = np.random.default_rng(config.seed)
    first_order = build_scheme(1)
    excess = -np.inf
    for i in range(RANDOM_SUITE_SIZE):
        random_signal, n = random_bounded_signal(rng, lambda _: 1.0, jitter=False)
        a = 0.0 if i % 2 == 0 else 1.0 / n
        run = quantize(first_order, sample(random_signal.scaled(1.0 + a), n))
        excess = max(excess, float(np.max(np.abs(run.u) - (1.0 + np.arange(n) * a))))
    results.append(_check(
        "first_order_state_bound", excess <= 1e-12,
        f"max |u_n| - (1 + n a) = {excess:.3e}",
    ))

    all_plans = list(plans.values()) + random1 + random2
    parity = [p for p in all_plans if p.parity_residual > IDENTITY_TOLERANCE or p.remainder_even_integer != 2 * p.bit_flip_count]
    results.append(_check(
        "parity_identity", not parity,
        f"{len(all_plans) - len(parity)}/{len(all_plans)} update plans satisfy r~ = 2(L - L~)",
    ))

    all_runs = runs + [r for p in random1 + random2 for r in (p.baseline_run, p.updated_run)]
    residual = max(r.recurrence_residual() for r in all_runs)
    results.append(_check(
        "recurrence_residual", residual < RECURRENCE_TOLERANCE,
        f"max |Delta^m u - (y - q)| = {residual:.3e}",
    ))

    for result in results:
        logger.info(f"{result.status.value} {result.name}: {result.detail}")
    return results


def verification_result(checks: List[CheckResult]) -> ExperimentResult:
    passed = all(c.passed for c in checks)
    return ExperimentResult(
        summary={"checks": [c.to_dict() for c in checks], "passed": passed},
        exit_code=EXIT_OK if passed else EXIT_ACCEPTANCE_FAILURE,
    )
