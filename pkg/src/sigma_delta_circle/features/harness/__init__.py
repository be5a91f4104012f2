"""
Experiment harness: configuration, runners and report writers
"""

from .config import DEFAULT_LAMBDAS, ExperimentConfig, load_experiment_config
from .engine import HarnessEngine
from .reports import render_csv, render_json, render_line_plot, spike_ratio, write_bundle, write_bundle_async
from .runners import (
    SLOPE_THRESHOLDS,
    CheckResult,
    ExperimentResult,
    dump_traces,
    random_bounded_signal,
    run_decay_sweep,
    run_figure1,
    run_verification,
    verification_result,
)

__all__ = [
    'DEFAULT_LAMBDAS',
    'ExperimentConfig',
    'load_experiment_config',
    'HarnessEngine',
    'render_csv',
    'render_json',
    'render_line_plot',
    'spike_ratio',
    'write_bundle',
    'write_bundle_async',
    'SLOPE_THRESHOLDS',
    'CheckResult',
    'ExperimentResult',
    'dump_traces',
    'random_bounded_signal',
    'run_decay_sweep',
    'run_figure1',
    'run_verification',
    'verification_result',
]
