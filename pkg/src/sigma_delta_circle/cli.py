"""Command line entry point: figure1, sweep, quantize, verify and serve."""

import functools
import sys
from pathlib import Path
from typing import Any, Dict, Optional, Tuple

import click

from .shared.config import configure_logging, load_settings
from .shared.errors import ConfigError, SigmaDeltaError
from .shared.types import EXIT_CONFIG_ERROR, EXIT_OK, SignalPreset
from .features.harness.config import ExperimentConfig, load_experiment_config
from .features.harness.reports import write_bundle
from .features.harness.runners import (
    ExperimentResult,
    dump_traces,
    run_decay_sweep,
    run_figure1,
    run_verification,
    verification_result,
)


def _parse_sweep(value: Optional[str]) -> Optional[Tuple[int, ...]]:
    if not value:
        return None
    try:
        return tuple(int(part) for part in value.replace(" ", "").split(",") if part)
    except ValueError:
        raise ConfigError(f"--sweep expects comma separated integers, got {value!r}")


def experiment_options(command):
    """Options shared by every experiment command; they override the config file"""
    options = [
        click.option("--config", "config_path", type=click.Path(dir_okay=False, path_type=Path), default=None,
                     help="YAML experiment config"),
        click.option("--preset", type=click.Choice(SignalPreset.values()), default=None, help="Named input signal"),
        click.option("--order", "orders", type=int, multiple=True, help="Scheme order (repeatable)"),
        click.option("--tabs", type=int, default=None, help="Tab count k of the second order filter"),
        click.option("--n", "n", type=int, default=None, help="Number of samples N"),
        click.option("--sweep", default=None, help="Comma separated N values for the decay sweep"),
        click.option("--update/--no-update", default=None, help="Apply the constant update"),
        click.option("--out", type=click.Path(file_okay=False, path_type=Path), default=None,
                     help="Output directory"),
        click.option("--seed", type=int, default=None, help="Seed for randomized suites"),
    ]
    for option in reversed(options):
        command = option(command)
    return command


def _load_config(ctx: click.Context, config_path: Optional[Path], **flags: Any) -> ExperimentConfig:
    overrides: Dict[str, Any] = dict(flags)
    overrides["orders"] = overrides.get("orders") or None
    overrides["sweep"] = _parse_sweep(overrides.get("sweep"))
    base = ExperimentConfig(out=ctx.obj["settings"].output_dir)
    return load_experiment_config(config_path, overrides, base)


def _finish(ctx: click.Context, result: ExperimentResult, out: Path) -> None:
    for path in write_bundle(out, result.files).values():
        click.echo(path)
    ctx.exit(result.exit_code)


def handle_errors(command):
    """Map configuration and domain errors to exit code 1"""
    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except ConfigError as e:
            click.echo(f"Configuration error: {e}", err=True)
            raise SystemExit(EXIT_CONFIG_ERROR)
        except SigmaDeltaError as e:
            click.echo(f"Error: {e}", err=True)
            raise SystemExit(EXIT_CONFIG_ERROR)
    return wrapper


@click.group()
@click.option("--log-level", default=None, help="Logging level (default from SIGMA_DELTA_LOG_LEVEL or INFO)")
@click.option("--env-file", type=click.Path(dir_okay=False), default=None, help="Optional .env file")
@click.version_option(package_name="sigma-delta-circle")
@click.pass_context
def main(ctx: click.Context, log_level: Optional[str], env_file: Optional[str]):
    """One-bit Sigma-Delta quantization on the circle: experiments and checks."""
    settings = load_settings(env_file)
    configure_logging(log_level or settings.log_level)
    ctx.ensure_object(dict)
    ctx.obj["settings"] = settings


@main.command()
@experiment_options
@click.pass_context
@handle_errors
def figure1(ctx: click.Context, config_path, **flags):
    """Errors before and after the update (CSV per order, SVG panels, JSON summary)."""
    config = _load_config(ctx, config_path, **flags)
    result = run_figure1(config)
    for order, summary in result.summary["orders"].items():
        click.echo(
            f"order {order}: sup error {summary['sup_error_before']:.6e} -> {summary['sup_error_after']:.6e}, "
            f"delta={summary['delta']:.6e}, remainder {summary['remainder_before']:.6g} -> "
            f"{summary['remainder_after']:.3g}"
        )
    _finish(ctx, result, config.out)


@main.command()
@experiment_options
@click.pass_context
@handle_errors
def sweep(ctx: click.Context, config_path, **flags):
    """Sup error against N with log-log slopes; exit 2 when a slope misses its threshold."""
    config = _load_config(ctx, config_path, **flags)
    result = run_decay_sweep(config)
    for scheme, slope in result.summary["slopes"].items():
        check = result.summary["checks"].get(scheme)
        verdict = ""
        if check:
            verdict = f" ({'PASS' if check['passed'] else 'FAIL'} {check['comparison']} {check['threshold']})"
        click.echo(f"{scheme}: slope {slope:.3f}{verdict}")
    _finish(ctx, result, config.out)


@main.command()
@experiment_options
@click.pass_context
@handle_errors
def quantize(ctx: click.Context, config_path, **flags):
    """Dump n, y, q, v, u traces as CSV."""
    config = _load_config(ctx, config_path, **flags)
    _finish(ctx, dump_traces(config), config.out)


@main.command()
@experiment_options
@click.pass_context
@handle_errors
def verify(ctx: click.Context, config_path, **flags):
    """Run the identity suite and print PASS/FAIL per check."""
    config = _load_config(ctx, config_path, **flags)
    checks = run_verification(config)
    for check in checks:
        click.echo(f"{check.status.value} {check.name}: {check.detail}")
    result = verification_result(checks)
    click.echo("all checks passed" if result.exit_code == EXIT_OK else "some checks failed")
    ctx.exit(result.exit_code)


@main.command()
@click.option("--host", default=None, help="Bind address (default from HOST)")
@click.option("--port", type=int, default=None, help="Port (default from PORT)")
def serve(host: Optional[str], port: Optional[int]):
    """Serve the tools over streamable HTTP."""
    from .server import main as serve_main

    serve_main(host, port)


def run() -> None:
    """Console entry point; usage errors count as configuration errors"""
    try:
        code = main.main(standalone_mode=False)
    except click.UsageError as e:
        e.show()
        sys.exit(EXIT_CONFIG_ERROR)
    except click.Abort:
        click.echo("Aborted!", err=True)
        sys.exit(EXIT_CONFIG_ERROR)
    sys.exit(code or EXIT_OK)


if __name__ == "__main__":
    run()
