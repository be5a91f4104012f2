"""
Experiment configuration: YAML file plus command line overrides

Schema (all keys optional)::

    preset: paper-fig1        # paper-fig1 | zero | half-step
    signal: [[5, 0.0, -0.05], [15, 0.0, 0.05]]   # [k, cos_amp, sin_amp] rows, replaces preset
    constant: 0.2             # mean value for row signals
    bandwidth: 15             # K for row signals (defaults to the top frequency)
    n: 9002                   # sample count for figure1/quantize/verify
    sweep: [301, 601, ...]    # explicit sample counts for the decay sweep
    lambdas: [10, 20, ...]    # oversampling factors, N = 2*lambda*K + 1
    order: [1, 2]             # scheme order(s)
    tabs: 4                   # tab count k of the second order filter
    taps: [0, ...]            # explicit taps (orders >= 3)
    update: true
    grid_resolution: 90020    # evaluation points, defaults to 10N
    out: results
    seed: 0
"""

import logging
from dataclasses import dataclass, field, fields, replace
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

import yaml

from ...shared.errors import ConfigError, UndersampledError
from ..bandlimited.presets import REFERENCE_SAMPLES, preset_signal, signal_from_rows
from ..bandlimited.signal import TorusSignal

logger = logging.getLogger(__name__)

DEFAULT_LAMBDAS = (10, 20, 40, 80, 160, 320)

_YAML_KEYS = {
    "preset": "preset",
    "signal": "signal_rows",
    "constant": "constant",
    "bandwidth": "bandwidth",
    "n": "n",
    "sweep": "sweep",
    "lambdas": "lambdas",
    "order": "orders",
    "tabs": "tabs",
    "taps": "taps",
    "update": "update",
    "grid_resolution": "grid_resolution",
    "out": "out",
    "seed": "seed",
}


@dataclass(frozen=True)
class ExperimentConfig:
    """Everything one experiment command needs"""
    preset: str = "paper-fig1"
    signal_rows: Optional[Tuple[Tuple[float, float, float], ...]] = None
    constant: float = 0.0
    bandwidth: Optional[int] = None
    n: int = REFERENCE_SAMPLES
    sweep: Optional[Tuple[int, ...]] = None
    lambdas: Tuple[float, ...] = DEFAULT_LAMBDAS
    orders: Tuple[int, ...] = (1, 2)
    tabs: int = 4
    taps: Optional[Tuple[float, ...]] = None
    update: bool = True
    grid_resolution: Optional[int] = None
    out: Path = field(default_factory=lambda: Path("results"))
    seed: int = 0

    def signal(self, n_samples: Optional[int] = None) -> TorusSignal:
        """The configured input signal (half-step depends on N)"""
        if self.signal_rows:
            return signal_from_rows(self.signal_rows, self.constant, self.bandwidth)
        return preset_signal(self.preset, n_samples or self.n)

    def sweep_values(self) -> List[int]:
        """Explicit sweep, or N = 2*lambda*K + 1 for each lambda"""
        if self.sweep:
            return sorted(int(n) for n in self.sweep)
        K = self.signal().bandwidth
        if K == 0:
            raise ConfigError("Sweeps from oversampling factors need a signal with K >= 1; give explicit N values")
        return sorted({int(round(2 * lam * K)) + 1 for lam in self.lambdas})

    def validate(self) -> "ExperimentConfig":
        """Check sample counts against the bandwidth and scheme settings"""
        if any(m < 1 for m in self.orders):
            raise ConfigError(f"Orders must be >= 1, got {list(self.orders)}")
        if self.taps is None and any(m > 3 for m in self.orders):
            raise ConfigError("Orders above 3 need explicit taps")
        if self.tabs < 2:
            raise ConfigError(f"tabs must be >= 2, got {self.tabs}")
        K = self.signal().bandwidth
        for N in [self.n] + (list(self.sweep) if self.sweep else []):
            if N < 2 * K + 1:
                raise ConfigError(str(UndersampledError(N, K)))
        if self.grid_resolution is not None and self.grid_resolution < self.n:
            raise ConfigError(f"grid_resolution {self.grid_resolution} must be at least N={self.n}")
        return self

    def with_overrides(self, **overrides: Any) -> "ExperimentConfig":
        """Copy with every non-None override applied"""
        values = {k: v for k, v in overrides.items() if v is not None}
        unknown = set(values) - {f.name for f in fields(self)}
        if unknown:
            raise ConfigError(f"Unknown configuration fields: {', '.join(sorted(unknown))}")
        return replace(self, **_coerce(values))


def _as_tuple(value: Any) -> Tuple:
    if isinstance(value, (list, tuple)):
        return tuple(value)
    return (value,)


def _coerce(values: Dict[str, Any]) -> Dict[str, Any]:
    try:
        result = dict(values)
        if "signal_rows" in result:
            result["signal_rows"] = tuple(tuple(float(x) for x in row) for row in result["signal_rows"])
        if "orders" in result:
            result["orders"] = tuple(int(m) for m in _as_tuple(result["orders"]))
        if "sweep" in result:
            result["sweep"] = tuple(int(n) for n in _as_tuple(result["sweep"]))
        if "lambdas" in result:
            result["lambdas"] = tuple(float(x) for x in _as_tuple(result["lambdas"]))
        if "taps" in result:
            result["taps"] = tuple(float(x) for x in result["taps"])
        if "out" in result:
            result["out"] = Path(result["out"])
        for key in ("n", "tabs", "seed", "grid_resolution", "bandwidth"):
            if key in result:
                result[key] = int(result[key])
        if "constant" in result:
            result["constant"] = float(result["constant"])
        if "update" in result:
            result["update"] = bool(result["update"])
        return result
    except (TypeError, ValueError) as e:
        raise ConfigError(f"Invalid configuration value: {e}")


def load_experiment_config(
    path: Optional[Union[str, Path]] = None,
    overrides: Optional[Dict[str, Any]] = None,
    base: Optional[ExperimentConfig] = None,
) -> ExperimentConfig:
    """
    Load a YAML config file and apply overrides

    Raises:
        ConfigError: on unreadable files, unknown keys or invalid values
    """
    config = base or ExperimentConfig()
    if path is not None:
        path = Path(path)
        try:
            raw = yaml.safe_load(path.read_text(encoding="utf-8")) or {}
        except OSError as e:
            raise ConfigError(f"Cannot read config {path}: {e}")
        except yaml.YAMLError as e:
            raise ConfigError(f"Invalid YAML in {path}: {e}")
        if not isinstance(raw, dict):
            raise ConfigError(f"Config {path} must be a mapping of keys to values")
        unknown = set(raw) - set(_YAML_KEYS)
        if unknown:
            raise ConfigError(f"Unknown keys in {path}: {', '.join(sorted(unknown))}")
        config = config.with_overrides(**{_YAML_KEYS[k]: v for k, v in raw.items()})
        logger.info(f"Loaded experiment config from {path}")
    if overrides:
        config = config.with_overrides(**overrides)
    return config.validate()


def orders_with_taps(config: ExperimentConfig) -> Sequence[Tuple[int, Optional[Tuple[float, ...]]]]:
    """(order, taps) pairs; explicit taps only apply to orders >= 3"""
    return [(m, config.taps if m >= 3 else None) for m in config.orders]
