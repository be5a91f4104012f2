"""
Harness Engine - experiment runs for the tool server
"""

import asyncio
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from ...shared.base import BaseFeature, ToolResponse
from .config import ExperimentConfig, load_experiment_config
from .reports import write_bundle_async
from .runners import ExperimentResult, run_decay_sweep, run_figure1, run_verification, verification_result


class HarnessEngine(BaseFeature):
    """Run experiments off the event loop and write their reports asynchronously"""

    def __init__(self, output_dir: Optional[Path] = None):
        super().__init__("harness", "1.0.0")
        self.output_dir = Path(output_dir) if output_dir else ExperimentConfig().out

    def get_tools(self) -> List[Dict[str, Any]]:
        """Return list of harness tools"""
        return [
            {
                "name": "run_figure1",
                "description": "Errors before/after the constant update on a uniform grid, written as CSV, SVG and JSON",
                "parameters": {
                    "preset": "Named signal: paper-fig1, zero, half-step",
                    "n_samples": "Number of samples N",
                    "orders": "Scheme orders to run",
                    "out": "Output directory"
                }
            },
            {
                "name": "run_decay_sweep",
                "description": "Sup error against N with fitted log-log slopes per scheme",
                "parameters": {
                    "preset": "Named signal",
                    "sweep": "Explicit list of N values",
                    "update": "Include updated runs",
                    "out": "Output directory"
                }
            },
            {
                "name": "verify",
                "description": "Run the identity suite and report PASS/FAIL per check",
                "parameters": {
                    "n_samples": "Number of samples N",
                    "seed": "Seed for the randomized suites"
                }
            }
        ]

    def _config(self, out: Optional[str], **overrides: Any) -> ExperimentConfig:
        return load_experiment_config(overrides={"out": out or self.output_dir, **overrides})

    async def _run(self, operation: str, config: ExperimentConfig, runner) -> ToolResponse:
        result: ExperimentResult = await asyncio.to_thread(runner, config)
        written = await write_bundle_async(config.out, result.files)
        self.logger.info(f"{operation} finished with exit code {result.exit_code}")
        return ToolResponse(
            success=True,
            data={"summary": result.summary, "files": written},
            metadata={"exit_code": result.exit_code},
        )

    async def run_figure1(
        self,
        preset: Optional[str] = None,
        n_samples: Optional[int] = None,
        orders: Optional[Sequence[int]] = None,
        tabs: Optional[int] = None,
        out: Optional[str] = None,
    ) -> ToolResponse:
        """
        Reproduce the before/after error comparison

        Args:
            preset: Named signal preset
            n_samples: Number of samples N
            orders: Scheme orders
            tabs: Tab count for the second order filter
            out: Output directory
        """
        try:
            config = self._config(out, preset=preset, n=n_samples, orders=orders, tabs=tabs)
            return await self._run("run_figure1", config, run_figure1)
        except Exception as e:
            return self.handle_error("run_figure1", e)

    async def run_decay_sweep(
        self,
        preset: Optional[str] = None,
        sweep: Optional[Sequence[int]] = None,
        orders: Optional[Sequence[int]] = None,
        update: Optional[bool] = None,
        out: Optional[str] = None,
    ) -> ToolResponse:
        """
        Sweep N and fit decay slopes

        Args:
            preset: Named signal preset
            sweep: Explicit N values (default N = 2 lambda K + 1, lambda = 10..320)
            orders: Scheme orders
            update: Include updated runs
            out: Output directory
        """
        try:
            config = self._config(out, preset=preset, sweep=sweep, orders=orders, update=update)
            return await self._run("run_decay_sweep", config, run_decay_sweep)
        except Exception as e:
            return self.handle_error("run_decay_sweep", e)

    async def verify(self, n_samples: Optional[int] = None, seed: Optional[int] = None) -> ToolResponse:
        """
        Run the identity suite

        Args:
            n_samples: Number of samples N
            seed: Seed for the randomized suites
        """
        try:
            config = self._config(None, n=n_samples, seed=seed)
            checks = await asyncio.to_thread(run_verification, config)
            result = verification_result(checks)
            return ToolResponse(success=True, data=result.summary, metadata={"exit_code": result.exit_code})
        except Exception as e:
            return self.handle_error("verify", e)
