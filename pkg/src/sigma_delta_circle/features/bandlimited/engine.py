"""
Bandlimited Engine - sampling of circle signals and Dirichlet kernel norms
"""

from typing import Dict, Any, List, Optional, Sequence

import numpy as np

from ...shared.base import BaseFeature, ToolResponse
from .kernel import DirichletKernel, kernel_norms
from .presets import preset_signal, signal_from_rows
from .signal import TorusSignal, sample


class BandlimitedEngine(BaseFeature):
    """Sampling and kernel tools for K-bandlimited functions on the circle"""

    def __init__(self):
        super().__init__("bandlimited", "1.0.0")

    def get_tools(self) -> List[Dict[str, Any]]:
        """Return list of bandlimited tools"""
        return [
            {
                "name": "signal_sample",
                "description": "Sample a K-bandlimited signal at N uniform points on the circle",
                "parameters": {
                    "n_samples": "Number of samples N (N >= 2K+1)",
                    "preset": "Named signal: paper-fig1, zero, half-step",
                    "rows": "Alternative to preset: list of [k, cos_amp, sin_amp]",
                    "constant": "Mean value added to the rows",
                    "preview": "How many leading samples to return"
                }
            },
            {
                "name": "kernel_norms",
                "description": "L1 and sup norms of derivatives of the Dirichlet kernel",
                "parameters": {
                    "bandwidth": "Kernel bandwidth K",
                    "max_order": "Highest derivative order to tabulate"
                }
            }
        ]

    def resolve_signal(
        self,
        preset: Optional[str] = None,
        rows: Optional[Sequence[Sequence[float]]] = None,
        constant: float = 0.0,
        n_samples: Optional[int] = None,
    ) -> TorusSignal:
        """Signal from a preset name or coefficient rows"""
        if rows:
            return signal_from_rows(rows, constant)
        return preset_signal(preset or "paper-fig1", n_samples)

    def signal_sample(
        self,
        n_samples: int,
        preset: Optional[str] = None,
        rows: Optional[Sequence[Sequence[float]]] = None,
        constant: float = 0.0,
        preview: int = 10,
    ) -> ToolResponse:
        """
        Sample a signal at N points

        Args:
            n_samples: Number of samples N
            preset: Named signal preset
            rows: Coefficient rows [k, cos_amp, sin_amp]
            constant: Mean value for row-specified signals
            preview: Number of leading samples returned
        """
        try:
            signal = self.resolve_signal(preset, rows, constant, n_samples)
            grid = sample(signal, n_samples)
            return ToolResponse(
                success=True,
                data={
                    "bandwidth": signal.bandwidth,
                    "n_samples": grid.n_samples,
                    "oversampling": grid.oversampling,
                    "max_abs": grid.max_abs,
                    "mean": float(np.mean(grid.samples)),
                    "samples_preview": grid.samples[:preview],
                }
            )
        except Exception as e:
            return self.handle_error(f"signal_sample(N={n_samples})", e)

    def kernel_norms(self, bandwidth: int, max_order: int = 2) -> ToolResponse:
        """
        Tabulate kernel norms for derivative orders 0..max_order

        Args:
            bandwidth: Kernel bandwidth K
            max_order: Highest derivative order
        """
        try:
            kernel = DirichletKernel(bandwidth)
            table = []
            for order in range(max_order + 1):
                l1, sup = kernel_norms(kernel, order)
                table.append({"order": order, "l1_norm": l1, "sup_norm": sup})
            return ToolResponse(success=True, data={"bandwidth": bandwidth, "norms": table})
        except Exception as e:
            return self.handle_error(f"kernel_norms(K={bandwidth})", e)
