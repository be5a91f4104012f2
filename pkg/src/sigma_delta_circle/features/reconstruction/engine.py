"""
Reconstruction Engine - low-pass reconstruction and its error on the circle
"""

from typing import Dict, Any, List, Optional, Sequence

from ...shared.base import BaseFeature, ToolResponse
from ..bandlimited.engine import BandlimitedEngine
from ..bandlimited.signal import sample
from ..quantizer.filters import build_scheme
from ..quantizer.modulator import quantize
from .error import error_report


class ReconstructionEngine(BaseFeature):
    """Measure how well quantized samples reconstruct a circle signal"""

    def __init__(self, bandlimited: Optional[BandlimitedEngine] = None):
        super().__init__("reconstruction", "1.0.0")
        self.bandlimited = bandlimited or BandlimitedEngine()

    def get_tools(self) -> List[Dict[str, Any]]:
        """Return list of reconstruction tools"""
        return [
            {
                "name": "reconstruction_error",
                "description": "Sup and mean error of the Dirichlet-kernel reconstruction from Sigma-Delta bits",
                "parameters": {
                    "n_samples": "Number of samples N",
                    "order": "Scheme order m",
                    "tabs": "Tab count for second order filters",
                    "preset": "Named signal: paper-fig1, zero, half-step",
                    "rows": "Alternative to preset: list of [k, cos_amp, sin_amp]",
                    "grid_resolution": "Evaluation points (defaults to 10N)"
                }
            }
        ]

    def reconstruction_error(
        self,
        n_samples: int,
        order: int = 1,
        tabs: int = 4,
        preset: Optional[str] = None,
        rows: Optional[Sequence[Sequence[float]]] = None,
        grid_resolution: Optional[int] = None,
    ) -> ToolResponse:
        """
        Quantize, reconstruct and measure the error

        Args:
            n_samples: Number of samples N
            order: Scheme order m
            tabs: Tab count for second order filters
            preset: Named signal preset
            rows: Coefficient rows [k, cos_amp, sin_amp]
            grid_resolution: Number of evaluation points
        """
        try:
            signal = self.bandlimited.resolve_signal(preset, rows, n_samples=n_samples)
            run = quantize(build_scheme(order, tabs), sample(signal, n_samples))
            report = error_report(signal, run, grid_resolution)
            data = report.summary()
            data["within_bound"] = report.within_bound
            data["stable"] = run.stable
            return ToolResponse(success=True, data=data)
        except Exception as e:
            return self.handle_error(f"reconstruction_error(order={order}, N={n_samples})", e)
