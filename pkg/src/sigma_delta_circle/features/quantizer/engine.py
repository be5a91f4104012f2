"""
Quantizer Engine - run the one-bit Sigma-Delta recurrence on circle samples
"""

from typing import Dict, Any, List, Optional, Sequence

from ...shared.base import BaseFeature, ToolResponse
from ..bandlimited.engine import BandlimitedEngine
from ..bandlimited.signal import sample
from .filters import build_scheme, check_stability
from .modulator import quantize


class QuantizerEngine(BaseFeature):
    """Sigma-Delta quantization of sampled circle signals"""

    def __init__(self, bandlimited: Optional[BandlimitedEngine] = None):
        super().__init__("quantizer", "1.0.0")
        self.bandlimited = bandlimited or BandlimitedEngine()

    def get_tools(self) -> List[Dict[str, Any]]:
        """Return list of quantizer tools"""
        return [
            {
                "name": "sigma_delta_quantize",
                "description": "Quantize N samples of a circle signal with an m-th order one-bit Sigma-Delta scheme",
                "parameters": {
                    "n_samples": "Number of samples N",
                    "order": "Scheme order m",
                    "tabs": "Tab count k of the second order filter",
                    "taps": "Explicit feedback taps (h_0 = 0)",
                    "preset": "Named signal: paper-fig1, zero, half-step",
                    "rows": "Alternative to preset: list of [k, cos_amp, sin_amp]",
                    "preview": "How many leading bits to return"
                }
            }
        ]

    def sigma_delta_quantize(
        self,
        n_samples: int,
        order: int = 1,
        tabs: int = 4,
        taps: Optional[Sequence[float]] = None,
        preset: Optional[str] = None,
        rows: Optional[Sequence[Sequence[float]]] = None,
        preview: int = 16,
    ) -> ToolResponse:
        """
        Quantize a sampled signal

        Args:
            n_samples: Number of samples N
            order: Scheme order m
            tabs: Tab count for second order filters
            taps: Explicit feedback taps
            preset: Named signal preset
            rows: Coefficient rows [k, cos_amp, sin_amp]
            preview: Number of leading bits returned
        """
        try:
            signal = self.bandlimited.resolve_signal(preset, rows, n_samples=n_samples)
            grid = sample(signal, n_samples)
            scheme = build_scheme(order, tabs, taps)
            run = quantize(scheme, grid)
            return ToolResponse(
                success=True,
                data={
                    "scheme": scheme.describe(),
                    "stable": check_stability(scheme, grid),
                    "n_samples": run.n_samples,
                    "plus_count": run.plus_count,
                    "remainder": run.remainder,
                    "remainder_from_sums": run.remainder_from_sums,
                    "state_sup": run.state_sup,
                    "recurrence_residual": run.recurrence_residual(),
                    "bits_preview": run.bits[:preview],
                }
            )
        except Exception as e:
            return self.handle_error(f"sigma_delta_quantize(order={order}, N={n_samples})", e)
