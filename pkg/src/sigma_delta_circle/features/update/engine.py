"""
Update Engine - constant sample shift that zeroes the boundary remainder
"""

from typing import Dict, Any, List, Optional, Sequence

from ...shared.base import BaseFeature, ToolResponse
from ..bandlimited.engine import BandlimitedEngine
from ..bandlimited.signal import sample
from ..quantizer.filters import build_scheme
from .plan import apply_update


class UpdateEngine(BaseFeature):
    """Apply and verify the constant update"""

    def __init__(self, bandlimited: Optional[BandlimitedEngine] = None):
        super().__init__("update", "1.0.0")
        self.bandlimited = bandlimited or BandlimitedEngine()

    def get_tools(self) -> List[Dict[str, Any]]:
        """Return list of update tools"""
        return [
            {
                "name": "sigma_delta_update",
                "description": "Shift samples by delta = -Delta^(m-1) u_(N-1) / N, re-quantize and report the remainders",
                "parameters": {
                    "n_samples": "Number of samples N",
                    "order": "Scheme order m",
                    "tabs": "Tab count for second order filters",
                    "taps": "Explicit feedback taps",
                    "preset": "Named signal: paper-fig1, zero, half-step",
                    "rows": "Alternative to preset: list of [k, cos_amp, sin_amp]"
                }
            }
        ]

    def sigma_delta_update(
        self,
        n_samples: int,
        order: int = 1,
        tabs: int = 4,
        taps: Optional[Sequence[float]] = None,
        preset: Optional[str] = None,
        rows: Optional[Sequence[Sequence[float]]] = None,
    ) -> ToolResponse:
        """
        Build an update plan

        Args:
            n_samples: Number of samples N
            order: Scheme order m
            tabs: Tab count for second order filters
            taps: Explicit feedback taps
            preset: Named signal preset
            rows: Coefficient rows [k, cos_amp, sin_amp]
        """
        try:
            signal = self.bandlimited.resolve_signal(preset, rows, n_samples=n_samples)
            plan = apply_update(build_scheme(order, tabs, taps), sample(signal, n_samples))
            return ToolResponse(success=True, data=plan.summary())
        except Exception as e:
            return self.handle_error(f"sigma_delta_update(order={order}, N={n_samples})", e)
