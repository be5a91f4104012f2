"""
Analysis Engine - theoretical error bounds against measured reconstruction error
"""

from typing import Dict, Any, List, Optional

from ...shared.base import BaseFeature, ToolResponse
from ..bandlimited.kernel import DirichletKernel
from ..bandlimited.presets import preset_signal
from ..bandlimited.signal import sample
from ..quantizer.filters import build_scheme
from ..quantizer.modulator import quantize
from ..reconstruction.error import error_report
from ..update.plan import apply_update
from .bounds import prop2_bound
from .identities import difference_report


class AnalysisEngine(BaseFeature):
    """Error bounds and finite-difference checks"""

    def __init__(self):
        super().__init__("analysis", "1.0.0")

    def get_tools(self) -> List[Dict[str, Any]]:
        """Return list of analysis tools"""
        return [
            {
                "name": "error_bound",
                "description": "Assemble the error bound for a Sigma-Delta run and compare it with the measured sup error",
                "parameters": {
                    "n_samples": "Number of samples N",
                    "order": "Scheme order m",
                    "tabs": "Tab count for second order filters",
                    "preset": "Named signal: paper-fig1, zero, half-step",
                    "update": "Apply the constant update before measuring"
                }
            },
            {
                "name": "difference_check",
                "description": "k-th difference of the shifted Dirichlet kernel versus its k-th derivative",
                "parameters": {
                    "bandwidth": "Kernel bandwidth K",
                    "order": "Difference order k",
                    "t": "Angle t",
                    "n_samples": "Number of samples N"
                }
            }
        ]

    def error_bound(
        self,
        n_samples: int,
        order: int = 1,
        tabs: int = 4,
        preset: Optional[str] = None,
        update: bool = False,
    ) -> ToolResponse:
        """
        Bound versus measured sup error for one run

        Args:
            n_samples: Number of samples N
            order: Scheme order m
            tabs: Tab count for second order filters
            preset: Named signal preset
            update: Use the updated run and the shifted signal
        """
        try:
            signal = preset_signal(preset or "paper-fig1", n_samples)
            grid = sample(signal, n_samples)
            scheme = build_scheme(order, tabs)
            kernel = DirichletKernel(signal.bandwidth)
            if update:
                plan = apply_update(scheme, grid)
                run = plan.updated_run
                target = signal.shifted(plan.delta)
            else:
                run = quantize(scheme, grid)
                target = signal
            bound = prop2_bound(run, kernel, n_samples)
            report = error_report(target, run, kernel=kernel)
            return ToolResponse(
                success=True,
                data={
                    "bound": bound.to_dict(),
                    "sup_error": report.sup_error,
                    "within_bound": report.sup_error <= bound.bound_value,
                    "stable": run.stable,
                }
            )
        except Exception as e:
            return self.handle_error(f"error_bound(order={order}, N={n_samples})", e)

    def difference_check(self, bandwidth: int, order: int, t: float, n_samples: int) -> ToolResponse:
        """
        Compare Delta^k phi_k with (-1)^k (2pi/N)^k phi^(k)

        Args:
            bandwidth: Kernel bandwidth K
            order: Difference order k
            t: Angle t
            n_samples: Number of samples N
        """
        try:
            report = difference_report(DirichletKernel(bandwidth), order, t, n_samples)
            return ToolResponse(
                success=True,
                data={
                    "difference": report.difference,
                    "scaled_derivative": report.scaled_derivative,
                    "stencil_interval": report.stencil_interval,
                    "stencil_range": report.stencil_range,
                    "in_stencil": report.in_stencil,
                    "narrow_interval": report.narrow_interval,
                    "narrow_range": report.narrow_range,
                    "in_narrow": report.in_narrow,
                }
            )
        except Exception as e:
            return self.handle_error(f"difference_check(k={order})", e)
