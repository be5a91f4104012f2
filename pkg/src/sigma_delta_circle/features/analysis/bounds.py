"""
Reconstruction error bounds for m-th order schemes on the circle

For m = 1:
    |f - f_r| <= ||u||/N ||phi'||_L1 + |u_{N-1}|/N ||phi||_inf
For m >= 2:
    |f - f_r| <= (2pi)^{m-1} ||u|| / N^m (||phi^(m)||_L1 + ||phi^(m-1)||_inf)
                 + 1/N sum_{k=1}^{m-1} (2pi/N)^{k-1} |Delta^{m-k} u_{N-1}| ||phi^(k-1)||_inf
"""

import math
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Dict, List

from ..bandlimited.kernel import DirichletKernel, kernel_norms

if TYPE_CHECKING:
    from ..quantizer.modulator import QuantizationRun


@dataclass(frozen=True)
class ErrorBound:
    """Assembled right-hand side of the error estimate"""
    order: int
    n_samples: int
    state_sup: float
    boundary_terms: List[float]
    kernel_norms: Dict[str, float] = field(default_factory=dict)
    main_term: float = 0.0
    boundary_term: float = 0.0

    @property
    def bound_value(self) -> float:
        return self.main_term + self.boundary_term

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "n_samples": self.n_samples,
            "state_sup": self.state_sup,
            "boundary_terms": list(self.boundary_terms),
            "kernel_norms": dict(self.kernel_norms),
            "main_term": self.main_term,
            "boundary_term": self.boundary_term,
            "bound_value": self.bound_value,
        }


def prop2_bound(run: "QuantizationRun", kernel: DirichletKernel, N: int) -> ErrorBound:
    """
    Error bound assembled from a run's trace and kernel norms

    ``boundary_terms`` lists |Delta^{m-k} u_{N-1}| for k = 1..m-1 (m >= 2),
    or [|u_{N-1}|] for m = 1.
    """
    m = run.order
    u_sup = run.state_sup
    last = run.boundary_differences()

    if m == 1:
        l1_first, _ = kernel_norms(kernel, 1)
        _, sup_zero = kernel_norms(kernel, 0)
        boundary = [abs(float(last[0]))]
        return ErrorBound(
            order=1,
            n_samples=N,
            state_sup=u_sup,
            boundary_terms=boundary,
            kernel_norms={"l1_order_1": l1_first, "sup_order_0": sup_zero},
            main_term=u_sup / N * l1_first,
            boundary_term=boundary[0] / N * sup_zero,
        )

    l1_m, _ = kernel_norms(kernel, m)
    _, sup_previous = kernel_norms(kernel, m - 1)
    norms = {f"l1_order_{m}": l1_m, f"sup_order_{m - 1}": sup_previous}
    main = (2 * math.pi) ** (m - 1) * u_sup / N ** m * (l1_m + sup_previous)

    boundary = []
    boundary_sum = 0.0
    for k in range(1, m):
        difference = abs(float(last[m - k]))
        _, sup_k = kernel_norms(kernel, k - 1)
        norms[f"sup_order_{k - 1}"] = sup_k
        boundary.append(difference)
        boundary_sum += (2 * math.pi / N) ** (k - 1) * difference * sup_k
    return ErrorBound(
        order=m,
        n_samples=N,
        state_sup=u_sup,
        boundary_terms=boundary,
        kernel_norms=norms,
        main_term=main,
        boundary_term=boundary_sum / N,
    )
