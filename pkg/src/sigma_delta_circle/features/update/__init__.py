"""
Constant update of Sigma-Delta samples
"""

from .plan import UpdatePlan, compute_update, apply_update
from .engine import UpdateEngine

__all__ = [
    'UpdatePlan',
    'compute_update',
    'apply_update',
    'UpdateEngine',
]
