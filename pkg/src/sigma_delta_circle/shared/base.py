"""
Base classes for Sigma-Delta Circle features
"""

from typing import Dict, Any, Optional, List
from abc import ABC, abstractmethod
from dataclasses import dataclass
import logging

import numpy as np

logger = logging.getLogger(__name__)


def to_jsonable(value: Any) -> Any:
    """Convert numpy scalars/arrays (possibly nested) into plain Python values"""
    if isinstance(value, np.ndarray):
        return [to_jsonable(v) for v in value.tolist()]
    if isinstance(value, (np.floating,)):
        return float(value)
    if isinstance(value, (np.integer,)):
        return int(value)
    if isinstance(value, (np.bool_,)):
        return bool(value)
    if isinstance(value, complex):
        return {"re": value.real, "im": value.imag}
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    return value


@dataclass
class ToolResponse:
    """Standard response structure for all tools"""
    success: bool
    data: Optional[Dict[str, Any]] = None
    error: Optional[str] = None
    metadata: Optional[Dict[str, Any]] = None

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for JSON serialization"""
        result: Dict[str, Any] = {"success": self.success}
        if self.data is not None:
            result["data"] = to_jsonable(self.data)
        if self.error:
            result["error"] = self.error
        if self.metadata:
            result["metadata"] = to_jsonable(self.metadata)
        return result


class BaseFeature(ABC):
    """Base class for all feature engines"""

    def __init__(self, name: str, version: str = "1.0.0"):
        self.name = name
        self.version = version
        self.logger = logging.getLogger(f"feature.{name}")
        self.logger.info(f"Initialized {name} feature v{version}")

    @abstractmethod
    def get_tools(self) -> List[Dict[str, Any]]:
        """Return list of tools provided by this feature"""
        pass

    def handle_error(self, operation: str, error: Exception) -> ToolResponse:
        """
        Standard error handling for feature operations

        Args:
            operation: Name of the operation that failed
            error: The exception that occurred

        Returns:
            ToolResponse with error information
        """
        error_msg = f"{operation} failed: {str(error)}"
        self.logger.error(error_msg, exc_info=True)
        return ToolResponse(
            success=False,
            error=error_msg,
            metadata={"operation": operation, "feature": self.name, "error_type": type(error).__name__}
        )
