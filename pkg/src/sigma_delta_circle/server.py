#!/usr/bin/env python3
"""
Sigma-Delta Circle MCP Server - quantization, reconstruction and experiment tools over streamable HTTP
"""

import logging
import sys
from datetime import datetime
from typing import Dict, Any, Optional, List

from fastmcp import FastMCP
from starlette.applications import Starlette
from starlette.routing import Route
from starlette.responses import JSONResponse
import uvicorn

from . import __version__
from .shared.config import configure_logging, load_settings
from .features import (
    BandlimitedEngine,
    QuantizerEngine,
    ReconstructionEngine,
    AnalysisEngine,
    UpdateEngine,
    HarnessEngine,
)

settings = load_settings()
configure_logging(settings.log_level)
logger = logging.getLogger("sigma-delta-circle")

# Initialize MCP server
mcp = FastMCP("Sigma-Delta Circle")
mcp.description = "One-bit Sigma-Delta quantization of bandlimited functions on the circle with Dirichlet reconstruction, the constant update and error analysis"

# Initialize feature engines
bandlimited = BandlimitedEngine()
quantizer = QuantizerEngine(bandlimited)
reconstruction = ReconstructionEngine(bandlimited)
analysis = AnalysisEngine()
update_engine = UpdateEngine(bandlimited)
harness = HarnessEngine(settings.output_dir)

FEATURES = [bandlimited, quantizer, reconstruction, analysis, update_engine, harness]

# ============================================================================
# SYSTEM INFO
# ============================================================================

@mcp.tool()
async def system_info() -> Dict[str, Any]:
    """Get server status and the tools of every feature"""
    return {
        "server_name": "Sigma-Delta Circle",
        "version": __version__,
        "timestamp": datetime.now().isoformat(),
        "transport": "streamable-http",
        "output_dir": str(settings.output_dir),
        "features": {
            feature.name: {
                "version": feature.version,
                "tools": [tool["name"] for tool in feature.get_tools()],
            }
            for feature in FEATURES
        },
    }

# ============================================================================
# SIGNAL TOOLS
# ============================================================================

@mcp.tool()
async def signal_sample(
    n_samples: int,
    preset: Optional[str] = None,
    rows: Optional[List[List[float]]] = None,
    constant: float = 0.0,
    preview: int = 10
) -> Dict[str, Any]:
    """
    Sample a bandlimited signal at t_n = 2 pi n / N

    Args:
        n_samples: Number of samples N (at least 2K+1)
        preset: Named signal (paper-fig1, zero, half-step)
        rows: Alternative to preset: list of [k, cos_amp, sin_amp]
        constant: Mean value for row signals
        preview: Number of leading samples to return
    """
    response = bandlimited.signal_sample(n_samples, preset, rows, constant, preview)
    return response.to_dict()

@mcp.tool()
async def kernel_norms(bandwidth: int, max_order: int = 2) -> Dict[str, Any]:
    """
    L1 and sup norms of the Dirichlet kernel derivatives

    Args:
        bandwidth: Bandwidth K
        max_order: Highest derivative order
    """
    response = bandlimited.kernel_norms(bandwidth, max_order)
    return response.to_dict()

# ============================================================================
# QUANTIZATION TOOLS
# ============================================================================

@mcp.tool()
async def sigma_delta_quantize(
    n_samples: int,
    order: int = 1,
    tabs: int = 4,
    taps: Optional[List[float]] = None,
    preset: Optional[str] = None,
    rows: Optional[List[List[float]]] = None,
    preview: int = 16
) -> Dict[str, Any]:
    """
    Run the m-th order one-bit Sigma-Delta recurrence

    Args:
        n_samples: Number of samples N
        order: Scheme order m
        tabs: Tab count k of the second order filter
        taps: Explicit feedback taps (orders >= 3)
        preset: Named signal
        rows: Alternative to preset: list of [k, cos_amp, sin_amp]
        preview: Number of leading bits/states to return
    """
    response = quantizer.sigma_delta_quantize(n_samples, order, tabs, taps, preset, rows, preview)
    return response.to_dict()

@mcp.tool()
async def sigma_delta_update(
    n_samples: int,
    order: int = 1,
    tabs: int = 4,
    taps: Optional[List[float]] = None,
    preset: Optional[str] = None,
    rows: Optional[List[List[float]]] = None
) -> Dict[str, Any]:
    """
    Shift the samples by the constant update and re-quantize

    Args:
        n_samples: Number of samples N
        order: Scheme order m
        tabs: Tab count k of the second order filter
        taps: Explicit feedback taps (orders >= 3)
        preset: Named signal
        rows: Alternative to preset: list of [k, cos_amp, sin_amp]
    """
    response = update_engine.sigma_delta_update(n_samples, order, tabs, taps, preset, rows)
    return response.to_dict()

# ============================================================================
# ERROR ANALYSIS TOOLS
# ============================================================================

@mcp.tool()
async def reconstruction_error(
    n_samples: int,
    order: int = 1,
    tabs: int = 4,
    preset: Optional[str] = None,
    rows: Optional[List[List[float]]] = None,
    grid_resolution: Optional[int] = None
) -> Dict[str, Any]:
    """
    Sup and mean error of the Dirichlet reconstruction from the bits

    Args:
        n_samples: Number of samples N
        order: Scheme order m
        tabs: Tab count k of the second order filter
        preset: Named signal
        rows: Alternative to preset: list of [k, cos_amp, sin_amp]
        grid_resolution: Evaluation points (default 10N)
    """
    response = reconstruction.reconstruction_error(n_samples, order, tabs, preset, rows, grid_resolution)
    return response.to_dict()

@mcp.tool()
async def error_bound(
    n_samples: int,
    order: int = 1,
    tabs: int = 4,
    preset: Optional[str] = None,
    update: bool = False
) -> Dict[str, Any]:
    """
    Assembled error bound next to the measured sup error

    Args:
        n_samples: Number of samples N
        order: Scheme order m (1 or 2)
        tabs: Tab count k of the second order filter
        preset: Named signal
        update: Use the updated run and the shifted signal
    """
    response = analysis.error_bound(n_samples, order, tabs, preset, update)
    return response.to_dict()

@mcp.tool()
async def difference_check(bandwidth: int, order: int, t: float, n_samples: int) -> Dict[str, Any]:
    """
    Compare the k-th difference of the sampled kernel with its k-th derivative

    Args:
        bandwidth: Kernel bandwidth K
        order: Difference order k
        t: Angle t
        n_samples: Number of samples N
    """
    response = analysis.difference_check(bandwidth, order, t, n_samples)
    return response.to_dict()

# ============================================================================
# EXPERIMENT TOOLS
# ============================================================================

@mcp.tool()
async def run_figure1(
    preset: Optional[str] = None,
    n_samples: Optional[int] = None,
    orders: Optional[List[int]] = None,
    tabs: Optional[int] = None,
    out: Optional[str] = None
) -> Dict[str, Any]:
    """
    Errors before and after the update, written as CSV, SVG and JSON reports

    Args:
        preset: Named signal
        n_samples: Number of samples N (default 9002)
        orders: Scheme orders (default [1, 2])
        tabs: Tab count k of the second order filter
        out: Output directory
    """
    response = await harness.run_figure1(preset, n_samples, orders, tabs, out)
    return response.to_dict()

@mcp.tool()
async def run_decay_sweep(
    preset: Optional[str] = None,
    sweep: Optional[List[int]] = None,
    orders: Optional[List[int]] = None,
    update: Optional[bool] = None,
    out: Optional[str] = None
) -> Dict[str, Any]:
    """
    Sup error against N with fitted log-log slopes

    Args:
        preset: Named signal
        sweep: Explicit N values (default N = 2 lambda K + 1 for lambda = 10..320)
        orders: Scheme orders (default [1, 2])
        update: Include updated runs (default true)
        out: Output directory
    """
    response = await harness.run_decay_sweep(preset, sweep, orders, update, out)
    return response.to_dict()

@mcp.tool()
async def verify(n_samples: Optional[int] = None, seed: Optional[int] = None) -> Dict[str, Any]:
    """
    Run the identity suite (zeroing, remainder, bound, parity and recurrence checks)

    Args:
        n_samples: Number of samples N (default 9002)
        seed: Seed for the randomized suites
    """
    response = await harness.verify(n_samples, seed)
    return response.to_dict()

# ============================================================================
# ASGI APPLICATION WITH HEALTH CHECK
# ============================================================================

async def health_check(request):
    """Health check endpoint"""
    return JSONResponse(
        {
            "status": "healthy",
            "service": "Sigma-Delta Circle",
            "version": __version__,
            "features": [feature.name for feature in FEATURES],
            "timestamp": datetime.now().isoformat()
        },
        status_code=200
    )

# Create MCP app
try:
    if hasattr(mcp, 'http_app'):
        mcp_app = mcp.http_app()
        logger.info("Created MCP app with /mcp path")
    elif hasattr(mcp, 'streamable_http_app'):
        mcp_app = mcp.streamable_http_app()
        logger.warning("Using older streamable_http_app()")
    else:
        raise AttributeError("No HTTP app method found in FastMCP")

except Exception as e:
    logger.error(f"Failed to create MCP HTTP app: {e}")
    raise

app = Starlette(
    lifespan=mcp_app.lifespan,
    routes=[
        Route("/health", health_check, methods=["GET"]),
        Route("/", health_check, methods=["GET"]),
        Route("/mcp", mcp_app, methods=["POST", "GET"]),
        Route("/mcp/", mcp_app, methods=["POST", "GET"]),
    ]
)

# ============================================================================
# SERVER STARTUP
# ============================================================================

def main(host: Optional[str] = None, port: Optional[int] = None) -> None:
    """Serve the MCP app with uvicorn"""
    host = host or settings.host
    port = port or settings.port

    logger.info(f"Starting Sigma-Delta Circle MCP Server v{__version__}")
    logger.info(f"Server will be available at {host}:{port}/mcp")
    logger.info(f"Health check at {host}:{port}/health")
    logger.info(f"Reports are written to {settings.output_dir}")

    try:
        uvicorn.run(app, host=host, port=port)
    except KeyboardInterrupt:
        logger.info("Server stopped by user")
        sys.exit(0)
    except Exception as e:
        logger.error(f"Server error: {e}")
        sys.exit(1)


if __name__ == "__main__":
    main()
