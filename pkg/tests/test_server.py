"""
Test suite for the Sigma-Delta Circle MCP server
"""

import pytest
from starlette.testclient import TestClient

from sigma_delta_circle import server

pytestmark = pytest.mark.integration


def call(tool):
    """FastMCP may wrap decorated functions in tool objects"""
    return getattr(tool, "fn", tool)


# ============================================================================
# SYSTEM TESTS
# ============================================================================

@pytest.mark.asyncio
async def test_system_info():
    """Every feature reports its tools"""
    result = await call(server.system_info)()

    assert result["server_name"] == "Sigma-Delta Circle"
    assert result["transport"] == "streamable-http"
    assert set(result["features"]) == {
        "bandlimited", "quantizer", "reconstruction", "analysis", "update", "harness"
    }
    assert "verify" in result["features"]["harness"]["tools"]


def test_health_endpoint():
    client = TestClient(server.app)
    response = client.get("/health")

    assert response.status_code == 200
    body = response.json()
    assert body["status"] == "healthy"
    assert "quantizer" in body["features"]


# ============================================================================
# SIGNAL AND QUANTIZATION TOOLS
# ============================================================================

@pytest.mark.asyncio
async def test_signal_sample():
    result = await call(server.signal_sample)(n_samples=301, preview=2)

    assert result["success"]
    assert result["data"]["n_samples"] == 301
    assert len(result["data"]["samples_preview"]) == 2


@pytest.mark.asyncio
async def test_signal_sample_undersampled():
    result = await call(server.signal_sample)(n_samples=10)

    assert not result["success"]
    assert "error" in result


@pytest.mark.asyncio
async def test_kernel_norms():
    result = await call(server.kernel_norms)(bandwidth=1, max_order=0)

    assert result["success"]
    assert result["data"]["norms"][0]["sup_norm"] == pytest.approx(3.0)


@pytest.mark.asyncio
async def test_sigma_delta_quantize():
    result = await call(server.sigma_delta_quantize)(n_samples=301, order=2)

    assert result["success"]
    assert result["data"]["stable"]


@pytest.mark.asyncio
async def test_sigma_delta_update():
    result = await call(server.sigma_delta_update)(n_samples=601, order=2)

    assert result["success"]
    assert result["data"]["zeroed"]


# ============================================================================
# ERROR ANALYSIS TOOLS
# ============================================================================

@pytest.mark.asyncio
async def test_reconstruction_error():
    result = await call(server.reconstruction_error)(n_samples=301, order=1)

    assert result["success"]
    assert result["data"]["within_bound"]


@pytest.mark.asyncio
async def test_error_bound():
    result = await call(server.error_bound)(n_samples=301, order=2, update=True)

    assert result["success"]
    assert result["data"]["within_bound"]


@pytest.mark.asyncio
async def test_difference_check():
    result = await call(server.difference_check)(bandwidth=15, order=1, t=0.5, n_samples=301)

    assert result["success"]
    assert result["data"]["in_stencil"]


# ============================================================================
# EXPERIMENT TOOLS
# ============================================================================

@pytest.mark.asyncio
async def test_run_figure1(tmp_path):
    result = await call(server.run_figure1)(n_samples=301, orders=[1, 2], out=str(tmp_path))

    assert result["success"]
    assert result["metadata"]["exit_code"] == 0
    assert (tmp_path / "figure1_panel_a.svg").exists()
    assert "figure1_summary.json" in result["data"]["files"]


@pytest.mark.asyncio
async def test_run_decay_sweep_rejects_short_sweep(tmp_path):
    result = await call(server.run_decay_sweep)(sweep=[301, 601, 1201], out=str(tmp_path))

    assert not result["success"]
    assert "at least 6" in result["error"]
