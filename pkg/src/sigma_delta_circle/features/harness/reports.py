"""
Report rendering and writing

Every artifact is rendered to text first, so the CLI can write it
synchronously and the tool server can write it with aiofiles. Identical
inputs render byte-identical files.
"""

import io
import json
import logging
from pathlib import Path
from typing import Any, Dict, Mapping, Sequence

import aiofiles
import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402
import pandas as pd  # noqa: E402

from ...shared.base import to_jsonable  # noqa: E402
from ...shared.errors import ReportWriteError  # noqa: E402
from ...shared.types import CSV_FLOAT_FORMAT  # noqa: E402

logger = logging.getLogger(__name__)

SVG_HASH_SALT = "sigma-delta-circle"
MAX_PLOT_POINTS = 4000

ReportBundle = Dict[str, str]


def render_csv(frame: pd.DataFrame) -> str:
    return frame.to_csv(index=False, float_format=CSV_FLOAT_FORMAT, lineterminator="\n")


def render_json(data: Any) -> str:
    return json.dumps(to_jsonable(data), indent=2, sort_keys=True) + "\n"


def _decimate(x: np.ndarray, ys: Mapping[str, np.ndarray]):
    step = max(1, int(np.ceil(x.size / MAX_PLOT_POINTS)))
    return x[::step], {label: np.asarray(y)[::step] for label, y in ys.items()}


def render_line_plot(
    x: Sequence[float],
    series: Mapping[str, Sequence[float]],
    title: str,
    xlabel: str,
    ylabel: str,
    loglog: bool = False,
) -> str:
    """Render line plots as a self-contained SVG string"""
    x = np.asarray(x, dtype=float)
    series = {label: np.asarray(y, dtype=float) for label, y in series.items()}
    if not loglog:
        x, series = _decimate(x, series)

    with plt.rc_context({"svg.hashsalt": SVG_HASH_SALT, "svg.fonttype": "none"}):
        fig, ax = plt.subplots(figsize=(8, 4.5))
        try:
            for label, y in series.items():
                if loglog:
                    ax.loglog(x, y, marker="o", label=label)
                else:
                    ax.plot(x, y, linewidth=0.8, label=label)
            ax.set_title(title)
            ax.set_xlabel(xlabel)
            ax.set_ylabel(ylabel)
            ax.grid(True, alpha=0.3)
            ax.legend()
            fig.tight_layout()
            buffer = io.StringIO()
            fig.savefig(buffer, format="svg", metadata={"Date": None})
        finally:
            plt.close(fig)
    return buffer.getvalue()


def write_bundle(out_dir: Path, bundle: ReportBundle) -> Dict[str, str]:
    """
    Write rendered files under out_dir

    Returns:
        Mapping of file name to written path

    Raises:
        ReportWriteError: naming the path that failed
    """
    out_dir = Path(out_dir)
    written = {}
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
    except OSError as e:
        raise ReportWriteError(out_dir, e)
    for name, text in bundle.items():
        path = out_dir / name
        try:
            path.write_text(text, encoding="utf-8")
        except OSError as e:
            raise ReportWriteError(path, e)
        written[name] = str(path)
        logger.debug(f"Wrote {path}")
    logger.info(f"Wrote {len(written)} report files to {out_dir}")
    return written


async def write_bundle_async(out_dir: Path, bundle: ReportBundle) -> Dict[str, str]:
    """Async version of write_bundle for the tool server"""
    out_dir = Path(out_dir)
    written = {}
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
    except OSError as e:
        raise ReportWriteError(out_dir, e)
    for name, text in bundle.items():
        path = out_dir / name
        try:
            async with aiofiles.open(path, "w", encoding="utf-8", newline="") as f:
                await f.write(text)
        except OSError as e:
            raise ReportWriteError(path, e)
        written[name] = str(path)
    logger.info(f"Wrote {len(written)} report files to {out_dir}")
    return written


def spike_ratio(errors: np.ndarray) -> float:
    """|error at t=0| divided by the median |error|"""
    magnitudes = np.abs(np.asarray(errors, dtype=float))
    median = float(np.median(magnitudes))
    if median == 0.0:
        return 0.0 if magnitudes[0] == 0.0 else float("inf")
    return float(magnitudes[0] / median)
