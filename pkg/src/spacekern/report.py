"""Machine-readable run reports and the meter-trace figure."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Optional

from .graphcore import Kernel, NoInstance, SpaceMeter


@dataclass
class RunReport:
    problem: str
    n: int
    m: int
    k: int
    verdict: str                 # "kernel" or "no-instance"
    kernel_n: Optional[int] = None
    kernel_m: Optional[int] = None
    kernel_k: Optional[int] = None
    peak_words: int = 0
    wall_time_ms: float = 0.0
    reason: str = ""
    counters: dict = field(default_factory=dict)

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True, indent=2) + "\n"


def build_report(problem: str, n: int, m: int, k: int, verdict,
                 meter: SpaceMeter, wall_time_ms: float) -> RunReport:
    if isinstance(verdict, Kernel):
        return RunReport(
            problem=problem, n=n, m=m, k=k, verdict="kernel",
            kernel_n=verdict.graph.vertex_count,
            kernel_m=verdict.graph.edge_count,
            kernel_k=verdict.k,
            peak_words=meter.peak,
            wall_time_ms=wall_time_ms,
            counters=dict(verdict.stats),
        )
    assert isinstance(verdict, NoInstance)
    return RunReport(
        problem=problem, n=n, m=m, k=k, verdict="no-instance",
        peak_words=meter.peak,
        wall_time_ms=wall_time_ms,
        reason=verdict.reason,
        counters=dict(verdict.stats),
    )


def render_meter_figure(meter: SpaceMeter, path: Path, title: str) -> None:
    """Plot the sampled working-memory trace next to the report."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    trace = meter.trace
    fig, ax = plt.subplots(figsize=(7, 3.5))
    if trace:
        xs, ys = zip(*trace)
        ax.step(xs, ys, where="post", lw=1.0, label="current words")
    ax.axhline(meter.peak, color="crimson", ls="--", lw=1.0,
               label=f"peak = {meter.peak}")
    ax.set_xlabel("meter events")
    ax.set_ylabel("tracked words")
    ax.set_title(title)
    ax.legend(loc="best", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
