"""Score bar charts written next to the CLI's text output."""

from __future__ import annotations

from typing import Dict, Optional, Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.patches import Patch  # noqa: E402


def _numeric(scores: Dict[str, object]) -> Dict[str, float]:
    return {c: float(v) for c, v in scores.items()}


def score_chart(
    path: str,
    candidates: Sequence[str],
    scores: Dict[str, object],
    title: str = "",
    after: Optional[Dict[str, object]] = None,
    highlight: Optional[str] = None,
) -> str:
    """Bar chart of ``scores`` (and ``after`` side by side, if given); returns ``path``."""
    before = _numeric(scores)
    width = 0.4 if after else 0.7
    fig, ax = plt.subplots(figsize=(min(16.0, max(4.0, 0.45 * len(candidates) + 2)), 3.2))
    xs = range(len(candidates))
    colors = ["tab:red" if c == highlight else "tab:blue" for c in candidates]
    offset = -width / 2 if after else 0
    ax.bar([x + offset for x in xs], [before[c] for c in candidates], width, color=colors)
    if after:
        later = _numeric(after)
        ax.bar([x + width / 2 for x in xs], [later[c] for c in candidates], width, color="tab:gray")
        handles = [Patch(color="tab:blue", label="before"), Patch(color="tab:gray", label="after")]
        if highlight:
            handles.insert(0, Patch(color="tab:red", label=f"{highlight} (before)"))
        ax.legend(handles=handles, frameon=False)
    ax.set_xticks(list(xs))
    ax.set_xticklabels(candidates, rotation=90 if len(candidates) > 12 else 0)
    ax.set_ylabel("score")
    if title:
        ax.set_title(title)
    for side in ("top", "right"):
        ax.spines[side].set_visible(False)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
