"""CSV and JSON artifact writers.

Every file embeds the hash of the run configuration; CSV numbers carry
17 significant digits so re-runs are byte-identical.
"""

from __future__ import annotations

import hashlib
import json
from pathlib import Path


def config_hash(cfg: dict) -> str:
    blob = json.dumps(cfg, sort_keys=True, separators=(",", ":"), default=str)
    return hashlib.sha256(blob.encode()).hexdigest()[:16]


def format_number(x) -> str:
    return f"{float(x):.17g}"


def write_csv(path: Path, header: list[str], columns, cfg_hash: str) -> None:
    """Write columns (same length) to CSV; first line carries the config hash."""
    cols = [list(c) for c in columns]
    n = len(cols[0])
    if any(len(c) != n for c in cols):
        raise ValueError("CSV columns must have equal length")
    lines = [f"# config_hash: {cfg_hash}", ",".join(header)]
    for i in range(n):
        lines.append(",".join(format_number(c[i]) for c in cols))
    path.write_text("\n".join(lines) + "\n")


def write_json_meta(path: Path, meta: dict, cfg_hash: str) -> None:
    payload = dict(meta)
    payload["config_hash"] = cfg_hash
    path.write_text(json.dumps(payload, indent=2, sort_keys=True, default=str) + "\n")
