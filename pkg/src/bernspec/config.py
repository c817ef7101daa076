"""Run-wide budgets and tunables.

Every long-running operation takes an optional RunConfig; None means
DEFAULT_CONFIG.  All defaults are documented here and mirrored by CLI flags
(flags win over a config file, the config file wins over these defaults).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, fields, replace
from pathlib import Path

# Flag threshold for the truncated-sum incompleteness evidence: calibrated so
# the two golden incomplete scalings separate from nearby complete ones at
# spectrum level 6 (see fourier.incompleteness_evidence).
EVIDENCE_THRESHOLD = 0.05
EVIDENCE_LEVEL = 6


@dataclass(frozen=True)
class RunConfig:
    """Budgets for the search/factoring cores.

    lattice_budget  -- max integer lattice nodes a single cycle search may visit
    group_budget    -- max power-walk iterations for the small-group certificate
    rho_budget      -- max rho iterations per cofactor while factoring
    trial_bound     -- trial-division bound before rho takes over
    workers         -- process count for range scans (1 = in-process)
    block_size      -- scan shard size; output order is independent of it
    timing          -- write real elapsed-micros into scan CSV (off keeps CSV
                       byte-identical across runs and worker counts)
    """

    lattice_budget: int = 100_000_000
    group_budget: int = 1_000_000
    rho_budget: int = 10_000_000
    trial_bound: int = 100_000
    workers: int = 1
    block_size: int = 1024
    timing: bool = False

    def override(self, **kwargs) -> "RunConfig":
        kwargs = {k: v for k, v in kwargs.items() if v is not None}
        return replace(self, **kwargs)


DEFAULT_CONFIG = RunConfig()


def load_config(path: str | Path) -> RunConfig:
    """Read a JSON config file; unknown keys are rejected."""
    data = json.loads(Path(path).read_text())
    known = {f.name for f in fields(RunConfig)}
    unknown = set(data) - known
    if unknown:
        raise ValueError(f"unknown config keys: {sorted(unknown)}")
    return RunConfig(**data)
