from __future__ import annotations

from typing import Sequence

from loguru import logger

from pyroi.core.exceptions import DomainError
from pyroi.simulation.engine import run_simulation
from pyroi.simulation.models import ConvergenceRow, SimulationConfig

DEFAULT_N_LIST = (1000, 5000, 15000, 20000, 30000, 100000)
DEFAULT_SEED_COUNT = 20


def convergence_study(
    config: SimulationConfig,
    n_list: Sequence[int] = DEFAULT_N_LIST,
    seed_count: int = DEFAULT_SEED_COUNT,
) -> list[ConvergenceRow]:
    """Spread of the simulated ROI error across seeds, per iteration count.

    For every N in ``n_list`` the configuration is run with the seeds
    config.seed, config.seed + 1, ..., config.seed + seed_count - 1 and the
    spread (max - min) and mean of the resulting errors are reported. The
    spread shrinks roughly like 1 / sqrt(N).

    Args:
        config (SimulationConfig): Base configuration; iterations and seed
            are overridden per run.
        n_list (Sequence[int]): Iteration counts, non-empty and ascending.
        seed_count (int): Number of seeds per iteration count, at least 2.

    Returns:
        list[ConvergenceRow]: One row per iteration count.

    Raises:
        DomainError: If the iteration list or seed count is invalid.
    """

    if not n_list:
        raise DomainError("iteration list must not be empty")
    if any(n < 1 for n in n_list):
        raise DomainError(f"iteration counts must be positive, got {list(n_list)}")
    if any(a >= b for a, b in zip(n_list, n_list[1:])):
        raise DomainError(f"iteration counts must be ascending, got {list(n_list)}")
    if seed_count < 2:
        raise DomainError(
            f"spread undefined for fewer than 2 seeds, got seed_count={seed_count}"
        )
    if config.seed + seed_count > 2**64:
        raise DomainError("seed range exceeds 64 bits")

    rows = []
    for n in n_list:
        errors = [
            run_simulation(
                config.model_copy(update={"iterations": n, "seed": config.seed + k})
            ).mean_abs_error
            for k in range(seed_count)
        ]
        row = ConvergenceRow(
            iterations=n,
            spread=max(errors) - min(errors),
            mean_delta_r=sum(errors) / len(errors),
            min_delta_r=min(errors),
            max_delta_r=max(errors),
            seeds=seed_count,
        )
        logger.info(f"N = {n}: spread {row.spread:.3g}, mean δR {row.mean_delta_r:.6g}")
        rows.append(row)

    return rows
