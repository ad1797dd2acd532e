"""
Event counters shared by the engines.

A RunStats instance is optional everywhere; engines only count when one is
passed. Counts are exact, so the bench harness can fit growth slopes on them.
"""

from dataclasses import asdict, dataclass


@dataclass
class RunStats:
    """Exact event counts for one engine run."""

    reduce_calls: int = 0
    extend_calls: int = 0
    look_ahead_calls: int = 0
    # Incremental evaluator steps (one character appended or prepended)
    degree_evals: int = 0
    # DP cells filled and candidate splits examined
    cells: int = 0
    candidates: int = 0
    # Peak number of entries held by the prefix structure (|x| + |pi|)
    high_water: int = 0

    @property
    def operations(self) -> int:
        """reduce + extend + look_ahead calls, the quantity bounded by O(mn·λ2/λ1)."""
        return self.reduce_calls + self.extend_calls + self.look_ahead_calls

    def observe_size(self, entries: int) -> None:
        if entries > self.high_water:
            self.high_water = entries

    def to_dict(self) -> dict:
        return asdict(self)
