"""Optional flop accounting for the core pipeline.

A flop is one add, subtract, multiply, divide or square root; sign flips
are free.  Counting is block-level: each kernel adds the number of
operations it actually executed, so early exits and skipped branches are
reflected.  Passing ``counter=None`` (the default everywhere) disables
accounting with negligible overhead.
"""

from __future__ import annotations

__all__ = ["FlopCounter"]


class FlopCounter:
    """Accumulates flop counts, optionally split by labelled phase."""

    __slots__ = ("total", "by_phase")

    def __init__(self):
        self.total = 0
        self.by_phase: dict[str, int] = {}

    def add(self, n: int, phase: str | None = None) -> None:
        self.total += n
        if phase is not None:
            self.by_phase[phase] = self.by_phase.get(phase, 0) + n

    def __repr__(self):
        return f"FlopCounter(total={self.total}, by_phase={self.by_phase})"
