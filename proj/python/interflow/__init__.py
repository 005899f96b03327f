"""Constraint-based interprocedural dataflow analysis."""

from ._interflow import (
    Error,
    hull,
    hull_contains,
    interval_join,
    interval_widen,
    lattice_info,
    repro,
    repro_ids,
    run,
)

__all__ = [
    "Error",
    "hull",
    "hull_contains",
    "interval_join",
    "interval_widen",
    "lattice_info",
    "repro",
    "repro_ids",
    "run",
]
