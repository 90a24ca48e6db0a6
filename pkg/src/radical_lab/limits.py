"""Size guards and enumeration budgets.

Every guard exists because the engine is exhaustive: ring validation is
O(n^3), substructure enumeration can blow up combinatorially.  Budgets
turn "silently too slow" into an explicit SizeGuardExceeded.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

ENV_MAX_SIZE = "RADICAL_LAB_MAX_SIZE"

DEFAULT_VALIDATION_SIZE = 256
DEFAULT_PARENT_SIZE = 4096
DEFAULT_LATTICE_SIZE = 100000


@dataclass(frozen=True)
class Limits:
    """Budgets for construction validation and lattice enumeration."""

    max_validation_size: int = DEFAULT_VALIDATION_SIZE
    max_parent_size: int = DEFAULT_PARENT_SIZE
    max_lattice_size: int = DEFAULT_LATTICE_SIZE


def default_limits() -> Limits:
    """Default budgets, with the validation guard overridable via env.

    RADICAL_LAB_MAX_SIZE=<n> raises or lowers the largest structure the
    engine will fully validate (and therefore construct).
    """
    raw = os.environ.get(ENV_MAX_SIZE)
    if raw is None:
        return Limits()
    try:
        size = int(raw)
    except ValueError as exc:
        raise ValueError(f"{ENV_MAX_SIZE} must be an integer, got {raw!r}") from exc
    if size < 1:
        raise ValueError(f"{ENV_MAX_SIZE} must be positive, got {size}")
    return Limits(max_validation_size=size)
