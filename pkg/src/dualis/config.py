"""Size caps for exhaustive computations."""

from __future__ import annotations

import os

ORDER_CAP = 16
SEMILATTICE_CAP = 12
SWEEP_CAP = 5
TRANSFER_CAP = 8
RULE_VARIABLE_CAP = 4

ENV_VAR = "DUALIS_MAX_CARRIER"


def carrier_cap(default: int = ORDER_CAP) -> int:
    """The cap for a computation whose built-in limit is ``default``.

    ``DUALIS_MAX_CARRIER`` replaces every built-in limit when set.
    """
    raw = os.environ.get(ENV_VAR)
    if raw:
        return int(raw)
    return default
