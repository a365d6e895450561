"""Exhaustive checks over every small meet-semilattice with top.

Enumerates all labeled meet-semilattices with top on up to N elements
(default 5), checks that distributivity matches the filter-lattice
characterization, and that each distributive one embeds in its
distributive envelope with the expected universal property.

    python demos/semilattice_sweep.py [N]
"""

import sys
import time

from dualis.sweeps import characterization_sweep, envelope_sweep

n = int(sys.argv[1]) if len(sys.argv) > 1 else 5
for sweep_fn in (characterization_sweep, envelope_sweep):
    start = time.perf_counter()
    sweep = sweep_fn(n)
    print(f"{sweep_fn.__name__}({n}): {sweep.semilattices} semilattices, "
          f"{sweep.distributive} distributive, {time.perf_counter() - start:.2f}s")
    for check in sweep.report.checks:
        print(f"  {check.id}: {check.instances} instances, {check.failed} failed")
