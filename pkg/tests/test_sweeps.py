from collections import Counter

import pytest

from dualis.config import ENV_VAR
from dualis.errors import CarrierTooLarge
from dualis.sweeps import characterization_sweep, envelope_sweep, labeled_posets, meet_semilattices

import oracles as O

POSET_COUNTS = [1, 1, 3, 19, 219, 4231]        # labeled posets on 0..5 points
SEMILATTICE_COUNTS = {1: 1, 2: 2, 3: 6, 4: 36, 5: 380}


def test_labeled_poset_counts():
    assert [sum(1 for _ in labeled_posets(n)) for n in range(6)] == POSET_COUNTS


def test_posets_are_distinct():
    seen = {P.up for P in labeled_posets(4)}
    assert len(seen) == 219


def test_semilattice_counts_by_size():
    sizes = Counter(M.size for M in meet_semilattices(5))
    assert dict(sizes) == SEMILATTICE_COUNTS
    for n in range(1, 5):
        assert sizes[n] == O.count_meet_semilattices_with_top(n)


def test_sweep_cap(monkeypatch):
    with pytest.raises(CarrierTooLarge):
        next(meet_semilattices(6))
    monkeypatch.setenv(ENV_VAR, "6")
    assert next(meet_semilattices(6, min_size=1)).size == 1


def test_small_sweeps_are_clean():
    for sweep in (characterization_sweep(4), envelope_sweep(4)):
        assert sweep.report.ok, sweep.report.summary()
    assert characterization_sweep(4).semilattices == 45
