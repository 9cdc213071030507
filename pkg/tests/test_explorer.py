"""Randomized counterexample explorer: determinism and constraints."""

import numpy as np
import pytest

from socle.explorer import explore, random_ring
from socle.linalg import GF101


def test_budget_zero_is_empty():
    rep = explore(seed=1, budget=0)
    assert rep.trials == 0 and rep.candidates == []
    assert not rep.found_counterexample


def test_p_one_is_vacuous():
    rep = explore(seed=1, budget=10, p=1)
    assert rep.vacuous and rep.trials == 0
    assert "explore.vacuous=1" in rep.machine_lines()


def test_bad_powers_rejected():
    with pytest.raises(ValueError):
        explore(seed=1, budget=1, p=0)


def test_machine_report_deterministic():
    a = explore(seed=9, budget=12, cutoff=6)
    b = explore(seed=9, budget=12, cutoff=6)
    assert "\n".join(a.machine_lines()) == "\n".join(b.machine_lines())
    c = explore(seed=10, budget=12, cutoff=6)
    assert "\n".join(a.machine_lines()) != "\n".join(c.machine_lines())


def test_histogram_accounts_for_trials():
    rep = explore(seed=3, budget=15, cutoff=6)
    assert sum(rep.histogram.values()) == rep.trials
    assert rep.trials + rep.rejected_rings == 15


def test_random_ring_constraints():
    for trial in range(10):
        rng = np.random.default_rng((99, trial))
        ring = random_ring(GF101, rng, h_min=3)
        if ring is None:
            continue
        assert ring.h >= 3
        assert ring.length <= 30
        assert 2 <= ring.e <= 4


def test_random_ring_deterministic():
    r1 = random_ring(GF101, np.random.default_rng(5))
    r2 = random_ring(GF101, np.random.default_rng(5))
    assert (r1 is None) == (r2 is None)
    if r1 is not None:
        assert r1.hilbert == r2.hilbert
        assert np.array_equal(r1.table, r2.table)
