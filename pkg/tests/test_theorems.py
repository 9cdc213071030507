"""Executable statement registry: verdicts on canned instances."""

import pytest

from socle.linalg import GF101
from socle.modules import canonical_module, regular_module
from socle.theorems import (
    FAIL,
    NO_COUNTEREXAMPLE,
    PASS,
    VACUOUS,
    Instance,
    agp_example,
    canned_corpus,
    check,
    check_suite,
    registry,
)


def test_registry_shape():
    reg = registry()
    assert [s.id for s in reg] == [f"S{i}" for i in range(1, 30)]
    assert all(s.title and s.statement for s in reg)
    conjectures = [s.id for s in reg if s.conjecture]
    assert conjectures == ["S24"]


def test_unknown_statement_raises(agp):
    ring, M = agp
    inst = Instance("x", ring, {"M": M})
    with pytest.raises(KeyError):
        check("S99", inst)


def test_s16_on_agp():
    ring, M = agp_example(GF101)
    inst = Instance("agp", ring, {"M": M, "N": canonical_module(ring)})
    v = check("S16", inst, 8)
    assert v.status == PASS
    assert v.data.get("e") == 4 and v.data.get("a") == 3
    assert v.data.get("gammaM") == 3


def test_s4_on_agp():
    ring, M = agp_example(GF101)
    inst = Instance("agp", ring, {"M": M, "N": canonical_module(ring)})
    assert check("S4", inst, 8).status == PASS


def test_s17_part_on_flat(flat):
    inst = Instance("flat", flat, {})
    v = check("S17.2", inst, 6)
    assert v.status == PASS


def test_s13_vacuous_on_free(gor):
    inst = Instance("free", gor, {"M": regular_module(gor),
                                  "N": regular_module(gor)})
    v = check("S13", inst, 6)
    assert v.status == VACUOUS


def test_s24_never_passes():
    for inst in canned_corpus(GF101):
        v = check("S24", inst, 6)
        assert v.status in (VACUOUS, NO_COUNTEREXAMPLE, FAIL)
        assert v.status != PASS


def test_s27_minor_annihilation():
    ring, M = agp_example(GF101)
    inst = Instance("agp", ring, {"M": M})
    assert check("S27", inst, 6).status in (PASS, VACUOUS)


def test_pass_verdict_has_no_dossier(gor):
    inst = Instance("gor", gor, {"M": regular_module(gor)})
    v = check("S3", inst, 6)
    assert v.status == PASS
    assert v.counterexample is None


def test_suite_counts_consistent():
    corpus = canned_corpus(GF101, randoms=1)
    report = check_suite(corpus, ids=["S3", "S7", "S11", "S24"], cutoff=6)
    counts = report.counts
    assert sum(counts.values()) == len(report.verdicts) == 4 * len(corpus)
    assert counts[FAIL] == 0
    assert not report.failed


def test_verdict_str_readable(gor):
    inst = Instance("gor", gor, {"M": regular_module(gor)})
    v = check("S3", inst, 6)
    assert str(v).startswith("S3: PASS")
