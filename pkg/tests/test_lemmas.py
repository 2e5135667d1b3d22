from __future__ import annotations

import pytest

from bigenic import lemmas
from bigenic.errors import ValidationError
from bigenic.gadgets import NaeInstance, fano_instance
from bigenic.lemmas import (
    HOLDS,
    VIOLATED,
    random_instances,
    verify,
    verify_lemma1,
    verify_lemma2,
    verify_lemma3,
    verify_lemma4,
)

ONE = NaeInstance(3, ((1, 2, 3),))


def agreement(report):
    return next(c for c in report.claims if "<=>" in c.name)


@pytest.mark.parametrize("fn", [verify_lemma1, verify_lemma2])
def test_equivalences_hold(fn):
    for inst in (ONE, fano_instance(), NaeInstance(3), NaeInstance(1)):
        report = fn(inst)
        assert report.holds, report.to_dict()


def test_lemma1_positive_case_has_witness_checks():
    names = [c.name for c in verify_lemma1(ONE).claims]
    assert "G1 colouring is proper and respects L" in names
    assert "assignment is NAE-satisfying" in names


def test_lemma1_fano_has_no_colourings():
    report = verify_lemma1(fano_instance())
    assert [c.name for c in report.claims] == ["satisfiable <=> G1 list-colourable <=> G2 list-colourable"]


@pytest.mark.parametrize("fn", [verify_lemma3, verify_lemma4])
def test_freeness_holds(fn):
    for inst in (ONE, fano_instance()):
        report = fn(inst)
        assert report.holds, report.violations()
        assert any(c.name.startswith("direct and complement search agree") for c in report.claims)


def test_disagreement_is_reported(monkeypatch):
    monkeypatch.setattr(lemmas, "solve_list_colouring", lambda g, lists: None)
    report = verify_lemma1(ONE)
    assert not report.holds
    bad = agreement(report)
    assert bad.status == VIOLATED and bad.witness["g1"] is None and bad.witness["nae"] is not None


def test_embedding_is_reported(monkeypatch):
    # Pretend the gadget is its complement: 2P2 then shows up and must be flagged.
    real = lemmas.build_g1

    def broken(inst):
        g = real(inst)
        from bigenic.graph import complement
        import dataclasses

        return dataclasses.replace(g, graph=complement(g.graph))

    monkeypatch.setattr(lemmas, "build_g1", broken)
    report = verify_lemma3(fano_instance())
    assert not report.holds
    assert any(c.witness for c in report.violations())


def test_report_serialisation_is_stable():
    a = verify_lemma1(ONE).to_dict()
    b = verify_lemma1(ONE).to_dict()
    assert a == b and a["elapsed_ms"] is None
    assert a["instance"] == {"n": 3, "m": 1, "clauses": [[1, 2, 3]]}
    assert all(c["status"] == HOLDS for c in a["claims"])
    assert verify_lemma1(ONE).to_dict(timing=True)["elapsed_ms"] >= 0


def test_verify_dispatch():
    assert [r.lemma for r in verify("lemma2", ONE)] == ["lemma2"]
    (merged,) = verify("all", ONE)
    assert merged.lemma == "all" and merged.holds
    assert {c.name.split(":")[0] for c in merged.claims} == {"lemma1", "lemma2", "lemma3", "lemma4"}
    with pytest.raises(ValidationError):
        verify("lemma5", ONE)


def test_random_instances_contract():
    a = random_instances(5, 4, 3, 7)
    assert a == random_instances(5, 4, 3, 7)
    assert [x.to_text() for x in a] == [x.to_text() for x in random_instances(5, 4, 3, 7)]
    assert random_instances(1, 3, 1, 99) == [NaeInstance(3, ((1, 2, 3),))]
    for inst in random_instances(10, 6, 8, 42):
        assert 3 <= inst.n <= 6 and 1 <= inst.m <= 8
        assert not inst.duplicate_clauses()


@pytest.mark.parametrize("args", [(-1, 4, 3, 1), (1, 2, 1, 1), (1, 4, 0, 1), (1, 3, 2, 1)])
def test_random_instances_rejects(args):
    with pytest.raises(ValidationError):
        random_instances(*args)


@pytest.mark.slow
def test_random_sweep_all_lemmas():
    for inst in random_instances(20, 6, 8, 1):
        for report in verify("all", inst):
            assert report.holds, report.to_dict()
