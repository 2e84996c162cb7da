import json

import pytest

from e6sp4 import presets
from e6sp4.records import FAIL, NOT_APPLICABLE, PASS, ClaimRecord, judge
from e6sp4.verify import CLAIM_IDS, PAPER_RERUN, LedgerReport, adjacency_completions, render_report, run_ledger


@pytest.fixture(scope="module")
def report():
    return run_ledger()


def test_catalog_ids_pinned(report):
    assert [r.id for r in report.records] == list(CLAIM_IDS)
    assert CLAIM_IDS == (
        "01-e6-root-count", "02-e6-weyl-order", "03-compact-split", "04-c2-root-count",
        "05-c2-listed-roots", "06-ip-a1-a6", "07-angle-a1-a6", "07b-angle-nu1-nu2", "08-a1+a6",
        "09-2a1+a6", "10-gram-consistency", "11-theta-kernel", "12-average-compact-weights",
        "13-average-root-span", "14-worked-example", "15-injectivity", "16-diagram-shape",
    )


@pytest.mark.parametrize(
    "claim_id, verdict, computed",
    [
        ("01-e6-root-count", PASS, "72"),
        ("02-e6-weyl-order", PASS, "51840"),
        ("03-compact-split", FAIL, "40/32"),
        ("04-c2-root-count", FAIL, "8"),
        ("06-ip-a1-a6", FAIL, "0"),
        ("07-angle-a1-a6", FAIL, "cos^2=0, sign=0"),
        ("07b-angle-nu1-nu2", FAIL, "cos^2=1/2, sign=-"),
        ("08-a1+a6", FAIL, "root=no, length2=4"),
        ("09-2a1+a6", FAIL, "root=no, length2=10"),
        ("10-gram-consistency", FAIL, "2"),
        ("11-theta-kernel", PASS, "kernel=<w2, w3, w4, w5>, quotient rank=2"),
        ("13-average-root-span", PASS, "A(a2)=0, A(a3)=0, A(a4)=0, A(a5)=0"),
        ("14-worked-example", PASS, "theta=(1, 1), C=0"),
        ("15-injectivity", FAIL, "collisions=480"),
        ("16-diagram-shape", FAIL, "D6"),
    ],
)
def test_verdicts(report, claim_id, verdict, computed):
    r = report[claim_id]
    assert (r.verdict, r.computed) == (verdict, computed)


def test_listed_c2_roots(report):
    r = report["05-c2-listed-roots"]
    assert r.verdict == FAIL
    assert "nu1+2nu2:no" in r.computed and "2nu1+2nu2:no" in r.computed
    assert r.computed.count(":no") == 2


def test_average_of_compact_weights(report):
    r = report["12-average-compact-weights"]
    assert r.verdict == FAIL
    assert r.computed.startswith("A(w2)=(1/2, 0, 0, 0, 0, 1/2)")


def test_injectivity_notes(report):
    notes = report["15-injectivity"].notes
    assert "unexplained 0" in notes and "injective modulo ker(theta): yes" in notes


def test_adjacency_completions():
    c = adjacency_completions()
    assert c["trees_with_end_nodes"] == 16
    assert c["e6_shaped_with_end_nodes"] == 0
    assert c["e6_shaped"] > 0


def test_verdict_soundness_and_anchors(report):
    for r in report.records:
        assert r.anchor
        assert judge(r.claimed, r.computed) == r.verdict


def test_summary_conservation(report):
    assert sum(report.summary.values()) == len(report.records)


def test_json_roundtrip_and_determinism(report):
    text = render_report(report, "json")
    back = LedgerReport.from_dict(json.loads(text))
    assert back == report
    assert render_report(run_ledger(), "json") == text


def test_markdown(report):
    md = render_report(report, "markdown")
    rows = [l for l in md.splitlines() if l.startswith("| ") and not l.startswith("| id ")]
    assert len(rows) == len(report.records) >= 16


def test_empty_report():
    empty = LedgerReport((), "E6-bourbaki")
    md = render_report(empty, "markdown")
    assert "| id |" in md and "of 0 claims" in md
    assert json.loads(render_report(empty, "json"))["records"] == []


def test_alt_preset_rerun():
    rep = run_ledger(include_paper_preset=True)
    extra = [r.id for r in rep.records[len(CLAIM_IDS):]]
    assert extra == [f"{k}@E6-paper" for k in PAPER_RERUN]
    assert len({r.id for r in rep.records}) == len(rep.records)


def test_ledger_on_alt_preset():
    rep = run_ledger("E6-paper")
    assert rep["01-e6-root-count"].computed == "60"
    assert rep["02-e6-weyl-order"].computed == "23040"


def test_unknown_and_wrong_rank_preset():
    with pytest.raises(presets.UnknownPresetError):
        run_ledger("nosuch")
    with pytest.raises(ValueError):
        run_ledger("C2")


def test_claim_record_invariants():
    with pytest.raises(ValueError):
        ClaimRecord("x", "", "1", "1", PASS)
    with pytest.raises(ValueError):
        ClaimRecord("x", "a", "1", "1", "MAYBE")
    assert ClaimRecord.evaluate("x", "a", "1", None).verdict == NOT_APPLICABLE
