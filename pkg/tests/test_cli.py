"""End-to-end command line behavior: verbs, formats and exit codes."""

import json

import pytest

import largesub as ls
import largesub.cli as cli
from largesub.corpus import dump_record, write_corpus


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def jsonl(out):
    return [json.loads(line) for line in out.strip().splitlines()]


# -- group expressions -----------------------------------------------------------


def test_parse_group_spec_names_and_nesting():
    assert cli.parse_group_spec("symmetric(4)").order == 24
    assert cli.parse_group_spec(" direct( alternating(4), cyclic(2) ) ").order == 24
    nested = cli.parse_group_spec("direct(direct(cyclic(2),cyclic(3)),symmetric(3))")
    assert nested.order == 36
    glued = cli.parse_group_spec("central(sl(2,3),quaternion(8))")
    assert glued.order == 96
    assert ls.center(glued).order == 2


def test_parse_group_spec_central_requires_isomorphic_centers():
    with pytest.raises(ls.NotIsomorphism):
        cli.parse_group_spec("central(quaternion(8),cyclic(4))")


@pytest.mark.parametrize(
    "text",
    [
        "direct(cyclic(2))",
        "direct(cyclic(2),cyclic(3),cyclic(5))",
        "direct(cyclic(2),cyclic(3)",
        "central(cyclic(2)))",
        "nonsense(2)",
    ],
)
def test_parse_group_spec_rejects_bad_expressions(text):
    with pytest.raises(ls.UnknownName):
        cli.parse_group_spec(text)


# -- info -------------------------------------------------------------------------


def test_info_text(capsys):
    code, out, err = run(capsys, "info", "symmetric(4)")
    assert code == 0
    assert "group: symmetric(4)" in out
    assert "order: 24" in out
    assert "normal subgroup orders: 1, 4, 12, 24" in out
    assert "derived series orders: 24 > 12 > 4 > 1" in out
    assert "fitting subgroup order: 4" in out
    assert "supersoluble residual minimal or trivial: yes" in out


def test_info_insoluble_annotation(capsys):
    code, out, _ = run(capsys, "info", "alternating(5)")
    assert code == 0
    assert "supersoluble residual minimal or trivial: no (not soluble)" in out


def test_info_jsonl(capsys):
    code, out, _ = run(capsys, "info", "sl(2,3)", "--format", "jsonl")
    assert code == 0
    (record,) = jsonl(out)
    assert record["order"] == 24
    assert record["center_order"] == 2
    assert record["fitting_order"] == 8
    assert record["generalized_fitting_order"] == 8
    assert record["supersoluble_residual_order"] == 8
    assert record["residual_minimal_or_trivial"] is False


def test_info_rejects_unknown_group(capsys):
    code, out, err = run(capsys, "info", "mystery(3)")
    assert code == 2
    assert "error:" in err


# -- verify -----------------------------------------------------------------------


def test_verify_single_group_text(capsys):
    code, out, _ = run(capsys, "verify", "--theorem", "G", "--c", "2", "symmetric(4)")
    assert code == 0
    assert "[PASS] G symmetric(4) order 24" in out
    assert "summary: 1 pass, 0 skip, 0 fail" in out


def test_verify_compact_selector(capsys):
    code, out, _ = run(capsys, "verify", "--theorem", "G:2", "symmetric(4)")
    assert code == 0
    assert "summary: 1 pass, 0 skip, 0 fail" in out


def test_verify_flag_variants(capsys):
    code, out, _ = run(capsys, "verify", "--theorem", "GD", "--d", "2", "symmetric(4)")
    assert code == 0
    code, out, _ = run(capsys, "verify", "--theorem", "F", "--pi", "2,3", "symmetric(4)")
    assert code == 0
    code, out, _ = run(
        capsys, "verify", "--theorem", "C", "--class-key", "nilpotent", "sl(2,3)"
    )
    assert code == 0
    assert "summary: 1 pass" in out


def test_verify_missing_parameter(capsys):
    code, _, err = run(capsys, "verify", "--theorem", "G", "symmetric(4)")
    assert code == 2
    assert "needs --c" in err


def test_verify_insoluble_is_skip(capsys):
    code, out, _ = run(capsys, "verify", "--theorem", "D", "alternating(5)")
    assert code == 0
    assert "[SKIP] D alternating(5) order 60: hypothesis failed: soluble" in out
    assert "summary: 0 pass, 1 skip, 0 fail" in out


def test_verify_separability_skip(capsys):
    code, out, _ = run(capsys, "verify", "--theorem", "F", "--pi", "2", "alternating(5)")
    assert code == 0
    assert "[SKIP]" in out
    assert "pi_separable" in out


def test_verify_jsonl_reports(capsys):
    code, out, _ = run(
        capsys, "verify", "--theorem", "E", "direct(alternating(5),symmetric(4))",
        "--format", "jsonl",
    )
    assert code == 0
    records = jsonl(out)
    assert records[0]["theorem"] == "E"
    assert records[0]["outcome"] == "pass"
    assert records[0]["witnesses"][0]["order"] == 240
    assert records[-1] == {"summary": {"pass": 1, "skip": 0, "fail": 0}}


def test_verify_corpus_file(capsys, tmp_path):
    path = tmp_path / "mini.jsonl"
    write_corpus(
        path,
        [ls.symmetric_group(4), ls.alternating_group(5), ls.special_linear_2_3()],
    )
    code, out, _ = run(capsys, "verify", "--theorem", "D", str(path))
    assert code == 0
    assert "summary: 2 pass, 1 skip, 0 fail" in out


def test_verify_counterexample_exit_code(capsys, tmp_path, monkeypatch):
    # no true claim fails on the shipped corpus, so exercise the failure
    # path with a stubbed verifier
    report = ls.VerificationReport("D", "stub", 1)
    report.hypotheses.append(("soluble", True))
    report.witnesses.append(
        ls.WitnessRecord("stub subgroup", 1, (0,), False, 1)
    )
    report.counterexample = report.witnesses[0]
    monkeypatch.setattr(cli, "verify_selector", lambda G, s: report)
    code, out, _ = run(capsys, "verify", "--theorem", "D", "cyclic(2)")
    assert code == 1
    assert "[FAIL]" in out
    assert "counterexample: stub subgroup (centralizer order 1)" in out
    assert "summary: 0 pass, 0 skip, 1 fail" in out


def test_verify_failed_checks_line(capsys, monkeypatch):
    report = ls.VerificationReport("B", "stub", 8)
    report.checks.append(("product_order", False))
    monkeypatch.setattr(cli, "verify_selector", lambda G, s: report)
    code, out, _ = run(capsys, "verify", "--theorem", "B", "cyclic(2)")
    assert code == 1
    assert "failed checks: product_order" in out


def test_verify_b_witness(capsys):
    code, out, _ = run(capsys, "verify", "--theorem", "B", "sl(2,3)")
    assert code == 0
    assert "[PASS] B sl(2,3) order 24: 5 checks" in out


def test_verify_bad_bound_is_input_error(capsys):
    code, _, err = run(capsys, "verify", "--theorem", "G", "--c", "1", "symmetric(4)")
    assert code == 2
    assert "at least 2" in err


def test_verify_bad_selector(capsys):
    code, _, err = run(capsys, "verify", "--theorem", "Z", "symmetric(4)")
    assert code == 2
    assert "unknown claim selector" in err


# -- scan -------------------------------------------------------------------------


@pytest.fixture()
def scan_corpus_path(tmp_path):
    groups = [
        ls.alternating_group(4),
        ls.special_linear_2_3(),
        ls.direct_product(ls.alternating_group(4), ls.alternating_group(4)),
        ls.symmetric_group(3),
        ls.dihedral_group(8),
        ls.cyclic_group(12),
        ls.alternating_group(5),
    ]
    path = tmp_path / "scan.jsonl"
    write_corpus(path, groups)
    return path


def test_scan_text(capsys, scan_corpus_path):
    code, out, _ = run(capsys, "scan", str(scan_corpus_path))
    assert code == 0
    assert (
        "finding: direct(alternating(4),alternating(4)) order 144,"
        " supersoluble residual order 16," in out
    )
    assert "scanned 7 groups: 1 findings, 4 residual-minimal," in out
    assert "1 with a non-large witness, 1 skipped (not soluble)" in out
    assert "findings per order: 144: 1" in out


def test_scan_jsonl(capsys, scan_corpus_path):
    code, out, _ = run(capsys, "scan", str(scan_corpus_path), "--format", "jsonl")
    assert code == 0
    records = jsonl(out)
    summary = records[-1]
    assert summary["summary"] == {
        "finding": 1,
        "residual_minimal": 4,
        "witness_not_large": 1,
        "not_soluble": 1,
    }
    assert summary["findings_per_order"] == {"144": 1}
    finding = next(r for r in records[:-1] if r["status"] == "finding")
    assert finding["residual_order"] == 16
    assert all(w["is_large"] for w in finding["witnesses"])
    skipped = next(r for r in records[:-1] if r["status"] == "not_soluble")
    assert skipped["witnesses"] is None


def test_scan_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "scan", str(tmp_path / "nope.jsonl"))
    assert code == 2
    assert "not found" in err


# -- construct / corpus-check --------------------------------------------------------


def test_construct_round_trip(capsys, tmp_path):
    code, out, _ = run(capsys, "construct", "direct(cyclic(2),cyclic(3))")
    assert code == 0
    record = json.loads(out)
    assert record["kind"] == "table"
    assert record["order"] == 6
    path = tmp_path / "one.jsonl"
    path.write_text(out)
    code, out2, _ = run(capsys, "verify", "--theorem", "D", str(path))
    assert code == 0
    assert "summary: 1 pass" in out2


def test_corpus_check_ok(capsys, tmp_path):
    path = tmp_path / "ok.jsonl"
    write_corpus(path, [ls.cyclic_group(4), ls.symmetric_group(3)])
    code, out, _ = run(capsys, "corpus-check", str(path))
    assert code == 0
    assert "line 1: ok cyclic(4) order 4" in out
    assert "line 2: ok symmetric(3) order 6" in out
    assert "2 records, 0 failing" in out


def test_corpus_check_reports_broken_record(capsys, tmp_path):
    # order-5 latin square with two-sided inverses but no associativity
    from test_groups import LOOP5

    flat = [v for row in LOOP5 for v in row]
    lines = [
        dump_record(ls.cyclic_group(3)),
        json.dumps({"kind": "table", "name": "loop5", "order": 5, "table": flat}),
    ]
    path = tmp_path / "mixed.jsonl"
    path.write_text("\n".join(lines) + "\n")
    code, out, _ = run(capsys, "corpus-check", str(path))
    assert code == 1
    assert "line 1: ok cyclic(3) order 3" in out
    assert "line 2: FAIL loop5" in out
    assert "witness (1, 1, 2)" in out
    assert "2 records, 1 failing" in out


def test_corpus_check_cap_exceeded(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("LARGESUB_ORDER_CAP", "100")
    record = {
        "kind": "perm",
        "name": "big",
        "degree": 5,
        "generators": [[1, 0, 2, 3, 4], [1, 2, 3, 4, 0]],
    }
    path = tmp_path / "big.jsonl"
    path.write_text(json.dumps(record) + "\n")
    code, out, _ = run(capsys, "corpus-check", str(path))
    assert code == 1
    assert "FAIL big" in out
    assert "exceeds the cap 100" in out


def test_malformed_corpus_is_input_error(capsys, tmp_path):
    path = tmp_path / "bad.jsonl"
    path.write_text('{"kind":"magma"}\n')
    code, _, err = run(capsys, "corpus-check", str(path))
    assert code == 2
    assert "line 1" in err


def test_verify_on_malformed_corpus(capsys, tmp_path):
    path = tmp_path / "bad.jsonl"
    path.write_text("{broken\n")
    code, _, err = run(capsys, "verify", "--theorem", "E", str(path))
    assert code == 2
    assert "invalid JSON" in err


def test_central_spec_mismatch_is_input_error(capsys):
    code, _, err = run(capsys, "info", "central(quaternion(8),cyclic(4))")
    assert code == 2
    assert "error:" in err
