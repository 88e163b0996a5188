"""End-to-end checks of the command-line surface, run in-process.

Every test calls ``frobcat.cli.main`` with an argv list and inspects the
exit code, the captured stdout/stderr, and any files the command wrote.
Exit codes: 0 all verdicts pass, 1 at least one fails, 2 usage error.
"""

import json

import pytest

from frobcat.cli import main
from frobcat.instances import z4_to_z2_instance
from frobcat.io import functor_to_doc, parse_report
from frobcat.structures import FunctorData

PNG_MAGIC = b"\x89PNG\r\n\x1a\n"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------------------
# happy paths
# ---------------------------------------------------------------------------

def test_validate_builtin_chain_passes(capsys):
    code, out, err = run(capsys, "validate", "--builtin", "chain")
    assert code == 0
    assert "verdict: PASS" in out
    assert err == ""


def test_find_duals_chain_fails_cyclic_passes(capsys):
    code, out, _ = run(capsys, "find-duals", "--builtin", "chain")
    assert code == 1
    assert "verdict: FAIL" in out

    code, out, _ = run(capsys, "find-duals", "--builtin", "cyclic:4")
    assert code == 0
    assert "verdict: PASS" in out


def test_check_frobenius_builtin_passes(capsys):
    code, out, _ = run(capsys, "check-frobenius", "--builtin", "z4-identity")
    assert code == 0
    assert "0 failing" in out


def test_check_frobenius_fault_instance_fails(capsys):
    code, out, _ = run(capsys, "check-frobenius", "--builtin", "bool-bad-f2")
    assert code == 1
    assert "FAIL" in out


def test_adjudicate_cor_frob_positive_and_gated(capsys):
    code, out, _ = run(capsys, "adjudicate-cor-frob", "--builtin", "z4-to-z2")
    assert code == 0
    assert "verdict: PASS" in out

    code, out, _ = run(capsys, "adjudicate-cor-frob", "--builtin", "z4-shift")
    assert code == 1


def test_adjudicate_lin_frob_exit_codes(capsys):
    # the linear identity pair satisfies every condition
    code, _, _ = run(capsys, "adjudicate-lin-frob", "--builtin", "z4-linear-id")
    assert code == 0
    # variant A fails the monoidal conditions, variant B is rejected as
    # non-autonomous; both must surface as a non-zero exit
    code, _, _ = run(capsys, "adjudicate-lin-frob", "--builtin", "posetal-nat:6:A")
    assert code == 1
    code, _, _ = run(capsys, "adjudicate-lin-frob", "--builtin", "posetal-nat:6:B")
    assert code == 1


def test_check_linear_builtin(capsys):
    code, out, _ = run(capsys, "check-linear", "--builtin", "posetal-nat:6:A")
    assert code == 0
    assert "verdict: PASS" in out


def test_check_nat_and_check_autonomous(capsys):
    code, _, _ = run(capsys, "check-nat", "--builtin", "bool-relabel")
    assert code == 0
    code, _, _ = run(capsys, "check-autonomous", "--builtin", "bool-relabel")
    assert code == 0


# ---------------------------------------------------------------------------
# structured output
# ---------------------------------------------------------------------------

def test_json_output_has_report_document(capsys):
    code, out, _ = run(capsys, "check-monoidal", "--builtin", "z4-identity", "--json")
    assert code == 0
    doc = json.loads(out)
    report = doc["report"]
    assert report["entries"]
    assert all(e["holds"] for e in report["entries"])


def test_emit_writes_parseable_report(capsys, tmp_path):
    target = tmp_path / "report.json"
    code, _, _ = run(
        capsys, "validate", "--builtin", "cyclic:4", "--emit", str(target)
    )
    assert code == 0
    report = parse_report(target.read_text())
    assert report.ok
    assert report.title


def test_out_dir_receives_csv_and_figure(capsys, tmp_path):
    out_dir = tmp_path / "artifacts"
    code, _, _ = run(
        capsys, "check-frobenius", "--builtin", "z4-to-z2", "--out", str(out_dir)
    )
    assert code == 0
    csv_text = (out_dir / "report.csv").read_text()
    assert csv_text.splitlines()[0] == "equation_id,instantiation,holds,error"
    assert (out_dir / "verdicts.png").read_bytes()[:8] == PNG_MAGIC


# ---------------------------------------------------------------------------
# file inputs and the synthesize round trip
# ---------------------------------------------------------------------------

def test_synthesize_emits_checkable_patched_functor(capsys, tmp_path):
    # serialize the z4 -> z2 functor with its copairing stripped, let the
    # CLI synthesize one, and confirm the patched document passes the full
    # Frobenius check on reload
    inst = z4_to_z2_instance()
    func = inst.functor
    stripped = FunctorData(
        func.name, func.source, func.target, func.obj, func.mor,
        monoidal=func.monoidal, comonoidal=None,
    )
    src_doc = {"builtin": "cyclic:4"}
    tgt_doc = {"builtin": "cyclic:2"}
    functor_file = tmp_path / "stripped.json"
    functor_file.write_text(json.dumps(functor_to_doc(stripped, src_doc, tgt_doc)))

    patched_file = tmp_path / "patched.json"
    code, out, _ = run(
        capsys, "synthesize",
        "--functor", str(functor_file), "--emit", str(patched_file),
    )
    assert code == 0
    assert "synthesized copairing" in out

    patched = json.loads(patched_file.read_text())
    assert patched["comonoidal"] is not None

    code, out, _ = run(capsys, "check-frobenius", "--functor", str(patched_file))
    assert code == 0
    assert "0 failing" in out


def test_synthesize_json_reports_provenance(capsys):
    code, out, _ = run(capsys, "synthesize", "--builtin", "bool-relabel", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["witness_provenance"] == "derived-from-frobenius"
    assert doc["synthesized_comonoidal"]["pairs"]


# ---------------------------------------------------------------------------
# usage errors: exit 2, message on stderr, no partial report on stdout
# ---------------------------------------------------------------------------

@pytest.mark.parametrize(
    "argv",
    [
        ("validate", "--builtin", "no-such-instance"),
        ("validate",),  # neither file nor builtin
        ("check-frobenius", "--builtin", "chain"),  # category, not a functor
        ("validate", "--builtin", "chain", "--scope", "generators"),
        ("adjudicate-lin-frob", "--builtin", "posetal-nat:6"),  # malformed params
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert err.startswith("error: ")
    assert out == ""


def test_both_inputs_is_a_usage_error(capsys, tmp_path):
    doc_file = tmp_path / "cat.json"
    doc_file.write_text("{}")
    code, out, err = run(
        capsys, "validate", "--builtin", "chain", "--category", str(doc_file)
    )
    assert code == 2
    assert "exactly one" in err
    assert out == ""


def test_unreadable_and_malformed_files_exit_2(capsys, tmp_path):
    code, _, err = run(capsys, "validate", "--category", str(tmp_path / "absent.json"))
    assert code == 2
    assert "cannot read" in err

    bad = tmp_path / "bad.json"
    bad.write_text("not json {")
    code, _, err = run(capsys, "validate", "--category", str(bad))
    assert code == 2
    assert "not valid JSON" in err


# ---------------------------------------------------------------------------
# catalog
# ---------------------------------------------------------------------------

def test_catalog_lists_every_instance(capsys):
    code, out, _ = run(capsys, "catalog")
    assert code == 0
    assert "posetal-nat" in out
    assert "[deliberate fault]" in out


def test_catalog_json_matches_catalog_size(capsys):
    code, out, _ = run(capsys, "catalog", "--json")
    assert code == 0
    rows = json.loads(out)["catalog"]
    assert len(rows) == 14
    assert {r["kind"] for r in rows} == {"category", "functor", "linear"}


def test_catalog_out_dir(capsys, tmp_path):
    out_dir = tmp_path / "cat"
    code, _, _ = run(capsys, "catalog", "--out", str(out_dir))
    assert code == 0
    assert (out_dir / "catalog.csv").read_text().startswith("name,")
    assert (out_dir / "timings.png").read_bytes()[:8] == PNG_MAGIC
