"""Report serialization and the command-line interface, end to end."""

import json
import subprocess
import sys

import pytest

from contactframe import (
    VerificationReport,
    emit,
    load_manifest,
    verify_concircular_suite,
    verify_gtw_suite,
    verify_nkappa_suite,
)
from contactframe.suite import (
    CONC_CHECK_NAMES,
    GTW_CHECK_NAMES,
    NKAPPA_CHECK_NAMES,
)

LAMBDA = "manifests/lambda_family.json"
ABELIAN = "manifests/abelian3.json"


def run_cli(*args: str):
    return subprocess.run(
        [sys.executable, "-m", "contactframe", *args],
        capture_output=True,
        text=True,
    )


# -- report object ---------------------------------------------------------------


def test_empty_report_emits_valid_json():
    report = VerificationReport()
    doc = json.loads(emit(report, "json"))
    assert doc["checks"] == []
    assert "engine_version" in doc["provenance"]
    assert doc["provenance"]["manifest_hash"] is None


def test_emit_rejects_unknown_format():
    with pytest.raises(ValueError):
        emit(VerificationReport(), "yaml")


def test_catalogues_match_emitted_names(fam):
    nk = verify_nkappa_suite(fam.m, fam.s, fam.h, fam.lc, fam.r, fam.kappa)
    assert tuple(c.name for c in nk.checks) == NKAPPA_CHECK_NAMES
    gt = verify_gtw_suite(fam.m, fam.s, fam.h, fam.kappa, fam.lc, fam.r, fam.pkg)
    assert tuple(c.name for c in gt.checks) == GTW_CHECK_NAMES
    cc = verify_concircular_suite(fam.m, fam.s, fam.z, fam.pkg.ricci)
    assert tuple(c.name for c in cc.checks) == CONC_CHECK_NAMES


# -- exit semantics ----------------------------------------------------------------


def test_verify_lambda_family_passes():
    proc = run_cli("verify", LAMBDA)
    assert proc.returncode == 0, proc.stderr
    assert "0 fails" in proc.stdout


def test_verify_abelian_all_fails():
    proc = run_cli("verify", ABELIAN)
    assert proc.returncode == 1
    assert "acm.contact_condition" in proc.stdout


def test_verify_abelian_nullity_suite_is_all_gated():
    proc = run_cli("verify", ABELIAN, "--suite", "nkappa")
    assert proc.returncode == 0, proc.stdout
    assert "gated" in proc.stdout


def test_validate_exit_codes(tmp_path):
    ok = run_cli("validate", LAMBDA)
    assert ok.returncode == 0
    bad_path = tmp_path / "broken.json"
    bad_path.write_text(json.dumps({"dimension": 4}))
    bad = run_cli("validate", str(bad_path))
    assert bad.returncode == 2
    assert bad.stderr.strip()


def test_unknown_zoo_label_exits_2():
    proc = run_cli("zoo", "klein-bottle")
    assert proc.returncode == 2


def test_domain_error_exits_2():
    proc = run_cli("boeckx", "--kappa", "1", "--mu", "0")
    assert proc.returncode == 2


def test_bad_rational_argument_exits_2():
    proc = run_cli("deform", "--kappa", "q", "--mu", "0", "--a", "1")
    assert proc.returncode == 2


def test_unknown_suite_exits_2():
    proc = run_cli("verify", LAMBDA, "--suite", "everything")
    assert proc.returncode == 2


# -- determinism --------------------------------------------------------------------


def test_verify_json_is_byte_identical_between_runs():
    a = run_cli("verify", LAMBDA, "--format", "json")
    b = run_cli("verify", LAMBDA, "--format", "json")
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout
    doc = json.loads(a.stdout)
    assert all(c["status"] != "fails" for c in doc["checks"])
    assert doc["provenance"]["manifest_hash"]


def test_curvature_json_is_byte_identical_between_runs():
    for conn in ("lc", "gtw"):
        a = run_cli("curvature", LAMBDA, "--connection", conn, "--format", "json")
        b = run_cli("curvature", LAMBDA, "--connection", conn, "--format", "json")
        assert a.returncode == 0, a.stderr
        assert a.stdout == b.stdout


# -- content -----------------------------------------------------------------------


def test_curvature_text_renders_vectors():
    proc = run_cli("curvature", LAMBDA, "--connection", "gtw")
    assert proc.returncode == 0
    assert "-2*E3" in proc.stdout  # R(E2,E3)E2
    assert "scalar curvature: 4" in proc.stdout


def test_curvature_lc_reports_kappa():
    proc = run_cli("curvature", LAMBDA, "--format", "json")
    doc = json.loads(proc.stdout)
    assert doc["connection"] == "lc"
    assert doc["kappa"] == "-1*lambda^2+1"
    assert doc["scalar_curvature"] == "-2*lambda^2+2"


def test_format_flag_works_in_both_positions():
    before = run_cli("--format", "json", "verify", LAMBDA)
    after = run_cli("verify", LAMBDA, "--format", "json")
    assert before.returncode == after.returncode == 0
    assert before.stdout == after.stdout


def test_zoo_json_manifest_loads():
    proc = run_cli("zoo", "lambda", "--lambda", "1/2", "--format", "json")
    assert proc.returncode == 0, proc.stderr
    doc = json.loads(proc.stdout)
    m, s = load_manifest(doc["manifest"])
    assert m.dim == 3
    assert doc["expected_kappa"] == "3/4"


def test_zoo_symbolic_manifest_loads():
    proc = run_cli("zoo", "lambda", "--symbolic", "--format", "json")
    doc = json.loads(proc.stdout)
    m, s = load_manifest(doc["manifest"])
    assert m.params == ("lambda",)


def test_deform_output():
    proc = run_cli("deform", "--kappa", "-8", "--mu", "-8", "--a", "5", "--format", "json")
    assert proc.returncode == 0
    doc = json.loads(proc.stdout)
    assert doc["kappa_bar"] == "16/5"
    assert doc["mu_bar"] == "0"


def test_boeckx_output():
    proc = run_cli("boeckx", "--kappa", "3/4", "--mu", "0", "--format", "json")
    doc = json.loads(proc.stdout)
    assert doc["is_exact"] is True
    assert doc["value"] == "2"
