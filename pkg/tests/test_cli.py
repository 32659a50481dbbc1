import io
import json
import subprocess
import sys

import pytest

from linmatch.cli import run, verify_report
from linmatch.report import Report


def call(*argv):
    buf = io.StringIO()
    code, report = run(list(argv), stdout=buf)
    return code, report, buf.getvalue()


def test_match_group_obstruction():
    code, rep, out = call("match-group", "--group", "Z4", "--set-a", "0,2", "--set-b", "1,2")
    assert code == 0 and rep.verdict == "no-matching" and rep.witness is None
    assert json.loads(out)["schema"] == 1
    assert verify_report(rep)


def test_match_group_product_group():
    code, rep, _ = call("match-group", "--group", "Z2xZ3", "--set-a", "0,0;1,1", "--set-b", "0,1;1,0")
    assert code == 0 and rep.verdict == "matching"
    assert verify_report(rep)


def test_lmp_gf8_holds_exhaustively():
    code, rep, _ = call("lmp", "--p", "2", "--n", "3", "--dims", "1,2")
    assert code == 0 and rep.verdict == "holds"
    assert rep.coverage["mode"] == "exhaustive"
    assert rep.result["has_proper_intermediate_subfield"] is False
    assert verify_report(rep)


def test_lmp_gf16_fails_with_a_verifiable_witness():
    code, rep, _ = call("lmp", "--p", "2", "--n", "4", "--dims", "2")
    assert code == 0 and rep.verdict == "fails"
    assert verify_report(rep)
    # A tampered witness must not re-verify.
    forged = Report.from_json(rep.to_json())
    forged.witness["B"] = forged.witness["A"]
    assert not verify_report(forged)


def test_prime_combo_reports():
    code, rep, _ = call("prime-combo", "--degrees", "2,3")
    assert code == 0 and rep.result == {"coefficients": [1, 0], "total": 2}
    code, rep, _ = call("prime-combo", "--degrees", "2,3", "--min-coefficient", "1")
    assert code == 0 and rep.result == {"coefficients": [1, 1], "total": 5}
    assert verify_report(rep)


def test_field_info_and_witness_commands():
    code, rep, _ = call("field-info", "--p", "2", "--n", "6")
    assert code == 0 and rep.result["subfield_degrees"] == [1, 2, 3, 6]
    assert rep.verdict == "intermediate-subfield" and verify_report(rep)
    code, rep, _ = call("field-info", "--p", "2", "--n", "4", "--base-sub-degree", "2")
    assert rep.verdict == "no-intermediate-subfield"
    code, rep, _ = call("min-lmp-witness", "--p", "3")
    assert code == 0 and rep.result["modulus"] == "1,0,1" and verify_report(rep)
    code, rep, _ = call("min-lmp-witness", "--rational", "--modulus=-2,0,0,1")
    assert code == 0 and rep.result["degree"] == 3 and verify_report(rep)


def test_matched_basis_verify_and_search():
    base = ("matched-basis", "--p", "2", "--n", "4")
    code, rep, _ = call(*base, "--a-basis", "0,0,1,1;0,1", "--b-basis", "0,1;0,0,1")
    assert code == 0 and rep.verdict in ("matched", "not-matched") and verify_report(rep)
    code, rep, _ = call(*base, "--a-basis", "0,0,1,1;0,1", "--b-space", "0,1;0,0,1")
    assert code == 0 and rep.verdict == "none-exists" and verify_report(rep)
    code, rep, _ = call(*base, "--a-basis", "0,1;0,0,1", "--b-space", "0,0,0,1;1,1")
    assert code == 0 and verify_report(rep)


def test_has_root_reports():
    code, rep, _ = call("has-root", "--poly", "1,1,1", "--p", "2")
    assert rep.verdict == "no-root" and rep.result["irreducible"] is True and verify_report(rep)
    code, rep, _ = call("has-root", "--poly", "1,1,1", "--p", "2", "--n", "2")
    assert rep.verdict == "root" and verify_report(rep)
    code, rep, _ = call("has-root", "--poly=-2,0,0,1", "--rational")
    assert rep.verdict == "no-root" and verify_report(rep)


@pytest.mark.parametrize("argv", [
    ["match-group", "--group", "Z4", "--set-a", "0,2", "--set-b", "1"],
    ["match-group", "--group", "Z4"],
    ["prime-combo", "--degrees", "4,6"],
    ["lmp", "--p", "4", "--n", "2"],
    ["field-info", "--p", "2", "--modulus", "1,0,1"],
    ["nonsense"],
])
def test_bad_arguments_exit_2(argv):
    assert call(*argv)[0] == 2


@pytest.mark.parametrize("argv", [
    ["prime-combo", "--degrees", "9,10", "--max-total", "18"],
    ["lmp", "--p", "2", "--n", "4", "--dims", "2", "--mode", "exhaustive", "--max-pairs", "5"],
    ["has-root", "--poly", "1,1,1", "--p", "2", "--n", "21"],
])
def test_bounds_exit_3(argv):
    assert call(*argv)[0] == 3


def test_reports_are_deterministic():
    argv = ["lmp", "--p", "2", "--n", "4", "--dims", "1,2", "--mode", "sampled",
            "--samples", "20", "--seed", "5", "--all-witnesses"]
    first, second = call(*argv)[1], call(*argv)[1]
    assert first.to_json(wall_time=False) == second.to_json(wall_time=False)


def test_json_round_trip_and_projections(tmp_path):
    out = tmp_path / "r.json"
    code, rep, printed = call("lmp", "--p", "2", "--n", "4", "--dims", "2", "--out", str(out))
    assert code == 0 and printed == ""
    loaded = Report.from_json(out.read_text())
    assert loaded == rep and verify_report(loaded)
    csv_text = rep.render("csv")
    assert csv_text.startswith("key,value\n") and "verdict,fails" in csv_text
    assert rep.render("text").startswith("lmp: fails")
    with pytest.raises(ValueError):
        Report.from_dict({**rep.to_dict(), "schema": 2})


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "linmatch", "prime-combo", "--degrees", "1,4",
                           "--format", "text"], capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout.startswith("prime-combo: prime-found")
