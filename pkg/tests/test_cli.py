"""CLI surface: flags, output shapes, exit codes, determinism."""

import json

import pytest

from frobq import cli, theorems
from frobq.exactring import ZZ
from frobq.qseries import TruncSeries


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def json_lines(out):
    return [json.loads(line) for line in out.strip().splitlines()]


def test_expand_known_product(capsys):
    code, out, _ = run_cli(
        capsys, "expand",
        "--spec", "-,2,1,-2; -,12,8,-1; -,12,6,-1; -,12,4,-1; -,12,0,-1",
        "--N", "4")
    assert code == 0
    payload = json_lines(out)[0]
    assert payload["coefficients"] == ["1", "2", "3", "6", "10"]


def test_expand_mod_and_csv(capsys):
    # a spec with no spaces must use --spec=... so argparse does not read it as a flag
    code, out, _ = run_cli(capsys, "expand", "--spec=-,1,0,-1", "--N", "6",
                           "--mod", "5", "--csv")
    assert code == 0
    rows = out.strip().splitlines()
    assert rows[0] == "n,coefficient"
    assert rows[1:] == ["0,1", "1,1", "2,2", "3,3", "4,0", "5,2", "6,1"]


def test_expand_bad_spec_is_usage_error(capsys):
    code, _, err = run_cli(capsys, "expand", "--spec=-,1,1,-1", "--N", "4")
    assert code == 2
    assert "bad product spec" in err


def test_enumerate_count(capsys):
    code, out, _ = run_cli(capsys, "enumerate", "--variant", "colored",
                           "--k", "2", "--alpha", "-1", "--n", "2")
    assert code == 0
    assert json_lines(out)[0]["count"] == "12"


def test_enumerate_list_shape(capsys):
    code, out, _ = run_cli(capsys, "enumerate", "--variant", "repetition",
                           "--k", "2", "--alpha", "-1", "--n", "0", "--list")
    assert code == 0
    assert json_lines(out)[0]["arrays"] == [{"top": [], "bottom": [[0]]}]


def test_enumerate_guard_is_usage_error(capsys):
    code, _, err = run_cli(capsys, "enumerate", "--variant", "repetition",
                           "--k", "2", "--alpha", "-1", "--n", "31")
    assert code == 2
    assert "enumeration guard" in err


def test_theorem_one_reports_integrality(capsys):
    code, out, _ = run_cli(capsys, "theorem", "--which", "1",
                           "--k", "2", "--alpha", "-1", "--N", "6")
    assert code == 0
    payload = json_lines(out)[0]
    assert payload["integral"] is True
    assert payload["coefficients"] == ["1", "2", "3", "6", "10", "16", "26"]


def test_theorem_two(capsys):
    code, out, _ = run_cli(capsys, "theorem", "--which", "2",
                           "--k", "2", "--alpha", "-1", "--N", "4")
    assert code == 0
    assert json_lines(out)[0]["coefficients"] == ["2", "4", "12", "24", "50"]


@pytest.mark.parametrize("target", ["thm3", "thm4", "cor1", "cor2", "psi2",
                                    "thm3numerator", "jtp"])
def test_verify_targets_pass(capsys, target):
    code, out, _ = run_cli(capsys, "verify", "--target", target, "--N", "40")
    assert code == 0
    assert json_lines(out)[0]["status"] == "pass"


def test_verify_thm3_report_text(capsys):
    code, out, _ = run_cli(capsys, "verify", "--target", "thm3", "--N", "104")
    assert code == 0
    payload = json_lines(out)[0]
    assert payload["report"] == "phi_{2,-1}(5n+4) ≡ 0 mod 5, 21 witnesses"


def test_verify_disagreement_exits_one(capsys, monkeypatch):
    # sabotage one side so the CLI has a genuine divergence to report
    def broken(order):
        return TruncSeries.from_ints(ZZ, [1] * (order + 1))

    monkeypatch.setattr(theorems, "phi2m1_product", broken)
    code, out, _ = run_cli(capsys, "verify", "--target", "cor1", "--N", "10")
    assert code == 1
    payload = json_lines(out)[0]
    assert payload["status"] == "fail"
    assert payload["first_divergence"] == 1


def test_scan_builtin_emits_mod5_claim(capsys):
    code, out, _ = run_cli(capsys, "scan", "--builtin", "phi2m1", "--N", "204",
                           "--maxA", "8", "--maxM", "7")
    assert code == 0
    claims = json_lines(out)
    assert {"A": 5, "B": 4, "M": 5, "status": "verified", "subsumed": False,
            "verified_up_to": 204} in claims


def test_scan_byte_identical_across_runs(capsys):
    args = ("scan", "--builtin", "cphi2m1", "--N", "204", "--maxA", "8", "--maxM", "7")
    code1, out1, _ = run_cli(capsys, *args)
    code2, out2, _ = run_cli(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2


def test_scan_csv(capsys):
    code, out, _ = run_cli(capsys, "scan", "--builtin", "phi2m1", "--N", "204",
                           "--maxA", "5", "--maxM", "5", "--csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "A,B,M,verified_up_to,status,subsumed"
    assert "5,4,5,204,verified,False" in lines


def test_scan_insufficient_witnesses_usage_error(capsys):
    code, _, err = run_cli(capsys, "scan", "--builtin", "phi2m1", "--N", "30",
                           "--maxA", "8", "--maxM", "5")
    assert code == 2
    assert "insufficient witnesses" in err


def test_identities_battery(capsys):
    code, out, _ = run_cli(capsys, "identities", "--N", "30")
    assert code == 0
    lines = json_lines(out)
    summary = lines[-1]
    assert summary["failures"] == 0
    assert summary["checks"] == len(lines) - 1
    assert all(line["status"] == "pass" for line in lines[:-1])


def test_unknown_subcommand_exits_two(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["frobnicate"])
    assert exc.value.code == 2


def test_missing_required_flag_exits_two(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["expand", "--N", "4"])
    assert exc.value.code == 2
