"""CLI contract: thin wrappers, deterministic bytes, exit codes."""

import json

from siegellift import dirichlet_coeffs, sym3_object
from siegellift.cli import main
from siegellift.modform import CurveData

CURVE = "0,-1,1,0,0"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_ap_text(capsys):
    code, out, _ = run(capsys, "ap", "--curve", CURVE, "--pmax", "20")
    assert code == 0
    assert "a_2 = -2" in out and "a_11 = 1" in out and "split multiplicative" in out


def test_ap_rejects_nonprime(capsys):
    code, _, err = run(capsys, "ap", "--curve", CURVE, "--p", "9")
    assert code == 2 and "--p must be prime" in err


def test_malformed_curve(capsys):
    code, _, err = run(capsys, "ap", "--curve", "0,-1,1,0", "--pmax", "10")
    assert code == 2 and "--curve" in err


def test_factor_json_mirrors_library(capsys):
    code, out, _ = run(capsys, "factor", "--curve", CURVE, "--p", "7", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["7"]["coeffs"] == ["1", "2", "7"]
    assert payload["7"]["weight"] == 1


def test_sym3_at_two(capsys):
    code, out, _ = run(capsys, "sym3", "--curve", CURVE, "--p", "2", "--format", "json")
    assert code == 0
    assert json.loads(out)["2"]["coeffs"] == ["1", "0", "0", "0", "64"]


def test_induce_unsupported_discriminant(capsys):
    code, _, err = run(capsys, "induce", "--D", "-5", "--m", "1", "--p", "3")
    assert code == 2 and "class-number-one" in err


def test_induce_values(capsys):
    code, out, _ = run(capsys, "induce", "--D", "-4", "--m", "2", "--p", "5", "--format", "json")
    assert code == 0
    assert json.loads(out)["5"]["coeffs"] == ["1", "14", "625"]


def test_verify_ok_exit_zero(capsys):
    code, out, _ = run(capsys, "verify", "--identity", "sym3-ext2", "--curve", CURVE, "--pmax", "50")
    assert code == 0
    assert "0 FAIL" in out and " OK" in out


def test_verify_deterministic_bytes(capsys):
    args = ("verify", "--identity", "sym2-ind", "--D", "-4", "--m", "2", "--pmax", "80")
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    _, threaded, _ = run(capsys, *args, "--jobs", "4")
    assert first == second == threaded


def test_verify_corrupted_eigenfile(capsys, tmp_path):
    # a_2 of 11a1 is -2; write 2 instead (within the Ramanujan bound, so only
    # the cross-check against point counts can notice)
    lines = ["weight 2 level 11 character trivial", "2 2", "3 -1", "5 1", "7 -2", "11 1"]
    path = tmp_path / "corrupt.txt"
    path.write_text("\n".join(lines) + "\n")
    code, out, _ = run(
        capsys, "verify", "--identity", "ap-match", "--curve", CURVE, "--eigenfile", str(path)
    )
    assert code == 1
    assert "FAIL" in out
    assert out.index("FAIL") < out.index("\n", out.index("2 ")) or "table a_2" in out


def test_verify_intact_eigenfile(capsys, tmp_path, curve_11a1):
    from siegellift.modform import reduction_at

    lines = ["weight 2 level 11 character trivial"] + [
        f"{p} {reduction_at(curve_11a1, p).ap}" for p in (2, 3, 5, 7, 11, 13)
    ]
    path = tmp_path / "ok.txt"
    path.write_text("\n".join(lines) + "\n")
    code, out, _ = run(
        capsys, "verify", "--identity", "ap-match", "--curve", CURVE, "--eigenfile", str(path)
    )
    assert code == 0 and "0 FAIL" in out


def test_lcoeffs_csv(capsys):
    code, out, _ = run(
        capsys, "lcoeffs", "--curve", CURVE, "--transfer", "sym3", "--X", "100", "--format", "csv"
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n,a_n"
    assert len(lines) == 101
    # mirror against the library
    coeffs = dirichlet_coeffs(sym3_object(CurveData(0, -1, 1, 0, 0, conductor=11), 100), 100)
    for row in lines[1:]:
        n, an = row.split(",")
        assert str(coeffs[int(n)]) == an


def test_eval_zeta_like(capsys):
    code, out, _ = run(
        capsys, "eval", "--curve", CURVE, "--X", "2000", "-s", "3", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["terms"] == 2000
    assert float(payload["tail_bound"]) > 0


def test_eval_outside_domain(capsys):
    code, _, err = run(capsys, "eval", "--curve", CURVE, "--X", "100", "-s", "1.2")
    assert code == 2 and "convergence" in err


def test_predict_json_to_file(capsys, tmp_path):
    out_path = tmp_path / "pred.json"
    code, out, _ = run(
        capsys,
        "predict",
        "--curve",
        CURVE + ",11",
        "--pmax",
        "20",
        "--format",
        "json",
        "--out",
        str(out_path),
    )
    assert code == 0 and out == ""
    payload = json.loads(out_path.read_text())
    assert payload["level"] == 11
    assert payload["arch"]["siegel"] == {"scalar": 3}
    assert payload["spin_factors"]["2"]["coeffs"] == ["1", "0", "0", "0", "64"]
    assert payload["flags"] == {"cap": False, "endoscopic": False}
    assert payload["verification"]["ok"] is True


def test_predict_deterministic_bytes(capsys):
    args = ("predict", "--curve", CURVE, "--pmax", "30", "--format", "json")
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args, "--jobs", "3")
    assert first == second


def test_missing_source(capsys):
    code, _, err = run(capsys, "factor", "--p", "5")
    assert code == 2 and "source" in err


def test_transfer_tensor_needs_character(capsys):
    code, _, err = run(capsys, "lcoeffs", "--curve", CURVE, "--transfer", "tensor", "--X", "10")
    assert code == 2 and "--D and --m" in err


def test_curve_inline_json(capsys):
    code = main(["ap", "--curve", '{"a": [0, -1, 1, 0, 0], "conductor": 11}', "--p", "7"])
    out = capsys.readouterr().out
    assert code == 0 and "a_7 = -2" in out
