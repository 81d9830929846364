"""Tests for the command-line interface: exit codes and report renderings."""

import json

from nassoc.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_dims_output(capsys):
    code, out, _ = run_cli(capsys, "dims", "--system", "sas", "--max-degree", "5")
    assert code == 0
    assert out.strip() == "1 2 6 12 1"


def test_check_identity_exit_codes(capsys):
    code, out, _ = run_cli(capsys, "check-identity", "--algebra", "dim5_nonassoc", "--system", "sas")
    assert code == 0 and "holds" in out
    code, out, _ = run_cli(capsys, "check-identity", "--algebra", "dim5_nonassoc", "--system", "as")
    assert code == 1
    assert "(e1, e2, e1)" in out


def test_degenerate_certificate(capsys):
    code, out, _ = run_cli(capsys, "degenerate", "--cert", "a12_0_to_a11")
    assert code == 0
    assert "verified" in out


def test_usage_error_exit_2(capsys):
    code, _, err = run_cli(capsys, "check-identity", "--algebra", "no_such_algebra", "--system", "sas")
    assert code == 2
    assert "error" in err
    code, _, err = run_cli(capsys, "prove-zero", "--expr", "((x1 x2 x3)", "--system", "sas")
    assert code == 2


def test_json_and_text_verdicts_agree(capsys):
    code_t, out_t, _ = run_cli(capsys, "implies", "--sub", "cas", "--sup", "sas", "--degree", "3")
    code_j, out_j, _ = run_cli(capsys, "implies", "--sub", "cas", "--sup", "sas", "--degree", "3", "--json")
    assert code_t == code_j == 0
    payload = json.loads(out_j)
    assert payload["verdict"] is True
    assert "contained" in out_t
    # and the failing direction agrees too
    code_t, _, _ = run_cli(capsys, "implies", "--sub", "sas", "--sup", "cas", "--degree", "3")
    code_j, out_j, _ = run_cli(capsys, "implies", "--sub", "sas", "--sup", "cas", "--degree", "3", "--json")
    assert code_t == code_j == 1
    assert json.loads(out_j)["verdict"] is False


def test_hilbert_json_exact_strings(capsys):
    code, out, _ = run_cli(capsys, "hilbert", "--system", "sas", "--order", "5", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["coefficients"] == ["-1", "1", "-1", "1/2", "-1/120"]


def test_normal_form_and_free_basis(capsys):
    code, out, _ = run_cli(capsys, "normal-form", "--expr", "((x1 x2) x3)")
    assert code == 0 and out.strip() == "(x2 (x3 x1))"
    code, out, _ = run_cli(capsys, "free-basis", "--variety", "sas", "--degree", "4",
                           "--generators", "4", "--multilinear")
    assert code == 0 and "count: 12" in out


def test_prove_zero_exit(capsys):
    code, _, _ = run_cli(capsys, "prove-zero", "--expr", "[x1,[x2,[x3,[x4,x5]]]]", "--system", "sas")
    assert code == 0
    code, _, _ = run_cli(capsys, "prove-zero", "--expr", "[[x1,x2],x3]", "--system", "sas")
    assert code == 1


def test_wedderburn_and_set(capsys):
    code, out, _ = run_cli(capsys, "wedderburn", "--algebra", "a12", "--set", "alpha=1")
    assert code == 0
    assert "dim S = 1, dim R = 3" in out


def test_mutate_with_check(capsys):
    code, _, _ = run_cli(capsys, "mutate", "--algebra", "dim5_nonassoc", "--generic",
                         "--check-system", "cas")
    assert code == 0
    code, _, _ = run_cli(capsys, "hull", "--algebra", "a1", "--check-system", "sas")
    assert code == 1


def test_closed_set_exit(capsys):
    code, out, _ = run_cli(capsys, "closed-set", "--spec", "a12_not_a10",
                           "--algebra", "a12", "--set", "alpha=1")
    assert code == 0 and "member" in out
    code, out, _ = run_cli(capsys, "closed-set", "--spec", "a12_not_a10",
                           "--algebra", "a10", "--set", "alpha=1")
    assert code == 1


def test_pencil_and_orbit(capsys):
    code, out, _ = run_cli(capsys, "pencil-invariant", "--algebra", "a2", "--set", "alpha=2")
    assert code == 0 and out.strip() == "2"
    code, out, _ = run_cli(capsys, "orbit-dim", "--algebra", "A17")
    assert code == 0 and out.strip() == "16"


def test_dual_subcommand(capsys):
    code, out, _ = run_cli(capsys, "dual", "--system", "sas")
    assert code == 0 and "self-dual" in out


def test_polarize(capsys):
    code, out, _ = run_cli(capsys, "polarize", "--identity", "(x1,x1,x1) = 0")
    assert code == 0
    assert out.count("= 0") == 1


def test_system_from_file(capsys, tmp_path):
    path = tmp_path / "anti.ids"
    path.write_text("# sign-flipped variant\n((x1 x2) x3) + (x1 (x3 x2)) = 0\n")
    code, out, _ = run_cli(capsys, "dims", "--system", str(path), "--max-degree", "4")
    assert code == 0
    assert out.strip() == "1 2 6 12"


def test_reproduce_subset(capsys):
    code, out, _ = run_cli(capsys, "reproduce-paper", "--only", "pencil")
    assert code == 0
    assert "[PASS] pencil" in out
    assert "rows passed" in out


def test_remaining_subcommand_sweep(capsys, tmp_path):
    """Every advertised subcommand runs and reports sensibly."""
    code, out, _ = run_cli(capsys, "koszulity", "--system", "a23", "--order", "5")
    assert code == 0 and "7/6*t^5" in out
    code, out, _ = run_cli(capsys, "derivations", "--algebra", "A17")
    assert code == 0 and "dim Der = 0" in out
    code, out, _ = run_cli(capsys, "powers", "--algebra", "a2")
    assert code == 0 and "class=2" in out
    code, out, _ = run_cli(capsys, "peirce", "--algebra", "a12", "--set", "alpha=1",
                           "--idempotent", "0,0,0,1")
    assert code == 0 and "(3, 0, 1)" in out
    code, out, _ = run_cli(capsys, "fingerprint", "--algebra", "a13")
    assert code == 0 and out.startswith("(4,")
    code, _, _ = run_cli(capsys, "compatible", "--algebra", "A04", "--algebra-b", "A04",
                         "--system", "sas")
    assert code == 0
    code, _, _ = run_cli(capsys, "scalar-mutate", "--algebra", "a2", "--check-system", "a132")
    assert code == 0
    code, _, _ = run_cli(capsys, "kantor", "--algebra", "dim5_nonassoc", "--generic",
                         "--check-system", "cas")
    assert code == 0
    code, out, _ = run_cli(capsys, "transform", "--algebra", "a12", "--cert", "a12_0_to_a11")
    assert code == 0 and "c[1][1][3] = t" in out
    code, out, _ = run_cli(capsys, "nice-index", "--system", "as")
    assert code == 0 and out.strip() == "none"
    matrix = tmp_path / "D.json"
    matrix.write_text('[["0","0","0"],["0","0","0"],["0","0","1"]]')
    code, _, _ = run_cli(capsys, "leibniz", "--algebra", "a1", "--matrix", str(matrix),
                         "--order", "2")
    assert code == 1
    theta = tmp_path / "theta.json"
    theta.write_text('{"parameters": ["alpha"], "entries": {"1,1": ["0","0","1"], "2,2": ["0","0","alpha"]}}')
    code, out, _ = run_cli(capsys, "cocycle", "--lie", "L1", "--theta", str(theta),
                           "--check-system", "sas")
    assert code == 0 and "(alpha)*e3" in out


def test_reproduce_json_deterministic(capsys):
    code1, out1, _ = run_cli(capsys, "reproduce-paper", "--only", "pencil", "--seed", "3", "--json")
    code2, out2, _ = run_cli(capsys, "reproduce-paper", "--only", "pencil", "--seed", "3", "--json")
    assert code1 == code2 == 0
    d1, d2 = json.loads(out1), json.loads(out2)
    d1.pop("elapsed_seconds"), d2.pop("elapsed_seconds")
    assert d1 == d2


def test_demo_scripts_run():
    import pathlib
    import subprocess
    import sys

    for script in sorted(pathlib.Path("demos").glob("*.py")):
        proc = subprocess.run([sys.executable, str(script)], capture_output=True, text=True)
        assert proc.returncode == 0, proc.stderr
        assert proc.stdout.strip()
