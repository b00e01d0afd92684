import json
import subprocess
import sys


def run_cli(*args):
    proc = subprocess.run(
        [sys.executable, "-m", "centtype.cli"] + list(args),
        capture_output=True,
        text=True,
    )
    return proc


def write_matrix(tmp_path, name, obj):
    p = tmp_path / name
    p.write_text(json.dumps(obj))
    return str(p)


def test_mtype(tmp_path):
    f = write_matrix(tmp_path, "m.json", {"field": {"kind": "Q"}, "companion": "x^2 - 2"})
    proc = run_cli("mtype", f)
    assert proc.returncode == 0
    out = json.loads(proc.stdout)
    assert out["field"] == {"kind": "Q"}
    assert out["n"] == 2
    assert out["cycle_type"] == [{"partition": [1], "poly": ["-2/1", "0/1", "1/1"]}]
    assert out["green_type"] == [{"degree": 2, "partition": [1]}]
    assert out["generalized_type"][0]["partition"] == [1]


def test_mtype_rows(tmp_path):
    f = write_matrix(
        tmp_path, "m.json", {"field": {"kind": "Fp", "p": 2}, "rows": [[1, 0], [0, 0]]}
    )
    proc = run_cli("mtype", f)
    assert proc.returncode == 0
    out = json.loads(proc.stdout)
    assert len(out["cycle_type"]) == 2


def test_centconj_positive(tmp_path):
    x = write_matrix(tmp_path, "x.json", {"field": {"kind": "Q"}, "companion": "x^2 - 2"})
    y = write_matrix(tmp_path, "y.json", {"field": {"kind": "Q"}, "companion": "x^2 - 8"})
    proc = run_cli("centconj", x, y)
    assert proc.returncode == 0
    out = json.loads(proc.stdout)
    assert out["conjugate"] is True
    assert out["p"] is not None
    assert out["conjugator"]["rows"]


def test_centconj_negative(tmp_path):
    x = write_matrix(tmp_path, "x.json", {"field": {"kind": "Q"}, "companion": "x^2 - 2"})
    y = write_matrix(tmp_path, "y.json", {"field": {"kind": "Q"}, "companion": "x^2 - 3"})
    proc = run_cli("centconj", x, y)
    assert proc.returncode == 1
    out = json.loads(proc.stdout)
    assert out["conjugate"] is False
    assert out["conjugator"] is None


def test_perm_subcommand():
    proc = run_cli("perm", "(1 2)", "()", "--group", "sn", "--n", "2")
    assert proc.returncode == 0
    out = json.loads(proc.stdout)
    assert out["equal"] is True
    assert out["kind"] == "S-case-1"

    proc = run_cli("perm", "(1 2)(3 4)", "(1 3)(2 4)", "--group", "an")
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["kind"] == "A-case-2"

    proc = run_cli("perm", "(1 2 3)", "(1 3 2)", "--group", "sn")
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["kind"] == "equivalent"

    proc = run_cli("perm", "(1 2 3)", "()", "--group", "sn", "--n", "3")
    assert proc.returncode == 1
    assert json.loads(proc.stdout)["equal"] is False


def test_perm_odd_input_rejected():
    proc = run_cli("perm", "(1 2)", "(1 2)", "--group", "an")
    assert proc.returncode == 4
    err = json.loads(proc.stdout)["error"]
    assert err["type"] == "OddPermutation"


def test_exit_code_parse_error(tmp_path):
    proc = run_cli("mtype", str(tmp_path / "absent.json"))
    assert proc.returncode == 2
    assert json.loads(proc.stdout)["error"]["type"] == "ParseError"
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    proc = run_cli("mtype", str(bad))
    assert proc.returncode == 2


def test_exit_code_unsupported_field(tmp_path):
    f = write_matrix(
        tmp_path,
        "m.json",
        {"field": {"kind": "ext", "base": {"kind": "Q"}, "modulus": [-2, 0, 1]},
         "rows": [[["0/1", "1/1"]]]},
    )
    proc = run_cli("centconj", f, f)
    assert proc.returncode == 3
    assert json.loads(proc.stdout)["error"]["type"] == "UnsupportedField"
    # composite modulus is the generic algebra error
    g = write_matrix(tmp_path, "n.json", {"field": {"kind": "Fp", "p": 6}, "rows": [[1]]})
    proc = run_cli("mtype", g)
    assert proc.returncode == 4
    assert json.loads(proc.stdout)["error"]["type"] == "CompositeModulus"


def test_json_errors_go_to_stdout(tmp_path):
    proc = run_cli("mtype", str(tmp_path / "absent.json"))
    json.loads(proc.stdout)  # must parse
    assert proc.stdout.endswith("\n")


def test_byte_identical_output(tmp_path):
    f = write_matrix(tmp_path, "m.json", {"field": {"kind": "Q"}, "companion": "x^3 - 2"})
    a = run_cli("mtype", f, "--seed", "7")
    b = run_cli("mtype", f, "--seed", "7")
    assert a.stdout == b.stdout
    a = run_cli("verify", "partition-formulas", "--seed", "3")
    b = run_cli("verify", "partition-formulas", "--seed", "3")
    assert a.stdout == b.stdout
    assert a.returncode == 0
    # compact json: no spaces after separators, keys sorted
    assert '"instances_checked"' in a.stdout
    assert ": " not in a.stdout.replace('": ', '":')


def test_verify_subcommand_and_stderr():
    proc = run_cli("verify", "partition-formulas")
    assert proc.returncode == 0
    out = json.loads(proc.stdout)
    assert out["suite"] == "partition-formulas"
    assert out["failures"] == []
    assert out["instances_checked"] > 0
    assert "elapsed" not in out
    assert "suite partition-formulas" in proc.stderr

    proc = run_cli("verify", "no-such-suite")
    assert proc.returncode == 4
    assert json.loads(proc.stdout)["error"]["type"] == "UnknownSuite"


def test_verify_scale():
    proc = run_cli("verify", "sn-oracle", "--scale", "4")
    assert proc.returncode == 0
    out = json.loads(proc.stdout)
    assert out["scale"] == 4
    assert out["failures"] == []


def test_pretty_format(tmp_path):
    f = write_matrix(tmp_path, "m.json", {"field": {"kind": "Q"}, "companion": "x^2 - 2"})
    proc = run_cli("mtype", f, "--format", "pretty")
    assert proc.returncode == 0
    assert "\n  " in proc.stdout  # indented
    assert json.loads(proc.stdout)["n"] == 2
