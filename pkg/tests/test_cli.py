import json

import pytest

from wpi.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_graph_dot(capsys):
    code, out, _ = run(capsys, "graph", "--n", "1", "--d", "1", "--format", "dot")
    assert code == 0
    assert out.count(" -- ") == 5
    assert len([l for l in out.splitlines() if l.strip().endswith(";") and "--" not in l]) == 4


def test_graph_json(capsys):
    code, out, _ = run(capsys, "graph", "--n", "1", "--d", "2", "--format", "json")
    data = json.loads(out)
    assert code == 0 and len(data["vertices"]) == 10


def test_present_elliptic_gap(capsys):
    code, out, _ = run(capsys, "present", "--n", "0", "--variant", "elliptic", "--format", "gap")
    assert code == 0
    assert 'FreeGroup("s_1", "s_2")' in out


def test_present_moduli_json(capsys):
    code, out, _ = run(capsys, "present", "--n", "1", "--d", "2", "--variant", "moduli", "--format", "json")
    assert code == 0 and len(json.loads(out)["generators"]) == 10


def test_odd_d_refused(capsys):
    code, out, err = run(capsys, "present", "--n", "1", "--d", "1", "--variant", "moduli")
    assert code == 2 and out == "" and "even d" in err
    code, _, _ = run(capsys, "present", "--n", "1", "--d", "1", "--variant", "moduli", "--allow-odd-d")
    assert code == 0


def test_usage_errors(capsys):
    assert run(capsys, "nope")[0] == 2
    assert run(capsys, "present", "--variant", "discriminant")[0] == 2
    assert run(capsys, "formulas", "--n-range", "x")[0] == 2


def test_abelianize(capsys):
    code, out, _ = run(capsys, "abelianize", "--n", "1", "--d", "2", "--variant", "moduli")
    assert code == 0 and json.loads(out)["factors"] == [60]


@pytest.mark.parametrize("argv", [["sl2z"], ["hl", "--n", "1", "--d", "2"],
                                  ["numerology", "--n-max", "6", "--d-max", "6"],
                                  ["abelian"], ["fixtures"]])
def test_verify_pass(capsys, argv):
    code, out, _ = run(capsys, "verify", *argv)
    report = json.loads(out)
    assert code == 0 and report["ok"]


def test_verify_failure_exit_code(capsys):
    # an absurd tolerance makes the match checks fail
    code, out, _ = run(capsys, "verify", "hl", "--n", "1", "--d", "1", "--tol", "1e-30")
    assert code == 1
    assert not json.loads(out)["ok"]


def test_slice(capsys):
    code, out, _ = run(capsys, "slice", "--d", "2", "--seed", "42")
    assert code == 0 and json.loads(out)["z_degree"] == 10


def test_slice_seed_from_env(capsys, monkeypatch):
    monkeypatch.setenv("WPI_SEED", "42")
    _, from_env, _ = run(capsys, "slice", "--d", "2")
    _, explicit, _ = run(capsys, "slice", "--d", "2", "--seed", "42")
    assert from_env == explicit


def test_todd_coxeter(capsys, tmp_path):
    _, out, _ = run(capsys, "present", "--n", "0", "--variant", "elliptic", "--format", "json")
    path = tmp_path / "e.json"
    data = json.loads(out)
    data["relations"].append({"lhs": [[0, 1], [0, 1], [0, 1]], "rhs": [], "kind": "extra"})
    path.write_text(json.dumps(data))
    code, out, _ = run(capsys, "todd-coxeter", str(path))
    assert code == 0 and json.loads(out)["index"] == 24
    code, out, _ = run(capsys, "todd-coxeter", str(path), "--subgroup", "s_1")
    assert json.loads(out)["index"] == 8


def test_hl_formats(capsys):
    code, out, _ = run(capsys, "hl", "--n", "1", "--d", "1", "--format", "csv")
    assert code == 0 and out.splitlines()[0] == "index,re,im" and len(out.splitlines()) == 5
    code, out, _ = run(capsys, "hl", "--n", "1", "--d", "1", "--v", "1", "0.5")
    assert code == 2


def test_formulas(capsys):
    code, out, _ = run(capsys, "formulas", "--n-range", "1:2", "--d-range", "2:2", "--format", "json")
    rows = json.loads(out)
    assert code == 0 and rows[0]["deg_p"] == 20 and rows[1]["n"] == 2


def test_output_is_deterministic(capsys):
    a = run(capsys, "present", "--n", "2", "--d", "1", "--format", "magma")[1]
    b = run(capsys, "present", "--n", "2", "--d", "1", "--format", "magma")[1]
    assert a == b


def test_config_file_and_precedence(capsys, tmp_path):
    cfg = tmp_path / "c.toml"
    cfg.write_text('format = "text"\n[verify]\nn-max = 2\nd_max = 2\n')
    code, out, _ = run(capsys, "verify", "numerology", "--config", str(cfg))
    assert code == 0 and out.startswith("PASS")
    code, out, _ = run(capsys, "verify", "numerology", "--config", str(cfg), "--format", "json")
    assert json.loads(out)["checks"][0]["checked"] == 8 * 4


def test_config_unknown_key(capsys, tmp_path):
    cfg = tmp_path / "c.toml"
    cfg.write_text("bogus = 1\n")
    code, _, err = run(capsys, "graph", "--n", "1", "--d", "1", "--config", str(cfg))
    assert code == 2 and "bogus" in err
