import json
import subprocess
import sys

import pytest

from salemforge.cli import main
from salemforge.salem import check_fixtures_csv


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_salem(capsys):
    code, out, _ = run(capsys, "verify", "--poly", "1,-1,-3,-1,1")
    assert code == 0 and out.strip() == "Salem, square-rootable (k=1), disc class -3"


def test_verify_cyclotomic(capsys):
    code, out, _ = run(capsys, "verify", "--poly", "1,0,-1,0,1")
    assert code == 1 and "F(1) = 1 > 0" in out and "x^4-x^2+1" in out


def test_verify_bad_input_position(capsys):
    code, _, err = run(capsys, "verify", "--poly", "1,-1,z,-1,1")
    assert code == 2 and "position 3" in err


def test_realize_trace_json(capsys):
    code, out, _ = run(capsys, "realize", "--trace", "3", "--json")
    data = json.loads(out)
    assert code == 0 and data["schema"] == "salemforge/1"
    cert = data["certificate"]
    assert cert["checks"]["divisibility"] == "true"
    assert all(isinstance(x, str) for x in cert["charpoly"])


def test_realize_then_check_round_trip(capsys, tmp_path):
    code, out, _ = run(capsys, "realize", "--poly", "1,-1,-1,-1,1", "--json")
    assert code == 0
    path = tmp_path / "cert.json"
    path.write_text(out)
    code, out2, _ = run(capsys, "check", str(path), "--json")
    assert code == 0 and json.loads(out2)["checks"]["reproduced"] == "true"


def test_realize_not_salem(capsys):
    assert run(capsys, "realize", "--trace", "2")[0] == 1


def test_invariants(capsys):
    code, out, _ = run(capsys, "invariants", "--form", "1,-1,-1,-1,-1", "--json")
    data = json.loads(out)
    assert code == 0 and data["witt"] == "{2,inf}" and data["hasse"] == "{}"
    assert data["witt_ramified_at_infinity"] is True


def test_obstruct_codes(capsys):
    assert run(capsys, "obstruct", "--dim", "4", "--form", "1,-1,-1,-1,-1",
               "--poly", "1,-1,-3,-1,1")[0] == 0
    assert run(capsys, "obstruct", "--dim", "3", "--form", "1,-1,-1,-1",
               "--poly", "1,-1,-3,-1,1")[0] == 1
    assert run(capsys, "obstruct", "--dim", "4", "--form", "1,-1,-1,-1",
               "--poly", "1,-1,-3,-1,1")[0] == 2


def test_find_salem(capsys):
    code, out, _ = run(capsys, "find-salem", "--disc", "7", "--square-rootable")
    assert code == 0 and out.startswith("(-2,-5)")
    code, out, _ = run(capsys, "find-salem", "--disc", "3")
    assert code == 0 and out.startswith("(-1,-1)")
    assert run(capsys, "find-salem", "--disc", "97", "--square-rootable", "--bound", "5")[0] == 4
    assert run(capsys, "find-salem", "--disc", "12")[0] == 2


def test_find_obstructed(capsys):
    code, out, _ = run(capsys, "find-obstructed", "--dim", "3", "--form", "1,-1,-1,-1", "--json")
    data = json.loads(out)
    assert code == 0 and data["report"]["salem"] == {"a": "-1", "b": "-3"}


def test_env_bound(capsys, monkeypatch):
    monkeypatch.setenv("SALEMFORGE_BOUND", "2")
    assert run(capsys, "find-salem", "--disc", "7", "--square-rootable")[0] == 4
    monkeypatch.setenv("SALEMFORGE_BOUND", "lots")
    assert run(capsys, "find-salem", "--disc", "7", "--square-rootable")[0] == 2


def test_fixtures(capsys, tmp_path):
    out_path = tmp_path / "salem.csv"
    assert run(capsys, "fixtures", "--regenerate", "--bound", "4", "--out", str(out_path))[0] == 0
    assert check_fixtures_csv(out_path.read_text())
    assert run(capsys, "fixtures", "--bound", "4")[0] == 2


def test_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["obstruct", "--dim", "7", "--form", "1", "--poly", "1"])
    assert exc.value.code == 2


def test_deterministic_output(capsys):
    a = run(capsys, "realize", "--poly", "1,-2,-5,-2,1", "--json")[1]
    b = run(capsys, "realize", "--poly", "1,-2,-5,-2,1", "--json")[1]
    assert a == b


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "salemforge", "verify", "--poly", "1,-3,1"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and "degree 2" in res.stdout
