import json
import subprocess
import sys

import pytest

from truncweyl.charring import GradedCharacter
from truncweyl.cli import main, verify_conjecture_sl2


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_dim(capsys):
    assert run(capsys, "dim", "--lambda", "4", "--n", "3")[:2] == (0, "12\n")
    assert run(capsys, "dim", "--xi", "2,2,2")[1] == "27\n"


def test_xi(capsys):
    assert run(capsys, "xi", "--lambda", "5", "--n", "4")[1] == "(2,1,1,1)\n"
    assert run(capsys, "xi", "--lambda", "4", "--level", "2")[1] == "(2,2)\n"
    assert run(capsys, "xi", "--lambda", "3", "--infinite")[1] == "(1,1,1)\n"
    code, out, _ = run(capsys, "xi", "--type", "B", "--rank", "2", "--lambda", "0,3", "--n", "2")
    assert code == 0 and "a1+2a2: (2,1)" in out


def test_flag_json(capsys):
    code, out, _ = run(capsys, "flag", "--xi", "2,1,1,1", "--level", "2", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["level"] == 2
    assert {e["mu"]: e["text"] for e in data["entries"]} == {5: "1", 3: "t^3"}


def test_flag_inadmissible(capsys):
    code, _, err = run(capsys, "flag", "--xi", "3,1", "--level", "2")
    assert code == 2 and "largest part is 3" in err


def test_char_json_roundtrip(capsys):
    code, out, _ = run(capsys, "char", "--module", "W", "--lambda", "5", "--n", "4", "--format", "json")
    data = json.loads(out)
    assert data["module"] == "W_4(5)"
    assert data["dim_series"] == {"0": 6, "1": 4, "2": 6, "3": 6, "4": 2}
    g = GradedCharacter.from_json(data)
    assert g.to_json("W_4(5)") == data


def test_char_variants(capsys):
    assert run(capsys, "char", "--module", "D", "--level", "2", "--lambda", "4")[0] == 0
    assert run(capsys, "char", "--module", "CV", "--xi", "3,1", "--shift", "2")[1].splitlines()[1] == "degree 2: V(4)"
    assert run(capsys, "char", "--module", "D", "--lambda", "4")[0] == 2


def test_classify_and_kernel(capsys):
    assert "not Demazure" in run(capsys, "classify", "--lambda", "4", "--n", "3")[1]
    assert "D(2,6)" in run(capsys, "classify", "--lambda", "6", "--n", "3")[1]
    code, out, _ = run(capsys, "verify-kernel", "--lambda", "6", "--n", "3", "--format", "json")
    assert code == 0 and json.loads(out)["delta"] == [27, 12, 16]


def test_verify_ses(capsys):
    code, out, _ = run(capsys, "verify-ses", "--xi", "3,2,1")
    assert code == 0 and "24 = 16 + 8" in out
    code, out, _ = run(capsys, "verify-ses", "--lambda", "4", "--n", "3", "--format", "json")
    data = json.loads(out)
    assert data["ok"] and data["truncated"]["kernel_index"] == 1
    assert run(capsys, "verify-ses", "--xi", "3")[0] == 2


def test_fusion(capsys):
    code, out, _ = run(capsys, "fusion", "--parts", "1,1", "--params", "0,1")
    assert code == 0 and "degree 1: V(0)" in out
    code, out, _ = run(capsys, "fusion", "--parts", "1,1", "--params", "2,2")
    assert "not pairwise distinct" in out
    assert run(capsys, "fusion", "--parts", "1,1", "--params", "0")[0] == 2


def test_conjecture(capsys):
    code, out, _ = run(capsys, "verify-conjecture", "--lambda", "5", "--n", "3")
    assert code == 0 and out.strip().endswith("EQUAL")
    assert run(capsys, "verify-conjecture", "--lambda", "3", "--n", "5")[0] == 2
    rep = verify_conjecture_sl2(4, 3)
    assert rep.equal and rep.tuple_ == (2, 1, 1)
    assert verify_conjecture_sl2(6, 1).equal


def test_tensor_and_maximal(capsys):
    code, out, _ = run(capsys, "tensor", "--type", "B", "--rank", "2", "--lambda", "0,2", "--mu", "0,1")
    assert out.strip() == "V(1,1) + V(0,3) + V(0,1)"
    code, out, _ = run(capsys, "maximal", "--lambda", "5", "--n", "3")
    assert out.strip() == "[(2), (2), (1)]  orbit size 3"
    code, _, err = run(capsys, "maximal", "--lambda", "40", "--n", "8", "--bound", "10")
    assert code == 2 and "bound" in err
    assert run(capsys, "tensor", "--type", "Q", "--rank", "2", "--lambda", "0,1", "--mu", "0,1")[0] == 2


def test_usage_errors():
    with pytest.raises(SystemExit) as exc:
        main(["dim", "--xi", "1,2"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["nonsense"])
    assert exc.value.code == 2


def test_output_is_deterministic():
    cmd = [sys.executable, "-m", "truncweyl.cli", "char", "--module", "W", "--lambda", "7", "--n", "3", "--format", "json"]
    a = subprocess.run(cmd, capture_output=True, text=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, text=True, check=True).stdout
    assert a == b and a


def test_selftest(capsys):
    code, out, _ = run(capsys, "selftest")
    assert code == 0 and "12/12 checks passed" in out
