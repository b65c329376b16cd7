import json
import subprocess
import sys

import pytest

from cmgrass import serialize as ser
from cmgrass.cli import main
from cmgrass.cm import fixed_point, scalar_point
from cmgrass.window import sample_window_cell


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def point_file(tmp_path):
    def write(P):
        path = tmp_path / "p.json"
        path.write_text(ser.dumps(P))
        return str(path)

    return write


def test_fixed_point(capsys):
    code, out, _ = run(capsys, "fixed-point", "--lambda", "2")
    assert code == 0
    assert ser.loads(out, "cm_point") == fixed_point((2,))


def test_tau(capsys, point_file):
    code, out, _ = run(capsys, "tau", "--point", point_file(fixed_point((2,))), "--vars", "2")
    assert code == 0
    doc = json.loads(out)
    assert doc["text"] == "t1^2 - 2*t2"
    assert ser.dec_multipoly(doc) == ser.dec_multipoly(ser.enc_multipoly(ser.dec_multipoly(doc)))


def test_classify(capsys, point_file):
    code, out, _ = run(capsys, "classify", "--point", point_file(scalar_point(1, 2)))
    assert code == 0
    assert json.loads(out) == {"cells": [{"point": "2", "parts": [1]}], "fuchsian": False}


def test_eta(capsys, tmp_path):
    path = tmp_path / "w.json"
    path.write_text(ser.dumps(sample_window_cell((2,), 0, 0, zero=True)))
    code, out, _ = run(capsys, "eta", "--window", str(path))
    assert code == 0
    assert json.loads(out) == [{"b": "0", "polys": [["0", "1"], ["0", "0", "1"]]}]


def test_baker(capsys, point_file):
    path = point_file(fixed_point((2,)))
    code, out, _ = run(capsys, "baker", "--point", path)
    assert code == 0 and out.strip() == "x^2*d^2 - 2*x*d + 2"
    code, out, _ = run(capsys, "baker", "--point", path, "--json")
    assert code == 0 and {"i": 2, "j": 2, "coeff": "1"} in json.loads(out)


@pytest.mark.parametrize(
    "lam, blocks, mu, expected",
    [
        ("1,1", "1,1", "[[1]],[[1]]", 1),
        ("2", "2", "[[2]]", 0),
        ("2,1", "1,1,1", "[[1]],[[1]],[[1]]", 2),
        ("2,1", "1,1,1", "[1],[1],[1]", 2),
    ],
)
def test_intersect(capsys, lam, blocks, mu, expected):
    code, out, _ = run(capsys, "intersect", "--lambda", lam, "--blocks", blocks, "--mu", mu)
    doc = json.loads(out)
    assert code == 0 and doc["agree"]
    assert doc["character_dim"] == doc["lr_dim"] == doc["schubert_dim"] == expected


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "fixed-points", "--nmax", "1", "--json")
    assert code == 0
    doc = json.loads(out)
    assert (doc["run"], doc["passed"], doc["failed"]) == (1, 1, 0)
    code, out, _ = run(capsys, "verify", "--suite", "residues", "--nmax", "3")
    assert code == 0 and "residues" in out


class TestUsageErrors:
    def test_invalid_point(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text('{"n": 2, "X": [["0","0"],["0","0"]], "Y": [["0","0"],["0","0"]]}')
        code, _, err = run(capsys, "classify", "--point", str(path))
        assert code == 2 and "rank([X,Y] + I) = 2" in err

    def test_missing_file(self, capsys, tmp_path):
        code, _, err = run(capsys, "tau", "--point", str(tmp_path / "none.json"))
        assert code == 2 and "cannot read" in err

    def test_bad_lambda(self, capsys):
        assert run(capsys, "fixed-point", "--lambda", "1,x")[0] == 2
        assert run(capsys, "fixed-point", "--lambda", "1,2")[0] == 2

    def test_size_mismatch(self, capsys):
        assert run(capsys, "intersect", "--lambda", "2,1", "--blocks", "1,1", "--mu", "[1],[1]")[0] == 2

    def test_nonsplit(self, capsys, point_file):
        from cmgrass.cm import sample_cm
        from cmgrass.exact import QMatrix

        P = sample_cm(QMatrix([[0, -1], [1, 0]]), seed=0)
        assert run(capsys, "classify", "--point", point_file(P))[0] == 2

    def test_unknown_suite(self, capsys):
        with pytest.raises(SystemExit) as err:
            main(["verify", "--suite", "nope"])
        assert err.value.code == 2


def test_console_script():
    out = subprocess.run(
        [sys.executable, "-m", "cmgrass.cli", "fixed-point", "--lambda", "1,1"], capture_output=True, text=True, check=True
    )
    assert ser.loads(out.stdout, "cm_point") == fixed_point((1, 1))
