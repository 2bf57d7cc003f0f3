import csv
import io
import json
import subprocess
import sys

import numpy as np
import pytest

from finslerlab.cli import run

SOLVABLE = {
    "n": 2,
    "metric": [[1, 0], [0, 1]],
    "brackets": [{"i": 1, "j": 2, "k": 2, "coef": 1.0}],
    "v": [0.5, 0],
    "phi": {"family": "kropina", "m": 2},
}
ABELIAN = {
    "n": 3,
    "metric": [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
    "brackets": [],
    "v": [0.3, 0.2, 0.1],
    "phi": {"family": "kropina", "m": 2},
}


@pytest.fixture
def spec_file(tmp_path):
    def make(doc, name="spec.json"):
        path = tmp_path / name
        path.write_text(json.dumps(doc))
        return str(path)
    return make


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_validate_metric(spec_file):
    code, out, _ = call("validate-metric", "--spec", spec_file(SOLVABLE))
    assert code == 0
    assert out.strip() == "valid, b=0.5, kropina m=2 singular at β=0"


def test_validate_metric_failure(spec_file):
    doc = dict(SOLVABLE, v=[1.1, 0.0])
    code, out, _ = call("validate-metric", "--spec", spec_file(doc))
    assert code == 1
    assert "b >= 1" in out


def test_s_curvature_value(spec_file):
    code, out, _ = call("s-curvature", "--spec", spec_file(SOLVABLE), "--direction", "1,1")
    assert code == 0
    assert out.strip() == "S(1,1) = 1.77777778"


def test_s_curvature_csv_and_repeated_directions(spec_file):
    code, out, _ = call("s-curvature", "--spec", spec_file(SOLVABLE), "--direction", "1,1",
                        "--direction", "2,2", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows == [["S(1,1)", "1.77777778"], ["S(2,2)", "3.55555556"]]


def test_singular_direction_exit_code(spec_file):
    code, _, err = call("s-curvature", "--spec", spec_file(SOLVABLE), "--direction", "0,1")
    assert code == 2
    assert "singular" in err


def test_bad_direction_exit_code(spec_file):
    code, _, err = call("s-curvature", "--spec", spec_file(SOLVABLE), "--direction", "1,1,1")
    assert code == 1


def test_parse_error_exit_code(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"n": 2,\n "metric": }')
    code, _, err = call("s-curvature", "--spec", str(path), "--direction", "1,1")
    assert code == 1
    assert "line 2" in err


def test_invalid_spec_blocks_computation(spec_file):
    doc = dict(SOLVABLE, metric=[[1, 0], [0, -1]])
    code, _, err = call("s-curvature", "--spec", spec_file(doc), "--direction", "1,1")
    assert code == 1
    assert "positive definite" in err


def test_m_override(spec_file):
    doc = dict(SOLVABLE, phi={"family": "randers"})
    code, out, _ = call("s-curvature", "--spec", spec_file(doc), "--direction", "1,1", "--m", "2")
    assert out.strip() == "S(1,1) = 1.77777778"


def test_mean_berwald_csv_round_trip(spec_file):
    code, out, _ = call("mean-berwald", "--spec", spec_file(SOLVABLE), "--direction", "2,-1",
                        "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    E = np.zeros((2, 2))
    for r in rows:
        E[int(r["i"]) - 1, int(r["j"]) - 1] = float(r["value"])
    expected = np.array([[-4, -8], [-8, -16]]) / 27
    assert np.allclose(E, expected, rtol=1e-8, atol=0)


def test_mean_berwald_text_with_closed_form(spec_file):
    code, out, _ = call("mean-berwald", "--spec", spec_file(SOLVABLE), "--direction", "1,1", "--closed")
    assert code == 0
    assert "closed-form E(1,1)" in out and "residual vs oracle" in out


def test_verify_formulas_abelian_curvature_rows_zero(spec_file):
    code, out, _ = call("verify-formulas", "--spec", spec_file(ABELIAN), "--format", "csv")
    assert code == 0
    values = {k: float(v) for k, v in csv.reader(io.StringIO(out))}
    for key in ("s_closed", "e_closed_omega", "e_closed_aterm", "e_closed_asym", "e_analytic",
                "e_richardson", "oracle_euler"):
        assert values[key] == 0.0, key


def test_verify_formulas_needs_kropina(spec_file):
    doc = dict(SOLVABLE, phi={"family": "randers"})
    code, _, err = call("verify-formulas", "--spec", spec_file(doc))
    assert code == 1 and "kropina" in err


def test_isotropy(spec_file):
    code, out, _ = call("isotropy", "--spec", spec_file(ABELIAN))
    assert out.splitlines()[0] == "isotropic (hence zero)"
    code, out, _ = call("isotropy", "--spec", spec_file(SOLVABLE))
    assert out.splitlines()[0] == "not isotropic"


def test_volume_coeff(spec_file):
    doc = dict(ABELIAN, n=3, v=[0.5, 0, 0], phi={"family": "randers"})
    code, out, _ = call("volume-coeff", "--spec", spec_file(doc), "--format", "csv")
    values = {k: float(v) for k, v in csv.reader(io.StringIO(out))}
    assert values["f(b)"] == pytest.approx(9 / 16, rel=1e-8)
    assert values["f'(b)/(b f(b))"] == pytest.approx(-16 / 3, rel=1e-6)


def test_volume_coeff_divergence(spec_file):
    doc = dict(SOLVABLE, phi={"family": "kropina", "m": -2})
    code, _, err = call("volume-coeff", "--spec", spec_file(doc))
    assert code == 2


def test_thread_cap_does_not_change_output(spec_file, monkeypatch):
    path = spec_file(SOLVABLE)
    outs = []
    for threads in ("1", "4", "0"):
        monkeypatch.setenv("FINSLERLAB_THREADS", threads)
        outs.append(call("mean-berwald", "--spec", path, "--samples", "6")[1])
    assert outs[0] == outs[1] == outs[2]


def test_console_entry_point(spec_file):
    proc = subprocess.run([sys.executable, "-m", "finslerlab", "s-curvature", "--spec",
                           spec_file(SOLVABLE), "--direction", "1,1"],
                          capture_output=True, text=True, check=True)
    assert proc.stdout.strip() == "S(1,1) = 1.77777778"
