"""Command-line surface: reports, exit codes and the verification suites."""
import io
import json

import jsonschema
import pandas as pd
import pytest

import app.cli as cli
import app.verify as verify
from app import flatten, jsonable, main
from config import EXIT_DOMAIN, EXIT_NUMERIC, EXIT_OK, EXIT_VERIFY_FAILED, EXAMPLE_RADIUS_WINDOW
from discs.geometry import CERTIFIERS
from errors import ConvergenceError, DomainError
from schemas import CERTIFICATE_SCHEMA, validate_certificate


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# --- parsing ---

def test_parse_complex():
    assert cli.parse_complex("0.01+50i") == complex(0.01, 50)
    assert cli.parse_complex("0.3-2i") == complex(0.3, -2)
    assert cli.parse_complex(" 50i ") == 50j
    assert cli.parse_complex("0.5") == 0.5


def test_parse_grid_and_batch():
    assert cli.parse_grid("geometric:3") == (1.0, 0.5, 0.25)
    assert cli.parse_grid("1, 0.5,0.25") == (1.0, 0.5, 0.25)
    with pytest.raises(DomainError):
        cli.parse_grid("geometric:x")
    lambdas = cli.parse_batch("0.01:40:50:3")
    assert lambdas == [0.01 + 40j, 0.01 + 45j, 0.01 + 50j]
    with pytest.raises(DomainError):
        cli.parse_batch("0.01:40:50")


def test_parse_sequence():
    A = cli.parse_sequence("1:1,0.5:-2+1i")
    assert A.alpha == (1.0, 0.5)
    assert A.c == (1.0, complex(-2, 1))
    with pytest.raises(DomainError):
        cli.parse_sequence("1-1")


def test_certify_request_validation():
    with pytest.raises(DomainError):
        cli.CertifyRequest("zeta", 0.01 + 50j, 1.2, 0.4)
    with pytest.raises(DomainError):
        cli.CertifyRequest("zeta", 0.01 + 50j, 0.49, 0.4, mode="exact")


# --- certify-zeta ---

def test_certify_zeta_defaults_reproduce_headline(capsys):
    code, out, err = run(capsys, "certify-zeta")
    assert code == EXIT_OK
    assert "Certifying" in err
    doc = json.loads(out)
    assert {"center_re", "center_im", "radius", "R", "certified_by", "inputs", "errors"} <= set(doc)
    assert abs(complex(doc["center_re"], doc["center_im"]) - (0.5 + 50j)) < 1e-4
    lo, hi = EXAMPLE_RADIUS_WINDOW
    assert lo <= doc["radius"] <= hi
    assert {"F", "zeta", "gamma_ratio", "C_r_sigma1", "psi1_norm"} <= set(doc["inputs"])
    assert doc["model"]["name"] == "zeta"


def test_certificates_match_schema(capsys):
    jsonschema.Draft202012Validator.check_schema(CERTIFICATE_SCHEMA)
    assert set(CERTIFICATE_SCHEMA["properties"]["certified_by"]["enum"]) == set(CERTIFIERS)
    _, out, _ = run(capsys, "certify-zeta")
    jsonschema.validate(json.loads(out), CERTIFICATE_SCHEMA)
    _, out, _ = run(capsys, "certify-zeta", "--sequence", "1:1", "--grid-check")
    doc = json.loads(out)
    validate_certificate(doc)
    with pytest.raises(jsonschema.ValidationError):
        jsonschema.validate(dict(doc, R=1.0), CERTIFICATE_SCHEMA)
    del doc["errors"]
    with pytest.raises(DomainError, match="errors"):
        validate_certificate(doc)


def test_text_and_json_report_the_same_numbers(capsys):
    _, out_json, _ = run(capsys, "certify-zeta", "--out", "json")
    _, out_text, _ = run(capsys, "certify-zeta", "--out", "text")
    flat = flatten(json.loads(out_json))
    lines = dict(line.split(": ", 1) for line in out_text.splitlines())
    for key in ("center_re", "center_im", "radius", "R", "inputs.F", "inputs.zeta.re"):
        assert float(lines[key]) == flat[key]


def test_certify_zeta_bad_r_exits_2(capsys):
    code, out, err = run(capsys, "certify-zeta", "--r", "1.2")
    assert code == EXIT_DOMAIN
    assert out == ""
    assert "r = 1.2" in err


def test_certify_zeta_bad_lambda_is_a_usage_error(capsys):
    with pytest.raises(SystemExit) as info:
        main(["certify-zeta", "--lambda", "fifty"])
    assert info.value.code == 2


def test_certify_zeta_with_sequence_and_grid_check(capsys):
    code, out, _ = run(capsys, "certify-zeta", "--sequence", "1:1", "--grid-check")
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc["certified_by"] == "prop61"
    lo, hi = EXAMPLE_RADIUS_WINDOW
    assert lo <= doc["radius"] <= hi
    assert doc["grid_check"]["zero_free"] is True


def test_certify_zeta_batch_csv(capsys, tmp_path):
    path = tmp_path / "batch.csv"
    code, out, _ = run(capsys, "certify-zeta", "--batch", "0.01:49:51:3", "--out", "csv", "--output", str(path))
    assert code == EXIT_OK
    assert out == ""
    df = pd.read_csv(path)
    assert len(df) == 3
    assert list(df["status"]) == ["ok"] * 3
    assert df["lambda_im"].tolist() == [49.0, 50.0, 51.0]


def test_certify_zeta_config_file(capsys, tmp_path):
    path = tmp_path / "zeta.json"
    path.write_text(json.dumps({"name": "zeta", "sigma1": 0.0}))
    code, out, _ = run(capsys, "certify-zeta", "--config", str(path), "--r", "0.6")
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc["inputs"]["sigma1"] == 0.0
    assert doc["model"]["sigma1"] == 0.0


def test_unknown_model_exits_2(capsys, tmp_path):
    path = tmp_path / "dirichlet.json"
    path.write_text(json.dumps({"name": "dirichlet_L"}))
    code, _, err = run(capsys, "certify-zeta", "--config", str(path))
    assert code == EXIT_DOMAIN
    assert "dirichlet_L" in err


def test_numerical_failure_exits_3(capsys, monkeypatch):
    def fail(*args, **kwargs):
        raise ConvergenceError("quadrature budget exhausted")

    monkeypatch.setattr(cli, "certify_zeta", fail)
    code, _, err = run(capsys, "certify-zeta")
    assert code == EXIT_NUMERIC
    assert "budget" in err


# --- verify ---

@pytest.mark.parametrize("suite", ["pascal", "vandermonde", "triangular", "completion"])
def test_verify_suite_passes(capsys, suite):
    code, out, err = run(capsys, "verify", suite)
    assert code == EXIT_OK
    assert f"Running suite {suite}" in err
    doc = json.loads(out)
    assert doc["passed"] is True
    assert list(doc["suites"]) == [suite]
    assert doc["failures"] == []
    assert all(row["passed"] for row in doc["rows"])


def test_verify_pascal_table(capsys):
    _, out, _ = run(capsys, "verify", "pascal", "--out", "csv")
    df = pd.read_csv(io.StringIO(out))
    assert len(df) == 8 * 2 + 3 + 3
    bounds = df[df["check"].str.startswith("mu_min >=")]
    assert len(bounds) == 8
    assert bounds["value"].iloc[0] == pytest.approx(1.0)


@pytest.mark.slow
def test_verify_mellin(capsys):
    code, out, _ = run(capsys, "verify", "mellin")
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc["suites"]["mellin"]["checks"] == 9
    assert doc["suites"]["mellin"]["max_residual"] < 1e-6


def test_verify_failure_exits_1(capsys, monkeypatch):
    monkeypatch.setitem(verify.SUITES, "pascal", lambda tol, rng: [verify._row("pascal", "forced", 1.0, 0.0)])
    code, out, _ = run(capsys, "verify", "pascal")
    assert code == EXIT_VERIFY_FAILED
    doc = json.loads(out)
    assert doc["passed"] is False
    assert doc["failures"][0]["check"] == "forced"


def test_run_suites_rejects_unknown_names():
    with pytest.raises(DomainError):
        verify.run_suites(["hankel"])


# --- distance and disc-geometry ---

def test_distance_command(capsys):
    code, out, err = run(capsys, "distance", "--lambda", "0.3+2i", "--grid", "1,0.5,0.25",
                         "--constraint", "admissible")
    assert code == EXIT_OK
    assert "Estimating distances" in err
    doc = json.loads(out)
    assert doc["w_distance"]["constraint"] == "admissible"
    assert doc["comparison"] is None
    assert len(doc["delta"]["c"]) == 3
    for key in ("thm62", "thm21sharp"):
        assert 0.0 <= doc["discs"][key]["R"] < 1.0


def test_distance_bad_grid_exits_2(capsys):
    code, _, _ = run(capsys, "distance", "--lambda", "0.3+2i", "--grid", "1.5")
    assert code == EXIT_DOMAIN


@pytest.mark.slow
@pytest.mark.parametrize("grid", ["geometric:9", "1,0.7071067811865476,0.36787944117144233"])
def test_distance_fine_and_irrational_grids(capsys, grid):
    code, out, _ = run(capsys, "distance", "--lambda", "0.3+2i", "--grid", grid)
    assert code == EXIT_OK
    doc = json.loads(out)
    assert len(doc["delta"]["c"]) == len(cli.parse_grid(grid))
    assert doc["delta"]["value"] >= doc["delta"]["estimate"]


def test_disc_geometry(capsys):
    code, out, _ = run(capsys, "disc-geometry", "--lambda", "0.3+2i", "--R", "0.5", "--sigma0", "0.1",
                       "--shift", "0.2")
    assert code == EXIT_OK
    doc = json.loads(out)
    # center = shift + (a + R^2 (a - 2 sigma0)) / (1 - R^2), radius = 2 R (a - sigma0) / (1 - R^2)
    assert doc["center_re"] == pytest.approx(0.2 + (0.3 + 0.25 * 0.1) / 0.75)
    assert doc["center_im"] == pytest.approx(2.0)
    assert doc["radius"] == pytest.approx(2 * 0.5 * 0.2 / 0.75)
    assert len(doc["boundary"]) == 20
    assert doc["max_boundary_deviation"] < 1e-12


def test_disc_geometry_csv_and_half_plane(capsys):
    code, out, _ = run(capsys, "disc-geometry", "--lambda", "0.3+2i", "--R", "0.5", "--points", "8",
                       "--out", "csv")
    assert code == EXIT_OK
    df = pd.read_csv(io.StringIO(out))
    assert len(df) == 8
    assert df["modulus"].to_numpy() == pytest.approx(0.5, abs=1e-12)
    code, out, _ = run(capsys, "disc-geometry", "--lambda", "0.3+2i", "--R", "1", "--shift", "0.2")
    assert code == EXIT_OK
    assert json.loads(out)["half_plane"] == pytest.approx(0.2)


# --- report helpers ---

def test_jsonable():
    doc = jsonable({"z": 1 + 2j, "x": float("inf"), "t": (1, 2)})
    assert doc == {"z": {"re": 1.0, "im": 2.0}, "x": None, "t": [1, 2]}
    assert flatten({"a": {"b": 1}, "c": [3, {"d": 4}]}) == {"a.b": 1, "c.0": 3, "c.1.d": 4}
