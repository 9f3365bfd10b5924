"""CLI surface: outputs, formats, determinism, exit codes."""

import json
import math

import pytest

from hwkit.cli import EXIT_FILE, EXIT_OK, EXIT_USAGE, main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_coeffs_h_values(capsys):
    code, out, _ = run_cli(capsys, "coeffs", "h", "3")
    assert code == EXIT_OK
    lines = out.strip().splitlines()
    assert lines[0] == "n,exact,float"
    assert lines[1].startswith("0,0/1,")
    assert lines[2].startswith("1,6/1,")
    assert lines[3].startswith("2,-9/5,")
    assert lines[4].startswith("3,144/175,")


def test_coeffs_F_series_format(capsys):
    code, out, _ = run_cli(capsys, "--format", "series", "coeffs", "F", "10")
    assert code == EXIT_OK
    assert out.startswith("# rational-series order=10 prefactor_sq=1 "
                          "offset=pi^2/2-1")
    assert "10 6740719066/38598324999609375" in out
    # round-trips through the series parser
    from hwkit.series import series_from_text
    from hwkit.tables import coeffs_F
    assert series_from_text(out) == coeffs_F(10)


def test_coeffs_usage_error(capsys):
    code, _, err = run_cli(capsys, "coeffs", "h", "0")
    assert code == EXIT_USAGE
    assert "order" in err


def test_unknown_family_rejected_by_argparse(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["coeffs", "bogus", "3"])
    assert exc.value.code == EXIT_USAGE


def test_eval_F_at_one(capsys):
    code, out, _ = run_cli(capsys, "--precision", "5", "eval", "F", "1.0")
    assert code == EXIT_OK
    assert "3.9348" in out


def test_eval_json_format(capsys):
    code, out, _ = run_cli(capsys, "--format", "json", "eval", "G", "1.0",
                           "--order", "8")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert float(payload[0]["G"]) == pytest.approx(math.sqrt(3.0), rel=1e-5)


def test_constants_output(capsys):
    code, out, _ = run_cli(capsys, "constants")
    assert code == EXIT_OK
    rows = dict(line.split(",") for line in out.strip().splitlines()[1:])
    assert float(rows["eta_1"]) == pytest.approx(4.4934, abs=1e-4)
    assert float(rows["d_G"]) == pytest.approx(0.719253, abs=1e-6)
    assert float(rows["rho_x"]) == pytest.approx(3.49295, abs=1e-5)
    assert float(rows["selfcheck_rho_x_inverse"]) == 1.0


def test_asympt_diagnostics(capsys):
    code, out, _ = run_cli(capsys, "asympt", "dJ", "30")
    assert code == EXIT_OK
    lines = out.strip().splitlines()
    assert lines[0] == "n,coeff_exact,coeff_asympt,epsilon,trig_factor"
    assert len(lines) == 30  # n = 2..30


def test_theta_both_methods(capsys):
    code1, out1, _ = run_cli(capsys, "theta", "2.0", "0.5", "quadrature")
    code2, out2, _ = run_cli(capsys, "theta", "2.0", "0.5", "asymptotic")
    assert code1 == EXIT_OK and code2 == EXIT_OK
    v1 = float(out1.strip().splitlines()[1].split(",")[3])
    v2 = float(out2.strip().splitlines()[1].split(",")[3])
    assert v1 > 0 and v2 > 0
    assert abs(v1 / v2 - 1.0) < 0.25


def test_theta_refusal_maps_to_numeric_exit(capsys):
    from hwkit.cli import EXIT_NUMERIC
    code, _, err = run_cli(capsys, "theta", "1.0", "0.01", "quadrature")
    assert code == EXIT_NUMERIC
    assert "theta_asympt" in err


def test_density_grid(capsys):
    code, out, _ = run_cli(capsys, "density", "--t", "0.01", "--mu", "0.0",
                           "--a", "0.9", "1.0", "1.1")
    assert code == EXIT_OK
    lines = out.strip().splitlines()
    assert lines[0] == "a,f0"
    vals = [float(ln.split(",")[1]) for ln in lines[1:]]
    assert all(v > 0 for v in vals)
    assert vals[1] == max(vals)


def test_price_scenario_file_and_missing_file(tmp_path, capsys):
    path = tmp_path / "scen.json"
    path.write_text(json.dumps(
        [{"S0": 2.0, "r": 0.18, "sigma": 0.30, "T": 1.0, "K": 2.0}]))
    code, out, _ = run_cli(capsys, "price", str(path))
    assert code == EXIT_OK
    row = out.strip().splitlines()[1].split(",")
    assert float(row[5]) == pytest.approx(0.218388, abs=2e-4)

    code, _, err = run_cli(capsys, "price", str(tmp_path / "nope.json"))
    assert code == EXIT_FILE


def test_price_bad_json(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    code, _, err = run_cli(capsys, "price", str(path))
    assert code == EXIT_FILE


def test_deterministic_output(capsys):
    _, out1, _ = run_cli(capsys, "coeffs", "G", "8")
    _, out2, _ = run_cli(capsys, "coeffs", "G", "8")
    assert out1 == out2
    _, out3, _ = run_cli(capsys, "constants")
    _, out4, _ = run_cli(capsys, "constants")
    assert out3 == out4


def test_out_file(tmp_path, capsys):
    target = tmp_path / "coeffs.csv"
    code, out, _ = run_cli(capsys, "--out", str(target), "coeffs", "h", "3")
    assert code == EXIT_OK
    assert out == ""
    assert target.read_text().startswith("n,exact,float")


def test_precision_validation(capsys):
    with pytest.raises(SystemExit):
        main(["--precision", "0", "coeffs", "h", "3"])
