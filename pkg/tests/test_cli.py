import json

import pytest

from dickekit.cli import main


def run_cli(capsys, *argv):
    status = main(list(argv))
    captured = capsys.readouterr()
    return status, captured.out, captured.err


def test_witness_subcommand_json(capsys):
    status, out, _err = run_cli(capsys, "witness", "--n", "4", "--m", "2", "--state", "dicke")
    assert status == 0
    doc = json.loads(out)
    assert doc["value"] == pytest.approx(1.0)
    assert doc["bound"] == pytest.approx(2 / 3)
    assert doc["detected"] == "genuine_multipartite"


def test_witness_with_noise(capsys):
    status, out, _err = run_cli(capsys, "witness", "--n", "4", "--p", "0.3")
    assert status == 0
    doc = json.loads(out)
    assert doc["value"] == pytest.approx(0.71875)


def test_dicke_subcommand(capsys):
    status, out, _err = run_cli(capsys, "dicke", "--n", "2", "--m", "1")
    assert status == 0
    doc = json.loads(out)
    amps = [complex(re, im) for re, im in doc["amplitudes"]]
    assert amps[1] == pytest.approx(2 ** -0.5)
    assert amps[0] == 0


def test_criterion_subcommand(capsys):
    status, out, _err = run_cli(capsys, "criterion", "--n", "4", "--criterion", "theorem2")
    assert status == 0
    doc = json.loads(out)
    assert doc["value"] == pytest.approx(6.0)
    assert doc["detected"] == "entangled"


def test_crit2_needs_m_signed(capsys):
    status, _out, err = run_cli(capsys, "criterion", "--n", "4", "--criterion", "crit2")
    assert status == 2
    assert "crit2" in err
    status, out, _err = run_cli(
        capsys, "criterion", "--n", "4", "--m", "1", "--criterion", "crit2", "--m-signed", "1"
    )
    assert status == 0
    assert json.loads(out)["value"] == pytest.approx(7.0)


def test_bound_subcommand(capsys):
    status, out, _err = run_cli(capsys, "bound", "--n", "4")
    assert status == 0
    assert json.loads(out)["bound"] == pytest.approx(5.0)
    status, out, _err = run_cli(capsys, "bound", "--n", "4", "--a", "1,1,1")
    assert json.loads(out)["bound"] == pytest.approx(6.0)


def test_oracle_subcommands(capsys):
    status, out, _err = run_cli(capsys, "oracle", "eigmax", "--n", "4")
    assert status == 0
    assert json.loads(out)["value"] == pytest.approx(6.0)
    status, out, _err = run_cli(
        capsys, "oracle", "product-max", "--n", "3", "--restarts", "16", "--seed", "1"
    )
    doc = json.loads(out)
    assert doc["value"] == pytest.approx(3.0, abs=1e-6)  # (N/2)(N/2+1/2) at N=3
    assert doc["restarts_used"] == 16
    status, out, _err = run_cli(
        capsys, "oracle", "bisep-max", "--n", "3", "--restarts", "16", "--seed", "0"
    )
    doc = json.loads(out)
    assert doc["value"] == pytest.approx(2 + 5 ** 0.5 / 2, abs=1e-6)


def test_sweep_noise_csv_rows_and_detection_flip(capsys):
    status, out, _err = run_cli(
        capsys, "sweep-noise", "--n", "4", "--criterion", "theorem2", "--grid", "0:1:11"
    )
    assert status == 0
    lines = out.strip().splitlines()
    assert lines[0] == "p,value,bound,margin,detected"
    assert len(lines) == 12
    detected = [line.split(",")[-1] for line in lines[1:]]
    assert detected[2] == "entangled"  # p = 0.2
    assert detected[3] == "none"  # p = 0.3
    row0 = lines[1].split(",")
    assert float(row0[1]) == pytest.approx(6.0)


def test_sweep_noise_fidelity_margin_at_zero(capsys):
    status, out, _err = run_cli(
        capsys, "sweep-noise", "--n", "4", "--criterion", "fidelity", "--grid", "0:1:5",
        "--format", "csv",
    )
    assert status == 0
    first = out.strip().splitlines()[1].split(",")
    assert float(first[3]) == pytest.approx(1 / 3)


def test_sweep_csv_round_trips_bit_for_bit(capsys):
    args = ("sweep-noise", "--n", "4", "--criterion", "theorem2", "--grid", "0:1:7")
    _status, out, _err = run_cli(capsys, *args)
    lines = out.strip().splitlines()
    rebuilt = [lines[0]]
    for line in lines[1:]:
        p, value, bound, _margin, detected = line.split(",")
        margin = float(value) - float(bound)
        rebuilt.append(",".join([p, value, bound, f"{margin:.17g}", detected]))
    assert "\n".join(rebuilt) == out.strip()
    # and rerunning reproduces the identical document
    _status, again, _err = run_cli(capsys, *args)
    assert again == out


def test_sweep_noise_psixy(capsys):
    status, out, _err = run_cli(
        capsys, "sweep-noise", "--n", "4", "--criterion", "theorem2", "--noise", "psixy",
        "--grid", "0:0.999:5",
    )
    assert status == 0
    detected = [line.split(",")[-1] for line in out.strip().splitlines()[1:]]
    assert all(d == "entangled" for d in detected)


def test_intensity_subcommand(capsys):
    status, out, _err = run_cli(capsys, "intensity", "--n", "4", "--m", "2")
    assert status == 0
    assert json.loads(out)["intensity"] == pytest.approx(6.0)
    status, out, _err = run_cli(capsys, "intensity", "--n", "1000", "--i0", "2.0")
    assert status == 0
    assert json.loads(out)["intensity"] == pytest.approx(2 * 500 * 501)
    status, out, _err = run_cli(capsys, "intensity", "--n", "4", "--m", "4", "--p", "0.5")
    assert status == 0
    # white noise interpolates toward the maximally mixed intensity N/2
    assert json.loads(out)["intensity"] == pytest.approx(0.5 * 4.0 + 0.5 * 2.0)


def test_verify_appendix_subcommand(capsys):
    status, out, _err = run_cli(capsys, "verify-appendix", "--n", "20")
    assert status == 0
    doc = json.loads(out)
    assert doc["argmax"] == [2, 1]
    assert doc["ok"] is True


def test_domain_errors_exit_2(capsys):
    status, _out, err = run_cli(capsys, "dicke", "--n", "4", "--m", "9")
    assert status == 2 and "error" in err
    status, _out, err = run_cli(
        capsys, "sweep-noise", "--n", "3", "--criterion", "theorem2", "--noise", "psixy",
        "--grid", "0:1:3",
    )
    assert status == 2
    status, _out, err = run_cli(
        capsys, "sweep-noise", "--n", "4", "--criterion", "theorem2", "--grid", "1:0:5"
    )
    assert status == 2
    status, _out, err = run_cli(
        capsys, "sweep-noise", "--n", "4", "--criterion", "theorem2", "--grid", "0:1:1"
    )
    assert status == 2


def test_unknown_flags_exit_2():
    with pytest.raises(SystemExit) as excinfo:
        main(["witness", "--qubits", "4"])
    assert excinfo.value.code == 2


def test_tolerance_override(capsys):
    # an absurdly large detection tolerance suppresses detection
    status, out, _err = run_cli(
        capsys, "witness", "--n", "4", "--tolerance", "detection_tolerance=10"
    )
    assert status == 0
    assert json.loads(out)["detected"] == "none"
    status, _out, err = run_cli(capsys, "witness", "--n", "4", "--tolerance", "bogus=1")
    assert status == 2


def test_json_numbers_use_17_significant_digits(capsys):
    _status, out, _err = run_cli(capsys, "witness", "--n", "4", "--m", "2")
    assert "0.66666666666666663" in out


def test_selftest_single_fast_criterion(capsys):
    status, out, _err = run_cli(capsys, "selftest", "--only", "7")
    assert status == 0
    assert "criterion 07  PASS" in out
    status, _out, err = run_cli(capsys, "selftest", "--only", "11")
    assert status == 2


def test_selftest_reports_the_known_red_criterion(capsys):
    # criterion 4 carries the unattainable 3.75 sub-check and must exit 3
    status, out, _err = run_cli(capsys, "selftest", "--only", "4")
    assert status == 3
    assert "criterion 04  FAIL" in out
    assert "3.75" in out
