import csv
import json
import logging

import attr
import pytest
from click.testing import CliRunner

from qdesk.cli import main
from qdesk.lde import LdeRunner
from qdesk.ledger.table import table_cells
from qdesk.shared.log import ROOT_LOGGER_NAME


@pytest.fixture(autouse=True)
def detach_cli_logging():
    yield
    root = logging.getLogger(ROOT_LOGGER_NAME)
    for handler in list(root.handlers):
        if getattr(handler, "_qdesk_cli", False):
            root.removeHandler(handler)


def invoke(out, *args):
    return CliRunner().invoke(main, ["--out", str(out)] + list(args))


def read_result(path):
    with open(path, "r", encoding="UTF-8") as fh:
        return json.load(fh)


def read_csv(path):
    with open(path, "r", encoding="UTF-8", newline="") as fh:
        return list(csv.reader(fh))


def test_lde_pauli_x(tmp_path):
    result = invoke(tmp_path, "lde", "--demo", "pauli-x", "--k", "8", "--seed", "7")
    assert result.exit_code == 0, result.output
    report = read_result(tmp_path / "lde_result.json")
    assert report["config"]["seed"] == 7
    assert report["config"]["options"] == {"k": 8}
    assert report["result"]["fidelity_vs_exact"] >= 1 - 1e-8
    assert "toolkit_version" in report and "generated_at" in report
    rows = read_csv(tmp_path / "lde_result.csv")
    assert rows[0] == ["fidelity_vs_oracle", "fidelity_vs_exact", "success_prob", "expected_success_prob"]
    assert len(rows) == 2


def test_lde_diffusion_scaling(tmp_path):
    result = invoke(tmp_path, "lde", "--demo", "diffusion-scaling", "--k", "2")
    assert result.exit_code == 0, result.output
    slope = read_result(tmp_path / "lde_scaling.json")["result"]["slope"]
    assert abs(slope + 8) <= 0.15 * 8
    rows = read_csv(tmp_path / "lde_scaling.csv")
    assert rows[0] == ["N", "p", "copies", "slope"]
    assert [r[0] for r in rows[1:]] == ["8", "16", "32", "64"]


def test_lde_diffusion_needs_two_sizes(tmp_path):
    result = invoke(tmp_path, "lde", "--demo", "diffusion-scaling", "--sizes", "8")
    assert result.exit_code == 2
    assert not tmp_path.joinpath("lde_scaling.json").exists()


def test_missing_problem_file_writes_nothing(tmp_path):
    out = tmp_path / "out"
    result = invoke(out, "lde", "--problem", str(tmp_path / "missing.json"))
    assert result.exit_code == 2
    assert not out.exists()


def test_problem_and_demo_are_exclusive(tmp_path):
    assert invoke(tmp_path, "lde").exit_code == 2
    assert invoke(tmp_path, "hhl", "--demo", "two-by-two", "--problem", "x.json").exit_code == 2


def test_lde_problem_file(tmp_path):
    problem = tmp_path / "problem.json"
    problem.write_text(json.dumps({"M": [[0, 1], [1, 0]], "x0": [1, 0], "t": 0.5, "k": 4}))
    out = tmp_path / "out"
    result = invoke(out, "--format", "json", "lde", "--problem", str(problem))
    assert result.exit_code == 0, result.output
    assert out.joinpath("lde_result.json").exists()
    assert not out.joinpath("lde_result.csv").exists()


def test_hhl_two_by_two(tmp_path):
    result = invoke(tmp_path, "hhl", "--demo", "two-by-two")
    assert result.exit_code == 0, result.output
    report = read_result(tmp_path / "hhl_result.json")["result"]
    assert report["herald_prob"] == pytest.approx(0.625, abs=1e-9)
    assert report["fidelity_vs_oracle"] >= 1 - 1e-9
    assert report["exact_spectrum"] is True
    assert report["gate_complexity"]["term"] == "m^2 + s^2*t*log(N) + log(N)"


def test_hhl_snapped_problem(tmp_path):
    problem = tmp_path / "hhl.json"
    problem.write_text(json.dumps({"A": [[0.3, 0.05], [0.05, 0.6]], "b": [1, 1], "m": 3}))
    result = invoke(tmp_path / "out", "hhl", "--problem", str(problem), "--snap-spectrum")
    assert result.exit_code == 0, result.output
    report = read_result(tmp_path / "out" / "hhl_result.json")
    assert report["result"]["exact_spectrum"] is True
    assert report["config"]["options"]["snap_spectrum"] is True


def test_tomo_budgets(tmp_path):
    result = invoke(tmp_path, "tomo", "--uniform-n", "8", "--delta", "0.1", "--epsilon", "0.05", "--trials", "0")
    assert result.exit_code == 0, result.output
    rows = read_csv(tmp_path / "tomo_budgets.csv")
    assert rows[0] == ["outcome", "p_m", "budget"]
    assert [r[2] for r in rows[1:]] == ["7190"] * 8
    assert not tmp_path.joinpath("tomo_coverage.csv").exists()


def test_tomo_coverage_and_sweep(tmp_path):
    result = invoke(
        tmp_path,
        "tomo",
        "--uniform-n",
        "4",
        "--trials",
        "100",
        "--seed",
        "3",
        "--sweep-n",
        "8,16",
        "--sweep-delta",
        "0.1",
    )
    assert result.exit_code == 0, result.output
    report = read_result(tmp_path / "tomo_report.json")["result"]
    assert report["coverage"]["passed"] is True
    sweep = read_csv(tmp_path / "tomo_sweep.csv")
    assert sweep[0] == ["delta", "epsilon", "N", "M"]
    assert sweep[1] == ["0.1", "0.05", "8", "7190"]


def test_complexity_table(tmp_path):
    result = invoke(tmp_path, "complexity", "--table")
    assert result.exit_code == 0, result.output
    text = tmp_path.joinpath("complexity_table.txt").read_text()
    for cell in table_cells().values():
        assert cell in text
    assert len(read_result(tmp_path / "complexity.json")["result"]["table"]) == 6


def test_complexity_report(tmp_path):
    result = invoke(tmp_path, "complexity", "--prep", "FF-qRAM", "--readout", "AAPT-POVM", "--n", "2,4")
    assert result.exit_code == 0, result.output
    assert "log(N) + C + N^4" in result.output
    rows = read_csv(tmp_path / "complexity_evaluations.csv")
    assert rows[1][:3] == ["FF-qRAM", "AAPT-POVM", "2"]
    assert float(rows[1][3]) == pytest.approx(1 + 1 + 16)
    assert invoke(tmp_path, "complexity", "--prep", "DM", "--readout", "nonsense").exit_code == 2


def test_prep_bench(tmp_path):
    result = invoke(tmp_path, "prep-bench")
    assert result.exit_code == 0, result.output
    rows = read_csv(tmp_path / "prep_bench.csv")
    assert [r[1] for r in rows[1:]] == ["35", "163", "603", "1947"]
    assert read_result(tmp_path / "prep_bench.json")["result"]["alarm"] is False


def test_reruns_are_identical(tmp_path):
    first, second = tmp_path / "a", tmp_path / "b"
    for out in (first, second):
        assert invoke(out, "lde", "--demo", "pauli-x", "--seed", "3").exit_code == 0
    one, two = read_result(first / "lde_result.json"), read_result(second / "lde_result.json")
    one.pop("generated_at")
    two.pop("generated_at")
    assert one == two
    assert first.joinpath("lde_result.csv").read_bytes() == second.joinpath("lde_result.csv").read_bytes()


def test_bad_settings_file(tmp_path):
    settings = tmp_path / "settings.yml"
    settings.write_text("norm_tol: -1\n")
    result = invoke(tmp_path / "out", "--settings", str(settings), "lde", "--demo", "pauli-x")
    assert result.exit_code == 2
    assert not tmp_path.joinpath("out").exists()


def test_settings_file_is_applied(tmp_path):
    settings = tmp_path / "settings.toml"
    settings.write_text('default_seed = 11\nchernoff_log = "natural"\n')
    result = invoke(tmp_path / "out", "--settings", str(settings), "lde", "--demo", "pauli-x")
    assert result.exit_code == 0, result.output
    report = read_result(tmp_path / "out" / "lde_result.json")
    assert report["config"]["seed"] == 11
    assert report["result"]["seed"] == 11


def test_log_base_setting_changes_evaluation(tmp_path):
    settings = tmp_path / "settings.yml"
    settings.write_text("log_base: 4\n")
    args = ["complexity", "--prep", "FF-qRAM", "--readout", "AAPT-POVM", "--n", "4"]
    result = invoke(tmp_path / "out", "--settings", str(settings), *args)
    assert result.exit_code == 0, result.output
    rows = read_csv(tmp_path / "out" / "complexity_evaluations.csv")
    assert float(rows[1][3]) == pytest.approx(1 + 1 + 256)


def test_lde_low_oracle_fidelity_fails(tmp_path, monkeypatch):
    original = LdeRunner.run

    def degraded(self, p, seed=None):
        return attr.evolve(original(self, p, seed=seed), fidelity_vs_oracle=0.5)

    monkeypatch.setattr(LdeRunner, "run", degraded)
    result = invoke(tmp_path, "lde", "--demo", "pauli-x")
    assert result.exit_code == 1
    assert not tmp_path.joinpath("lde_result.json").exists()
