"""
Command-Line and Batch Run Test Suite

Config validation, the run command with its reports and manifest, report
hashing and the single-shot subcommands.
"""

import json
import math
import os

import pytest
from click.testing import CliRunner
from pydantic import ValidationError

from main import cli
from src.agents.suite_runner import MANIFEST_NAME, SuiteRunner, exit_code
from src.cli.config_schema import JobSpec, RunConfig
from src.cli.reports import content_hash, read_json, report_filename
from src.utils.config import SCHEMA_DIR


def _job(**overrides):
    job = {
        "name": "free",
        "theorem": "T2",
        "d": 1, "s": 0.5, "p": 2.0, "tau": 0.1,
        "grid": {"n": 32, "length": 20.0},
        "potential": {"kind": "constant", "amplitude": [0.0, 0.0]},
    }
    job.update(overrides)
    return job


def _write_config(tmp_path, jobs, name="config.json"):
    path = tmp_path / name
    path.write_text(json.dumps({"schema_version": 1, "workers": 1, "jobs": jobs}), encoding="utf-8")
    return str(path)


def _invoke(*args):
    return CliRunner().invoke(cli, ["--log-level", "error", *args])


class TestConfigValidation:
    def test_inadmissible_job(self):
        """
        This test verifies that a T1 job with p <= d/2s is rejected at load time.

        Expected result: ValidationError naming the violated hypothesis.
        """
        with pytest.raises(ValidationError, match="p > d/2s"):
            JobSpec.model_validate(_job(theorem="T1", p=1.0))

    def test_unknown_field(self):
        with pytest.raises(ValidationError):
            JobSpec.model_validate(_job(colour="blue"))

    def test_odd_grid_and_cap(self):
        with pytest.raises(ValidationError):
            JobSpec.model_validate(_job(grid={"n": 33, "length": 20.0}))
        with pytest.raises(ValidationError, match="power of two"):
            JobSpec.model_validate(_job(grid={"n": 48, "length": 20.0}))
        with pytest.raises(ValidationError, match="exceeds the cap"):
            JobSpec.model_validate(_job(d=2, s=0.5, p=3.0, grid={"n": 128, "length": 20.0}))

    def test_random_potential_needs_seed(self):
        with pytest.raises(ValidationError, match="seed"):
            JobSpec.model_validate(_job(potential={"kind": "random-bandlimited"}))
        job = JobSpec.model_validate(_job(potential={"kind": "random-bandlimited"}, seed=3))
        assert job.build()[3].seed == 3

    def test_bare_amplitude(self):
        job = JobSpec.model_validate(_job(potential={"kind": "gaussian", "amplitude": -1.5}))
        assert job.potential.amplitude == (-1.5, 0.0)

    def test_round_trip(self):
        """
        This test verifies that a dumped config validates back to the same model.

        Expected result: equal models and equal canonical hashes.
        """
        config = RunConfig.model_validate({"jobs": [_job(), _job(name="other", s=1.0)]})
        again = RunConfig.model_validate(config.canonical())
        assert again == config
        assert content_hash(again.canonical()) == content_hash(config.canonical())

    def test_schema_file_matches_models(self):
        with open(os.path.join(SCHEMA_DIR, "run_config.schema.json"), encoding="utf-8") as f:
            schema = json.load(f)
        assert set(schema["properties"]) == set(RunConfig.model_fields)
        assert set(schema["$defs"]["JobSpec"]["properties"]) == set(JobSpec.model_fields)

    def test_report_schema_matches_report(self):
        from src.lieb_thirring.report import VerificationReport

        with open(os.path.join(SCHEMA_DIR, "verification_report.schema.json"), encoding="utf-8") as f:
            schema = json.load(f)
        report = VerificationReport("T2", {}, {}, {"kind": "constant"})
        assert set(schema["properties"]) == set(report.to_dict())


class TestReports:
    def test_hash_ignores_timings(self):
        first = {"lhs": 1.0, "timings": {"eig": 0.1}, "margins": {"timings": 3}}
        second = {"lhs": 1.0, "timings": {"eig": 9.9}, "margins": {}}
        assert content_hash(first) == content_hash(second)
        assert content_hash(first) != content_hash({"lhs": 2.0})

    def test_filename(self):
        assert report_filename(3, "T2 d1/s0.5") == "003_T2_d1_s0.5.json"


class TestRunCommand:
    def test_free_operator_run(self, tmp_path):
        """
        This test verifies a batch run on V = 0.

        Expected result: exit 0, one report with verdict holds, and a manifest listing it.
        """
        config = _write_config(tmp_path, [_job()])
        out = tmp_path / "out"
        result = _invoke("run", config, "--output-dir", str(out), "--no-progress")
        assert result.exit_code == 0, result.output
        manifest = read_json(str(out / MANIFEST_NAME))
        assert manifest["counts"] == {"holds": 1}
        job = manifest["jobs"][0]
        report = read_json(str(out / job["report"]))
        assert report["verdict"] == "holds"
        assert report["lhs"] == 0.0
        assert job["report_hash"] == content_hash(report)

    def test_inadmissible_config_exits_2(self, tmp_path):
        config = _write_config(tmp_path, [_job(theorem="T1", p=1.0)])
        result = _invoke("run", config, "--output-dir", str(tmp_path / "out"), "--no-progress")
        assert result.exit_code == 2
        assert not (tmp_path / "out").exists()

    def test_missing_config_exits_2(self, tmp_path):
        result = _invoke("run", str(tmp_path / "absent.json"), "--no-progress")
        assert result.exit_code == 2

    def test_deterministic_hashes(self, tmp_path):
        """
        This test verifies that identical configs produce identical report hashes.

        Expected result: the manifest hashes of two runs agree job by job.
        """
        jobs = [_job(name="g", potential={"kind": "gaussian", "amplitude": [0.5, 0.5], "width": 1.0})]
        config = RunConfig.model_validate({"workers": 1, "jobs": jobs})
        runner = SuiteRunner()
        first = runner.run_config(config, output_dir=str(tmp_path / "a"), progress=False)
        second = runner.run_config(config, output_dir=str(tmp_path / "b"), progress=False)
        assert [j["report_hash"] for j in first["jobs"]] == [j["report_hash"] for j in second["jobs"]]
        assert first["config_hash"] == second["config_hash"]
        assert exit_code(first) == 0

    def test_exit_code(self):
        assert exit_code({"jobs": [{"status": "ok", "verdict": "property-only"}]}) == 0
        assert exit_code({"jobs": [{"status": "ok", "verdict": "violated"}]}) == 1
        assert exit_code({"jobs": [{"status": "error", "verdict": None}]}) == 1


class TestSubcommands:
    def test_constants(self):
        """
        This test verifies the constant ledger printed for the resolvent-comparison bound.

        Expected result: exit 0 and K1 = 1/2 with omega = C_omega = 1.
        """
        result = _invoke("constants", "--theorem", "T2", "--d", "1", "--s", "0.5", "--p", "2", "--tau", "0.1")
        assert result.exit_code == 0, result.output
        data = json.loads(result.stdout)
        assert data["ok"]
        assert data["bundle"]["k_constants"]["K1"] == pytest.approx(0.5)
        assert data["bundle"]["case"] == "T2"

    def test_constants_inadmissible(self):
        result = _invoke("constants", "--theorem", "T1", "--d", "1", "--s", "0.5", "--p", "1")
        assert result.exit_code == 2

    def test_resolvent_single_point(self):
        """
        This test verifies the single-point resolvent check for d = 1, s = 1/2, p = 2 at lambda = -1.

        Expected result: direct value 2 against the bound 4 pi.
        """
        result = _invoke("resolvent", "--d", "1", "--s", "0.5", "--p", "2", "--lambda", "-1")
        assert result.exit_code == 0, result.output
        check = json.loads(result.stdout)["check"]
        assert check["direct"] == pytest.approx(2.0, rel=1e-8)
        assert check["bound"] == pytest.approx(4.0 * math.pi, rel=1e-8)

    def test_resolvent_bad_lambda(self):
        result = _invoke("resolvent", "--d", "1", "--s", "0.5", "--p", "2", "--lambda", "abc")
        assert result.exit_code == 2

    def test_distortion(self):
        result = _invoke("distortion", "--a", "1", "--samples", "500")
        assert result.exit_code == 0, result.output
        assert result.stdout.startswith("max violation = none")

    def test_spectrum_csv(self, tmp_path):
        target = tmp_path / "spectrum.csv"
        result = _invoke(
            "spectrum", "--s", "0.5", "--n", "16", "--length", "20", "--kind", "constant",
            "--amplitude", "0", "0", "--output", str(target),
        )
        assert result.exit_code == 0, result.output
        lines = target.read_text(encoding="utf-8").splitlines()
        assert lines[0] == "index,re,im,residual,tag"
        assert len(lines) == 17

    def test_spectrum_oversized_grid_exits_2(self):
        result = _invoke("spectrum", "--d", "2", "--s", "0.5", "--n", "128", "--length", "20")
        assert result.exit_code == 2
        assert "exceeds the cap" in result.output

    def test_spectrum_grid_not_power_of_two_exits_2(self):
        result = _invoke("spectrum", "--s", "0.5", "--n", "24", "--length", "20", "--kind", "constant")
        assert result.exit_code == 2

    def test_verify_single(self):
        """
        This test verifies the single-job verify command on V = 0.

        Expected result: exit 0 and a report with verdict holds and LHS 0.
        """
        result = _invoke(
            "verify", "--theorem", "T2", "--s", "0.5", "--p", "2", "--tau", "0.1",
            "--n", "32", "--length", "20", "--kind", "constant", "--amplitude", "0", "0",
        )
        assert result.exit_code == 0, result.output
        data = json.loads(result.stdout)
        assert data["verdict"] == "holds"
        assert data["report"]["lhs"] == 0.0

    def test_verify_inadmissible_exits_2(self):
        result = _invoke("verify", "--theorem", "T1", "--s", "0.5", "--p", "1", "--n", "32", "--length", "20")
        assert result.exit_code == 2

    def test_verify_unknown_mode_exits_2(self):
        result = _invoke("verify", "--theorem", "T2", "--s", "0.5", "--p", "2", "--mode", "batch")
        assert result.exit_code == 2

    def test_bgk_family(self):
        result = _invoke("bgk", "--modulus", "0.9", "--count", "5")
        assert result.exit_code == 0, result.output
        lines = result.output.splitlines()
        assert lines[0].startswith("modulus,")
        assert lines[1].startswith("0.9,5,")
        assert any(line.startswith("max ratio = ") for line in lines)

    def test_bgk_bad_tau_exits_2(self):
        result = _invoke("bgk", "--tau", "1.5", "--modulus", "0.9", "--count", "5")
        assert result.exit_code == 2

    def test_bgk_with_job(self, tmp_path):
        """
        This test verifies the envelope inequality for g = f o phi_a on a job taken from a config.

        Expected result: exit 0 and an envelope that holds on the zeros of g and the sample circles.
        """
        jobs = [
            _job(),
            _job(name="small", grid={"n": 16, "length": 20.0},
                 potential={"kind": "gaussian", "amplitude": [-0.4, 0.2], "width": 1.0}),
        ]
        config = _write_config(tmp_path, jobs)
        result = _invoke("bgk", "--modulus", "0.9", "--count", "5", "--config", config, "--job", "small")
        assert result.exit_code == 0, result.output
        assert "envelope: holds" in result.output

    def test_bgk_job_errors_exit_2(self, tmp_path):
        config = _write_config(tmp_path, [_job()])
        assert _invoke("bgk", "--job", "free").exit_code == 2
        assert _invoke("bgk", "--config", config, "--job", "absent").exit_code == 2
        assert _invoke("bgk", "--config", str(tmp_path / "absent.json")).exit_code == 2
