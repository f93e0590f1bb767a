import json
import logging
import sys
from typing import Any, Dict, Optional

import click
from pydantic import ValidationError

from src.agents.suite_runner import SuiteRunner, exit_code
from src.cli.config_schema import JobSpec, RunConfig, load_run_config
from src.cli.reports import write_spectrum_csv, write_table_csv
from src.utils.config import setup_logger
from src.utils.errors import DomainError, ResourceError, ToolkitError

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2

logger = logging.getLogger("src.main")


def _echo_json(data: Dict[str, Any]):
    click.echo(json.dumps(data, indent=2, sort_keys=True, default=str))


def _fail_usage(message: str):
    click.echo(f"Error: {message}", err=True)
    sys.exit(EXIT_USAGE)


def _dispatch(runner: SuiteRunner, request: Dict[str, Any]) -> Dict[str, Any]:
    """Run one request; domain and grid-cap errors are usage errors (exit 2), other toolkit errors exit 1."""
    try:
        return runner.route(request).run(request)
    except (DomainError, ResourceError) as e:
        _fail_usage(str(e))
    except ToolkitError as e:
        logger.error(f"❌ {request.get('command')} failed: {e}")
        _echo_json({"ok": False, "error": {"type": type(e).__name__, "message": str(e)}})
        sys.exit(EXIT_VIOLATION)


def _finish(result: Dict[str, Any]):
    sys.exit(EXIT_OK if result.get("ok") else EXIT_VIOLATION)


def _parse_complex(ctx, param, value: Optional[str]) -> Optional[complex]:
    if value is None:
        return None
    try:
        return complex(value.replace(" ", "").replace("i", "j"))
    except ValueError:
        raise click.BadParameter(f"not a complex number: {value!r} (use e.g. -1, 4j, 1+2j)")


def _potential_options(fn):
    options = [
        click.option("--n", "n", type=int, default=256, show_default=True, help="grid points per axis"),
        click.option("--length", type=float, default=60.0, show_default=True, help="box side L"),
        click.option("--kind", type=click.Choice(["gaussian", "box", "random-bandlimited", "constant"]),
                     default="gaussian", show_default=True),
        click.option("--amplitude", type=(float, float), default=(0.5, 0.5), show_default=True,
                     help="potential amplitude as RE IM"),
        click.option("--width", type=float, default=1.0, show_default=True),
        click.option("--seed", type=int, default=None, help="seed of random potentials"),
        click.option("--bandwidth", type=int, default=4, show_default=True),
    ]
    for option in reversed(options):
        fn = option(fn)
    return fn


def _potential_descriptor(kind, amplitude, width, seed, bandwidth) -> Dict[str, Any]:
    return {"kind": kind, "amplitude": list(amplitude), "width": width, "seed": seed, "bandwidth": bandwidth}


def _load_config(config_path: str) -> RunConfig:
    try:
        return load_run_config(config_path)
    except FileNotFoundError:
        _fail_usage(f"config file not found: {config_path}")
    except json.JSONDecodeError as e:
        _fail_usage(f"config is not valid JSON: {e}")
    except ValidationError as e:
        _fail_usage(f"invalid run configuration:\n{e}")


def _select_job(config_path: str, job_name: Optional[str]) -> JobSpec:
    jobs = _load_config(config_path).jobs
    if job_name is None:
        return jobs[0]
    for job in jobs:
        if job.label == job_name:
            return job
    _fail_usage(f"no job labelled {job_name!r} in {config_path}")


@click.group()
@click.option("--log-level", default=None, help="overrides LOG_LEVEL")
@click.pass_context
def cli(ctx, log_level):
    """Finite-dimensional checks of Lieb-Thirring type bounds for fractional Schroedinger operators."""
    if log_level:
        setup_logger(level=log_level.upper())
    else:
        setup_logger()
    ctx.obj = SuiteRunner()


@cli.command()
@click.argument("config_path", type=click.Path(dir_okay=False))
@click.option("--output-dir", default=None, help="overrides the config's output directory")
@click.option("--no-progress", is_flag=True, help="hide the progress bar")
@click.pass_obj
def run(runner: SuiteRunner, config_path, output_dir, no_progress):
    """Execute every job of a run configuration and write reports plus a manifest."""
    config = _load_config(config_path)
    manifest = runner.run_config(config, output_dir=output_dir, progress=not no_progress)
    write_table_csv(manifest["jobs"], sys.stdout)
    sys.exit(exit_code(manifest))


@cli.command()
@click.option("--theorem", type=click.Choice(["T1", "T1b", "T2"]), required=True)
@click.option("--d", "d", type=int, required=True)
@click.option("--s", "s", type=float, required=True)
@click.option("--p", "p", type=float, required=True)
@click.option("--tau", type=float, default=None)
@click.option("--omega", type=float, default=1.0, show_default=True)
@click.option("--c-omega", type=float, default=1.0, show_default=True)
@click.option("--cases", is_flag=True, help="also run the a-integration check at one point per case")
@click.pass_obj
def constants(runner: SuiteRunner, theorem, d, s, p, tau, omega, c_omega, cases):
    """Print the full constant ledger of one bound."""
    result = _dispatch(runner, {
        "command": "constants", "theorem": theorem, "d": d, "s": s, "p": p, "tau": tau,
        "omega": omega, "c_omega": c_omega, "cases": cases,
    })
    _echo_json(result)
    _finish(result)


@cli.command()
@click.option("--d", "d", type=int, required=True)
@click.option("--s", "s", type=float, required=True)
@click.option("--p", "p", type=float, required=True)
@click.option("--lambda", "lam", default=None, callback=_parse_complex, help="single point, e.g. -1 or 1+2j")
@click.option("--samples", type=int, default=200, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.pass_obj
def resolvent(runner: SuiteRunner, d, s, p, lam, samples, seed):
    """Direct resolvent-kernel norm against its closed-form bound."""
    result = _dispatch(runner, {
        "command": "resolvent", "d": d, "s": s, "p": p, "lambda": lam, "samples": samples, "seed": seed,
    })
    _echo_json(result)
    _finish(result)


@cli.command()
@click.option("--a", "a", type=float, default=1.0, show_default=True)
@click.option("--samples", type=int, default=10_000, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.pass_obj
def distortion(runner: SuiteRunner, a, samples, seed):
    """Distortion property suite of the disc / slit-plane map."""
    result = _dispatch(runner, {"command": "distortion", "a": a, "samples": samples, "seed": seed})
    suite = result["suite"]
    violations = {k: v for k, v in suite["violations"].items() if v}
    click.echo(f"max violation = {'none' if not violations else violations}")
    _echo_json(result)
    _finish(result)


@cli.command()
@click.option("--tau", type=float, default=0.5, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--modulus", "moduli", type=float, multiple=True, help="zero moduli (repeatable)")
@click.option("--count", "counts", type=int, multiple=True, help="zero counts (repeatable)")
@click.option("--config", "config_path", type=click.Path(dir_okay=False), default=None,
              help="run configuration holding a job for the envelope check")
@click.option("--job", "job_name", default=None, help="job label in --config (default: the first job)")
@click.pass_obj
def bgk(runner: SuiteRunner, tau, seed, moduli, counts, config_path, job_name):
    """Blaschke-family ratios of zero sums to envelope amplitudes.

    With --config the envelope inequality for g = f o phi_a is also checked on one job.
    """
    request = {"command": "bgk", "tau": tau, "seed": seed, "moduli": list(moduli), "counts": list(counts)}
    if job_name is not None and config_path is None:
        _fail_usage("--job needs --config")
    if config_path is not None:
        request["job"] = _select_job(config_path, job_name)
    result = _dispatch(runner, request)
    write_table_csv(result["family"]["rows"], sys.stdout)
    click.echo(f"max ratio = {result['family']['max_ratio']:.6g}", err=True)
    if "envelope" in result:
        envelope = result["envelope"]
        click.echo(f"envelope: {'holds' if envelope['holds'] else 'violated'} on {envelope['points']} points", err=True)
    _finish(result)


@cli.command()
@click.option("--d", "d", type=int, default=1, show_default=True)
@click.option("--s", "s", type=float, required=True)
@_potential_options
@click.option("--output", type=click.Path(dir_okay=False), default=None, help="CSV file (default stdout)")
@click.pass_obj
def spectrum(runner: SuiteRunner, d, s, n, length, kind, amplitude, width, seed, bandwidth, output):
    """Classified eigenvalues of the discretized operator as CSV."""
    result = _dispatch(runner, {
        "command": "spectrum", "d": d, "s": s, "grid": {"n": n, "length": length},
        "potential": _potential_descriptor(kind, amplitude, width, seed, bandwidth),
    })
    if output:
        with open(output, "w", encoding="utf-8", newline="") as f:
            write_spectrum_csv(result["rows"], f)
    else:
        write_spectrum_csv(result["rows"], sys.stdout)
    _finish(result)


@cli.command()
@click.option("--theorem", type=click.Choice(["T1", "T1b", "T2"]), required=True)
@click.option("--d", "d", type=int, default=1, show_default=True)
@click.option("--s", "s", type=float, required=True)
@click.option("--p", "p", type=float, required=True)
@click.option("--tau", type=float, default=None)
@_potential_options
@click.option("--mode", type=click.Choice(["single", "family", "tau_sweep"]), default="single", show_default=True)
@click.pass_obj
def verify(runner: SuiteRunner, theorem, d, s, p, tau, n, length, kind, amplitude, width, seed, bandwidth, mode):
    """Verify one bound on one discretized operator and print the report."""
    spec = {
        "theorem": theorem, "d": d, "s": s, "p": p,
        "grid": {"n": n, "length": length},
        "potential": _potential_descriptor(kind, amplitude, width, seed, bandwidth),
    }
    if tau is not None:
        spec["tau"] = tau
    try:
        job = JobSpec.model_validate(spec)
    except ValidationError as e:
        _fail_usage(f"invalid job:\n{e}")
    result = _dispatch(runner, {"command": "verify", "job": job, "mode": mode})
    _echo_json(result)
    _finish(result)


if __name__ == "__main__":
    cli()
