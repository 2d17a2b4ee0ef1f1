"""Subcommand handlers. Each takes the validated run options and returns
the exit code; errors propagate to `src.handlers`.
"""

import json
import logging

from ..classes.schemas import DensityPoint
from ..classes.service import density_scan
from ..constructions.service import NotInClassError
from .dependencies import get_reproduction_service
from .enums import Command, ExitCode, OutputFormat
from .output import emit, render_rows
from .schemas import ClassRow, ComputeRow, Figure1Row, RunConfig, VerificationCheck, VerificationReport
from .service import build_witness, render_witness, witness_output


def compute(run: RunConfig) -> ExitCode:
    """One row (k, a_k, c_k, digit_len) per k of the range."""
    assert run.k_range is not None
    service = get_reproduction_service(run)
    rows = service.compute(run.k_range.indices(), recheck=run.recheck)
    emit(render_rows(rows, ComputeRow, run.output_format), run.out)
    logging.info(
        json.dumps(
            {"message": "compute", "base": run.base, "rows": len(rows), "cached": service.cache_hits}
        )
    )
    return ExitCode.OK


def render_report(report: VerificationReport, fmt: OutputFormat) -> str:
    if fmt == OutputFormat.JSON:
        return report.model_dump_json(indent=2) + "\n"
    if fmt == OutputFormat.CSV:
        return render_rows(report.checks, VerificationCheck, fmt)
    lines = []
    for check in report.checks:
        status = "PASS" if check.passed else "FAIL"
        line = f"{status} {check.name} (checked {check.checked})"
        if check.failures:
            line += " k=" + " ".join(map(str, check.failures))
        lines.append(line)
    lines.append(f"{report.message}: base {report.base}, k <= {report.k_max}")
    return "\n".join(lines) + "\n"


def verify(run: RunConfig) -> ExitCode:
    """The invariant suite over 1 <= k <= max; exit 1 when any check fails."""
    assert run.k_max is not None
    report = get_reproduction_service(run).verify(run.k_max)
    emit(render_report(report, run.output_format), run.out)
    return ExitCode.OK if report.passed else ExitCode.VERIFICATION_FAILED


def classes(run: RunConfig) -> ExitCode:
    """Minimal class index of one k, or the density curve of C_m up to --scan."""
    if run.k is not None:
        rows = [get_reproduction_service(run).class_row(run.k)]
        emit(render_rows(rows, ClassRow, run.output_format), run.out)
        return ExitCode.OK

    assert run.x_max is not None and run.m is not None
    points = density_scan(run.x_max, run.m, stride=run.stride, threads=run.threads)
    emit(render_rows(points, DensityPoint, run.output_format), run.out)
    return ExitCode.OK


def figure1(run: RunConfig) -> ExitCode:
    assert run.k_max is not None
    rows = get_reproduction_service(run).figure1(run.k_max)
    emit(render_rows(rows, Figure1Row, run.output_format), run.out)
    return ExitCode.OK


def witness(run: RunConfig) -> ExitCode:
    """Builds, verifies and prints one witness."""
    assert run.construction is not None
    try:
        report = build_witness(
            run.construction,
            q=run.base,
            k=run.k,
            m=run.m,
            i=run.i,
            x=run.x,
            ell=run.ell,
            engine=run.engine,
        )
    except NotInClassError as e:
        logging.warning(json.dumps({"message": "not in class", "k": e.k, "residue": e.residue}))
        raise
    output = witness_output(report, run.hexadecimal)
    if run.output_format == OutputFormat.JSON:
        emit(output.model_dump_json(indent=2) + "\n", run.out)
    else:
        emit(render_witness(output), run.out)
    return ExitCode.OK


HANDLERS = {
    Command.COMPUTE: compute,
    Command.VERIFY: verify,
    Command.CLASSES: classes,
    Command.FIGURE1: figure1,
    Command.WITNESS: witness,
}
