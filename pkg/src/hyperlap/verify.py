"""Verification sweeps: closed forms against the quadrature oracle.

A sweep walks a parameter grid, evaluates the entry's closed form and the
defining integral independently, and records the comparison per point.
Points that violate an entry's enforced convergence conditions are skipped
rather than failed; a point passes when the absolute difference is at most
tol times max(1, |closed value|).

Reports serialize to JSON lines with a fixed field order and floats printed
at 17 significant digits, so identical inputs give byte-identical files.
"""

import concurrent.futures
import os
from dataclasses import dataclass

from ._version import __version__
from .catalog import check_conditions, coerce_params, get_entry
from .errors import DomainError, IntegrandDomainError, NoConvergence, PoleError
from .quadrature import integrate_semi_infinite


@dataclass(frozen=True)
class PointRecord:
    params: dict
    status: str  # pass | fail | skip
    closed: complex = None
    oracle: complex = None
    abs_err: float = None
    rel_err: float = None
    oracle_err: float = None
    evaluations: int = 0
    note: str = ""


@dataclass(frozen=True)
class VerificationReport:
    entry_id: str
    grid_spec: str
    tol: float
    oracle_tol: float
    points: tuple

    @property
    def pass_count(self):
        return sum(1 for p in self.points if p.status == "pass")

    @property
    def fail_count(self):
        return sum(1 for p in self.points if p.status == "fail")

    @property
    def skip_count(self):
        return sum(1 for p in self.points if p.status == "skip")

    @property
    def max_rel_err(self):
        errs = [p.rel_err for p in self.points if p.rel_err is not None]
        return max(errs) if errs else 0.0

    @property
    def ok(self):
        return self.fail_count == 0


def _check_point(entry, raw_params, tol, oracle_tol, relaxed):
    try:
        params = coerce_params(entry, raw_params)
    except DomainError as exc:
        return PointRecord(dict(raw_params), "skip", note=str(exc))
    violated = check_conditions(entry, params)
    if violated and not relaxed:
        return PointRecord(
            params, "skip", note="conditions: " + "; ".join(c.text for c in violated)
        )
    try:
        closed = complex(entry.closed_form(params))
    except (PoleError, DomainError, ZeroDivisionError, OverflowError) as exc:
        return PointRecord(params, "fail", note=f"closed form: {exc}")
    decay = entry.decay_rate(params)
    if not decay > 0.0:
        return PointRecord(
            params, "skip", closed=closed, note="decay rate not positive"
        )
    try:
        f = entry.integrand(params)
    except IntegrandDomainError as exc:
        return PointRecord(params, "skip", closed=closed, note=str(exc))
    try:
        result = integrate_semi_infinite(
            f,
            decay,
            oracle_tol,
            osc_freq=entry.osc_freq(params),
            endpoint_power=entry.endpoint_power(params),
        )
    except NoConvergence as exc:
        return PointRecord(params, "fail", closed=closed, note=str(exc))
    except IntegrandDomainError as exc:
        return PointRecord(params, "skip", closed=closed, note=str(exc))
    abs_err = abs(closed - result.value)
    scale = max(1.0, abs(closed))
    rel_err = abs_err / abs(closed) if closed != 0 else abs_err
    status = "pass" if abs_err <= tol * scale else "fail"
    note = "" if result.converged else "oracle stagnated"
    return PointRecord(
        params,
        status,
        closed=closed,
        oracle=result.value,
        abs_err=abs_err,
        rel_err=rel_err,
        oracle_err=result.error_estimate,
        evaluations=result.evaluations,
        note=note,
    )


def _workers(explicit):
    if explicit is not None:
        return max(1, int(explicit))
    env = os.environ.get("HYPERLAP_WORKERS", "")
    try:
        return max(1, int(env)) if env else 1
    except ValueError:
        return 1


def verify_entry(
    entry_id,
    grid=None,
    tol=1e-8,
    oracle_tol=None,
    relaxed=False,
    workers=None,
    grid_spec=None,
) -> VerificationReport:
    """Sweep one entry over a grid (default grid when none given)."""
    entry = get_entry(entry_id)
    if grid is None:
        grid = entry.default_grid
        grid_spec = grid_spec or "default"
    grid = tuple(grid)
    if oracle_tol is None:
        oracle_tol = max(tol / 100.0, 1e-12)
    nworkers = _workers(workers)
    if nworkers > 1 and len(grid) > 1:
        with concurrent.futures.ThreadPoolExecutor(nworkers) as pool:
            points = tuple(
                pool.map(
                    lambda g: _check_point(entry, g, tol, oracle_tol, relaxed), grid
                )
            )
    else:
        points = tuple(
            _check_point(entry, g, tol, oracle_tol, relaxed) for g in grid
        )
    return VerificationReport(
        entry_id=entry.id,
        grid_spec=grid_spec or "custom",
        tol=float(tol),
        oracle_tol=float(oracle_tol),
        points=points,
    )


def verify_all(tol=1e-8, oracle_tol=None, relaxed=False, workers=None, section=None):
    """Default-grid sweeps for every catalog entry, in registry order."""
    from .catalog import entries

    return tuple(
        verify_entry(
            e.id, tol=tol, oracle_tol=oracle_tol, relaxed=relaxed, workers=workers
        )
        for e in entries(section)
    )


# ---------------------------------------------------------------------------
# serialization

def _jnum(v: float) -> str:
    if v != v or v in (float("inf"), float("-inf")):
        return '"%s"' % repr(v)
    return format(float(v), ".17g")


def _jval(v) -> str:
    if v is None:
        return "null"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, int):
        return str(v)
    if isinstance(v, float):
        return _jnum(v)
    if isinstance(v, complex):
        return "[%s,%s]" % (_jnum(v.real), _jnum(v.imag))
    if isinstance(v, str):
        import json

        return json.dumps(v, ensure_ascii=False)
    if isinstance(v, (list, tuple)):
        return "[" + ",".join(_jval(x) for x in v) + "]"
    if isinstance(v, dict):
        return (
            "{"
            + ",".join('"%s":%s' % (k, _jval(x)) for k, x in v.items())
            + "}"
        )
    raise TypeError(f"cannot serialize {type(v)}")


def _point_line(rec: PointRecord) -> str:
    fields = {
        "params": rec.params,
        "status": rec.status,
        "closed_re": None if rec.closed is None else rec.closed.real,
        "closed_im": None if rec.closed is None else rec.closed.imag,
        "oracle_re": None if rec.oracle is None else rec.oracle.real,
        "oracle_im": None if rec.oracle is None else rec.oracle.imag,
        "abs_err": rec.abs_err,
        "rel_err": rec.rel_err,
        "oracle_err": rec.oracle_err,
        "evals": rec.evaluations,
        "note": rec.note,
    }
    return _jval(fields)


def serialize_report(report: VerificationReport) -> str:
    """JSON lines: one header record, then one record per grid point."""
    header = {
        "entry": report.entry_id,
        "grid": report.grid_spec,
        "tol": report.tol,
        "oracle_tol": report.oracle_tol,
        "version": __version__,
        "points": len(report.points),
        "pass": report.pass_count,
        "fail": report.fail_count,
        "skip": report.skip_count,
    }
    lines = [_jval(header)]
    lines.extend(_point_line(p) for p in report.points)
    return "\n".join(lines) + "\n"


def _fmt_param(v):
    if isinstance(v, complex):
        if v.imag == 0:
            return format(v.real, "g")
        return "%g%+gj" % (v.real, v.imag)
    if isinstance(v, float):
        return format(v, "g")
    return str(v)


def render_report(report: VerificationReport) -> str:
    """Human-readable sweep table."""
    lines = [
        f"entry {report.entry_id}  grid {report.grid_spec}  tol {report.tol:g}"
    ]
    for p in report.points:
        ps = " ".join(f"{k}={_fmt_param(v)}" for k, v in p.params.items())
        if p.status == "skip":
            lines.append(f"  skip  {ps}  ({p.note})")
        else:
            extra = f"  ({p.note})" if p.note else ""
            lines.append(f"  {p.status:4s}  {ps}  rel_err={p.rel_err:.3e}{extra}")
    lines.append(
        f"  summary: {report.pass_count} pass, {report.fail_count} fail, "
        f"{report.skip_count} skip, max rel err {report.max_rel_err:.3e}"
    )
    return "\n".join(lines) + "\n"
