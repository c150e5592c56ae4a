"""HTTP service exposing the catalog, evaluator, expander and verifier.

Thin wrapper over the core package: requests carry parameter values either
as numbers, [re, im] pairs, or literal strings ("1+0.5i"), and responses
return complex values as [re, im] pairs. Unknown entries map to 404 and
domain violations to 422.
"""

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel

from ._version import __version__
from .catalog import (
    check_conditions,
    coerce_params,
    entries,
    evaluate_entry,
    get_entry,
)
from .errors import DomainError, IntegrandDomainError, NoConvergence, UnknownEntry
from .grids import canonical_name, parse_grid, parse_scalar
from .laplace import laplace_spectral
from .quadrature import integrate_semi_infinite
from .spectral import expand_power, render
from .verify import render_report, serialize_report, verify_all, verify_entry

app = FastAPI(title="hyperlap", version=__version__)


class ParamInfo(BaseModel):
    name: str
    kind: str


class ConditionInfo(BaseModel):
    text: str
    enforced: bool


class EntryInfo(BaseModel):
    id: str
    equation: str
    section: int
    description: str
    params: list[ParamInfo]
    conditions: list[ConditionInfo]


class EvalRequest(BaseModel):
    entry: str
    params: dict[str, object] = {}
    relaxed: bool = False
    oracle: bool = False
    oracle_tol: float = 1e-10


class EvalResponse(BaseModel):
    entry: str
    value: list[float]
    conditions_ok: bool
    violated: list[str] = []
    advisories: list[str] = []
    oracle: list[float] | None = None
    difference: float | None = None
    note: str = ""


class ExpandRequest(BaseModel):
    kind: str
    exponent: int
    frequency: float = 1.0
    laplace_s: object | None = None


class TermInfo(BaseModel):
    kind: str
    coefficient: float
    frequency: float


class ExpandResponse(BaseModel):
    rendered: str
    terms: list[TermInfo]
    laplace: list[float] | None = None


class VerifyRequest(BaseModel):
    target: str
    grid: str | None = None
    tol: float = 1e-8
    relaxed: bool = False
    section: int | None = None


class ReportSummary(BaseModel):
    entry: str
    passes: int
    fails: int
    skips: int
    max_rel_err: float


class VerifyResponse(BaseModel):
    ok: bool
    reports: list[ReportSummary]
    tables: list[str]
    jsonl: str


def _coerce_value(v):
    if isinstance(v, str):
        return parse_scalar(v)
    if isinstance(v, (list, tuple)):
        if len(v) != 2:
            raise DomainError(f"complex parameter must be [re, im], got {v!r}")
        return complex(float(v[0]), float(v[1]))
    if isinstance(v, bool):
        raise DomainError(f"bad parameter value {v!r}")
    if isinstance(v, (int, float)):
        return float(v)
    raise DomainError(f"bad parameter value {v!r}")


def _request_params(entry, raw: dict) -> dict:
    names = tuple(ps.name for ps in entry.params)
    return {canonical_name(k, names): _coerce_value(v) for k, v in raw.items()}


def _pair(z: complex):
    return [float(z.real), float(z.imag)]


def _domain_detail(exc: DomainError):
    return {"message": str(exc), "violated": list(getattr(exc, "violated", ()))}


@app.get("/health")
def health():
    return {"status": "ok", "version": __version__}


@app.get("/entries", response_model=list[EntryInfo])
def list_entries(section: int | None = None):
    return [
        EntryInfo(
            id=e.id,
            equation=e.equation,
            section=e.section,
            description=e.description,
            params=[ParamInfo(name=ps.name, kind=ps.kind) for ps in e.params],
            conditions=[
                ConditionInfo(text=c.text, enforced=c.enforced) for c in e.conditions
            ],
        )
        for e in entries(section)
    ]


@app.post("/eval", response_model=EvalResponse)
def eval_entry(req: EvalRequest):
    try:
        entry = get_entry(req.entry)
        params = _request_params(entry, req.params)
        value = evaluate_entry(entry.id, params, relaxed=req.relaxed)
        coerced = coerce_params(entry, params)
    except UnknownEntry as exc:
        raise HTTPException(404, detail=f"unknown entry {exc.entry_id!r}") from None
    except DomainError as exc:
        raise HTTPException(422, detail=_domain_detail(exc)) from None
    violated = [c.text for c in check_conditions(entry, coerced)]
    advisories = [
        c.text
        for c in check_conditions(entry, coerced, enforced_only=False)
        if not c.enforced
    ]
    resp = EvalResponse(
        entry=entry.id,
        value=_pair(value),
        conditions_ok=not violated,
        violated=violated,
        advisories=advisories,
    )
    if req.oracle:
        oracle, diff, note = _oracle_value(entry, coerced, req.oracle_tol, value)
        resp.oracle = oracle
        resp.difference = diff
        resp.note = note
    return resp


def _oracle_value(entry, params, oracle_tol, closed):
    decay = entry.decay_rate(params)
    if not decay > 0.0:
        return None, None, "oracle unavailable: decay rate not positive"
    try:
        f = entry.integrand(params)
        result = integrate_semi_infinite(
            f,
            decay,
            oracle_tol,
            osc_freq=entry.osc_freq(params),
            endpoint_power=entry.endpoint_power(params),
        )
    except (IntegrandDomainError, NoConvergence) as exc:
        return None, None, f"oracle unavailable: {exc}"
    return _pair(result.value), abs(closed - result.value), ""


@app.post("/expand", response_model=ExpandResponse)
def expand(req: ExpandRequest):
    try:
        form = expand_power(req.kind, req.exponent, req.frequency)
    except (ValueError, DomainError) as exc:
        raise HTTPException(422, detail=str(exc)) from None
    resp = ExpandResponse(
        rendered=render(form),
        terms=[
            TermInfo(kind=t.kind.value, coefficient=t.coefficient, frequency=t.frequency)
            for t in form.terms
        ],
    )
    if req.laplace_s is not None:
        try:
            s = _coerce_value(req.laplace_s)
            resp.laplace = _pair(laplace_spectral(form, s))
        except DomainError as exc:
            raise HTTPException(422, detail=_domain_detail(exc)) from None
    return resp


@app.post("/verify", response_model=VerifyResponse)
def verify(req: VerifyRequest):
    try:
        if req.target == "all":
            reports = verify_all(tol=req.tol, relaxed=req.relaxed, section=req.section)
        else:
            entry = get_entry(req.target)
            grid = None
            spec = None
            if req.grid:
                names = tuple(ps.name for ps in entry.params)
                grid = parse_grid(req.grid, names)
                spec = req.grid
            reports = (
                verify_entry(
                    entry.id, grid=grid, tol=req.tol, relaxed=req.relaxed,
                    grid_spec=spec,
                ),
            )
    except UnknownEntry as exc:
        raise HTTPException(404, detail=f"unknown entry {exc.entry_id!r}") from None
    except DomainError as exc:
        raise HTTPException(422, detail=_domain_detail(exc)) from None
    return VerifyResponse(
        ok=all(r.ok for r in reports),
        reports=[
            ReportSummary(
                entry=r.entry_id,
                passes=r.pass_count,
                fails=r.fail_count,
                skips=r.skip_count,
                max_rel_err=r.max_rel_err,
            )
            for r in reports
        ],
        tables=[render_report(r) for r in reports],
        jsonl="".join(serialize_report(r) for r in reports),
    )
