"""Command-line front end.

Subcommands: list, eval, expand, verify, serve. Everything runs in-process
by default; pass --server URL to talk to a running service instead. Exit
codes are a stable contract: 0 success, 2 domain violation or bad usage,
3 unknown entry, 4 I/O failure. A failing verification sweep exits 1.
"""

import argparse
import sys

from ._version import __version__
from .catalog import (
    check_conditions,
    coerce_params,
    entries,
    evaluate_entry,
    get_entry,
)
from .errors import DomainError, UnknownEntry
from .grids import canonical_name, parse_grid, parse_scalar
from .laplace import laplace_spectral
from .quadrature import integrate_semi_infinite
from .spectral import expand_power, render
from .verify import render_report, serialize_report, verify_all, verify_entry


def _fmt_value(z: complex) -> str:
    if z.imag == 0.0:
        return repr(z.real)
    return str(z)


def _parse_param_tokens(tokens):
    out = {}
    for tok in tokens:
        name, eq, value = tok.partition("=")
        if not eq or not name:
            raise DomainError(f"expected name=value, got {tok!r}")
        out[name.strip()] = value.strip()
    return out


# ---------------------------------------------------------------------------
# remote plumbing

def _remote(server: str, fn) -> int:
    import httpx

    try:
        with httpx.Client(base_url=server.rstrip("/"), timeout=300.0) as client:
            return fn(client)
    except httpx.HTTPError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4


def _remote_error(resp) -> int:
    try:
        detail = resp.json().get("detail", resp.text)
    except ValueError:
        detail = resp.text
    if isinstance(detail, dict):
        detail = detail.get("message", str(detail))
    print(f"error: {detail}", file=sys.stderr)
    if resp.status_code == 404:
        return 3
    if resp.status_code == 422:
        return 2
    return 4


# ---------------------------------------------------------------------------
# subcommands

def _entry_rows_local(section):
    rows = []
    for e in entries(section):
        schema = ", ".join(
            ps.name if ps.kind == "complex" else f"{ps.name}:{ps.kind}"
            for ps in e.params
        )
        conds = "; ".join(c.text for c in e.conditions) or "none"
        rows.append((e.id, e.equation, schema or "none", conds))
    return rows


def _entry_rows_remote(client, section):
    params = {} if section is None else {"section": section}
    resp = client.get("/entries", params=params)
    if resp.status_code != 200:
        return None, _remote_error(resp)
    rows = []
    for e in resp.json():
        schema = ", ".join(
            p["name"] if p["kind"] == "complex" else f"{p['name']}:{p['kind']}"
            for p in e["params"]
        )
        conds = "; ".join(c["text"] for c in e["conditions"]) or "none"
        rows.append((e["id"], e["equation"], schema or "none", conds))
    return rows, 0


def _print_rows(rows) -> int:
    if not rows:
        return 0
    widths = [max(len(r[i]) for r in rows) for i in range(3)]
    for r in rows:
        print(
            f"{r[0]:<{widths[0]}}  {r[1]:<{widths[1]}}  "
            f"{r[2]:<{widths[2]}}  {r[3]}"
        )
    return 0


def cmd_list(args) -> int:
    if args.server:

        def go(client):
            rows, code = _entry_rows_remote(client, args.section)
            return code if rows is None else _print_rows(rows)

        return _remote(args.server, go)
    return _print_rows(_entry_rows_local(args.section))


def _print_eval(value, violated, advisories, oracle=None, difference=None, note=""):
    print(_fmt_value(value))
    if violated:
        print("conditions violated: " + "; ".join(violated))
    else:
        print("conditions: ok")
    for text in advisories:
        print(f"advisory: {text}")
    if oracle is not None:
        print(f"oracle: {_fmt_value(oracle)}")
        print(f"difference: {format(difference, '.17g')}")
    elif note:
        print(note)
    return 0


def cmd_eval(args) -> int:
    raw = _parse_param_tokens(args.params)
    if args.server:
        payload = {
            "entry": args.entry,
            "params": raw,
            "relaxed": args.relaxed,
            "oracle": args.oracle,
            "oracle_tol": args.tol,
        }

        def go(client):
            resp = client.post("/eval", json=payload)
            if resp.status_code != 200:
                return _remote_error(resp)
            body = resp.json()
            oracle = body.get("oracle")
            return _print_eval(
                complex(*body["value"]),
                body.get("violated", []),
                body.get("advisories", []),
                oracle=None if oracle is None else complex(*oracle),
                difference=body.get("difference"),
                note=body.get("note", ""),
            )

        return _remote(args.server, go)
    entry = get_entry(args.entry)
    names = tuple(ps.name for ps in entry.params)
    params = {canonical_name(k, names): parse_scalar(v) for k, v in raw.items()}
    value = evaluate_entry(entry.id, params, relaxed=args.relaxed)
    coerced = coerce_params(entry, params)
    violated = [c.text for c in check_conditions(entry, coerced)]
    advisories = [
        c.text
        for c in check_conditions(entry, coerced, enforced_only=False)
        if not c.enforced
    ]
    oracle = difference = None
    note = ""
    if args.oracle:
        decay = entry.decay_rate(coerced)
        if not decay > 0.0:
            note = "oracle unavailable: decay rate not positive"
        else:
            result = integrate_semi_infinite(
                entry.integrand(coerced),
                decay,
                args.tol,
                osc_freq=entry.osc_freq(coerced),
                endpoint_power=entry.endpoint_power(coerced),
            )
            oracle = result.value
            difference = abs(value - oracle)
    return _print_eval(value, violated, advisories, oracle, difference, note)


def cmd_expand(args) -> int:
    form = expand_power(args.kind, args.exponent, args.frequency)
    print(render(form))
    if args.laplace is not None:
        spec = args.laplace
        if spec.startswith("s="):
            spec = spec[2:]
        s = parse_scalar(spec)
        print(_fmt_value(complex(laplace_spectral(form, s))))
    return 0


def cmd_verify(args) -> int:
    if args.server:
        payload = {
            "target": args.target,
            "grid": args.grid,
            "tol": args.tol,
            "relaxed": args.relaxed,
            "section": args.section,
        }

        def go(client):
            resp = client.post("/verify", json=payload)
            if resp.status_code != 200:
                return _remote_error(resp)
            body = resp.json()
            for table in body["tables"]:
                print(table, end="")
            for rep in body["reports"]:
                if rep["skips"]:
                    print(
                        f"warning: {rep['entry']}: {rep['skips']} point(s) skipped",
                        file=sys.stderr,
                    )
            if args.out:
                _write_text(args.out, body["jsonl"])
            return 0 if body["ok"] else 1

        return _remote(args.server, go)
    if args.target == "all":
        if args.grid:
            raise DomainError("--grid applies to a single entry, not 'all'")
        reports = verify_all(tol=args.tol, relaxed=args.relaxed, section=args.section)
    else:
        entry = get_entry(args.target)
        grid = None
        spec = None
        if args.grid:
            names = tuple(ps.name for ps in entry.params)
            grid = parse_grid(args.grid, names)
            spec = args.grid
        reports = (
            verify_entry(
                entry.id, grid=grid, tol=args.tol, relaxed=args.relaxed, grid_spec=spec
            ),
        )
    for report in reports:
        print(render_report(report), end="")
        if report.skip_count:
            print(
                f"warning: {report.entry_id}: {report.skip_count} point(s) skipped",
                file=sys.stderr,
            )
    if args.out:
        _write_text(args.out, "".join(serialize_report(r) for r in reports))
    return 0 if all(r.ok for r in reports) else 1


def _write_text(path, text):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def cmd_serve(args) -> int:
    import uvicorn

    from .service import app

    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return 0


# ---------------------------------------------------------------------------

def _build_parser():
    parser = argparse.ArgumentParser(
        prog="hyperlap",
        description="closed-form hyperbolic/trigonometric transforms with "
        "a quadrature oracle",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("list", help="show catalog entries")
    p.add_argument("--section", type=int, default=None)
    p.add_argument("--server", default=None, help="service base URL")
    p.set_defaults(func=cmd_list)

    p = sub.add_parser("eval", help="evaluate a catalog entry")
    p.add_argument("entry")
    p.add_argument("params", nargs="*", help="name=value pairs")
    p.add_argument("--oracle", action="store_true", help="also run the quadrature")
    p.add_argument("--relaxed", action="store_true", help="skip condition enforcement")
    p.add_argument("--tol", type=float, default=1e-10, help="oracle tolerance")
    p.add_argument("--server", default=None)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("expand", help="power-reduce a trig/hyperbolic power")
    p.add_argument("kind", choices=["sin", "cos", "sinh", "cosh"])
    p.add_argument("exponent", type=int)
    p.add_argument("frequency", type=float, nargs="?", default=1.0)
    p.add_argument("--laplace", default=None, metavar="s=VALUE")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("verify", help="closed form vs oracle sweep")
    p.add_argument("target", help="entry id or 'all'")
    p.add_argument("--grid", default=None, help='e.g. "s=2:6:5;ν=0.5,1,1.5"')
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--out", default=None, help="write JSONL report here")
    p.add_argument("--relaxed", action="store_true")
    p.add_argument("--section", type=int, default=None, help="with 'all'")
    p.add_argument("--server", default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UnknownEntry as exc:
        print(f"error: unknown entry {exc.entry_id!r}", file=sys.stderr)
        return 3
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
