"""Command line front end.

Every subcommand is a thin client of the HTTP service: by default the
request is dispatched in process (no socket, no server to start), and
--url points the same verbs at a remote instance started with `serve`.
Exit codes: 0 success, 1 bad input or unreachable service, 2 reference
tables failed to reproduce.
"""
from __future__ import annotations

import argparse
import asyncio
import json
import sys
from pathlib import Path
from types import SimpleNamespace

import httpx

from .nomenclature import parse_names_text
from .output import emit_csv
from .reference import INDEX_COLUMNS


class CliError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors, but this tool reserves 2 for a
    # failed table reproduction; bad invocations are input errors (1)
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


# ---------------------------------------------------------------------------
# transport


async def _in_process(method, path, payload):
    from .service.app import app

    transport = httpx.ASGITransport(app=app)
    client = httpx.AsyncClient(
        transport=transport, base_url="http://service.local", timeout=None
    )
    async with client:
        return await client.request(method, path, json=payload)


def _error_detail(resp):
    try:
        detail = resp.json()["detail"]
    except (ValueError, KeyError):
        return resp.text[:200]
    if isinstance(detail, str):
        return detail
    # pydantic validation errors arrive as a list of dicts
    return "; ".join(str(d.get("msg", d)) for d in detail)


def _request(args, method, path, payload=None):
    if args.url:
        try:
            with httpx.Client(base_url=args.url.rstrip("/"), timeout=600.0) as client:
                resp = client.request(method, path, json=payload)
        except httpx.HTTPError as exc:
            raise CliError(f"cannot reach {args.url}: {exc}") from exc
    else:
        resp = asyncio.run(_in_process(method, path, payload))
    if resp.status_code in (400, 422):
        raise CliError(_error_detail(resp))
    if resp.status_code != 200:
        raise CliError(f"service error {resp.status_code}: {resp.text[:200]}")
    return resp.json()


# ---------------------------------------------------------------------------
# shared argument handling


def _read_file(path):
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}") from exc


def _source_payload(args):
    payload = {}
    if args.edges:
        payload["edge_lists"] = [_read_file(p) for p in args.edges]
    names = list(args.name or [])
    if args.names:
        names.extend(parse_names_text(_read_file(args.names)))
    if names:
        payload["names"] = names
    if args.alkanes is not None:
        payload["alkanes"] = args.alkanes
    if args.cyclic is not None:
        payload["cyclic"] = args.cyclic
    if args.complete:
        payload["complete"] = True
    if not payload:
        raise CliError(
            "no graphs given; use --edges, --name, --names, --alkanes or --cyclic"
        )
    return payload


def _write(args, text):
    if args.out:
        try:
            Path(args.out).write_text(text, encoding="utf-8")
        except OSError as exc:
            raise CliError(f"cannot write {args.out}: {exc}") from exc
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


def _rows_csv(rows, digits):
    return emit_csv([SimpleNamespace(**r) for r in rows], digits=digits)


def _json_text(data):
    return json.dumps(data, indent=2) + "\n"


# ---------------------------------------------------------------------------
# subcommands


def _cmd_indices(args):
    data = _request(args, "POST", "/api/indices", _source_payload(args))
    if args.format == "json":
        _write(args, _json_text(data))
    else:
        _write(args, _rows_csv(data["rows"], args.digits))
    return 0


def _cmd_enumerate(args):
    family = "alkanes" if args.alkanes is not None else "cyclic"
    n = args.alkanes if args.alkanes is not None else args.cyclic
    payload = {"family": family, "n": n, "complete": args.complete}
    data = _request(args, "POST", "/api/enumerate", payload)
    if args.format == "json":
        _write(args, _json_text(data))
    else:
        _write(args, _rows_csv(data["rows"], args.digits))
    return 0


def _cmd_parse_name(args):
    names = list(args.name_args)
    if args.names:
        names.extend(parse_names_text(_read_file(args.names)))
    if not names:
        raise CliError("no names given")
    data = _request(args, "POST", "/api/parse-name", {"names": names})
    if args.format == "json":
        _write(args, _json_text(data))
        return 0 if all(r["ok"] for r in data["results"]) else 1
    lines = []
    failed = False
    for r in data["results"]:
        if r["ok"]:
            lines.append(f"ok\t{r['name']}\tn={r['n']}\tm={r['m']}\t{r['degrees']}")
            if args.show_edges:
                lines.append(r["edge_list"].rstrip("\n"))
        else:
            failed = True
            lines.append(f"fail\t{r['name']}\t{r['error']}")
    _write(args, "\n".join(lines) + "\n")
    return 1 if failed else 0


def _cmd_rank(args):
    payload = _source_payload(args)
    payload["index"] = args.index
    data = _request(args, "POST", "/api/rank", payload)
    if args.format == "json":
        _write(args, _json_text(data))
        return 0
    order = sorted(range(len(data["rows"])), key=lambda i: (data["positions"][i], i))
    lines = [f"position,name,{args.index}"]
    for i in order:
        row = data["rows"][i]
        name = row["name"].replace('"', '""')
        value = f"{row[args.index]:.{args.digits}f}"
        lines.append(f'{data["positions"][i]},"{name}",{value}')
    _write(args, "\n".join(lines) + "\n")
    return 0


def _cmd_correlate(args):
    data = _request(args, "POST", "/api/correlate", _source_payload(args))
    if args.format == "json":
        _write(args, _json_text(data))
        return 0
    lines = ["x,y,r_squared"]
    for p in data["pairs"]:
        lines.append(f"{p['x']},{p['y']},{p['r_squared']:.{args.digits}f}")
    _write(args, "\n".join(lines) + "\n")
    return 0


def _cmd_degeneracy(args):
    payload = _source_payload(args)
    payload["index"] = args.index
    payload["tol"] = args.tol
    data = _request(args, "POST", "/api/degeneracy", payload)
    if args.format == "json":
        _write(args, _json_text(data))
        return 0
    groups = data["groups"]
    if not groups:
        _write(args, f"no {args.index} ties\n")
        return 0
    lines = []
    for g in groups:
        value = f"{g['value']:.{args.digits}f}"
        lines.append(f"{args.index}={value}: " + " | ".join(g["names"]))
    _write(args, "\n".join(lines) + "\n")
    return 0


def _cmd_cospectral(args):
    payload = _source_payload(args)
    payload["method"] = args.method
    data = _request(args, "POST", "/api/cospectral", payload)
    if args.format == "json":
        _write(args, _json_text(data))
        return 0
    if not data["pairs"]:
        _write(args, "no cospectral pairs\n")
        return 0
    lines = [" | ".join(p["names"]) for p in data["pairs"]]
    _write(args, "\n".join(lines) + "\n")
    return 0


def _cmd_plot(args):
    payload = _source_payload(args)
    payload["x"] = args.x
    payload["y"] = args.y
    if args.title:
        payload["title"] = args.title
    data = _request(args, "POST", "/api/plot", payload)
    _write(args, data["svg"])
    return 0


def _cmd_reproduce(args):
    try:
        tables = [int(t) for t in args.tables.split(",") if t.strip()]
    except ValueError:
        raise CliError(f"bad --tables value: {args.tables!r}")
    data = _request(args, "POST", "/api/reproduce", {"tables": tables})
    if args.format == "json":
        _write(args, _json_text(data))
    else:
        _write(args, data["text"] + "\n")
    return 0 if data["ok"] else 2


def _cmd_ron(args):
    payload = {"positive_only": args.positive_only}
    data = _request(args, "POST", "/api/ron-regression", payload)
    if args.format == "json":
        _write(args, _json_text(data))
        return 0
    lines = ["index,slope,intercept,r_squared,count"]
    for index in INDEX_COLUMNS:
        fit = data["fits"][index]
        lines.append(
            f"{index},{fit['slope']:.{args.digits}f},"
            f"{fit['intercept']:.{args.digits}f},"
            f"{fit['r_squared']:.{args.digits}f},{fit['count']}"
        )
    _write(args, "\n".join(lines) + "\n")
    return 0


def _cmd_serve(args):
    import uvicorn

    uvicorn.run("chemindex.service.app:app", host=args.host, port=args.port)
    return 0


# ---------------------------------------------------------------------------
# parser


def _build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--digits", type=int, default=5, help="decimals in numeric output (default 5)"
    )
    common.add_argument(
        "--format",
        choices=("csv", "json"),
        default="csv",
        help="csv/plain text (default) or the raw service response as json",
    )
    common.add_argument("--out", metavar="FILE", help="write output here, not stdout")
    common.add_argument(
        "--url",
        metavar="URL",
        default=None,
        help="talk to a running service instead of computing in process",
    )

    source = argparse.ArgumentParser(add_help=False)
    source.add_argument(
        "--edges",
        action="append",
        metavar="FILE",
        help="edge list file ('n m' header, one edge per line, # comments); repeatable",
    )
    source.add_argument(
        "--name", action="append", metavar="ALKANE", help="alkane name; repeatable"
    )
    source.add_argument(
        "--names", metavar="FILE", help="file of alkane names, one per line"
    )
    source.add_argument(
        "--alkanes", type=int, metavar="N", help="all alkane trees on N carbons"
    )
    source.add_argument(
        "--cyclic",
        type=int,
        metavar="N",
        help="the cyclic chemical family on N vertices",
    )
    source.add_argument(
        "--complete",
        action="store_true",
        help="with --cyclic: include graphs the bundled tables skip",
    )

    parser = _Parser(
        prog="chemindex",
        description="Spectral and distance-based topological indices "
        "for small chemical graphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "indices", parents=[common, source], help="index table for given graphs"
    )
    p.set_defaults(handler=_cmd_indices)

    p = sub.add_parser(
        "enumerate",
        parents=[common],
        help="index table for a whole enumerated family",
    )
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--alkanes", type=int, metavar="N")
    group.add_argument("--cyclic", type=int, metavar="N")
    p.add_argument("--complete", action="store_true")
    p.set_defaults(handler=_cmd_enumerate)

    p = sub.add_parser(
        "parse-name", parents=[common], help="parse alkane names into graphs"
    )
    p.add_argument("name_args", nargs="*", metavar="NAME")
    p.add_argument("--names", metavar="FILE", help="file of names, one per line")
    p.add_argument(
        "--show-edges", action="store_true", help="print each parsed edge list"
    )
    p.set_defaults(handler=_cmd_parse_name)

    p = sub.add_parser(
        "rank", parents=[common, source], help="order graphs by one index"
    )
    p.add_argument("--index", choices=INDEX_COLUMNS, required=True)
    p.set_defaults(handler=_cmd_rank)

    p = sub.add_parser(
        "correlate",
        parents=[common, source],
        help="r squared for every index pair over the given graphs",
    )
    p.set_defaults(handler=_cmd_correlate)

    p = sub.add_parser(
        "degeneracy",
        parents=[common, source],
        help="groups of graphs one index cannot tell apart",
    )
    p.add_argument("--index", choices=INDEX_COLUMNS, required=True)
    p.add_argument("--tol", type=float, default=1e-9)
    p.set_defaults(handler=_cmd_degeneracy)

    p = sub.add_parser(
        "cospectral",
        parents=[common, source],
        help="pairs of graphs with identical adjacency spectra",
    )
    p.add_argument("--method", choices=("exact", "float"), default="exact")
    p.set_defaults(handler=_cmd_cospectral)

    p = sub.add_parser(
        "plot", parents=[common, source], help="SVG scatter of two indices"
    )
    p.add_argument("--x", choices=INDEX_COLUMNS, required=True)
    p.add_argument("--y", choices=INDEX_COLUMNS, required=True)
    p.add_argument("--title", default="")
    p.set_defaults(handler=_cmd_plot)

    p = sub.add_parser(
        "reproduce",
        parents=[common],
        help="recompute the bundled reference tables and report deviations",
    )
    p.add_argument(
        "--tables",
        default="1,2,3,4,5",
        help="comma separated table numbers (default all five)",
    )
    p.set_defaults(handler=_cmd_reproduce)

    p = sub.add_parser(
        "ron",
        parents=[common],
        help="least squares fit of octane ratings against each index",
    )
    p.add_argument(
        "--positive-only",
        action="store_true",
        help="drop the extrapolated negative rating",
    )
    p.set_defaults(handler=_cmd_ron)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(handler=_cmd_serve, url=None)

    return parser


def main(argv=None):
    args = _build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
