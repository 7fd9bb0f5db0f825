"""Command-line client for the snacap service.

The CLI only speaks HTTP: it reads local files into request payloads, calls
the service and writes the response to ``--out`` or stdout.  Without
``--server`` it mounts the service in-process, so no daemon is needed for
local use.  Exit codes: 0 success, 1 validation/processing failure, 2 usage
errors.
"""

from __future__ import annotations

import argparse
import asyncio
import json
import sys
from pathlib import Path
from typing import Any, Optional

import httpx

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


def _call(
    server: Optional[str],
    method: str,
    path: str,
    body: Optional[dict] = None,
    params: Optional[dict] = None,
) -> httpx.Response:
    if server:
        with httpx.Client(base_url=server, timeout=120.0) as client:
            return client.request(method, path, json=body, params=params)

    from .service.app import app  # deferred: only needed in-process

    async def go() -> httpx.Response:
        transport = httpx.ASGITransport(app=app)
        async with httpx.AsyncClient(
            transport=transport, base_url="http://snacap.internal", timeout=None
        ) as client:
            return await client.request(method, path, json=body, params=params)

    return asyncio.run(go())


def _emit(response: httpx.Response, out: Optional[str]) -> int:
    if response.status_code != 200:
        try:
            detail = response.json()
        except ValueError:
            detail = {"detail": response.text}
        print(f"error: {detail.get('detail', response.text)}", file=sys.stderr)
        for diag in detail.get("diagnostics", []):
            print(f"  {diag['severity']}: {diag['path']}: {diag['message']}", file=sys.stderr)
        return EXIT_FAILURE
    if out:
        Path(out).write_bytes(response.content)
    else:
        sys.stdout.write(response.text)
        if not response.text.endswith("\n"):
            sys.stdout.write("\n")
    return EXIT_OK


def _read_catalog(path: Optional[str]) -> Optional[dict]:
    if path is None:
        return None
    try:
        return json.loads(Path(path).read_text("utf-8"))
    except (OSError, ValueError) as exc:
        raise SystemExit(f"error: cannot read catalog {path}: {exc}")


def _read_text(path: str, what: str) -> str:
    try:
        return Path(path).read_text("utf-8")
    except OSError as exc:
        raise SystemExit(f"error: cannot read {what} {path}: {exc}")


def _citation_records(path: str) -> list[dict[str, Any]]:
    from .scientometrics import load_citations_csv

    try:
        records = load_citations_csv(_read_text(path, "citations file"))
    except ValueError as exc:
        raise SystemExit(f"error: {exc}")
    return [
        {"citing_year": r.citing_year, "cited_years": list(r.cited_years)} for r in records
    ]


def _int_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="snacap",
        description="Score, rank and visualize SNA software capability; run graph and citation analytics.",
    )
    parser.add_argument("--server", help="base URL of a running service (default: in-process)")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, formats: bool = True) -> None:
        if formats:
            p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--out", "-o", help="write output to this file instead of stdout")

    p = sub.add_parser("score", help="score every catalog entry")
    p.add_argument("--catalog", help="catalog JSON (default: bundled dataset)")
    p.add_argument("--rank", action="store_true", help="order output by normalized C4")
    common(p)

    p = sub.add_parser("rank", help="rank fully assessed tools by C4")
    p.add_argument("--catalog")
    p.add_argument("--license", choices=("all", "open_source", "proprietary"), default="all")
    common(p)

    p = sub.add_parser("top", help="top-k tools on one dimension")
    p.add_argument("--catalog")
    p.add_argument("--dimension", required=True)
    p.add_argument("-k", type=int, default=5)
    common(p)

    p = sub.add_parser("pareto", help="two-dimension Pareto front")
    p.add_argument("--catalog")
    p.add_argument("--x", required=True, help="dimension on the x axis")
    p.add_argument("--y", required=True, help="dimension on the y axis")
    common(p)

    p = sub.add_parser("dist", help="per-dimension score distributions")
    p.add_argument("--catalog")
    common(p)

    p = sub.add_parser("radar", help="render a radar chart as SVG")
    p.add_argument("--catalog")
    p.add_argument("--tool", help="chart a catalog tool by name")
    p.add_argument("--scores", help="chart explicit scores: value,volume,variety,visual")
    p.add_argument("--size", type=int, default=500)
    p.add_argument("--label")
    p.add_argument("--out", "-o")

    p = sub.add_parser("rpys", help="reference publication year spectroscopy")
    p.add_argument("--citations", required=True, help="CSV of citing_year,cited_year pairs")
    p.add_argument("--year-range", nargs=2, type=int, metavar=("LO", "HI"))
    common(p)

    p = sub.add_parser("multirpys", help="per-citing-year RPYS heat map grid")
    p.add_argument("--citations", required=True)
    p.add_argument("--citing", nargs=2, type=int, required=True, metavar=("LO", "HI"))
    p.add_argument("--referenced", nargs=2, type=int, required=True, metavar=("LO", "HI"))
    common(p)

    graph = sub.add_parser("graph", help="graph generation and analytics")
    gsub = graph.add_subparsers(dest="graph_command", required=True)

    p = gsub.add_parser("gen", help="generate a random graph")
    p.add_argument("--model", required=True,
                   choices=("er_gnm", "gilbert_gnp", "watts_strogatz", "barabasi_albert"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--p", type=float)
    p.add_argument("--k", type=int)
    p.add_argument("--rewire", type=float)
    p.add_argument("--m0", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("csv", "json"), default="csv",
                   help="csv = plain edge list")
    p.add_argument("--out", "-o")

    p = gsub.add_parser("metrics", help="structural metrics report")
    p.add_argument("--edges", required=True, help="edge-list file")
    common(p)

    p = gsub.add_parser("centrality", help="node centrality scores")
    p.add_argument("--edges", required=True)
    p.add_argument("--measure", required=True,
                   choices=("degree", "closeness", "betweenness", "eigenvector", "pagerank"))
    p.add_argument("--directed", action="store_true", help="treat edges as directed (pagerank)")
    p.add_argument("--damping", type=float, default=0.85)
    common(p)

    p = gsub.add_parser("community", help="community structure")
    p.add_argument("--edges", required=True)
    p.add_argument("--method", required=True,
                   choices=("greedy_modularity", "girvan_newman", "girvan_newman_best",
                            "k_core", "quasi_clique"))
    p.add_argument("--target", type=int, help="component target for girvan_newman")
    p.add_argument("--gamma", type=float, help="density bound for quasi_clique")
    common(p)

    p = gsub.add_parser("diffuse", help="run a diffusion model")
    p.add_argument("--edges", required=True)
    p.add_argument("--model", required=True, choices=("sis", "sir", "sirs", "icm", "ltm"))
    p.add_argument("--seeds", type=_int_list, required=True, help="comma-separated node ids")
    p.add_argument("--steps", type=int, default=50)
    p.add_argument("--rng", type=int, default=0)
    p.add_argument("--beta", type=float)
    p.add_argument("--mu", type=float)
    p.add_argument("--xi", type=float)
    p.add_argument("--p", type=float)
    p.add_argument("--threshold", type=float)
    common(p)

    p = sub.add_parser("validate", help="validate a catalog file")
    p.add_argument("--catalog", required=True)
    p.add_argument("--out", "-o")

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)

    if args.command == "serve":
        import uvicorn

        uvicorn.run("snacap.service.app:app", host=args.host, port=args.port)
        return EXIT_OK

    if args.command == "score":
        body = {"catalog": _read_catalog(args.catalog), "rank": args.rank}
        response = _call(args.server, "POST", "/score", body, {"format": args.format})
        return _emit(response, args.out)

    if args.command == "rank":
        body = {"catalog": _read_catalog(args.catalog), "license": args.license}
        response = _call(args.server, "POST", "/rank", body, {"format": args.format})
        return _emit(response, args.out)

    if args.command == "top":
        body = {"catalog": _read_catalog(args.catalog), "dimension": args.dimension, "k": args.k}
        response = _call(args.server, "POST", "/top", body, {"format": args.format})
        return _emit(response, args.out)

    if args.command == "pareto":
        body = {"catalog": _read_catalog(args.catalog), "axis_x": args.x, "axis_y": args.y}
        response = _call(args.server, "POST", "/pareto", body, {"format": args.format})
        return _emit(response, args.out)

    if args.command == "dist":
        body = {"catalog": _read_catalog(args.catalog)}
        response = _call(args.server, "POST", "/dist", body, {"format": args.format})
        return _emit(response, args.out)

    if args.command == "radar":
        if (args.tool is None) == (args.scores is None):
            print("error: provide exactly one of --tool or --scores", file=sys.stderr)
            return EXIT_USAGE
        body: dict[str, Any] = {
            "catalog": _read_catalog(args.catalog),
            "size": args.size,
            "label": args.label,
        }
        if args.tool:
            body["tool"] = args.tool
        else:
            parts = [float(x) for x in args.scores.split(",")]
            if len(parts) != 4:
                print("error: --scores needs four values: value,volume,variety,visual", file=sys.stderr)
                return EXIT_USAGE
            body["scores"] = dict(zip(("d_value", "d_volume", "d_variety", "d_visual"), parts))
        response = _call(args.server, "POST", "/radar", body)
        return _emit(response, args.out)

    if args.command == "rpys":
        body = {"records": _citation_records(args.citations)}
        if args.year_range:
            body["year_range"] = list(args.year_range)
        response = _call(args.server, "POST", "/rpys", body, {"format": args.format})
        return _emit(response, args.out)

    if args.command == "multirpys":
        body = {
            "records": _citation_records(args.citations),
            "citing_range": list(args.citing),
            "referenced_range": list(args.referenced),
        }
        response = _call(args.server, "POST", "/multirpys", body, {"format": args.format})
        return _emit(response, args.out)

    if args.command == "graph":
        return _graph_command(args)

    if args.command == "validate":
        body = {"catalog": json.loads(_read_text(args.catalog, "catalog"))}
        response = _call(args.server, "POST", "/validate", body)
        if response.status_code != 200:
            return _emit(response, None)
        result = response.json()
        for diag in result["diagnostics"]:
            print(f"{diag['severity']}: {diag['path']}: {diag['message']}", file=sys.stderr)
        if args.out:
            Path(args.out).write_bytes(response.content)
        print("valid" if result["valid"] else "invalid")
        return EXIT_OK if result["valid"] else EXIT_FAILURE

    raise AssertionError(f"unhandled command {args.command}")  # pragma: no cover


def _graph_command(args: argparse.Namespace) -> int:
    if args.graph_command == "gen":
        body = {
            "model": args.model,
            "seed": args.seed,
            "n": args.n,
            "m": args.m,
            "p": args.p,
            "k": args.k,
            "rewire": args.rewire,
            "m0": args.m0,
        }
        response = _call(args.server, "POST", "/graph/generate", body, {"format": args.format})
        return _emit(response, args.out)

    graph_payload = {"edge_list": _read_text(args.edges, "edge list"),
                     "directed": getattr(args, "directed", False)}

    if args.graph_command == "metrics":
        body = {"graph": graph_payload}
        response = _call(args.server, "POST", "/graph/metrics", body, {"format": args.format})
    elif args.graph_command == "centrality":
        body = {"graph": graph_payload, "measure": args.measure, "damping": args.damping}
        response = _call(args.server, "POST", "/graph/centrality", body, {"format": args.format})
    elif args.graph_command == "community":
        body = {
            "graph": graph_payload,
            "method": args.method,
            "target": args.target,
            "gamma": args.gamma,
        }
        response = _call(args.server, "POST", "/graph/community", body, {"format": args.format})
    elif args.graph_command == "diffuse":
        body = {
            "graph": graph_payload,
            "model": args.model,
            "seeds": args.seeds,
            "steps": args.steps,
            "rng_seed": args.rng,
            "beta": args.beta,
            "mu": args.mu,
            "xi": args.xi,
            "p": args.p,
            "threshold": args.threshold,
        }
        response = _call(args.server, "POST", "/graph/diffuse", body, {"format": args.format})
    else:  # pragma: no cover
        raise AssertionError(f"unhandled graph command {args.graph_command}")
    return _emit(response, args.out)


if __name__ == "__main__":
    sys.exit(main())
