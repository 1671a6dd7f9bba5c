"""Command-line front end; a thin client over the HTTP service.

Every subcommand builds a request payload, sends it through the service
(in-process ASGI by default, a remote base URL with --server), and renders
the JSON response.  No algebra happens here.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import asyncio
import json
import sys

import httpx

from .fppoly import is_prime

USAGE_EXIT = 2


class ServiceClient:
    """Sends requests either in-process or to a remote server."""

    def __init__(self, server: str | None = None):
        self.server = server

    def request(self, method: str, path: str, payload: dict | None = None):
        if self.server is None:
            return asyncio.run(self._in_process(method, path, payload))
        with httpx.Client(base_url=self.server, timeout=120.0) as client:
            response = client.request(method, path, json=payload)
            return response.status_code, response.json()

    async def _in_process(self, method: str, path: str, payload: dict | None):
        from .service import create_app  # deferred so --help stays snappy

        transport = httpx.ASGITransport(app=create_app())
        async with httpx.AsyncClient(
            transport=transport, base_url="http://fhindex.internal", timeout=None
        ) as client:
            response = await client.request(method, path, json=payload)
            return response.status_code, response.json()


def _render_error(status: int, body: dict) -> str:
    detail = body.get("detail", body)
    if isinstance(detail, list):  # validation errors carry a list of locations
        parts = []
        for item in detail:
            loc = ".".join(str(piece) for piece in item.get("loc", []) if piece != "body")
            parts.append(f"{loc}: {item.get('msg', item)}" if loc else str(item.get("msg", item)))
        detail = "; ".join(parts)
    return f"error ({status}): {detail}"


def _emit_json(body: dict) -> int:
    print(json.dumps(body, indent=2, sort_keys=True))
    return 0


def _check_prime(parser: argparse.ArgumentParser, values) -> None:
    for p in values:
        if not is_prime(p):
            parser.error(f"primality check failed: {p} is composite")


def _call(args, path: str, payload: dict):
    client = ServiceClient(args.server)
    status, body = client.request("POST", path, payload)
    if status != 200:
        print(_render_error(status, body), file=sys.stderr)
        return None
    return body


# --- subcommand handlers ----------------------------------------------------


def _cmd_classes(parser, args) -> int:
    _check_prime(parser, [args.p])
    payload = {"field": args.field, "p": args.p, "n": args.n, "cap": args.cap}
    body = _call(args, "/v1/classes", payload)
    if body is None:
        return USAGE_EXIT
    if args.format == "json":
        return _emit_json(body)
    lines = [
        f"ring: {body['ring']}",
        f"class kind: {body['class_kind']} (cap {body['cap']})",
        f"total:   {body['total_text']}",
        f"inverse: {body['inverse_text']}",
    ]
    if body.get("note"):
        lines.append(f"note: {body['note']}")
    print("\n".join(lines))
    return 0


def _cmd_index(parser, args) -> int:
    _check_prime(parser, [args.p])
    payload = {"field": args.field, "p": args.p, "n": args.n, "l": args.l}
    body = _call(args, "/v1/index", payload)
    if body is None:
        return USAGE_EXIT
    if args.format == "json":
        return _emit_json(body)
    lines = [f"kind: {body['kind']}"]
    if body["kind"] == "ConnectivityOnly":
        lines.append("connectivity bound only; no transgression certificate")
    if body["generator_text"] is not None:
        label = "generator" if body["kind"] == "ExactPrincipal" else "first image"
        lines.append(f"{label}: {body['generator_text']}")
    if body["degree"] is not None:
        exact = body["kind"] == "ExactPrincipal"
        lines.append(f"degree: {body['degree']}" + ("" if exact else " (lower bound)"))
    if body["certificate_label"]:
        lines.append(f"certificate: {body['certificate_label']}")
    if body["ideal_note"]:
        lines.append(f"note: {body['ideal_note']}")
    print("\n".join(lines))
    return 0


def _cmd_sphere(parser, args) -> int:
    _check_prime(parser, [args.p])
    if (args.dim is None) == (args.m is None):
        parser.error("give exactly one of --dim or --m")
    payload = {
        "p": args.p,
        "n": args.n,
        "dim": args.dim,
        "m": args.m,
        "fixed_point_free": not args.fixed_points,
    }
    body = _call(args, "/v1/sphere", payload)
    if body is None:
        return USAGE_EXIT
    if args.format == "json":
        return _emit_json(body)
    lines = [f"kind: {body['kind']}", f"sphere dimension: {body['dim'] - 1}"]
    if body["generator_text"] is None:
        lines.append("index: zero ideal (the action has fixed points)")
    else:
        lines.append(f"generator: {body['generator_text']}")
        lines.append(f"degree: {body['degree']}")
    if body["ideal_note"]:
        lines.append(f"note: {body['ideal_note']}")
    print("\n".join(lines))
    return 0


def _cmd_kakutani(parser, args) -> int:
    _check_prime(parser, args.p)
    single = len(args.p) == 1 and len(args.n) == 1 and len(args.m) == 1
    if args.format == "csv" or not single:
        if args.l is not None:
            parser.error("--l only applies to a single (p, n, m) cell")
        payload = {
            "field": args.field,
            "p_values": args.p,
            "n_values": args.n,
            "m_values": args.m,
        }
        body = _call(args, "/v1/kakutani/table", payload)
        if body is None:
            return USAGE_EXIT
        if args.format == "json":
            return _emit_json(body)
        if args.format == "csv":
            print(body["csv"], end="")
            return 0
        for row in body["rows"]:
            bound = row["bound"] if row["bound"] is not None else "none"
            ceiling = row["bound_ceiling"]
            threshold = row["threshold"]
            print(
                f"p={row['p']} n={row['n']} m={row['m']}: bound {bound}"
                + (f" (ceiling {ceiling})" if ceiling is not None else "")
                + f", engine threshold {threshold if threshold is not None else 'none'}"
            )
        return 0

    payload = {
        "field": args.field,
        "p": args.p[0],
        "n": args.n[0],
        "m": args.m[0],
        "l": args.l,
    }
    body = _call(args, "/v1/kakutani", payload)
    if body is None:
        return USAGE_EXIT
    if args.format == "json":
        return _emit_json(body)
    lines = []
    if body["bound"] is None:
        lines.append("bound: none known (p=2 with n>=2 has no closed form)")
    else:
        lines.append(f"bound: {body['bound']} (ceiling {body['bound_ceiling']})")
    threshold = body["threshold"]
    lines.append(f"engine threshold: {threshold if threshold is not None else 'none'}")
    decision = body["decision"]
    if decision is not None:
        verdict = "guaranteed" if decision["guaranteed"] else "not guaranteed"
        lines.append(f"decision at l={decision['l']}: {verdict} ({decision['mechanism']})")
        lines.append(f"  stiefel index degree: {decision['stiefel_index_degree']}")
        lines.append(f"  sphere index degree:  {decision['sphere_index_degree']}")
    print("\n".join(lines))
    return 0


def _cmd_steenrod(parser, args) -> int:
    payload = {"field": args.field, "l": args.l}
    body = _call(args, "/v1/steenrod", payload)
    if body is None:
        return USAGE_EXIT
    if args.format == "json":
        return _emit_json(body)
    low, high = body["cell_dimensions"]
    print(
        f"cells in dimensions {low} and {high}\n"
        f"sq connects: {'yes' if body['sq_connects'] else 'no'}\n"
        f"numeric index bounds: {body['lower_bound']} <= ind <= {body['upper_bound']}"
    )
    return 0


def _cmd_verify(parser, args) -> int:
    if args.p is not None:
        _check_prime(parser, [args.p])
    payload = {"suite": args.suite, "p": args.p, "k": args.k}
    body = _call(args, "/v1/verify", payload)
    if body is None:
        return USAGE_EXIT
    if args.format == "json":
        _emit_json(body)
        return 0 if body["all_passed"] else 1
    for result in body["results"]:
        mark = "pass" if result["passed"] else "FAIL"
        detail = f" -- {result['detail']}" if result["detail"] else ""
        print(f"[{mark}] {result['suite']}: {result['case']}{detail}")
    total = len(body["results"])
    good = sum(r["passed"] for r in body["results"])
    print(f"{good}/{total} properties hold")
    return 0 if body["all_passed"] else 1


def _cmd_serve(parser, args) -> int:
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port)
    return 0


# --- parser -----------------------------------------------------------------


def _add_format(sub, csv_allowed=False) -> None:
    choices = ["text", "json", "csv"] if csv_allowed else ["text", "json"]
    sub.add_argument("--format", choices=choices, default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fhindex",
        description="Fadell-Husseini indices of Stiefel manifolds under C_p^n actions",
    )
    parser.add_argument(
        "--server",
        default=None,
        help="base URL of a running service; default runs in-process",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    classes = commands.add_parser("classes", help="total class of the regular representation")
    classes.add_argument("--field", choices=["R", "C", "H"], required=True)
    classes.add_argument("--p", type=int, required=True)
    classes.add_argument("--n", type=int, default=1)
    classes.add_argument("--cap", type=int, default=None)
    _add_format(classes)
    classes.set_defaults(handler=_cmd_classes)

    index = commands.add_parser("index", help="index of a Stiefel manifold")
    index.add_argument("--field", choices=["R", "C", "H"], required=True)
    index.add_argument("--p", type=int, required=True)
    index.add_argument("--n", type=int, default=1)
    index.add_argument("--l", type=int, required=True)
    _add_format(index)
    index.set_defaults(handler=_cmd_index)

    sphere = commands.add_parser("sphere", help="index of a representation sphere")
    sphere.add_argument("--p", type=int, required=True)
    sphere.add_argument("--n", type=int, default=1)
    sphere.add_argument("--dim", type=int, default=None, help="real dimension of V")
    sphere.add_argument("--m", type=int, default=None, help="dim = m(p^n - 1)")
    sphere.add_argument(
        "--fixed-points",
        action="store_true",
        help="V contains a trivial summand; index is the zero ideal",
    )
    _add_format(sphere)
    sphere.set_defaults(handler=_cmd_sphere)

    kakutani = commands.add_parser(
        "kakutani", help="orthogonal-vectors bound and engine decision"
    )
    kakutani.add_argument("--field", choices=["R", "C", "H"], required=True)
    kakutani.add_argument("--p", type=int, nargs="+", required=True)
    kakutani.add_argument("--n", type=int, nargs="+", default=[1])
    kakutani.add_argument("--m", type=int, nargs="+", required=True)
    kakutani.add_argument("--l", type=int, default=None, help="decide at this l")
    _add_format(kakutani, csv_allowed=True)
    kakutani.set_defaults(handler=_cmd_kakutani)

    steenrod = commands.add_parser("steenrod", help="mod-2 numeric index bounds")
    steenrod.add_argument("--field", choices=["R", "C", "H"], required=True)
    steenrod.add_argument("--l", type=int, required=True)
    _add_format(steenrod)
    steenrod.set_defaults(handler=_cmd_steenrod)

    verify = commands.add_parser("verify", help="run the self-check suites")
    verify.add_argument("--suite", default=None)
    verify.add_argument("--p", type=int, default=None)
    verify.add_argument("--k", type=int, default=None)
    _add_format(verify)
    verify.set_defaults(handler=_cmd_verify)

    serve = commands.add_parser("serve", help="run the HTTP service")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)
    serve.set_defaults(handler=_cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.handler(parser, args)


if __name__ == "__main__":
    sys.exit(main())
