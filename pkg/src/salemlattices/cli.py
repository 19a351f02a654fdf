"""Batch CLI: a thin client in front of the JSON service.

Every subcommand reads a JSON request (stdin or --input), posts it to the
corresponding service endpoint -- in-process by default, or to a remote
service via --url -- and prints the verdict as canonical JSON.  Exit codes:
0 for a decided or undecided verdict (yes/no/unknown), 2 for input or
schema errors, 3 for internal inconsistencies, 1 for transport failures.
"""

from __future__ import annotations

import argparse
import asyncio
import json
import sys

import httpx

SUBCOMMANDS = {
    "salem-check": "/v1/salem/check",
    "salem-enum": "/v1/salem/enum",
    "salem-equiv": "/v1/salem/equiv",
    "mu-check-t1": "/v1/mu/check-t1",
    "decide-t1": "/v1/decide/t1",
    "decide-t2": "/v1/decide/t2",
    "build-lattice": "/v1/lattice/build",
    "verify-lattice": "/v1/lattice/verify",
    "commensurable": "/v1/commensurable",
    "bch-check": "/v1/bch/check",
}

# which request field each generic flag feeds, per subcommand
_BOUND_FIELD = {
    "salem-equiv": "power_bound",
    "mu-check-t1": "offset_bound",
    "decide-t1": "coeff_height",
    "commensurable": "power_bound",
    "verify-lattice": "word_length",
    "bch-check": "grid",
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="salemlat",
        description=(
            "Decision procedures and constructions for cocompact lattices in "
            "solvable Lie groups with bi-invariant metric of index 2."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in SUBCOMMANDS:
        p = sub.add_parser(name, help=f"POST {SUBCOMMANDS[name]}")
        p.add_argument("--input", help="read the JSON request from a file")
        p.add_argument("--seed", type=int, help="seed for seeded constructions")
        p.add_argument("--bound", type=int, help="main search bound of the command")
        p.add_argument("--tol", help="tolerance as a rational string, e.g. 1/10^12")
        p.add_argument("--url", help="remote service URL (default: in-process)")
    serve = sub.add_parser("serve", help="run the HTTP service")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)
    return parser


def _read_request(args) -> dict:
    if args.input:
        with open(args.input, "r", encoding="utf-8") as fh:
            text = fh.read()
    elif not sys.stdin.isatty():
        text = sys.stdin.read()
    else:
        text = ""
    if not text.strip():
        return {}
    return json.loads(text)


def _apply_flags(command: str, request: dict, args) -> dict:
    if args.seed is not None:
        request.setdefault("seed", args.seed)
    if args.tol is not None:
        request.setdefault("tol", args.tol)
    if args.bound is not None:
        field = _BOUND_FIELD.get(command)
        if field:
            request.setdefault(field, args.bound)
    return request


async def _post_in_process(path: str, request: dict):
    from .service import create_app

    transport = httpx.ASGITransport(app=create_app())
    async with httpx.AsyncClient(
        transport=transport, base_url="http://service", timeout=None
    ) as client:
        return await client.post(path, json=request)


def _post(path: str, request: dict, url: str | None):
    if url:
        with httpx.Client(base_url=url, timeout=None) as client:
            return client.post(path, json=request)
    return asyncio.run(_post_in_process(path, request))


def _exit_code(http_status: int, body: dict) -> int:
    if body.get("status") in ("yes", "no", "unknown"):
        return 0
    if http_status == 500:
        return 3
    return 2


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "serve":
        import uvicorn

        from .service import create_app

        uvicorn.run(create_app(), host=args.host, port=args.port)
        return 0
    try:
        request = _read_request(args)
    except (OSError, json.JSONDecodeError) as exc:
        print(
            json.dumps(
                {
                    "status": "error",
                    "error": {"kind": type(exc).__name__, "message": str(exc)},
                },
                sort_keys=True,
            )
        )
        return 2
    request = _apply_flags(args.command, request, args)
    try:
        response = _post(SUBCOMMANDS[args.command], request, args.url)
    except httpx.HTTPError as exc:
        print(
            json.dumps(
                {
                    "status": "error",
                    "error": {"kind": type(exc).__name__, "message": str(exc)},
                },
                sort_keys=True,
            )
        )
        return 1
    try:
        body = response.json()
    except json.JSONDecodeError:
        body = {"status": "error", "error": {"kind": "BadResponse",
                                             "message": response.text}}
    print(json.dumps(body, sort_keys=True, separators=(",", ":")))
    return _exit_code(response.status_code, body)


if __name__ == "__main__":
    sys.exit(main())
