"""Thin command-line client for the groupgraphs service.

Every subcommand posts one request to the service and prints the JSON
response canonically (sorted keys, compact separators), so identical
command lines produce byte-identical reports. By default the service
app is invoked in-process; --server switches to a remote instance.

    groupgraphs build --group S:4
    groupgraphs graph --group Dic:3 --kind virt-independence --dot out.dot
    groupgraphs mingen --group S:4 --csv table.csv
    groupgraphs construction --t 2 --samples 50 --seed 1
    groupgraphs seqprod --family coords.txt --taus 1.5,2,3 --threshold 4
    groupgraphs verify [--suite NAME]     # exit code 0/1
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from pathlib import Path


def _canonical(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def _atomic_write(path: str, text: str):
    target = Path(path)
    fd, tmp = tempfile.mkstemp(dir=target.parent or Path("."), prefix=".tmp-")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, target)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


class Client:
    """POST to a remote server, or run the app in-process when no server
    is given."""

    def __init__(self, server: str = ""):
        self.server = server.rstrip("/")
        self._local = None

    def post(self, route: str, payload: dict):
        import httpx

        if self.server:
            resp = httpx.post(f"{self.server}{route}", json=payload, timeout=600.0)
        else:
            import asyncio

            from .service.app import app

            async def _go():
                transport = httpx.ASGITransport(app=app)
                async with httpx.AsyncClient(
                    transport=transport, base_url="http://groupgraphs.local",
                    timeout=600.0,
                ) as client:
                    return await client.post(route, json=payload)

            resp = asyncio.run(_go())
        body = resp.json()
        if resp.status_code != 200:
            msg = body.get("error") or body.get("detail") or str(body)
            raise SystemExit(f"error: {msg}")
        return body


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="groupgraphs", description=__doc__,
                                formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--server", default="", help="URL of a running service; "
                   "default runs the service in-process")
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="build a group and report basic facts")
    b.add_argument("--group", required=True)

    g = sub.add_parser("graph", help="analyse one graph kind of a group")
    g.add_argument("--group", required=True)
    g.add_argument("--kind", required=True,
                   choices=["generating", "independence", "virt-independence"])
    g.add_argument("--dot", default="", help="write DOT to this path")
    g.add_argument("--csv", default="", help="write edge CSV to this path")

    m = sub.add_parser("mingen", help="d(G), m(G) and witnesses per size")
    m.add_argument("--group", required=True)
    m.add_argument("--csv", default="", help="write the table CSV to this path")

    c = sub.add_parser("construction", help="component census of the "
                       "t-block semidirect construction")
    c.add_argument("--t", type=int, required=True)
    c.add_argument("--samples", type=int, default=100)
    c.add_argument("--seed", type=int, default=1)
    c.add_argument("--variant", default="corrected", choices=["corrected", "paper"])

    s = sub.add_parser("seqprod", help="separation demo over a coordinate family")
    s.add_argument("--family", required=True, help="family file: one "
                   "coordinate per line")
    s.add_argument("--taus", required=True, help="comma-separated values > 1")
    s.add_argument("--threshold", type=int, required=True)

    v = sub.add_parser("verify", help="run acceptance suites (exit 0/1)")
    v.add_argument("--suite", default="", help="one suite name; default all")
    return p


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    client = Client(args.server)

    if args.command == "build":
        body = client.post("/build", {"spec": args.group})
    elif args.command == "graph":
        body = client.post("/graph", {"spec": args.group, "kind": args.kind,
                                      "dot": bool(args.dot), "csv": bool(args.csv)})
        if args.dot:
            _atomic_write(args.dot, body["dot"])
        if args.csv:
            _atomic_write(args.csv, body["csv"])
        body = body["report"]
    elif args.command == "mingen":
        body = client.post("/mingen", {"spec": args.group})
        if args.csv:
            _atomic_write(args.csv, body["csv"])
            body = {k: v for k, v in body.items() if k != "csv"}
    elif args.command == "construction":
        body = client.post("/construction", {
            "t": args.t, "samples": args.samples,
            "seed": args.seed, "variant": args.variant,
        })
    elif args.command == "seqprod":
        lines = Path(args.family).read_text().splitlines()
        taus = [float(x) for x in args.taus.split(",") if x.strip()]
        body = client.post("/seqprod", {"family": lines, "taus": taus,
                                        "threshold": args.threshold})
    else:  # verify
        body = client.post("/verify", {"suite": args.suite})
        sys.stdout.write(_canonical(body))
        for suite in body["suites"]:
            state = "PASS" if suite["passed"] else "FAIL"
            sys.stderr.write(f"{state} {suite['name']}: {suite['criterion']}\n")
        return 0 if body["passed"] else 1

    sys.stdout.write(_canonical(body))
    return 0


if __name__ == "__main__":
    sys.exit(main())
