"""Command-line client of the isosum service.

The CLI is a thin client: it reads a scene file, posts it to the HTTP
service (spun up in-process by default, or a remote instance via
``--server``), and prints the response as deterministic structured text
with 9-decimal float formatting.

Exit codes: 0 success, 1 failed verification, 2 input/usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .geometry import DEFAULT_TOL


def _f9(value: float) -> str:
    out = format(float(value), ".9f")
    return "0.000000000" if out == "-0.000000000" else out


def _e9(value: float) -> str:
    return format(float(value), ".9e")


def _vec(values) -> str:
    return "(" + ",".join(_f9(v) for v in values) + ")"


class ServiceClient:
    """POSTs to a remote server, or to the in-process app when no server
    is given."""

    def __init__(self, server: str | None):
        if server:
            import httpx

            self._client = httpx.Client(base_url=server.rstrip("/"))
        else:
            import warnings

            with warnings.catch_warnings():
                # some fastapi builds deprecation-warn on test-client import
                warnings.simplefilter("ignore")
                from fastapi.testclient import TestClient

            from .api.app import app

            self._client = TestClient(app)

    def post(self, path: str, payload: dict):
        return self._client.post(path, json=payload)


class InputError(Exception):
    pass


def _load_scene_obj(path: str) -> dict:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(
            f"{path}: {exc.msg} (line {exc.lineno}, column {exc.colno})"
        ) from None
    if not isinstance(obj, dict):
        raise InputError(f"{path}: scene must be a JSON object")
    return obj


def _call(client: ServiceClient, path: str, payload: dict) -> dict:
    resp = client.post(path, payload)
    if resp.status_code != 200:
        detail = None
        try:
            detail = resp.json().get("detail")
        except Exception:
            pass
        if isinstance(detail, dict):
            raise InputError(f"{detail.get('error')}: {detail.get('message')}")
        raise InputError(f"service error {resp.status_code}: {detail}")
    return resp.json()


def _signs_str(signs) -> str:
    return "".join("+" if s > 0 else "-" for s in signs)


def _classification_lines(cls: dict | None, out: list[str]) -> None:
    if cls is None:
        return
    if cls["verdict"] == "CVS":
        out.append(f"classification: CVS value={_f9(cls['value'])}")
    else:
        out.append(
            f"classification: NonCVS direction={_vec(cls['direction'])} "
            f"grad={_vec(cls['grad'])}"
        )


def _oracle_lines(oracle: dict, out: list[str]) -> None:
    out.append(
        f"oracle: samples={oracle['samples']} seed={oracle['seed']} "
        f"tol={_e9(oracle['tol'])} max_residual={_e9(oracle['max_residual'])}"
    )


def _cell_lines(cells, out: list[str]) -> None:
    out.append(f"cells: {len(cells)}")
    for k, cell in enumerate(cells):
        line = (
            f"cell {k}: signs={_signs_str(cell['sign_vector'])} "
            f"grad={_vec(cell['grad'])} constant={_f9(cell['constant'])}"
        )
        if cell.get("direction") is not None:
            line += f" direction={_vec(cell['direction'])}"
        out.append(line)


def cmd_analyze(args, client: ServiceClient) -> int:
    scene = _load_scene_obj(args.file)
    data = _call(
        client,
        "/analyze",
        {"scene": scene, "tol": args.tol, "samples": args.samples, "seed": args.seed},
    )
    out = [f"kind: {data['kind']}"]
    convex_line = f"convexity: {data['convexity']}"
    if data["reflex_vertices"]:
        convex_line += " reflex=" + ",".join(str(i) for i in data["reflex_vertices"])
    out.append(convex_line)
    _classification_lines(data.get("classification"), out)
    if data.get("cells") is not None:
        _cell_lines(data["cells"], out)
        neighbor = data["neighbor"]
        out.append(
            f"neighbor_check: {'OK' if neighbor['valid'] else 'VIOLATIONS'} "
            f"pairs={neighbor['pairs_checked']}"
        )
    if data.get("symmetry") is not None:
        sym = data["symmetry"]
        out.append(
            f"symmetry: rotations={len(sym['rotations'])} "
            f"reflections={len(sym['reflections'])} prediction={sym['prediction']}"
        )
    if data.get("corollary3") is not None:
        out.append(
            f"corollary3: {'PASS' if data['corollary3']['passed'] else 'FAIL'}"
        )
    if data.get("corollary4") is not None:
        out.append(
            f"corollary4: {data['corollary4']['prediction']} "
            f"{'PASS' if data['corollary4']['passed'] else 'FAIL'}"
        )
    _oracle_lines(data["oracle"], out)
    out.append(f"status: {data['status']}")
    print("\n".join(out))
    return 0 if data["status"] == "OK" else 1


def cmd_partition(args, client: ServiceClient) -> int:
    scene = _load_scene_obj(args.file)
    data = _call(client, "/partition", {"scene": scene, "tol": args.tol})
    out = [f"lines: {len(data['lines'])}"]
    for k, line in enumerate(data["lines"]):
        out.append(f"line {k}: {_vec(line)}")
    _cell_lines(data["cells"], out)
    for adj in data["adjacency"]:
        out.append(
            f"adjacent: cells {adj['i']},{adj['j']} across line {adj['line_index']}"
        )
    neighbor = data["neighbor"]
    out.append(
        f"neighbor_check: {'OK' if neighbor['valid'] else 'VIOLATIONS'} "
        f"pairs={neighbor['pairs_checked']}"
    )
    for violation in neighbor["violations"]:
        out.append(f"violation: {violation}")
    triple = data["triple"]
    pts = " ".join(_vec(p) for p in triple["points"])
    out.append(f"equal_sum_triple: {pts}")
    out.append("triple_totals: " + " ".join(_f9(t) for t in triple["totals"]))
    print("\n".join(out))
    return 0


def cmd_symmetry(args, client: ServiceClient) -> int:
    scene = _load_scene_obj(args.file)
    data = _call(client, "/symmetry", {"scene": scene, "tol": args.tol})
    out = [f"kind: {data['kind']}"]
    if data.get("symmetry") is not None:
        sym = data["symmetry"]
        out.append(f"rotations: {len(sym['rotations'])}")
        for rot in sym["rotations"]:
            out.append(
                f"rotation: center={_vec(rot['center'])} angle={_f9(rot['angle'])}"
            )
        out.append(f"reflections: {len(sym['reflections'])}")
        for ref in sym["reflections"]:
            out.append(
                f"reflection: point={_vec(ref['point'])} "
                f"direction={_vec(ref['direction'])}"
            )
        out.append(f"prediction: {sym['prediction']}")
    if data.get("corollary4") is not None:
        out.append(f"prediction: {data['corollary4']['prediction']}")
    _classification_lines(data.get("classification"), out)
    if data.get("corollary3") is not None:
        out.append(
            f"corollary3: {'PASS' if data['corollary3']['passed'] else 'FAIL'}"
        )
    if data.get("corollary4") is not None:
        out.append(
            f"corollary4: {'PASS' if data['corollary4']['passed'] else 'FAIL'}"
        )
    print("\n".join(out))
    return 0


def cmd_render(args, client: ServiceClient) -> int:
    scene = _load_scene_obj(args.file)
    data = _call(
        client, "/render", {"scene": scene, "levels": args.levels, "tol": args.tol}
    )
    Path(args.out).write_text(data["svg"], encoding="utf-8", newline="\n")
    print(f"wrote {args.out} (levels={args.levels})")
    return 0


def cmd_lp(args, client: ServiceClient) -> int:
    scene = _load_scene_obj(args.file)
    data = _call(client, "/lp", {"scene": scene})
    out = [
        "side_lengths: " + _vec(data["side_lengths"]),
        f"area: {_f9(data['area'])}",
        data["text"].rstrip("\n"),
    ]
    print("\n".join(out))
    return 0


def cmd_verify(args, client: ServiceClient) -> int:
    scene = _load_scene_obj(args.file)
    data = _call(
        client,
        "/verify",
        {"scene": scene, "samples": args.samples, "seed": args.seed, "tol": args.tol},
    )
    out = [
        f"samples: {data['samples']}",
        f"seed: {data['seed']}",
        f"tol: {_e9(data['tol'])}",
        f"max_residual: {_e9(data['max_residual'])}",
        f"status: {'OK' if data['passed'] else 'FAILED'}",
    ]
    print("\n".join(out))
    return 0 if data["passed"] else 1


def cmd_serve(args, _client=None) -> int:
    import uvicorn

    uvicorn.run("isosum.api.app:app", host=args.host, port=args.port)
    return 0


def build_parser(default_tol: float) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="isosum",
        description="Distance-sum analysis of polygons and convex polyhedra",
    )
    parser.add_argument(
        "--server",
        default=None,
        help="base URL of a running isosum service (default: run in-process)",
    )
    # accept --server on either side of the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--server", default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, **kwargs):
        p = sub.add_parser(name, parents=[common], **kwargs)
        p.set_defaults(func=func)
        return p

    p = add("analyze", cmd_analyze, help="convexity, classification, symmetry")
    p.add_argument("file")
    p.add_argument("--tol", type=float, default=default_tol)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)

    p = add("partition", cmd_partition, help="convex cells of a concave polygon")
    p.add_argument("file")
    p.add_argument("--tol", type=float, default=default_tol)

    p = add("symmetry", cmd_symmetry, help="isometries and corollary checks")
    p.add_argument("file")
    p.add_argument("--tol", type=float, default=default_tol)

    p = add("render", cmd_render, help="SVG with labeled isosum segments")
    p.add_argument("file")
    p.add_argument("--levels", type=int, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--tol", type=float, default=default_tol)

    p = add("lp", cmd_lp, help="triangle linear-program model")
    p.add_argument("file")

    p = add("verify", cmd_verify, help="Monte-Carlo oracle cross-check")
    p.add_argument("file")
    p.add_argument("--samples", type=int, default=10000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol", type=float, default=default_tol)

    p = add("serve", cmd_serve, help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    return parser


def main(argv=None) -> int:
    try:
        default_tol = float(os.environ.get("ISOSUM_TOL", DEFAULT_TOL))
    except ValueError:
        print("error: ISOSUM_TOL must be a number", file=sys.stderr)
        return 2
    parser = build_parser(default_tol)
    args = parser.parse_args(argv)
    if args.func is cmd_serve:
        return cmd_serve(args)
    client = ServiceClient(args.server)
    try:
        return args.func(args, client)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entrypoint() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entrypoint()
