"""Command-line interface.

Subcommands:
  build     dump a token graph as an edge list plus a rank map sidecar
  spectrum  dump Laplacian eigenvalues as CSV
  verify    run the full check battery, emit a machine-readable report

Exit codes: 0 success, 1 at least one FAIL record, 2 configuration or
size refusal.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import verify as verify_mod
from .graphs import Graph, GraphError, family, read_edge_list
from .spectra import EigenError, graph_spectrum
from .tokens import DEFAULT_VERTEX_CAP, VertexCapError, token_graph
from .graphs import format_edge_list


class ConfigError(Exception):
    pass


def _parse_family(spec: str) -> Graph:
    """Mini-grammar `name:params` with comma-separated integer params,
    e.g. cycle:7 or hamming:2,3."""
    name, _, rest = spec.partition(":")
    if not name:
        raise ConfigError(f"family spec {spec!r}: empty name")
    params: tuple[int, ...] = ()
    if rest:
        try:
            params = tuple(int(p) for p in rest.split(","))
        except ValueError:
            raise ConfigError(f"family spec {spec!r}: params must be integers")
    try:
        return family(name, *params)
    except GraphError as exc:
        raise ConfigError(f"family spec {spec!r}: {exc}")


def _parse_k_range(spec: str) -> list[int]:
    """Either a single integer or `a..b` (inclusive)."""
    try:
        if ".." in spec:
            a, b = spec.split("..")
            lo, hi = int(a), int(b)
            if lo > hi:
                raise ConfigError(f"k range {spec!r}: empty range")
            return list(range(lo, hi + 1))
        return [int(spec)]
    except ValueError:
        raise ConfigError(f"k range {spec!r}: expected an integer or a..b")


def _load_graph(args) -> Graph:
    if args.family and args.edge_list:
        raise ConfigError("give either --family or --edge-list, not both")
    if args.family:
        return _parse_family(args.family)
    if args.edge_list:
        try:
            return read_edge_list(args.edge_list)
        except (OSError, GraphError) as exc:
            raise ConfigError(f"edge list {args.edge_list!r}: {exc}")
    raise ConfigError("one of --family or --edge-list is required")


def _cap(args) -> int:
    if args.cap is not None:
        return args.cap
    env = os.environ.get("TOKEN_SPECTRA_CAP")
    if env:
        try:
            return int(env)
        except ValueError:
            raise ConfigError(f"TOKEN_SPECTRA_CAP={env!r} is not an integer")
    return DEFAULT_VERTEX_CAP


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def cmd_build(args) -> int:
    G = _load_graph(args)
    ks = _parse_k_range(args.k)
    if len(ks) != 1:
        raise ConfigError("build takes a single k")
    T = token_graph(G, ks[0], _cap(args))
    edge_text = format_edge_list(T.graph)
    if args.out is None or args.out == "-":
        sys.stdout.write(edge_text)
    else:
        _write(args.out, edge_text)
        map_lines = [f"{r}: {{{','.join(map(str, X))}}}"
                     for r, X in enumerate(T.index.subsets())]
        _write(args.out + ".map", "\n".join(map_lines) + "\n")
    return 0


def cmd_spectrum(args) -> int:
    G = _load_graph(args)
    ks = _parse_k_range(args.k)
    if len(ks) != 1:
        raise ConfigError("spectrum takes a single k")
    T = token_graph(G, ks[0], _cap(args))
    spec = graph_spectrum(T.graph)
    lines = [f"{i + 1},{v!r}" for i, v in enumerate(map(float, spec.values))]
    _write(args.out, "\n".join(lines) + "\n")
    if args.vectors:
        rows = [",".join(repr(float(x)) for x in row) for row in spec.vectors]
        _write(args.vectors, "\n".join(rows) + "\n")
    return 0


def cmd_verify(args) -> int:
    G = _load_graph(args)
    ks = _parse_k_range(args.k)
    bad = [k for k in ks if not 1 <= k <= G.n]
    if bad:
        raise ConfigError(f"k values {bad} outside [1, {G.n}]")
    name = args.family if args.family else args.edge_list
    reports = verify_mod.verify_graph(name, G, ks, tol=args.tol, cap=_cap(args))
    render = {"json": verify_mod.to_json,
              "csv": verify_mod.to_csv,
              "text": verify_mod.to_text}[args.format]
    _write(args.out, render(reports))
    return 1 if verify_mod.has_failures(reports) else 0


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", help="family spec, e.g. cycle:7 or hamming:2,3")
    p.add_argument("--edge-list", help="path to an edge-list file")
    p.add_argument("--k", required=True, help="token count: integer or a..b")
    p.add_argument("--cap", type=int, default=None,
                   help="token-graph vertex cap (default TOKEN_SPECTRA_CAP or "
                        f"{DEFAULT_VERTEX_CAP})")
    p.add_argument("--out", default=None, help="output path (default stdout)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="token-spectra", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="dump a token graph edge list")
    _add_common(p)
    p.set_defaults(fn=cmd_build)

    p = sub.add_parser("spectrum", help="dump Laplacian eigenvalues as CSV")
    _add_common(p)
    p.add_argument("--vectors", default=None,
                   help="also dump the eigenvector matrix to this path")
    p.set_defaults(fn=cmd_spectrum)

    p = sub.add_parser("verify", help="run the verification battery")
    _add_common(p)
    p.add_argument("--tol", type=float, default=1e-6,
                   help="bound-margin tolerance (default 1e-6)")
    p.add_argument("--format", choices=["json", "csv", "text"], default="json")
    p.set_defaults(fn=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (ConfigError, GraphError, VertexCapError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except EigenError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
