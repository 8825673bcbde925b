"""Command-line front end.

Subcommands: ``graph`` (file/inline network queries), ``lattice``
(closed-form grids), ``identity`` (lattice-sum and product identities),
``infinite`` (infinite-grid integrals), and ``reproduce`` (the golden
table).  Reports are machine-readable and byte-stable: identical requests
produce identical bytes.

Exit codes: 0 ok, 2 parse, 3 disconnected, 4 range, 5 numeric.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from fractions import Fraction
from pathlib import Path

from . import exact, golden, identities, lattice, network, spectral
from .errors import (
    EXIT_NUMERIC,
    EXIT_OK,
    ParseError,
    ResistnetError,
)


# ---------------------------------------------------------------------------
# network file formats


def parse_resistance_literal(raw, exact_mode: bool):
    """Edge resistance from a JSON number or 'p/q' string.

    Exact mode accepts integers and fraction literals only; float literals
    have no declared rational value and are rejected there.
    """
    if isinstance(raw, bool):
        raise ParseError(f"bad resistance {raw!r}")
    if isinstance(raw, int):
        return raw
    if isinstance(raw, float):
        if exact_mode:
            raise ParseError(
                f"exact mode needs integer or p/q resistances, got {raw!r}"
            )
        return raw
    if isinstance(raw, str):
        try:
            return Fraction(raw)
        except (ValueError, ZeroDivisionError) as err:
            raise ParseError(f"bad resistance literal {raw!r}") from err
    raise ParseError(f"bad resistance {raw!r}")


def network_to_json(net: network.Network) -> dict:
    """JSON-ready form: {"nodes": n, "edges": [[i, j, r], ...]}."""
    edges = []
    for i, j, r in net.edges:
        if isinstance(r, Fraction):
            edges.append([i, j, str(r)])
        else:
            edges.append([i, j, r])
    return {"nodes": net.n_nodes, "edges": edges}


def parse_network_json(obj, exact_mode: bool = False) -> network.Network:
    if not isinstance(obj, dict) or "nodes" not in obj or "edges" not in obj:
        raise ParseError('network JSON needs "nodes" and "edges"')
    if not isinstance(obj["nodes"], int):
        raise ParseError(f'"nodes" must be an integer, got {obj["nodes"]!r}')
    edges = []
    for entry in obj["edges"]:
        if not isinstance(entry, (list, tuple)) or len(entry) != 3:
            raise ParseError(f"bad edge entry {entry!r}")
        i, j, raw = entry
        if not isinstance(i, int) or not isinstance(j, int):
            raise ParseError(f"bad edge endpoints {entry!r}")
        edges.append((i, j, parse_resistance_literal(raw, exact_mode)))
    return network.build_network(obj["nodes"], edges)


def parse_network_text(text: str, exact_mode: bool = False) -> network.Network:
    """One 'i j r' triple per line; '#' starts a comment."""
    edges = []
    max_node = -1
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        parts = body.split()
        if len(parts) != 3:
            raise ParseError(f"line {lineno}: expected 'i j r', got {line!r}")
        try:
            i, j = int(parts[0]), int(parts[1])
        except ValueError as err:
            raise ParseError(f"line {lineno}: bad node index in {line!r}") from err
        raw = parts[2]
        if "/" in raw:
            value = parse_resistance_literal(raw, exact_mode)
        else:
            try:
                value = int(raw)
            except ValueError:
                value = parse_resistance_literal(float(raw), exact_mode)
        edges.append((i, j, value))
        max_node = max(max_node, i, j)
    return network.build_network(max_node + 1, edges)


def load_network(path: str | None, inline: str | None, exact_mode: bool) -> network.Network:
    if (path is None) == (inline is None):
        raise ParseError("give exactly one of --input or --inline")
    if inline is not None:
        try:
            obj = json.loads(inline)
        except json.JSONDecodeError as err:
            raise ParseError(f"bad inline JSON: {err}") from err
        return parse_network_json(obj, exact_mode)
    text = Path(path).read_text()
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as err:
            raise ParseError(f"{path}: bad JSON: {err}") from err
        return parse_network_json(obj, exact_mode)
    return parse_network_text(text, exact_mode)


# ---------------------------------------------------------------------------
# small parsers


def parse_coords(raw: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in raw.split(","))
    except ValueError as err:
        raise ParseError(f"bad coordinates {raw!r}") from err


def parse_dims(raw: str) -> tuple[int, ...]:
    try:
        dims = tuple(int(part) for part in raw.lower().split("x"))
    except ValueError as err:
        raise ParseError(f"bad dims {raw!r}") from err
    if not 1 <= len(dims) <= 3:
        raise ParseError(f"dims must have 1..3 axes, got {raw!r}")
    return dims


def parse_rational_option(raw: str) -> Fraction:
    try:
        return Fraction(raw)
    except (ValueError, ZeroDivisionError) as err:
        raise ParseError(f"bad resistance {raw!r}") from err


_BC_BY_WORD = {
    ("free", 1): lattice.BoundaryCondition.FREE_1D,
    ("free", 2): lattice.BoundaryCondition.FREE_2D,
    ("free", 3): lattice.BoundaryCondition.FREE_3D,
    ("periodic", 1): lattice.BoundaryCondition.PERIODIC_1D,
    ("periodic", 2): lattice.BoundaryCondition.PERIODIC_2D,
    ("cylinder", 2): lattice.BoundaryCondition.CYLINDER,
    ("moebius", 2): lattice.BoundaryCondition.MOEBIUS,
    ("klein", 2): lattice.BoundaryCondition.KLEIN,
}


def boundary_condition_for(word: str, ndim: int) -> lattice.BoundaryCondition:
    try:
        return _BC_BY_WORD[(word, ndim)]
    except KeyError:
        raise ParseError(f"boundary condition {word!r} undefined for {ndim}D dims")


# ---------------------------------------------------------------------------
# report rendering


def _flatten(report: dict, prefix: str = "") -> dict[str, str]:
    flat: dict[str, str] = {}
    for key in sorted(report):
        value = report[key]
        name = f"{prefix}{key}"
        if isinstance(value, dict):
            flat.update(_flatten(value, prefix=f"{name}."))
        elif isinstance(value, (list, tuple)):
            flat[name] = ";".join(str(v) for v in value)
        else:
            flat[name] = "" if value is None else str(value)
    return flat


def render_report(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, sort_keys=True, indent=2) + "\n"
    flat = _flatten(report)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(list(flat))
        writer.writerow(list(flat.values()))
        return buf.getvalue()
    lines = [f"{key}: {value}" for key, value in flat.items()]
    return "\n".join(lines) + "\n"


def _float_repr(x: float) -> float:
    # floats go through json/repr unchanged; keep a single conversion point
    return float(x)


# ---------------------------------------------------------------------------
# subcommands


def _run_graph(args) -> tuple[dict, int]:
    exact_mode = args.mode in ("exact", "both")
    net = load_network(args.input, args.inline, exact_mode)
    alpha, beta = args.src, args.dst
    report: dict = {
        "pair": [alpha, beta],
        "spec": {"nodes": net.n_nodes, "edges": len(net.edges)},
    }
    tol = golden.comparison_tolerance()
    code = EXIT_OK
    if args.mode == "float":
        spectrum = spectral.decompose(network.assemble_laplacian(net))
        report["method"] = "spectral"
        report["value_float"] = _float_repr(
            spectral.two_point_resistance(spectrum, alpha, beta)
        )
    elif args.mode == "exact":
        value = exact.solve_exact(net, alpha, beta)
        report["method"] = "oracle"
        report["value_exact"] = str(value)
        report["value_float"] = _float_repr(float(value))
    else:
        spectrum = spectral.decompose(network.assemble_laplacian(net))
        value_f = spectral.two_point_resistance(spectrum, alpha, beta)
        value_x = exact.solve_exact(net, alpha, beta)
        discrepancy = abs(value_f - float(value_x))
        report["method"] = "spectral+oracle"
        report["value_float"] = _float_repr(value_f)
        report["value_exact"] = str(value_x)
        report["discrepancy"] = _float_repr(discrepancy)
        if discrepancy > tol * max(1.0, abs(float(value_x))):
            code = EXIT_NUMERIC
    return report, code


def _run_lattice(args) -> tuple[dict, int]:
    dims = parse_dims(args.dims)
    bc = boundary_condition_for(args.bc, len(dims))
    res = (args.r, args.s, args.t)[: len(dims)]
    spec = lattice.LatticeSpec(dims=dims, resistances=res, bc=bc)
    c1 = parse_coords(args.src)
    c2 = parse_coords(args.dst)
    if len(c1) != len(dims) or len(c2) != len(dims):
        raise ParseError(
            f"coordinates need {len(dims)} components for dims {args.dims}"
        )
    report: dict = {
        "pair": [",".join(map(str, c1)), ",".join(map(str, c2))],
        "spec": {
            "bc": bc.value,
            "dims": "x".join(map(str, dims)),
            "resistances": [str(r) for r in res],
        },
    }
    tol = golden.comparison_tolerance()
    code = EXIT_OK
    if args.mode == "float":
        report["method"] = "closed-form"
        report["value_float"] = _float_repr(lattice.resistance(spec, c1, c2))
    elif args.mode == "exact":
        net = lattice.make_lattice(spec)
        value = exact.solve_exact(net, spec.node_index(c1), spec.node_index(c2))
        report["method"] = "oracle"
        report["value_exact"] = str(value)
        report["value_float"] = _float_repr(float(value))
    else:
        value_f = lattice.resistance(spec, c1, c2)
        net = lattice.make_lattice(spec)
        value_x = exact.solve_exact(net, spec.node_index(c1), spec.node_index(c2))
        discrepancy = abs(value_f - float(value_x))
        report["method"] = "closed-form+oracle"
        report["value_float"] = _float_repr(value_f)
        report["value_exact"] = str(value_x)
        report["discrepancy"] = _float_repr(discrepancy)
        if discrepancy > tol * max(1.0, abs(float(value_x))):
            code = EXIT_NUMERIC
    return report, code


def _run_identity(args) -> tuple[dict, int]:
    which = args.which
    report: dict = {"method": "identity", "which": which, "N": args.n_terms}
    if which in ("i1", "i2"):
        variant = 1 if which == "i1" else 2
        query = identities.IdentityQuery(
            n_terms=args.n_terms,
            offset=args.ell,
            damping=args.lam,
            variant=variant,
        )
        closed = (
            identities.i1_closed(query) if variant == 1 else identities.i2_closed(query)
        )
        direct = (
            identities.i1_direct(query) if variant == 1 else identities.i2_direct(query)
        )
        report["offset"] = args.ell
        report["damping"] = _float_repr(args.lam)
        report["closed"] = _float_repr(closed)
        report["direct"] = _float_repr(direct)
        difference = (
            0.0 if math.isinf(closed) and math.isinf(direct) else closed - direct
        )
        report["difference"] = _float_repr(difference)
    else:
        fn = (
            identities.product_identity_free
            if which == "product-free"
            else identities.product_identity_periodic
        )
        lhs, rhs = fn(args.n_terms, args.lam)
        report["damping"] = _float_repr(args.lam)
        report["lhs"] = _float_repr(lhs)
        report["rhs"] = _float_repr(rhs)
        report["difference"] = _float_repr(lhs - rhs)
    return report, EXIT_OK


def _run_infinite(args) -> tuple[dict, int]:
    delta = parse_coords(args.delta)
    if len(delta) == 2:
        value = identities.r_infinite_2d(delta[0], delta[1], float(args.r), float(args.s))
    elif len(delta) == 3:
        value = identities.r_infinite_3d(
            delta[0], delta[1], delta[2], float(args.r), float(args.s), float(args.t)
        )
    else:
        raise ParseError(f"--delta needs 2 or 3 components, got {args.delta!r}")
    report = {
        "method": "quadrature",
        "delta": list(delta),
        "spec": {"resistances": [str(x) for x in (args.r, args.s, args.t)[: len(delta)]]},
        "value_float": _float_repr(value),
    }
    return report, EXIT_OK


def _run_reproduce(args) -> tuple[dict, int]:
    rows = golden.reproduce_all()
    report = {
        "rows": [
            {
                "id": row.ident,
                "description": row.description,
                "expected": row.expected,
                "computed": row.computed,
                "passed": row.passed,
            }
            for row in rows
        ],
        "passed": all(row.passed for row in rows),
    }
    return report, EXIT_OK if report["passed"] else EXIT_NUMERIC


# ---------------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="resistnet",
        description=(
            "Two-point resistance of finite resistor networks: exact rational "
            "and spectral solvers for arbitrary graphs, closed forms for "
            "free/periodic/cylindrical/twisted grids, lattice-sum identities, "
            "and infinite-grid integrals.  Lattice nodes are indexed "
            "x + M*y + M*N*z (x fastest); coordinates are comma-separated "
            "per axis."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    graph = sub.add_parser("graph", help="query a network from a file or inline JSON")
    graph.add_argument("--input", help="network file (JSON or 'i j r' lines)")
    graph.add_argument("--inline", help="network as an inline JSON object")
    graph.add_argument("--from", dest="src", type=int, required=True)
    graph.add_argument("--to", dest="dst", type=int, required=True)
    graph.add_argument("--mode", choices=("float", "exact", "both"), default="float")
    graph.add_argument("--format", choices=("json", "csv", "text"), default="json")
    graph.set_defaults(run=_run_graph)

    lat = sub.add_parser("lattice", help="closed-form lattice resistance")
    lat.add_argument(
        "--bc",
        required=True,
        choices=("free", "periodic", "cylinder", "moebius", "klein"),
    )
    lat.add_argument("--dims", required=True, help="axis lengths, e.g. 5x4")
    lat.add_argument("--r", type=parse_rational_option, default=Fraction(1))
    lat.add_argument("--s", type=parse_rational_option, default=Fraction(1))
    lat.add_argument("--t", type=parse_rational_option, default=Fraction(1))
    lat.add_argument("--from", dest="src", required=True, help="e.g. 0,0")
    lat.add_argument("--to", dest="dst", required=True, help="e.g. 3,3")
    lat.add_argument("--mode", choices=("float", "exact", "both"), default="float")
    lat.add_argument("--format", choices=("json", "csv", "text"), default="json")
    lat.set_defaults(run=_run_lattice)

    ident = sub.add_parser("identity", help="lattice-sum and product identities")
    ident.add_argument(
        "--which",
        required=True,
        choices=("i1", "i2", "product-free", "product-periodic"),
    )
    ident.add_argument("--N", dest="n_terms", type=int, required=True)
    ident.add_argument("--ell", type=int, default=0)
    ident.add_argument("--lambda", dest="lam", type=float, required=True)
    ident.add_argument("--format", choices=("json", "csv", "text"), default="json")
    ident.set_defaults(run=_run_identity)

    inf = sub.add_parser("infinite", help="infinite-lattice integral")
    inf.add_argument("--delta", required=True, help="offset, e.g. 1,0 or 1,1,0")
    inf.add_argument("--r", type=parse_rational_option, default=Fraction(1))
    inf.add_argument("--s", type=parse_rational_option, default=Fraction(1))
    inf.add_argument("--t", type=parse_rational_option, default=Fraction(1))
    inf.add_argument("--format", choices=("json", "csv", "text"), default="json")
    inf.set_defaults(run=_run_infinite)

    rep = sub.add_parser("reproduce", help="run the golden reference table")
    rep.add_argument("--format", choices=("json", "csv", "text"), default="json")
    rep.set_defaults(run=_run_reproduce)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        # argparse already printed a usage message
        return int(err.code) if err.code else EXIT_OK
    try:
        report, code = args.run(args)
    except ResistnetError as err:
        error_report = {
            "error": {
                "type": type(err).__name__,
                "message": str(err),
                "exit_code": err.exit_code,
            }
        }
        sys.stdout.write(render_report(error_report, getattr(args, "format", "json")))
        return err.exit_code
    sys.stdout.write(render_report(report, args.format))
    return code


if __name__ == "__main__":
    raise SystemExit(main())
