"""Command-line surface: topology generation, ED evaluation, parameter sweeps
to CSV, and the closed-form-vs-simulation verification harness.

Exit codes: 0 success, 1 verification failure, 2 usage or input errors.
Numeric output uses 17 significant digits so printed values round-trip to the
exact in-memory doubles, and identical invocations (same flags, same seed)
produce byte-identical output.
"""

from __future__ import annotations

import argparse
import functools
import math
import os
import sys
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import entanglement, verify
from .density import hs_distance_sq_analytic, pair_entropy_analytic
from .graphs import (
    DirectedGraph,
    TopologySpec,
    build_topology,
    degree_distribution,
    load_graph,
    random_graph,
    save_graph,
)
from .statevector import DEFAULT_MAX_QUBITS, InitialQubit, InteractionParams, build_graph_state

__all__ = ["SweepSpec", "run_sweep", "main"]

MAX_QUBITS_ENV = "GRAPHENT_MAX_QUBITS"

QUANTITIES = ("ed", "ed-general", "entropy", "hs2")

_TOPOLOGY_KINDS = {
    "yf": "young-fibonacci",
    "ffnn": "ffnn",
    "btree": "binary-tree",
    "bridged": "bridged-cycles",
}


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def _grid(lo: float, hi: float, steps: int) -> list[float]:
    """Inclusive uniform grid: lo + i*(hi-lo)/(steps-1)."""
    return [lo + (i * (hi - lo)) / (steps - 1) for i in range(steps)]


def _parse_sizes(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise ValueError(f"expected comma-separated integers, got {text!r}") from exc


def _parse_pi_fraction(text: str) -> float:
    """Rational multiple of pi, e.g. '1/2' -> pi/2, '0.25' -> pi/4."""
    try:
        frac = Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"expected a rational multiple of pi, got {text!r}") from exc
    return math.pi * float(frac)


def _resolve_max_qubits(args: argparse.Namespace) -> int:
    if getattr(args, "max_qubits", None) is not None:
        return args.max_qubits
    env = os.environ.get(MAX_QUBITS_ENV)
    if env is not None:
        try:
            return int(env)
        except ValueError as exc:
            raise ValueError(f"{MAX_QUBITS_ENV} must be an integer, got {env!r}") from exc
    return DEFAULT_MAX_QUBITS


def _add_topology_flags(parser: argparse.ArgumentParser, required: bool = False) -> None:
    parser.add_argument(
        "--topology", choices=sorted(_TOPOLOGY_KINDS), required=required, help="generator family"
    )
    parser.add_argument("--layers", type=int, help="layer count (topology yf)")
    parser.add_argument("--layer-sizes", type=_parse_sizes, help="e.g. 3,4,4,2 (topology ffnn)")
    parser.add_argument("--cycles", type=_parse_sizes, help="e.g. 3,3,3 (topology bridged)")
    parser.add_argument("--depth", type=int, help="layer count (topology btree)")


def _topology_spec(args: argparse.Namespace) -> TopologySpec | None:
    if args.topology is None:
        return None
    return TopologySpec(
        kind=_TOPOLOGY_KINDS[args.topology],
        layers=args.layers,
        layer_sizes=args.layer_sizes,
        cycle_sizes=args.cycles,
        depth=args.depth,
    )


def _graph_from_args(args: argparse.Namespace) -> DirectedGraph:
    if getattr(args, "graph", None) is not None:
        return load_graph(args.graph)
    spec = _topology_spec(args)
    if spec is None:
        raise ValueError("no graph source: pass --graph PATH or --topology plus its parameters")
    return build_topology(spec)


def _theta_from_args(args: argparse.Namespace) -> float:
    if args.theta_pi_frac is not None:
        return _parse_pi_fraction(args.theta_pi_frac)
    if args.theta is None:
        raise ValueError("pass --theta RADIANS or --theta-pi-frac FRACTION")
    return args.theta


# ----------------------------------------------------------------------
# gen
# ----------------------------------------------------------------------

def cmd_gen(args: argparse.Namespace) -> int:
    graph = build_topology(_topology_spec(args))
    save_graph(graph, args.out)
    dist = degree_distribution(graph)
    print(f"vertices: {graph.num_vertices}")
    print(f"edges: {graph.num_edges}")
    print(f"degree distribution: {dict(dist.sorted_items())}")
    print(f"wrote: {args.out}")
    return 0


# ----------------------------------------------------------------------
# ed
# ----------------------------------------------------------------------

def cmd_ed(args: argparse.Namespace) -> int:
    graph = _graph_from_args(args)
    theta = _theta_from_args(args)
    reports = {}
    if args.method in ("closed", "both"):
        reports["closed"] = entanglement.ed_general_report(graph, args.p, theta)
    if args.method in ("simulate", "both"):
        state = build_graph_state(
            graph,
            InitialQubit(args.p),
            InteractionParams(theta, args.psi),
            max_qubits=_resolve_max_qubits(args),
        )
        reports["simulate"] = entanglement.ed_numeric(state)
    for name in ("closed", "simulate"):
        if name not in reports:
            continue
        print(f"{name}: {_fmt(reports[name].total)}")
        if args.verbose:
            for i, value in enumerate(reports[name].per_vertex):
                print(f"  vertex {i}: {_fmt(value)}")
    if args.method == "both":
        print(f"diff: {_fmt(abs(reports['closed'].total - reports['simulate'].total))}")
    return 0


# ----------------------------------------------------------------------
# sweep
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class SweepSpec:
    """One sweep: a quantity over an inclusive theta grid, optionally crossed
    with an inclusive p grid (theta outer, p inner)."""

    quantity: str
    theta_lo: float = 0.0
    theta_hi: float = math.pi
    theta_steps: int = 33
    p_lo: float = 0.0
    p_hi: float = 1.0
    p_steps: int | None = None
    fixed_p: float = 0.5
    psi: float = 0.0  # recorded for provenance; every sweep quantity is psi-independent
    graph: DirectedGraph | None = None
    limit_kind: str | None = None  # asymptotic curve instead of a finite graph

    def __post_init__(self) -> None:
        if self.quantity not in QUANTITIES:
            raise ValueError(f"unknown quantity {self.quantity!r}")
        if self.theta_steps < 2:
            raise ValueError(f"theta steps must be >= 2, got {self.theta_steps}")
        if not self.theta_lo < self.theta_hi:
            raise ValueError("theta range must satisfy lo < hi")
        if self.p_steps is not None:
            if self.p_steps < 2:
                raise ValueError(f"p steps must be >= 2, got {self.p_steps}")
            if not self.p_lo < self.p_hi:
                raise ValueError("p range must satisfy lo < hi")


def run_sweep(spec: SweepSpec) -> tuple[list[str], list[tuple[float, ...]]]:
    thetas = _grid(spec.theta_lo, spec.theta_hi, spec.theta_steps)

    if spec.quantity == "ed":
        if spec.limit_kind == "young-fibonacci":
            curve = entanglement.ed_young_fibonacci_limit
        elif spec.limit_kind == "binary-tree":
            curve = entanglement.ed_binary_tree_limit
        elif spec.limit_kind is not None:
            raise ValueError(f"no asymptotic curve for topology {spec.limit_kind!r}")
        elif spec.graph is not None:
            dist = degree_distribution(spec.graph)
            curve = functools.partial(entanglement.ed_closed_form, dist)
        else:
            raise ValueError("quantity 'ed' needs a graph source or --limit with yf/btree")
        return ["theta", "value"], [(th, curve(th)) for th in thetas]

    if spec.quantity == "ed-general":
        if spec.graph is None:
            raise ValueError("quantity 'ed-general' needs a graph source")
        dist = degree_distribution(spec.graph)
        value = functools.partial(entanglement.ed_closed_general, dist)  # value(p, theta)
    elif spec.quantity == "entropy":
        value = pair_entropy_analytic
    else:  # hs2
        value = hs_distance_sq_analytic

    if spec.p_steps is None:
        return ["theta", "value"], [(th, value(spec.fixed_p, th)) for th in thetas]
    ps = _grid(spec.p_lo, spec.p_hi, spec.p_steps)
    return ["theta", "p", "value"], [(th, p, value(p, th)) for th in thetas for p in ps]


def _write_csv(path: str, header: list[str], rows: list[tuple[float, ...]]) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(",".join(header) + "\n")
        for row in rows:
            fh.write(",".join(_fmt(v) for v in row) + "\n")


def cmd_sweep(args: argparse.Namespace) -> int:
    graph = None
    if args.graph is not None or (args.topology is not None and not args.limit):
        graph = _graph_from_args(args)
    limit_kind = None
    if args.limit:
        if args.topology is None:
            raise ValueError("--limit needs --topology yf or btree")
        limit_kind = _TOPOLOGY_KINDS[args.topology]
    spec = SweepSpec(
        quantity=args.quantity,
        theta_lo=args.theta_min,
        theta_hi=args.theta_max,
        theta_steps=args.theta_steps,
        p_lo=args.p_min,
        p_hi=args.p_max,
        p_steps=args.p_steps,
        fixed_p=args.p,
        psi=args.psi,
        graph=graph,
        limit_kind=limit_kind,
    )
    header, rows = run_sweep(spec)
    _write_csv(args.out, header, rows)
    print(f"wrote: {args.out} ({len(rows)} rows)")
    return 0


# ----------------------------------------------------------------------
# verify
# ----------------------------------------------------------------------

def cmd_verify(args: argparse.Namespace) -> int:
    max_qubits = _resolve_max_qubits(args)
    if args.random_graphs is not None:
        if args.max_vertices < 2:
            raise ValueError(f"--max-vertices must be >= 2, got {args.max_vertices}")
        rng = np.random.default_rng(args.seed)
        graphs = [
            random_graph(int(rng.integers(2, args.max_vertices + 1)), rng, args.edge_prob)
            for _ in range(args.random_graphs)
        ]
        print(f"graphs: {len(graphs)} random (<= {args.max_vertices} vertices)")
    else:
        graphs = [_graph_from_args(args)]
        print(f"graphs: 1 ({graphs[0].num_vertices} vertices, {graphs[0].num_edges} edges)")
    report = verify.run_verification(
        graphs, args.samples, args.seed, args.tol, max_qubits=max_qubits
    )
    if args.topology == "ffnn" and args.layer_sizes is not None:
        dev_degree, dev_variant = verify.ffnn_variant_report(
            args.layer_sizes, max_qubits=max_qubits
        )
        report.notes.append(f"ffnn degree-distribution form vs oracle: {_fmt(dev_degree)}")
        report.notes.append(f"ffnn output-self-exponent form vs oracle: {_fmt(dev_variant)}")
    print(report.format_table())
    return 0 if report.passed else 1


# ----------------------------------------------------------------------
# parser / entry point
# ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphent",
        description="Directed-graph qubit states: generation, entanglement, sweeps, verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="generate a topology and write its graph JSON")
    _add_topology_flags(p_gen, required=True)
    p_gen.add_argument("--out", default="graph.json", help="output path (default graph.json)")
    p_gen.set_defaults(func=cmd_gen)

    p_ed = sub.add_parser("ed", help="evaluate the ED of a graph")
    p_ed.add_argument("--graph", help="graph JSON path")
    _add_topology_flags(p_ed)
    p_ed.add_argument("--theta", type=float, help="interaction angle in radians")
    p_ed.add_argument("--theta-pi-frac", help="interaction angle as a rational multiple of pi, e.g. 1/2")
    p_ed.add_argument("--p", type=float, default=0.5, help="input |1> weight (default 0.5)")
    p_ed.add_argument("--psi", type=float, default=0.0, help="global interaction phase (default 0)")
    p_ed.add_argument("--method", choices=("closed", "simulate", "both"), default="both")
    p_ed.add_argument("--max-qubits", type=int, help=f"simulation cap (default {DEFAULT_MAX_QUBITS})")
    p_ed.add_argument("--verbose", action="store_true", help="also print per-vertex contributions")
    p_ed.set_defaults(func=cmd_ed)

    p_sweep = sub.add_parser("sweep", help="write a parameter sweep as CSV")
    p_sweep.add_argument("--quantity", choices=QUANTITIES, required=True)
    p_sweep.add_argument("--graph", help="graph JSON path (quantities ed / ed-general)")
    _add_topology_flags(p_sweep)
    p_sweep.add_argument("--limit", action="store_true", help="asymptotic curve (yf/btree, quantity ed)")
    p_sweep.add_argument("--theta-min", type=float, default=0.0)
    p_sweep.add_argument("--theta-max", type=float, default=math.pi)
    p_sweep.add_argument("--theta-steps", type=int, required=True)
    p_sweep.add_argument("--p-min", type=float, default=0.0)
    p_sweep.add_argument("--p-max", type=float, default=1.0)
    p_sweep.add_argument("--p-steps", type=int, help="add an inner p grid (2-D sweep)")
    p_sweep.add_argument("--p", type=float, default=0.5, help="fixed p for 1-D sweeps (default 0.5)")
    p_sweep.add_argument("--psi", type=float, default=0.0)
    p_sweep.add_argument("--out", required=True, help="output CSV path")
    p_sweep.set_defaults(func=cmd_sweep)

    p_verify = sub.add_parser("verify", help="closed forms vs the simulation oracle")
    p_verify.add_argument("--graph", help="graph JSON path")
    _add_topology_flags(p_verify)
    p_verify.add_argument("--random-graphs", type=int, help="verify on this many seeded random graphs")
    p_verify.add_argument("--max-vertices", type=int, default=10, help="random-graph size cap (default 10)")
    p_verify.add_argument("--edge-prob", type=float, default=0.4, help="random-graph edge probability")
    p_verify.add_argument("--samples", type=int, default=25, help="parameter draws per graph (default 25)")
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--tol", type=float, default=1e-10)
    p_verify.add_argument("--max-qubits", type=int, help=f"simulation cap (default {DEFAULT_MAX_QUBITS})")
    p_verify.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed usage; keep its code
        return int(exc.code) if exc.code is not None else 0
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:  # JSON decode errors are ValueErrors
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
