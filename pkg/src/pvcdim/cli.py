"""Command-line front end.

One command is one run.  Every run prints a single-line key=value record
(the run record) to stdout; wall-clock timing goes to stderr so that the
record is byte-identical across reruns and thread counts.  Exit codes:
0 success, 1 NO decision, 2 input error, 3 capacity error.

All randomness flows from --seed; --threads (fallback: the PVC_THREADS
environment variable) selects the worker count without affecting output.
"""

from __future__ import annotations

import argparse
import hashlib
import os
import sys
import time

from . import __version__
from .approx import approx_max_partial_vc, approx_max_vc_dimension, \
    approx_via_double_hitting
from .core import CapacityError, InputError, neighborhood_hypergraph, \
    vertices_of
from .exact import DEFAULT_CEILING, min_distinguishing_transversal, \
    solve_max_partial_vc, solve_partial_vc_decision, vc_dimension
from .formats import format_graph, format_hypergraph, format_levels, \
    read_graph, read_hypergraph, read_levels
from .generate import grid_graph, random_cubic_graph, random_twin_free_hypergraph
from .planar import LeveledPlanarGraph, baker_max_partial_vc, \
    baker_min_distinguishing, compute_levels
from .reductions import clique_to_vcdim, is_to_disting_transversal, \
    mpvc_to_mpvcd, verify_reduction


def _digest_text(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()[:16]


def _digest_file(path: str) -> str:
    try:
        with open(path, "rb") as fh:
            return hashlib.sha256(fh.read()).hexdigest()[:16]
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _witness_str(mask: int) -> str:
    vs = vertices_of(mask)
    return ",".join(map(str, vs)) if vs else "-"


def _emit(pairs, out_path=None) -> None:
    line = " ".join(f"{k}={v}" for k, v in pairs) + f" version={__version__}"
    print(line)
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(line + "\n")


def _threads(args) -> int:
    if args.threads is not None:
        return max(1, args.threads)
    env = os.environ.get("PVC_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise InputError(f"PVC_THREADS={env!r} is not an integer") from None
    return 1


def _write(path: str, text: str) -> None:
    with open(path, "w") as fh:
        fh.write(text)


def _cmd_solve(args) -> int:
    H = read_hypergraph(args.input)
    digest = _digest_file(args.input)
    threads = _threads(args)
    if args.ell is not None:
        res = solve_partial_vc_decision(H, args.k, args.ell,
                                        ceiling=args.ceiling, threads=threads)
        pairs = [("cmd", "solve"), ("input", digest), ("k", args.k),
                 ("l", args.ell), ("problem", res.problem),
                 ("decided", str(res.decided).lower()), ("value", res.value),
                 ("witness", _witness_str(res.witness)),
                 ("enumerated", res.enumerated)]
        if res.reason:
            pairs.append(("reason", res.reason))
        _emit(pairs, args.out)
        print(f"time_ms={res.elapsed_ms:.3f}", file=sys.stderr)
        return 0 if res.decided else 1
    res = solve_max_partial_vc(H, args.k, ceiling=args.ceiling, threads=threads)
    _emit([("cmd", "solve"), ("input", digest), ("k", args.k),
           ("problem", res.problem), ("value", res.value),
           ("witness", _witness_str(res.witness)),
           ("enumerated", res.enumerated)], args.out)
    print(f"time_ms={res.elapsed_ms:.3f}", file=sys.stderr)
    return 0


def _cmd_approx(args) -> int:
    H = read_hypergraph(args.input)
    digest = _digest_file(args.input)
    t0 = time.perf_counter()
    if args.method == "greedy":
        res = approx_max_partial_vc(H, args.k)
    else:
        res = approx_via_double_hitting(H, args.k)
    ratio = res.claimed_ratio
    _emit([("cmd", "approx"), ("input", digest), ("k", args.k),
           ("method", res.method), ("value", res.value),
           ("bound", res.upper_bound),
           ("ratio", ratio if ratio is not None else "-"),
           ("witness", _witness_str(res.witness))], args.out)
    print(f"time_ms={(time.perf_counter() - t0) * 1e3:.3f}", file=sys.stderr)
    return 0


def _cmd_vcdim(args) -> int:
    H = read_hypergraph(args.input)
    digest = _digest_file(args.input)
    t0 = time.perf_counter()
    if args.approx2:
        cert = approx_max_vc_dimension(H)
        _emit([("cmd", "vcdim"), ("input", digest), ("method", "approx2"),
               ("dimension", cert.dimension),
               ("witness", _witness_str(cert.shattered)),
               ("verified", str(cert.verify(H)).lower())], args.out)
        print(f"time_ms={(time.perf_counter() - t0) * 1e3:.3f}", file=sys.stderr)
        return 0
    res = vc_dimension(H, ceiling=args.ceiling)
    _emit([("cmd", "vcdim"), ("input", digest), ("method", "exact"),
           ("dimension", res.value), ("witness", _witness_str(res.witness)),
           ("enumerated", res.enumerated)], args.out)
    print(f"time_ms={res.elapsed_ms:.3f}", file=sys.stderr)
    return 0


def _cmd_dt(args) -> int:
    H = read_hypergraph(args.input)
    digest = _digest_file(args.input)
    res = min_distinguishing_transversal(H, ceiling=args.ceiling,
                                         threads=_threads(args))
    _emit([("cmd", "dt"), ("input", digest), ("problem", res.problem),
           ("value", res.value), ("witness", _witness_str(res.witness)),
           ("enumerated", res.enumerated)], args.out)
    print(f"time_ms={res.elapsed_ms:.3f}", file=sys.stderr)
    return 0


def _load_leveled(args) -> tuple[LeveledPlanarGraph, str]:
    G = read_graph(args.graph)
    digest = _digest_file(args.graph)
    if args.levels:
        levels = read_levels(args.levels, G.n)
        L = LeveledPlanarGraph.from_levels(G, levels)
        digest += ":" + _digest_file(args.levels)
    elif args.outer_face:
        try:
            outer = [int(tok) for tok in args.outer_face.split(",") if tok]
        except ValueError:
            raise InputError(
                f"--outer-face wants comma-separated integers, got "
                f"{args.outer_face!r}") from None
        L = compute_levels(G, outer)
    else:
        raise InputError("baker needs --levels FILE or --outer-face LIST")
    return L, digest


def _cmd_baker(args) -> int:
    L, digest = _load_leveled(args)
    t0 = time.perf_counter()
    if args.min_dt:
        res = baker_min_distinguishing(L, args.epsilon, ceiling=args.ceiling)
        _emit([("cmd", "baker"), ("input", digest), ("epsilon", args.epsilon),
               ("problem", res.problem), ("value", res.value),
               ("witness", _witness_str(res.witness)),
               ("enumerated", res.enumerated)], args.out)
        print(f"time_ms={res.elapsed_ms:.3f}", file=sys.stderr)
        return 0
    if args.k is None:
        raise InputError("baker maximization needs -k")
    res = baker_max_partial_vc(L, args.k, args.epsilon, ceiling=args.ceiling)
    _emit([("cmd", "baker"), ("input", digest), ("epsilon", args.epsilon),
           ("k", args.k), ("method", res.method), ("value", res.value),
           ("bound", res.upper_bound),
           ("witness", _witness_str(res.witness))], args.out)
    print(f"time_ms={(time.perf_counter() - t0) * 1e3:.3f}", file=sys.stderr)
    return 0


def _certificate_text(cert) -> str:
    lines = [f"kind {cert.kind}",
             f"variant {cert.variant if cert.variant else '-'}",
             f"k {cert.source_param}",
             f"k_prime {cert.k_prime}",
             f"identity {cert.identity}"]
    return "\n".join(lines) + "\n"


def _cmd_reduce(args) -> int:
    G = read_graph(args.graph)
    digest = _digest_file(args.graph)
    if args.kind == "clique-to-vcdim":
        if args.k is None:
            raise InputError("clique-to-vcdim needs -k")
        cert = clique_to_vcdim(G, args.k, args.variant)
        instance_text = format_graph(cert.target_graph)
        suffix = ".edge"
    elif args.kind == "is-to-dt":
        if args.s is None:
            raise InputError("is-to-dt needs -s")
        cert = is_to_disting_transversal(G, args.s)
        instance_text = format_hypergraph(cert.target_hypergraph)
        suffix = ".phg"
    else:
        if args.k is None:
            raise InputError("mpvc-to-mpvcd needs -k")
        cert = mpvc_to_mpvcd(G, args.k)
        instance_text = format_graph(cert.target_graph)
        suffix = ".edge"
    instance_path = args.out + suffix
    cert_path = args.out + ".cert"
    _write(instance_path, instance_text)
    _write(cert_path, _certificate_text(cert))
    pairs = [("cmd", "reduce"), ("kind", args.kind), ("input", digest),
             ("k_prime", cert.k_prime), ("instance", instance_path),
             ("certificate", cert_path),
             ("instance_digest", _digest_text(instance_text))]
    if args.verify:
        report = verify_reduction(cert, ceiling=args.ceiling)
        pairs.append(("verified", str(report.ok).lower()))
    _emit(pairs)
    return 0


def _cmd_gen(args) -> int:
    if args.what == "hypergraph":
        H = random_twin_free_hypergraph(args.n, args.m, args.density, args.seed)
        text = format_hypergraph(H)
        _write(args.out, text)
        _emit([("cmd", "gen"), ("what", "hypergraph"), ("n", args.n),
               ("m", args.m), ("density", args.density), ("seed", args.seed),
               ("out", args.out), ("digest", _digest_text(text))])
        return 0
    if args.what == "cubic":
        G = random_cubic_graph(args.n, args.seed)
        text = format_graph(G)
        _write(args.out, text)
        _emit([("cmd", "gen"), ("what", "cubic"), ("n", args.n),
               ("seed", args.seed), ("out", args.out),
               ("digest", _digest_text(text))])
        return 0
    G, levels = grid_graph(args.rows, args.cols)
    graph_text = format_graph(G)
    level_text = format_levels(levels)
    _write(args.out + ".edge", graph_text)
    _write(args.out + ".lvl", level_text)
    _emit([("cmd", "gen"), ("what", "grid"), ("rows", args.rows),
           ("cols", args.cols), ("out", args.out),
           ("digest", _digest_text(graph_text + level_text))])
    return 0


def _cmd_bench(args) -> int:
    rows = []
    if args.suite == "ratios":
        header = "instance,method,k,value,bound,ratio,opt,time_ms"
        for idx in range(args.count):
            H = random_twin_free_hypergraph(10, 14, 0.45, f"{args.seed}:{idx}")
            for k in (2, 3):
                t0 = time.perf_counter()
                res = approx_max_partial_vc(H, k)
                ms = (time.perf_counter() - t0) * 1e3
                opt = solve_max_partial_vc(H, k, ceiling=args.ceiling).value
                rows.append(
                    f"hg-{idx},{res.method},{k},{res.value},{res.upper_bound},"
                    f"{res.claimed_ratio},{opt},{ms:.3f}")
    elif args.suite == "baker":
        header = "instance,method,k,value,bound,ratio,opt,time_ms"
        for side in (3, 4):
            G, levels = grid_graph(side, side)
            L = LeveledPlanarGraph.from_levels(G, levels)
            H = neighborhood_hypergraph(G)
            for k in (2, 3):
                t0 = time.perf_counter()
                res = baker_max_partial_vc(L, k, 1.0, ceiling=args.ceiling)
                ms = (time.perf_counter() - t0) * 1e3
                opt = solve_max_partial_vc(H, k, ceiling=args.ceiling).value
                rows.append(
                    f"grid-{side}x{side},{res.method},{k},{res.value},"
                    f"{res.upper_bound},{res.claimed_ratio},{opt},{ms:.3f}")
    else:
        raise InputError(f"unknown suite {args.suite!r}; available: ratios, baker")
    table = header + "\n" + "\n".join(rows) + "\n"
    sys.stdout.write(table)
    if args.out:
        _write(args.out, table)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pvcdim",
        description="Partial VC dimension solvers, approximations, and "
                    "hard-instance generators.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--threads", type=int, default=None,
                       help="worker count (default: PVC_THREADS or 1); "
                            "output does not depend on it")
        p.add_argument("--ceiling", type=int, default=DEFAULT_CEILING,
                       help="candidate-set enumeration ceiling")
        p.add_argument("--out", help="also write the record/table to this file")

    p = sub.add_parser("solve", help="exact decision or maximization")
    p.add_argument("--input", required=True, help="hypergraph file (p phg)")
    p.add_argument("-k", type=int, required=True, help="solution size")
    p.add_argument("-l", "--ell", type=int, default=None,
                   help="class target; omit to maximize")
    common(p)
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("approx", help="certified approximation")
    p.add_argument("--input", required=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--method", choices=("greedy", "double-hitting"),
                   default="greedy")
    common(p)
    p.set_defaults(func=_cmd_approx)

    p = sub.add_parser("vcdim", help="VC dimension, exact or 2-approximate")
    p.add_argument("--input", required=True)
    p.add_argument("--approx2", action="store_true",
                   help="use the factor-2 transfer instead of exact search")
    common(p)
    p.set_defaults(func=_cmd_vcdim)

    p = sub.add_parser("dt", help="minimum distinguishing transversal, exact")
    p.add_argument("--input", required=True)
    common(p)
    p.set_defaults(func=_cmd_dt)

    p = sub.add_parser("baker", help="layer-decomposition schemes on leveled "
                                     "planar graphs")
    p.add_argument("--graph", required=True, help="graph file (p edge)")
    p.add_argument("--levels", help="level file (l <vertex> <level>)")
    p.add_argument("--outer-face", help="comma-separated outer-face vertices")
    p.add_argument("--epsilon", type=float, required=True)
    p.add_argument("-k", type=int, default=None, help="budget (max variant)")
    p.add_argument("--min-dt", action="store_true",
                   help="minimize a distinguishing transversal instead")
    common(p)
    p.set_defaults(func=_cmd_baker)

    p = sub.add_parser("reduce", help="emit a hardness-construction instance "
                                      "with its certificate")
    p.add_argument("kind", choices=("clique-to-vcdim", "is-to-dt",
                                    "mpvc-to-mpvcd"))
    p.add_argument("--graph", required=True, help="source graph file (p edge)")
    p.add_argument("-k", type=int, default=None)
    p.add_argument("-s", type=int, default=None,
                   help="independent-set size (is-to-dt)")
    p.add_argument("--variant", choices=("bipartite", "split", "co-bipartite"),
                   default="bipartite")
    p.add_argument("--verify", action="store_true",
                   help="brute-force both sides and check the identity")
    p.add_argument("--out", required=True, help="output path prefix")
    p.add_argument("--ceiling", type=int, default=DEFAULT_CEILING)
    p.add_argument("--threads", type=int, default=None)
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("gen", help="seeded random instances")
    kind = p.add_mutually_exclusive_group(required=True)
    kind.add_argument("--hypergraph", dest="what", action="store_const",
                      const="hypergraph")
    kind.add_argument("--cubic", dest="what", action="store_const",
                      const="cubic")
    kind.add_argument("--grid", dest="what", action="store_const", const="grid")
    p.add_argument("--n", type=int, default=8)
    p.add_argument("--m", type=int, default=12)
    p.add_argument("--density", type=float, default=0.5)
    p.add_argument("--rows", type=int, default=4)
    p.add_argument("--cols", type=int, default=4)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True,
                   help="output file (grids: path prefix for .edge/.lvl)")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("bench", help="benchmark suites as CSV tables")
    p.add_argument("--suite", required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=5,
                   help="instances per suite point")
    common(p)
    p.set_defaults(func=_cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except CapacityError as exc:
        print(f"capacity error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
