"""Command-line entry point: ``expminors <subcommand> ...``.

Exit codes: 0 success / valid / certified, 1 negative result (refuted,
invalid, nothing found), 2 inconclusive (heuristic only), 3 error.
Results go to stdout (or ``--output``) and are byte-identical for identical
configuration and seed; wall time and the run record go to stderr.
"""
from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import math
import os
import sys
import time
from pathlib import Path
from concurrent.futures import ProcessPoolExecutor

from . import __version__
from .counting import count_bounds, find_non_minor, trivial_regime, universality_threshold
from .embedding import MinorModel, embed_complete, embed_universal, empirical_capacity, verify_minor
from .errors import ExpMinorsError, InputError
from .expansion import (CERTIFIED, REFUTED, ExpansionParams, certify_expansion, certify_expansion_exact,
                        default_finder, find_violation_heuristic, ExpansionCertificate, HEURISTIC)
from .generators import FAMILIES, GenSpec, generate
from .graph import Graph, format_edge_list, parse_edge_list

EXIT_OK, EXIT_NEGATIVE, EXIT_INCONCLUSIVE, EXIT_ERROR = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def env_budget() -> int:
    raw = os.environ.get("EXPMINORS_BUDGET")
    if raw is None:
        return 10 ** 8
    try:
        return int(float(raw))
    except ValueError:
        raise InputError(f"EXPMINORS_BUDGET is not a number: {raw!r}") from None


def load_graph(path: str) -> Graph:
    """Read a host from an edge-list file, or generate it from a GenSpec JSON file."""
    text = sys.stdin.read() if path == "-" else open(path).read()
    if text.lstrip().startswith("{"):
        return generate(GenSpec.from_json(text))
    return parse_edge_list(text)


def graph_json(g: Graph) -> str:
    return json.dumps({"n": g.n, "edges": [list(e) for e in g.edges()]}, sort_keys=True)


def emit(args, text: str) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if getattr(args, "output", None):
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def config_hash(args) -> str:
    skip = {"func", "output", "workers"}
    cfg = {k: v for k, v in sorted(vars(args).items()) if k not in skip}
    return hashlib.sha256(json.dumps(cfg, sort_keys=True, default=str).encode()).hexdigest()[:16]


def _params(args) -> ExpansionParams:
    if args.alpha is None or args.t is None:
        raise InputError("--alpha and --t are required")
    return ExpansionParams(args.alpha, args.t)


# -- subcommands ----------------------------------------------------------------------------

def cmd_generate(args) -> int:
    if args.spec:
        text = args.spec if args.spec.lstrip().startswith("{") else Path(args.spec).read_text()
        spec = GenSpec.from_json(text)
    else:
        extra = {"rows": args.rows} if args.rows else {}
        spec = GenSpec(family=args.family, n=args.n, seed=args.seed, d=args.d, p=args.p,
                       name=args.name, extra=extra)
    g = generate(spec)
    emit(args, graph_json(g) if args.format == "json" else format_edge_list(g))
    return EXIT_OK


def cmd_certify(args) -> int:
    g = load_graph(args.graph)
    params = _params(args)
    budget = env_budget() if args.budget is None else args.budget
    if args.mode == "exact":
        cert = certify_expansion_exact(g, params, budget)
    elif args.mode == "heuristic":
        w = find_violation_heuristic(g, params, args.effort)
        cert = ExpansionCertificate(REFUTED if w is not None else HEURISTIC, params.alpha, params.t,
                                    params.cap(g.n), w)
    else:
        cert = certify_expansion(g, params, budget, args.effort)
    if args.format == "human":
        line = f"{cert.verdict}: alpha={cert.alpha:g} t={cert.t:g} cap={cert.checked_size_cap}"
        if cert.witness is not None:
            line += f" witness={sorted(cert.witness)}"
        emit(args, line)
    else:
        emit(args, cert.to_json())
    return {CERTIFIED: EXIT_OK, REFUTED: EXIT_NEGATIVE}.get(cert.verdict, EXIT_INCONCLUSIVE)


def _complete_target(raw):
    if raw in ("guaranteed", None):
        return "guaranteed"
    if raw == "none":
        return None
    return int(raw)


def cmd_embed(args) -> int:
    g = load_graph(args.graph)
    params = _params(args)
    finder = default_finder(env_budget() if args.budget is None else args.budget)
    if args.complete:
        k, model = embed_complete(g, params.alpha, params.t, seed=args.seed, K=args.K,
                                  sample_constant=args.sample_constant, target=_complete_target(args.target),
                                  target_denominator=args.target_denominator, finder=finder)
        summary = {"k": k, "max_branch_size": model.max_branch_size, "ell": model.info["ell"],
                   "stop": model.info["stop"]}
    else:
        if not args.pattern:
            raise InputError("give --pattern FILE or --complete")
        h = load_graph(args.pattern)
        max_size = args.max_size
        if max_size is None and args.xi is not None:
            max_size = empirical_capacity(g.n, params.t, args.xi)
        model = embed_universal(g, params.alpha, params.t, h, max_size=max_size, finder=finder)
        summary = {"pattern_n": h.n, "pattern_m": h.edge_count, "max_branch_size": model.max_branch_size,
                   "capacity": model.info.get("capacity")}
    out = model.to_dict()
    out["summary"] = summary
    emit(args, json.dumps(out, sort_keys=True))
    return EXIT_OK


def cmd_verify(args) -> int:
    g = load_graph(args.graph)
    with open(args.model) as fh:
        model = MinorModel.from_json(g, fh.read())
    verdict = verify_minor(model)
    emit(args, json.dumps({"valid": verdict.valid, "clause": verdict.clause, "detail": verdict.detail},
                          sort_keys=True))
    if not verdict:
        print(verdict.describe(), file=sys.stderr)
        return EXIT_NEGATIVE
    return EXIT_OK


def cmd_bounds(args) -> int:
    m = args.m if args.m is not None else universality_threshold(args.n, args.d)
    report = count_bounds(args.n, args.d, m)
    if args.format == "human":
        emit(args, f"n={report.n} d={report.d:g} m={report.m} separation={report.separation:.6g}"
                   f"{' (trivial regime)' if trivial_regime(args.n, args.d) else ''}")
    else:
        emit(args, report.to_json())
    # a non-positive separation certifies nothing
    return EXIT_OK if report.separation > 0 else EXIT_NEGATIVE


def cmd_find_non_minor(args) -> int:
    g = load_graph(args.graph)
    h = find_non_minor(g, args.k, args.e)
    if h is None:
        print("every such graph is a minor", file=sys.stderr)
        return EXIT_NEGATIVE
    emit(args, graph_json(h) if args.format == "json" else format_edge_list(h))
    return EXIT_OK


EXPERIMENT_FIELDS = ["n", "t", "seed", "k_found", "bound", "ratio"]


def _trial(job):
    family, n, d, seed, alpha, t, K, c, target, denominator, budget = job
    g = generate(GenSpec(family=family, n=n, seed=seed, d=d))
    k, model = embed_complete(g, alpha, t, seed=seed, K=K, sample_constant=c, target=target,
                              target_denominator=denominator, finder=default_finder(budget))
    bound = math.sqrt(n * t / math.log(n))
    return {"n": n, "t": t, "seed": seed, "k_found": k, "bound": f"{bound:.6f}", "ratio": f"{k / bound:.6f}"}


def cmd_experiment(args) -> int:
    params = _params(args)
    budget = env_budget() if args.budget is None else args.budget
    target = _complete_target(args.target)
    jobs = [(args.family, n, args.d, args.seed + s, params.alpha, params.t, args.K, args.sample_constant,
             target, args.target_denominator, budget)
            for n in args.n for s in range(args.seeds)]
    if args.workers > 1:
        with ProcessPoolExecutor(args.workers) as pool:
            rows = list(pool.map(_trial, jobs))
    else:
        rows = [_trial(j) for j in jobs]
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=EXPERIMENT_FIELDS, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    emit(args, buf.getvalue())
    return EXIT_OK


# -- parser -----------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="expminors", description="Minors in small-set expanders.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, fmt=("json",), params=False):
        p.add_argument("--output", "-o", help="write the result here instead of stdout")
        p.add_argument("--format", choices=fmt, default=fmt[0])
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--budget", type=int, default=None,
                       help="exhaustive-search budget (default: $EXPMINORS_BUDGET or 1e8)")
        if params:
            p.add_argument("--alpha", type=float)
            p.add_argument("--t", type=float)

    p = sub.add_parser("generate", help="write a generated graph")
    common(p, ("edge-list", "json"))
    p.add_argument("--spec", help='GenSpec JSON or a file holding it, e.g. \'{"family":"d-out","n":2000,"d":4,"seed":7}\'')
    p.add_argument("--family", choices=FAMILIES)
    p.add_argument("--n", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--p", type=float)
    p.add_argument("--name")
    p.add_argument("--rows", type=int)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("certify", help="check (alpha, t)-expansion")
    common(p, ("json", "human"), params=True)
    p.add_argument("graph")
    p.add_argument("--mode", choices=("auto", "exact", "heuristic"), default="auto")
    p.add_argument("--effort", type=int, default=20)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("embed", help="embed a pattern, or the largest complete graph found")
    common(p, params=True)
    p.add_argument("graph")
    p.add_argument("--pattern")
    p.add_argument("--complete", action="store_true")
    p.add_argument("--max-size", type=int, help="pattern capacity m (default: the theorem's value)")
    p.add_argument("--xi", type=float, help="capacity floor(xi n ln t / ln n) instead of the theorem's m")
    _complete_knobs(p)
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("verify", help="check a minor model against a host")
    common(p)
    p.add_argument("graph")
    p.add_argument("model")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bounds", help="counting bounds against universality")
    common(p, ("json", "human"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=float, required=True)
    p.add_argument("--m", type=int)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("experiment", help="complete-minor scaling sweep, CSV output")
    common(p, ("csv",), params=True)
    p.add_argument("--n", type=int, nargs="+", required=True)
    p.add_argument("--family", choices=("random-regular", "d-out"), default="random-regular")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--seeds", type=int, default=5)
    p.add_argument("--workers", type=int, default=1)
    _complete_knobs(p)
    p.set_defaults(func=cmd_experiment)

    p = sub.add_parser("find-non-minor", help="a graph of the given size that is not a minor")
    common(p, ("edge-list", "json"))
    p.add_argument("graph")
    p.add_argument("--k", type=int, required=True, help="vertices")
    p.add_argument("--e", type=int, required=True, help="edges")
    p.set_defaults(func=cmd_find_non_minor)
    return parser


def _complete_knobs(p):
    p.add_argument("--K", type=float, default=None, help="branch-size constant (default 25/alpha^2)")
    p.add_argument("--sample-constant", type=float, default=4.0)
    p.add_argument("--target", default="guaranteed", help="'guaranteed', 'none' or an integer")
    p.add_argument("--target-denominator", type=float, default=64)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        code = args.func(args)
    except (ExpMinorsError, OSError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        code = EXIT_ERROR
    record = {"command": args.command, "seed": args.seed, "config_hash": config_hash(args),
              "version": __version__, "exit": code, "wall_time_s": round(time.perf_counter() - start, 3)}
    print(json.dumps(record, sort_keys=True), file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
