"""Command-line interface.

Exit codes: 0 success, 1 mathematical counterexample, 2 usage error,
3 graph validation error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass

from . import artinian, betti, groebner, hilbert, ideals, verify
from .graphs import ClosedGraph, ValidationError, enumerate_all, enumerate_connected, graph_from_json
from .polyfield import DEFAULT_PRIME, is_prime, parse_polynomial

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_USAGE, EXIT_VALIDATION = 0, 1, 2, 3


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    prime: int = DEFAULT_PRIME
    fmt: str = "json"
    out: str | None = None
    n_max: int | None = None
    suite: str = "all"
    seed: int | None = None
    workers: int = 1

    def __post_init__(self):
        if not is_prime(self.prime):
            raise UsageError(f"--prime {self.prime} is not prime")
        if self.prime >= 2 ** 31:
            raise UsageError("--prime must be below 2^31")
        if self.n_max is not None and self.n_max < 2:
            raise UsageError("--n-max must be at least 2")


def _load_json(arg: str):
    if arg == "-":
        text = sys.stdin.read()
    elif os.path.exists(arg):
        with open(arg) as fh:
            text = fh.read()
    else:
        text = arg
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed JSON: {exc}") from None


def _load_graph(arg: str) -> ClosedGraph:
    data = _load_json(arg)
    try:
        return graph_from_json(data)
    except ValidationError:
        raise
    except (ValueError, TypeError, KeyError) as exc:
        raise UsageError(f"bad graph JSON: {exc}") from None


def _emit(payload, cfg: RunConfig, text: str | None = None, rows: list[dict] | None = None):
    if cfg.fmt == "json":
        out = json.dumps(payload, indent=2) + "\n"
    elif cfg.fmt == "csv":
        buf = io.StringIO()
        if rows is None:
            rows = [{"key": k, "value": json.dumps(v) if isinstance(v, (dict, list)) else v}
                    for k, v in payload.items()]
        if rows:
            writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
            writer.writeheader()
            for row in rows:
                writer.writerow({k: json.dumps(v) if isinstance(v, (dict, list)) else v
                                 for k, v in row.items()})
        out = buf.getvalue()
    else:
        out = (text if text is not None else json.dumps(payload, indent=2)) + "\n"
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)


# --- subcommands ----------------------------------------------------------------

def cmd_analyze(args, cfg: RunConfig) -> int:
    g = _load_graph(args.graph)
    p = cfg.prime
    pres = ideals.build_ideal(g, p)
    gb = groebner.buchberger(pres.generators)
    predicted = ideals.predicted_initial(g)
    h = hilbert.h_vector(g)
    w = hilbert.witness_monomial(g)
    q = artinian.artinian_quotient(g, p)
    socle_dim = artinian.socle_dimension(q)
    by_crit = artinian.is_gorenstein_criterion(g)
    by_socle = socle_dim == 1
    methods = {"criterion": by_crit, "socle": by_socle, "socle_dim": socle_dim}
    table = None
    if args.betti:
        table = betti.graph_betti(g, p)
        methods["betti"] = betti.gorenstein_by_betti(g, p, table)
    report = {
        "graph": g.to_json(),
        "cliques": [list(c) for c in g.cliques],
        "components": g.c,
        "r": g.r,
        "edge_count": len(pres.generators),
        "generators": [str(f) for f in pres.generators],
        "groebner": {
            "size": len(gb),
            "quadratic": groebner.is_quadratic(gb),
            "initial_matches_prediction": set(gb.leading_exps()) == set(predicted.gens),
        },
        "h": list(h),
        "krull_dim": 1 + g.c,
        "reg": h.degree,
        "max_reg": hilbert.has_max_regularity(g),
        "witness": str(w) if w is not None else None,
        "gorenstein": by_crit and by_socle,
        "gorenstein_methods": methods,
    }
    if table is not None:
        report["betti"] = table.to_json()
    agree = by_crit == by_socle and methods.get("betti", by_crit) == by_crit
    if not agree:
        report["counterexample"] = {"graph": g.to_json(), "verdicts": methods}
    text = "\n".join(f"{k}: {v}" for k, v in report.items() if k != "betti")
    if table is not None:
        text += "\nbetti:\n" + table.pretty()
    _emit(report, cfg, text)
    return EXIT_OK if agree else EXIT_COUNTEREXAMPLE


def cmd_enumerate(args, cfg: RunConfig) -> int:
    if args.n < 2:
        raise UsageError("n must be at least 2")
    gen = enumerate_connected(args.n) if args.connected_only else enumerate_all(args.n)
    rows = []
    for g in gen:
        gor = artinian.is_gorenstein_criterion(g)
        if args.gorenstein_only and not gor:
            continue
        rows.append({
            "cliques": [list(c) for c in g.cliques],
            "components": g.c,
            "r": g.r,
            "reg": hilbert.regularity(g),
            "max_reg": hilbert.has_max_regularity(g),
            "gorenstein": gor,
        })
    text = "\n".join(
        f"{' '.join(f'[{a},{b}]' for a, b in row['cliques'])}  r={row['r']} reg={row['reg']}"
        f" max_reg={row['max_reg']} gorenstein={row['gorenstein']}" for row in rows)
    _emit({"n": args.n, "count": len(rows), "graphs": rows}, cfg, text, rows)
    return EXIT_OK


def cmd_hilbert(args, cfg: RunConfig) -> int:
    g = _load_graph(args.graph)
    h = hilbert.h_vector(g)
    w = hilbert.witness_monomial(g)
    payload = {"h": list(h), "reg": h.degree, "r": g.r,
               "max_reg": hilbert.has_max_regularity(g),
               "witness": str(w) if w is not None else None,
               "krull_dim": 1 + g.c}
    _emit(payload, cfg, " ".join(f"{k}={v}" for k, v in payload.items()))
    return EXIT_OK


def cmd_betti(args, cfg: RunConfig) -> int:
    g = _load_graph(args.graph)
    table = betti.graph_betti(g, cfg.prime, monomial_side=args.monomial_side)
    _emit({"betti": table.to_json(), "pretty": table.pretty()}, cfg, table.pretty())
    return EXIT_OK


def cmd_gorenstein(args, cfg: RunConfig) -> int:
    g = _load_graph(args.graph)
    verdicts = {}
    if args.method in ("criterion", "both"):
        verdicts["criterion"] = artinian.is_gorenstein_criterion(g)
    if args.method in ("socle", "both"):
        q = artinian.artinian_quotient(g, cfg.prime)
        dim = artinian.socle_dimension(q)
        verdicts["socle"] = dim == 1
        verdicts["socle_dim"] = dim
    payload = {"graph": g.to_json(), **verdicts}
    code = EXIT_OK
    if args.method == "both" and verdicts["criterion"] != verdicts["socle"]:
        payload["counterexample"] = {"graph": g.to_json(), "h": list(hilbert.h_vector(g)),
                                     "verdicts": verdicts}
        code = EXIT_COUNTEREXAMPLE
    _emit(payload, cfg, " ".join(f"{k}={v}" for k, v in verdicts.items()))
    return code


def cmd_groebner(args, cfg: RunConfig) -> int:
    data = _load_json(args.ideal)
    if not isinstance(data, dict):
        raise UsageError("ideal JSON must be an object")
    if "generators" in data:
        try:
            nvars = int(data["nvars"])
            gens = [parse_polynomial(s, nvars, cfg.prime) for s in data["generators"]]
        except (KeyError, ValueError) as exc:
            raise UsageError(f"bad ideal JSON: {exc}") from None
        gens = [f for f in gens if f]
        gb = groebner.buchberger(gens, nvars, cfg.prime)
    else:
        try:
            g = graph_from_json(data)
        except ValidationError:
            raise
        except (ValueError, TypeError) as exc:
            raise UsageError(f"bad ideal JSON: {exc}") from None
        pres = ideals.build_ideal(g, cfg.prime)
        if data.get("artinian"):
            pres = ideals.artinian_reduce(pres, g)
        gb = groebner.buchberger(pres.generators, pres.nvars, cfg.prime)
    basis = [str(f) for f in gb]
    payload = {"nvars": gb.nvars, "basis": basis,
               "leading_monomials": [str(m) for m in gb.leading_monomials()],
               "quadratic": groebner.is_quadratic(gb)}
    _emit(payload, cfg, "\n".join(basis))
    return EXIT_OK


def cmd_ideal(args, cfg: RunConfig) -> int:
    g = _load_graph(args.graph)
    pres = ideals.build_ideal(g, cfg.prime)
    if args.artinian:
        pres = ideals.artinian_reduce(pres, g)
    gens = [str(f) for f in pres.generators]
    payload = {"nvars": pres.nvars, "kind": pres.kind, "variables": list(pres.variables),
               "generators": gens}
    _emit(payload, cfg, "\n".join(gens))
    return EXIT_OK


def cmd_verify(args, cfg: RunConfig) -> int:
    reports = verify.run_suite(cfg.suite, cfg.n_max, cfg.prime, cfg.workers)
    ok = all(r.ok for r in reports)
    payload = {"ok": ok, "reports": [r.to_json(timings=args.timings) for r in reports]}
    if cfg.fmt == "json" and not cfg.out:
        for r in reports:
            print(r.summary(), file=sys.stderr)
    rows = [{k: v for k, v in r.to_json(timings=args.timings).items() if k != "notes"}
            for r in reports]
    _emit(payload, cfg, "\n".join(r.summary() for r in reports), rows)
    return EXIT_OK if ok else EXIT_COUNTEREXAMPLE


def build_parser() -> argparse.ArgumentParser:
    def global_flags(suppress: bool) -> argparse.ArgumentParser:
        # subcommand copies use SUPPRESS so they never clobber a value given earlier
        d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
        flags = argparse.ArgumentParser(add_help=False)
        flags.add_argument("--prime", type=int, default=d(DEFAULT_PRIME))
        flags.add_argument("--format", dest="fmt", choices=["json", "csv", "text"],
                           default=d("json"))
        flags.add_argument("--out", default=d(None), help="write output to this file")
        return flags

    common = global_flags(True)
    parser = argparse.ArgumentParser(
        prog="scrollideals", parents=[global_flags(False)],
        description="Binomial edge ideals of closed graphs on the 2 x n Hankel matrix")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_cmd(name, help_):
        p = sub.add_parser(name, help=help_, parents=[common])
        p.add_argument("--graph", required=True,
                       help="graph JSON inline, a file path, or - for stdin")
        return p

    p = graph_cmd("analyze", "full report for one graph")
    p.add_argument("--betti", action="store_true", help="include the Betti table")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("enumerate", help="list closed graphs on n vertices", parents=[common])
    p.add_argument("n", type=int)
    p.add_argument("--gorenstein-only", action="store_true")
    p.add_argument("--connected-only", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    graph_cmd("hilbert", "h-vector, regularity and witness").set_defaults(func=cmd_hilbert)

    p = graph_cmd("betti", "graded Betti numbers")
    p.add_argument("--monomial-side", action="store_true",
                   help="use the initial ideal instead of I_G")
    p.set_defaults(func=cmd_betti)

    p = graph_cmd("gorenstein", "Gorenstein verdicts")
    p.add_argument("--method", choices=["socle", "criterion", "both"], default="both")
    p.set_defaults(func=cmd_gorenstein)

    p = sub.add_parser("groebner", help="reduced Groebner basis", parents=[common])
    p.add_argument("--ideal", required=True,
                   help='{"nvars": k, "generators": [...]} or a graph JSON')
    p.set_defaults(func=cmd_groebner)

    p = graph_cmd("ideal", "generators of I_G")
    p.add_argument("--artinian", action="store_true")
    p.set_defaults(func=cmd_ideal)

    p = sub.add_parser("verify", help="run verification sweeps", parents=[common])
    p.add_argument("--suite", default="all",
                   choices=["maxreg", "gorenstein", "betti", "structural", "cross",
                            "enumeration", "fixtures", "all"])
    p.add_argument("--n-max", type=int, default=None)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--timings", action="store_true", help="include wall times in JSON")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        cfg = RunConfig(prime=args.prime, fmt=args.fmt, out=args.out,
                        n_max=getattr(args, "n_max", None),
                        suite=getattr(args, "suite", "all"),
                        seed=getattr(args, "seed", None),
                        workers=getattr(args, "workers", 1))
        return args.func(args, cfg)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValidationError as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
