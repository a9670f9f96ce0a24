"""Command-line interface.

Exit codes: 0 holds / success, 1 fails (or a sweep found a counterexample),
2 not applicable, 3 input error, 64 bad usage.
"""
from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from pathlib import Path

from . import remarks
from .builder import FACTOR_CAP, find_factor, verify_certificate
from .errors import GraphError, TooLarge
from .factors import (
    check_thm11,
    check_thm13,
    check_thm14,
    check_thm15,
    deficiency,
)
from .graph import (
    Graph,
    extremal_G1,
    extremal_remark31,
    extremal_remark41,
    extremal_remark51,
    parse_graph6,
    read_graph_text,
    write_graph6,
)
from .spectral import DEFAULT_TOL, check_thm12, laplacian_spectrum
from .trees import enumerate_catalog, to_dot
from .verdict import ConditionVerdict

EXIT_HOLDS, EXIT_FAILS, EXIT_NA, EXIT_INPUT, EXIT_USAGE = 0, 1, 2, 3, 64


class UsageError(Exception):
    pass


class Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_source(p: argparse.ArgumentParser) -> None:
    p.add_argument("--graph6", help="graph in graph6 form (takes precedence over --file)")
    p.add_argument("--file", help="file holding an edge list ('n m' then 'u v' lines) or a graph6 line")


def _load(args) -> Graph:
    if args.graph6 is not None:
        return parse_graph6(args.graph6)
    if args.file is not None:
        return read_graph_text(Path(args.file).read_text())
    raise UsageError("one of --graph6 or --file is required")


def _emit(args, payload: dict, text: str) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True) if args.json else text)


def _verdict_text(v: ConditionVerdict) -> str:
    if not v.applicable:
        return f"{v.theorem}: not applicable ({v.reason})"
    status = "holds" if v.holds else "fails"
    details = " ".join(f"{key}={_fmt(val)}" for key, val in v.witness.items())
    return f"{v.theorem}: condition {status}  {details}".rstrip()


def _fmt(x):
    return f"{x:.12g}" if isinstance(x, float) else x


def run_check(g: Graph, thm: int, k: int, t: int | None, tol: float) -> ConditionVerdict:
    if thm == 11:
        return check_thm11(g, k)
    if thm == 12:
        return check_thm12(g, k, tol)
    if thm == 13:
        if t is None:
            raise UsageError("--thm 13 needs --t")
        return check_thm13(g, k, t)
    if thm == 14:
        return check_thm14(g, k)
    return check_thm15(g, k)


def cmd_check(args) -> int:
    g = _load(args)
    v = run_check(g, args.thm, args.k, args.t, args.tol)
    text = _verdict_text(v)
    if v.theorem == "T11":
        text += "\nfactor exists" if v.holds else "\nNO FACTOR"
    _emit(args, v.to_dict(), text)
    if not v.applicable:
        return EXIT_NA
    return EXIT_HOLDS if v.holds else EXIT_FAILS


def cmd_deficiency(args) -> int:
    rep = deficiency(_load(args), args.k)
    _emit(args, rep.to_dict(),
          f"deficiency {rep.value} at S={sorted(rep.best_set)} (i(G-S)={rep.isolated}, k={rep.k})")
    return EXIT_HOLDS


def cmd_factor(args) -> int:
    g = _load(args)
    cert = find_factor(g, args.k, enumerate_catalog(args.k, max(g.n, 1)))
    if cert is None:
        rep = deficiency(g, args.k)
        _emit(args, {"factor": None, "deficiency": rep.to_dict()},
              f"NO FACTOR\nviolating S={sorted(rep.best_set)}: "
              f"2*{rep.isolated} - {2 * args.k + 1}*{len(rep.best_set)} = {rep.value} > 0")
        return EXIT_FAILS
    lines = []
    for b in cert.blocks:
        kind = f"K_1,{b.label}" if b.kind == "star" else f"T{b.label}"
        lines.append(f"{kind}  vertices={sorted(b.vertices)}  edges={[list(e) for e in b.edges]}")
    _emit(args, {"factor": cert.to_dict()}, "\n".join(lines))
    return EXIT_HOLDS


def cmd_catalog(args) -> int:
    cat = enumerate_catalog(args.k, args.max_order)
    if args.dot:
        out = Path(args.dot)
        out.mkdir(parents=True, exist_ok=True)
        for order, codes in cat.members.items():
            for i, code in enumerate(codes):
                name = f"T_k{args.k}_n{order}_{i}"
                (out / f"{name}.dot").write_text(to_dot(cat.trees[code], name))
    payload = {"k": cat.k, "max_order": cat.max_order,
               "members": {str(o): codes for o, codes in cat.members.items()}}
    text = "\n".join(f"order {o}: {len(c)}" for o, c in cat.members.items()) or "no members"
    _emit(args, payload, text)
    return EXIT_HOLDS


def cmd_spectrum(args) -> int:
    spec = laplacian_spectrum(_load(args), args.tol)
    vals = [0.0 if abs(v) <= spec.tol else v for v in spec.values]
    _emit(args, {"eigenvalues": vals, "tol": spec.tol}, "\n".join(f"{v:.12g}" for v in vals))
    return EXIT_HOLDS


def cmd_extremal(args) -> int:
    def need(*names):
        missing = [f"--{n}" for n in names if getattr(args, n) is None]
        if missing:
            raise UsageError(f"extremal {args.kind} needs {' '.join(missing)}")

    try:
        if args.kind == "r31":
            need("n", "t")
            g, check = extremal_remark31(args.n, args.k, args.t), lambda: remarks.verify_remark31(args.n, args.k, args.t)
        elif args.kind == "r41":
            need("delta")
            g, check = extremal_remark41(args.k, args.delta), lambda: remarks.verify_remark41(args.k, args.delta)
        elif args.kind == "r51":
            need("t")
            g, check = extremal_remark51(args.k, args.t), lambda: remarks.verify_remark51(args.k, args.t)
        else:
            need("n", "s")
            g, check = extremal_G1(args.n, args.k, args.s), lambda: remarks.verify_g1(args.n, args.k, args.s)
    except GraphError as exc:
        raise UsageError(str(exc)) from exc
    print(write_graph6(g))
    if not args.verify:
        return EXIT_HOLDS
    rows = check()
    for name, ok, detail in rows:
        print(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}", file=sys.stderr)
    return EXIT_HOLDS if all(ok for _, ok, _ in rows) else EXIT_FAILS


# -- sweep ------------------------------------------------------------------

@dataclass
class SweepReport:
    k: int
    rows: list[dict] = field(default_factory=list)
    counts: dict = field(default_factory=dict)

    @property
    def counterexamples(self) -> int:
        return self.counts.get("counterexamples", 0)

    def to_dict(self) -> dict:
        return asdict(self)


def _sufficient_checks(g: Graph, k: int, tol: float) -> list[ConditionVerdict]:
    out = [check_thm12(g, k, tol)]
    out += [check_thm13(g, k, t) for t in range(1, k)]
    out += [check_thm14(g, k), check_thm15(g, k)]
    return out


def _key(v: ConditionVerdict) -> str:
    return f"T13_t{v.witness['t']}" if v.theorem == "T13" else v.theorem


@lru_cache(maxsize=None)
def _catalog(k: int, max_order: int):
    return enumerate_catalog(k, max_order)


def sweep_row(job: tuple[int, str, int, float]) -> dict:
    lineno, text, k, tol = job
    try:
        g = parse_graph6(text)
        rep = deficiency(g, k)
        verdicts = _sufficient_checks(g, k, tol)
        found = None
        if g.n <= FACTOR_CAP:
            cat = _catalog(k, max(g.n, 1))
            cert = find_factor(g, k, cat)
            found = cert is not None
            if cert is not None and not verify_certificate(g, k, cert, cat)[0]:
                found = False
    except (GraphError, TooLarge) as exc:
        return {"line": lineno, "graph6": text, "error": str(exc)}
    has = rep.value == 0
    return {
        "line": lineno, "graph6": text, "n": g.n, "m": g.m,
        "deficiency": rep.value, "has_factor": has, "factor_found": found,
        "verdicts": {_key(v): {"applicable": v.applicable, "holds": v.holds} for v in verdicts},
        "counterexample": any(v.implies_factor for v in verdicts) and not has,
        "disagreement": found is not None and found != has,
    }


def sweep(lines: list[str], k: int, tol: float = DEFAULT_TOL, jobs: int = 1) -> SweepReport:
    work = [(i + 1, ln.strip(), k, tol) for i, ln in enumerate(lines) if ln.strip()]
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            rows = list(pool.map(sweep_row, work, chunksize=64))
    else:
        rows = [sweep_row(w) for w in work]
    rep = SweepReport(k, rows)
    good = [r for r in rows if "error" not in r]
    per = {}
    for r in good:
        for name, v in r["verdicts"].items():
            c = per.setdefault(name, {"applicable": 0, "holds": 0, "holds_with_factor": 0})
            c["applicable"] += v["applicable"]
            c["holds"] += bool(v["holds"])
            c["holds_with_factor"] += bool(v["holds"]) and r["has_factor"]
    rep.counts = {
        "graphs": len(good), "errors": len(rows) - len(good),
        "with_factor": sum(r["has_factor"] for r in good),
        "counterexamples": sum(r["counterexample"] for r in good),
        "disagreements": sum(r["disagreement"] for r in good),
        "per_condition": dict(sorted(per.items())),
    }
    return rep


def cmd_sweep(args) -> int:
    rep = sweep(Path(args.path).read_text().splitlines(), args.k, args.tol, args.jobs)
    c = rep.counts
    if args.json:
        print(json.dumps(rep.to_dict(), sort_keys=True))
    else:
        for r in rep.rows:
            if "error" in r:
                print(f"line {r['line']}: ERROR {r['error']}")
        print(f"graphs={c['graphs']} errors={c['errors']} with_factor={c['with_factor']} "
              f"counterexamples={c['counterexamples']} disagreements={c['disagreements']}")
        for name, d in c["per_condition"].items():
            print(f"  {name}: applicable={d['applicable']} holds={d['holds']} "
                  f"holds_with_factor={d['holds_with_factor']}")
    if c["counterexamples"] or c["disagreements"]:
        return EXIT_FAILS
    return EXIT_INPUT if c["errors"] else EXIT_HOLDS


def build_parser() -> Parser:
    ap = Parser(prog="compfactor", description="Star/tree component factors of small graphs.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=Parser)

    p = sub.add_parser("check", help="evaluate one criterion")
    p.add_argument("--thm", type=int, choices=[11, 12, 13, 14, 15], required=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--t", type=int)
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--json", action="store_true")
    _add_source(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("deficiency", help="maximum of 2 i(G-S) - (2k+1)|S|")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--json", action="store_true")
    _add_source(p)
    p.set_defaults(func=cmd_deficiency)

    p = sub.add_parser("factor", help="construct a factor certificate")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--json", action="store_true")
    _add_source(p)
    p.set_defaults(func=cmd_factor)

    p = sub.add_parser("catalog", help="enumerate the tree family")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--max-order", type=int, required=True)
    p.add_argument("--dot", help="directory for one DOT file per member")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("extremal", help="emit an extremal graph as graph6")
    p.add_argument("kind", choices=["r31", "r41", "r51", "g1"])
    p.add_argument("-n", type=int)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--t", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--delta", type=int)
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=cmd_extremal)

    p = sub.add_parser("spectrum", help="Laplacian eigenvalues, descending")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--json", action="store_true")
    _add_source(p)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("sweep", help="run every check over a graph6 file")
    p.add_argument("path")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_sweep)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if getattr(args, "k", None) is not None and args.k < 2:
        ap.exit(EXIT_USAGE, "compfactor: error: k must be >= 2\n")
    try:
        return args.func(args)
    except UsageError as exc:
        ap.exit(EXIT_USAGE, f"compfactor: error: {exc}\n")
    except (GraphError, TooLarge, OSError) as exc:
        print(f"compfactor: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
