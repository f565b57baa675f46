"""Command-line front end.

Machine output is JSON on stdout; a one-line human summary goes to stderr.
Exit codes: 0 verified, 1 contract breach or failed verification, 2 bad input.
"""
from __future__ import annotations

import argparse
import os
import random
import sys
import time
from dataclasses import dataclass, field

from . import geometry as geo
from . import io as fio
from .hypergraph import (ContractError, Hypergraph, InputError, Regime, line_cf_ok, verify,
                         two_part_triples)
from .lists import respects_lists, cf_choose_intervals, um_from_lists_traced
from .online import (FirstFitLine, LeveledLine, LineSpace, OnlineFramework, UniMaxLine, UnitLine)
from .oracle import DEFAULT_CAP, exact_min
from .static import (aux_alternating, aux_block, aux_chain, aux_cyclic, aux_delaunay, aux_greedy,
                     kcf_framework, kcf_via_admissible, kscf_framework, um_framework)

SEED_ENV = "CFCOLOR_SEED"


@dataclass
class RunReport:
    algorithm: str
    input: dict
    coloring: list
    verification: dict
    verified: bool
    seed: int | None = None
    trace: list | None = None
    extra: dict = field(default_factory=dict)
    wall_time: float = 0.0

    def to_json(self) -> dict:
        colors = [c for c in self.coloring if c is not None]
        out = {
            "algorithm": self.algorithm,
            "input": self.input,
            "coloring": self.coloring,
            "colors_used": len(set(colors)),
            "max_color": max(colors, default=0),
            "verification": self.verification,
            "verified": self.verified,
            "seed": self.seed,
            "trace": self.trace,
            "wall_time": self.wall_time,
        }
        out.update(self.extra)
        return out


def _seed(args, required: bool) -> int | None:
    if args.seed is not None:
        return args.seed
    env = os.environ.get(SEED_ENV)
    if env is not None:
        try:
            return int(env)
        except ValueError as exc:
            raise InputError(f"{SEED_ENV} must be an integer, got {env!r}") from exc
    if required:
        raise InputError(f"this algorithm is randomized: pass --seed or set {SEED_ENV}")
    return None


def _regime(kind: str, k: int | None) -> Regime:
    return Regime(kind, k if kind.startswith("k-") else None)


def _checks(h, colors, regimes, allow_zero=False) -> dict:
    out = {}
    for r in regimes:
        if isinstance(h, Hypergraph):
            out[str(r)] = verify(h, colors, r, allow_zero)
        else:
            out[str(r)] = verify(h, colors, r)
    return out


def _describe(h) -> dict:
    if isinstance(h, Hypergraph):
        return {"n": h.n, "m": h.m}
    return {"n": h.n, "space": type(h).__name__}


# --- build ----------------------------------------------------------------------------

BUILD_KINDS = ("intervals", "points-intervals", "unit-intervals", "points-discs", "discs",
               "rects", "points-rects", "staircase", "antenna", "collinear-discs", "two-part",
               "path-hypergraph", "neighborhood")


def _need(args, attr: str):
    value = getattr(args, attr)
    if value is None:
        flag = "--in" if attr == "input" else f"--{attr}"
        raise InputError(f"{args.command} {getattr(args, 'kind', None) or args.algo} needs {flag}")
    return value


def build(args) -> Hypergraph:
    kind = args.kind
    if kind == "intervals":
        return geo.discrete_intervals(_need(args, "n"))
    if kind == "two-part":
        return two_part_triples(_need(args, "n"))
    if kind == "staircase":
        return geo.rects_hypergraph(geo.staircase_squares(_need(args, "n")))
    if kind == "collinear-discs":
        return geo.discs_hypergraph(geo.collinear_discs(_need(args, "n")))
    if kind == "antenna":
        return geo.discs_hypergraph(geo.antenna_discs())
    path = _need(args, "input")
    if kind == "points-intervals":
        return geo.points_vs_intervals(fio.read_numbers(path))
    if kind == "unit-intervals":
        return geo.unit_interval_hypergraph(fio.read_numbers(path))
    if kind == "points-discs":
        return geo.points_vs_discs(fio.read_points(path))
    if kind == "discs":
        return geo.discs_hypergraph(fio.read_discs(path))
    if kind == "rects":
        return geo.rects_hypergraph(fio.read_rects(path))
    if kind == "points-rects":
        return geo.points_vs_rects(fio.read_points(path))
    if kind == "path-hypergraph":
        return geo.path_hypergraph(fio.load_graph(path))
    return geo.neighborhood_hypergraph(fio.load_graph(path), pointed=args.pointed)


def cmd_build(args):
    h = build(args)
    return h.to_json(), f"built {args.kind}: n={h.n}, m={h.m}", 0


# --- static coloring ----------------------------------------------------------------------

AUX = ("greedy", "delaunay", "alt-interval", "chain", "block", "cyclic")


def _aux(name: str, k: int | None):
    if name == "greedy":
        return aux_greedy()
    if name == "delaunay":
        return aux_delaunay()
    if name == "alt-interval":
        return aux_alternating()
    if name == "chain":
        return aux_chain()
    if k is None:
        raise InputError(f"--aux {name} needs --k")
    return aux_block(k) if name == "block" else aux_cyclic(k)


def _instance(args):
    if (args.input is None) == (args.points is None):
        raise InputError("give exactly one of --in (hypergraph JSON) or --points (CSV)")
    if args.points is not None:
        return geo.PointRectSpace(fio.read_points(args.points)), {"points": args.points}
    return fio.load_hypergraph(args.input), {"hypergraph": args.input}


def cmd_color(args):
    h, desc = _instance(args)
    k = args.k
    seed = _seed(args, required=args.algo == "kcf-admissible")
    trace = None
    if args.algo == "um":
        colors, tr = um_framework(h, _aux(args.aux, k))
        target, trace = Regime("um"), tr.to_json()
    elif args.algo == "kcf":
        k = _need(args, "k")
        colors, tr = kcf_framework(h, _aux(args.aux, k), k)
        target, trace = Regime("k-cf", k), tr.to_json()
    elif args.algo == "kscf":
        k = _need(args, "k")
        colors, tr = kscf_framework(h, _aux(args.aux, k), k)
        target, trace = Regime("k-scf", k - 1), tr.to_json()
    else:
        k = _need(args, "k")
        if not isinstance(h, Hypergraph):
            raise InputError("kcf-admissible needs an explicit hypergraph (--in)")
        colors = kcf_via_admissible(h, k, seed=seed)
        target = Regime("k-cf", k)
    regimes = [target] + [r for r in (Regime("proper"), Regime("cf"), Regime("um")) if r != target]
    if not isinstance(h, Hypergraph):
        regimes = [target] + [r for r in regimes[1:] if r.kind in ("proper", "um")]
    checks = _checks(h, colors, regimes)
    report = RunReport(f"{args.algo}/{args.aux}" if args.algo != "kcf-admissible" else args.algo,
                       {**desc, **_describe(h)}, list(colors), checks, checks[str(target)],
                       seed=seed, trace=trace, extra={"regime": str(target)})
    return report, None, None


# --- list coloring --------------------------------------------------------------------------

def cmd_list_color(args):
    lists = fio.load_lists(args.lists)
    extra = {}
    if args.algo == "cf-intervals":
        n = len(lists) if args.n is None else args.n
        h = geo.discrete_intervals(n)
        colors = cf_choose_intervals(n, lists)
        target = Regime("cf")
        desc = {"intervals": n, "lists": args.lists}
    else:
        h = fio.load_hypergraph(_need(args, "input"))
        k = _need(args, "k")
        aux = _aux(args.aux, None) if args.aux else None
        colors, pots = um_from_lists_traced(h, lists, k, aux)
        target = Regime("um")
        extra["potentials"] = [str(p) for p in pots]
        desc = {"hypergraph": args.input, "lists": args.lists}
    checks = _checks(h, colors, [target])
    checks["respects_lists"] = respects_lists(colors, lists)
    ok = checks[str(target)] and checks["respects_lists"]
    return RunReport(args.algo, {**desc, **_describe(h)}, list(colors), checks, ok,
                     extra=extra), None, None


# --- online ------------------------------------------------------------------------------------

ONLINE = ("unimax", "firstfit", "leveled", "unit", "framework")


def cmd_online(args):
    positions = fio.read_script(args.script)
    seed = _seed(args, required=args.algo == "framework")
    check = not args.no_check
    if args.algo == "framework":
        state = OnlineFramework(LineSpace(), args.h, seed=seed, check=check)
    else:
        state = {"unimax": UniMaxLine, "firstfit": FirstFitLine, "leveled": LeveledLine,
                 "unit": UnitLine}[args.algo](check=check)
    for p in positions:
        state.insert(p)
    colors = list(state.colors())
    pos = sorted(positions)
    if args.algo in ("unimax", "framework"):
        target = Regime("um")
        checks = {"um": verify(geo.points_vs_intervals(pos), colors, target)}
    elif args.algo == "unit":
        target = Regime("cf")
        checks = {"cf": verify(geo.unit_interval_hypergraph(pos), colors, target, allow_zero=True)}
    else:
        target = Regime("cf")
        checks = {"cf": line_cf_ok(colors)}
    extra = {"positions": [str(p) for p in pos]}
    if isinstance(state, LeveledLine):
        extra["pairs"] = [list(p) for p in state.pairs]
    report = RunReport(args.algo, {"script": args.script, "n": len(positions)}, colors, checks,
                       checks[target.kind], seed=seed, trace=[s.to_json() for s in state.steps],
                       extra=extra)
    return report, None, None


# --- oracle / verify ----------------------------------------------------------------------------

def cmd_oracle(args):
    h = fio.load_hypergraph(args.input)
    regime = _regime(args.regime, args.k)
    res = exact_min(h, regime, budget=args.budget, cap=args.cap)
    checks = {}
    if res.witness is not None:
        checks[str(regime)] = verify(h, res.witness, regime)
    ok = bool(checks) and all(checks.values())
    report = RunReport(f"oracle/{regime}", {"hypergraph": args.input, **_describe(h)},
                       list(res.witness or ()), checks, ok,
                       extra={"value": res.value, "lower_bound": res.lower_bound})
    return report, None, None


def cmd_verify(args):
    h = fio.load_hypergraph(args.input)
    colors = fio.load_coloring(args.coloring)
    regime = _regime(args.regime, args.k)
    checks = {str(regime): verify(h, colors, regime, allow_zero=args.allow_zero)}
    report = RunReport("verify", {"hypergraph": args.input, "coloring": args.coloring,
                                  **_describe(h)}, list(colors), checks, checks[str(regime)])
    return report, None, None


# --- bench ------------------------------------------------------------------------------------------

def cmd_bench(args):
    seed = _seed(args, required=True)
    rng = random.Random(seed)
    rows = []

    def timed(task, n, fn):
        t0 = time.perf_counter()
        colors = fn()
        rows.append({"task": task, "n": n, "max_color": max(colors, default=0),
                     "wall_time": time.perf_counter() - t0})

    for n in args.sizes:
        order = list(range(n))
        rng.shuffle(order)

        def online(cls):
            s = cls(check=False)
            for p in order:
                s.insert(p)
            return s.colors()

        timed("um-framework/alt-interval", n,
              lambda: um_framework(geo.discrete_intervals(n), aux_alternating())[0])
        timed("online/unimax", n, lambda: online(UniMaxLine))
        timed("online/leveled", n, lambda: online(LeveledLine))

        def framework():
            f = OnlineFramework(LineSpace(), 3, seed=rng.randrange(2 ** 32), check=False)
            for p in order:
                f.insert(p)
            return f.colors()

        timed("online/framework-h3", n, framework)
        if n <= 16:
            timed("oracle/cf-intervals", n,
                  lambda: exact_min(geo.discrete_intervals(n), Regime("cf")).witness)
    return {"bench": rows, "seed": seed}, f"bench: {len(rows)} tasks", 0


# --- entry point ----------------------------------------------------------------------------------

def parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cfcolor", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="build a hypergraph JSON")
    b.add_argument("--kind", choices=BUILD_KINDS, required=True)
    b.add_argument("--n", type=int)
    b.add_argument("--in", dest="input")
    b.add_argument("--pointed", action="store_true", help="neighborhoods exclude the vertex")
    b.set_defaults(func=cmd_build)

    c = sub.add_parser("color", help="static coloring frameworks")
    c.add_argument("--algo", choices=("um", "kcf", "kscf", "kcf-admissible"), required=True)
    c.add_argument("--aux", choices=AUX, default="greedy")
    c.add_argument("--in", dest="input")
    c.add_argument("--points", help="CSV points, colored w.r.t. axis-parallel rectangles")
    c.add_argument("--k", type=int)
    c.add_argument("--seed", type=int)
    c.set_defaults(func=cmd_color)

    lc = sub.add_parser("list-color", help="coloring from per-vertex lists")
    lc.add_argument("--algo", choices=("cf-intervals", "um-potential"), required=True)
    lc.add_argument("--lists", required=True)
    lc.add_argument("--in", dest="input")
    lc.add_argument("--n", type=int)
    lc.add_argument("--k", type=int)
    lc.add_argument("--aux", choices=AUX[:4])
    lc.set_defaults(func=cmd_list_color)

    o = sub.add_parser("online", help="online coloring of points on a line")
    o.add_argument("--algo", choices=ONLINE, required=True)
    o.add_argument("--script", required=True)
    o.add_argument("--h", type=int, default=3)
    o.add_argument("--seed", type=int)
    o.add_argument("--no-check", action="store_true", help="skip per-step self-checks")
    o.set_defaults(func=cmd_online)

    orc = sub.add_parser("oracle", help="exact minimum number of colors")
    orc.add_argument("--in", dest="input", required=True)
    orc.add_argument("--regime", choices=Regime.KINDS, required=True)
    orc.add_argument("--k", type=int)
    orc.add_argument("--budget", type=int)
    orc.add_argument("--cap", type=int, default=DEFAULT_CAP)
    orc.set_defaults(func=cmd_oracle)

    v = sub.add_parser("verify", help="check a coloring")
    v.add_argument("--in", dest="input", required=True)
    v.add_argument("--coloring", required=True)
    v.add_argument("--regime", choices=Regime.KINDS, required=True)
    v.add_argument("--k", type=int)
    v.add_argument("--allow-zero", action="store_true")
    v.set_defaults(func=cmd_verify)

    be = sub.add_parser("bench", help="time a fixed set of tasks")
    be.add_argument("--sizes", type=int, nargs="+", default=[16, 64, 256])
    be.add_argument("--seed", type=int)
    be.set_defaults(func=cmd_bench)
    return p


def main(argv=None) -> int:
    args = parser().parse_args(argv)
    t0 = time.perf_counter()
    try:
        out, summary, code = args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ContractError as exc:
        print(f"contract breach: {exc}", file=sys.stderr)
        return 1
    if isinstance(out, RunReport):
        out.wall_time = time.perf_counter() - t0
        code = 0 if out.verified else 1
        summary = (f"{out.algorithm}: {len(set(out.coloring))} colors, "
                   f"{'verified' if out.verified else 'NOT verified'} {out.verification}")
        out = out.to_json()
    print(fio.dump_json(out))
    print(summary, file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
