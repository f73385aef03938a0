"""Command-line interface.

Subcommands: gen, analyze, transform, verify, family.  Exit codes:
0 success, 1 property refuted, 2 configuration error, 3 resource cap
exceeded.  Analyses emit TSV or JSON; --plot additionally renders a
matplotlib figure next to the delimited output.
"""

from __future__ import annotations

import argparse
import inspect
import json
import os
import sys
from fractions import Fraction

from . import abelian, structure, transforms
from .errors import ConfigError, DomainError, ResourceCapError
from .exactnum import parse_slope, render_slope
from .family import construct_family, verify_distinct
from .specs import exact_slope, parse_morphism, parse_spec
from .sturmian import DirectiveSequence
from .transforms import SqueezeParams
from .verify import SUITES

DEFAULT_CAP = int(os.environ.get("ABWORDS_MAX_STATES", 10 ** 6))


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_gen(args) -> int:
    spec = parse_spec(args.spec)
    _emit(spec.prefix(args.length) + "\n", args.out)
    return 0


def cmd_analyze(args) -> int:
    spec = parse_spec(args.spec)
    n = args.window
    what = args.what
    if what == "corridor":
        prof = abelian.corridor_profile(spec, n, args.sample)
        _emit(prof.to_tsv(), args.out)
        if args.plot:
            from .plots import plot_corridor
            plot_corridor(prof, args.plot)
    elif what == "complexity":
        values = [structure.factor_complexity(spec, k, args.sample or 4 * n)
                  for k in range(1, n + 1)]
        lines = ["n\tcomplexity"] + [f"{k}\t{v}" for k, v in
                                     enumerate(values, 1)]
        _emit("\n".join(lines) + "\n", args.out)
        if args.plot:
            from .plots import plot_complexity
            plot_complexity(values, args.plot)
    elif what == "balance":
        c = abelian.balance_coefficient(spec, n, args.sample)
        pair = abelian.shortest_unbalanced_pair(spec, n, args.sample)
        data = {"balance": c,
                "unbalanced_pair": None if pair is None else
                {"palindrome": pair[0], "length": pair[1]},
                "window": n}
        _emit(json.dumps(data, indent=2) + "\n", args.out)
    elif what == "frequency":
        fb = abelian.frequency_bounds(spec, n, args.sample)
        lines = ["n\tlower\tupper"]
        for k in range(1, n + 1):
            lines.append(f"{k}\t{fb.lower[k - 1]}\t{fb.upper[k - 1]}")
        _emit("\n".join(lines) + "\n", args.out)
        if args.plot:
            from .plots import plot_frequency
            plot_frequency(fb, args.plot)
    elif what == "graph":
        slope = exact_slope(spec)
        _emit(structure.word_graph_tsv(spec, n, slope), args.out)
        if args.plot:
            from .plots import plot_word_graph
            plot_word_graph(structure.word_graph(spec, n), args.plot,
                            None if slope is None else float(slope))
    elif what == "rauzy":
        g = structure.rauzy_graph(spec, args.order, args.sample)
        _emit(g.to_dot(), args.out)
    elif what == "special":
        sf = structure.special_factors(spec, args.order, args.sample)
        data = {"order": args.order,
                "left": sorted(sf.left), "right": sorted(sf.right),
                "bispecial": sorted(sf.bispecial)}
        _emit(json.dumps(data, indent=2) + "\n", args.out)
    elif what == "returns":
        if not args.factor:
            raise ConfigError("--factor is required for return words")
        rw = structure.return_words(spec, args.factor, args.sample)
        _emit("\n".join(sorted(rw)) + "\n", args.out)
    elif what == "closure":
        if not hasattr(spec, "word"):
            raise ConfigError("closure analysis needs a periodic spec")
        members = abelian.closure_of_periodic(spec.word, DEFAULT_CAP)
        _emit("\n".join(sorted(members)) + "\n", args.out)
    else:
        raise ConfigError(f"unknown analysis: {what!r}")
    return 0


def cmd_transform(args) -> int:
    spec = parse_spec(args.spec)
    n = args.length
    if args.op == "traffic":
        out = transforms.traffic_T(spec, n)
    elif args.op == "shift-traffic":
        out = transforms.traffic_F(spec, n)
    elif args.op == "squeeze":
        if args.slope is None:
            slope = exact_slope(spec)
            if slope is None:
                raise ConfigError("spec has no exact slope; pass --slope")
        else:
            slope = parse_slope(args.slope)
        offset = parse_slope(args.offset) if args.offset else Fraction(1, 2)
        out = transforms.squeeze(
            spec, SqueezeParams(slope, offset, args.two_sided), n)
    elif args.op == "morphism":
        if not args.morphism:
            raise ConfigError("--morphism is required")
        f = parse_morphism(args.morphism)
        src = spec.prefix(max(1, n // max(1, min(len(f.image0),
                                                 len(f.image1)))) + 1)
        out = f(src)[:n]
    elif args.op == "isolate":
        res = transforms.iterate_F_until_isolated(spec, n)
        if res.iterations is None:
            raise ResourceCapError("1s not isolated within the cap")
        out = res.window
    else:
        raise ConfigError(f"unknown transform: {args.op!r}")
    _emit(out + "\n", args.out)
    return 0


def cmd_verify(args) -> int:
    if args.suite == "all":
        names = sorted(SUITES)
    else:
        if args.suite not in SUITES:
            raise ConfigError(
                f"unknown verification suite: {args.suite!r}; available: "
                f"{', '.join(sorted(SUITES))} or 'all'")
        names = [args.suite]
    failed = False
    for name in names:
        fn = SUITES[name]
        kwargs = {"seed": args.seed}
        sig = inspect.signature(fn)
        if args.window and "n_max" in sig.parameters:
            kwargs["n_max"] = args.window
        res = fn(**kwargs)
        print(("pass" if res.passed else "FAIL") + f" {name}")
        if args.verbose or not res.passed:
            for line in res.details:
                print("  " + line)
        failed = failed or not res.passed
    return 1 if failed else 0


def cmd_family(args) -> int:
    spec = parse_spec(args.spec)
    stages = construct_family(spec, args.depth, args.window)
    rep = verify_distinct(stages)
    data = {
        "stages": [
            {"index": s.index, "z_length": len(s.z_window),
             "x_length": len(s.x_window),
             "pair": list(s.pair) if s.pair and max(map(len, s.pair)) <= 80
             else None,
             "pair_length": s.pair_length}
            for s in stages],
        "growth": rep.growth,
        "distinct": rep.ok,
    }
    _emit(json.dumps(data, indent=2) + "\n", args.out)
    return 0 if rep.ok else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="abwords",
        description="Abelian corridor analysis for binary infinite words")
    p.add_argument("--seed", type=int, default=0,
                   help="seed for randomized suites")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="emit a prefix of a word spec")
    g.add_argument("spec")
    g.add_argument("--length", type=int, required=True)
    g.add_argument("--out")
    g.set_defaults(fn=cmd_gen)

    a = sub.add_parser("analyze", help="corridor and factor-structure reports")
    a.add_argument("spec")
    a.add_argument("--what", required=True,
                   choices=["corridor", "complexity", "balance", "frequency",
                            "graph", "rauzy", "special", "returns", "closure"])
    a.add_argument("--window", type=int, default=64)
    a.add_argument("--sample", type=int)
    a.add_argument("--order", type=int, default=3,
                   help="factor length for rauzy/special analyses")
    a.add_argument("--factor", help="factor for return-word analysis")
    a.add_argument("--out")
    a.add_argument("--plot", help="also render a figure to this path")
    a.set_defaults(fn=cmd_analyze)

    t = sub.add_parser("transform", help="apply a transformation to a word")
    t.add_argument("spec")
    t.add_argument("--op", required=True,
                   choices=["traffic", "shift-traffic", "squeeze", "morphism",
                            "isolate"])
    t.add_argument("--length", type=int, required=True)
    t.add_argument("--slope")
    t.add_argument("--offset")
    t.add_argument("--two-sided", action="store_true")
    t.add_argument("--morphism")
    t.add_argument("--out")
    t.set_defaults(fn=cmd_transform)

    v = sub.add_parser("verify", help="run a named property suite")
    v.add_argument("suite")
    v.add_argument("--spec", help="accepted for compatibility; suites pin "
                   "their own specs")
    v.add_argument("--window", type=int)
    v.add_argument("--verbose", action="store_true")
    v.set_defaults(fn=cmd_verify)

    f = sub.add_parser("family", help="recursive in-closure family")
    f.add_argument("spec", nargs="?", default="morphic:0->001111,1->0:0")
    f.add_argument("--depth", type=int, default=3)
    f.add_argument("--window", type=int, default=1 << 16)
    f.add_argument("--out")
    f.set_defaults(fn=cmd_family)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ConfigError, DomainError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except ResourceCapError as e:
        print(f"resource cap: {e}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
