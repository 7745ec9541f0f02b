"""Command-line driver.  ``mahonian --help`` lists the subcommands."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import bijections as bij
from . import statistics as st
from .errors import MahonianError, UnsupportedStatisticError
from .partitions import (
    block_repr, canonical_word, enumerate_partitions, format_blocks,
    mahonian_word, standard_arcs,
)
from .qpoly import carlitz_stirling, johnson_stirling
from .verify import (
    STATISTIC_NAMES, SWEEP_CLAIMS, DomainDescriptor, distribution,
    get_statistic, joint_distribution, stat_label, sweep,
)
from .words import (
    enumerate_pm, enumerate_with_tail, enumerate_words, format_word,
    parse_multiset, parse_word,
)

TABLE3_MULTISET = (2, 2, 2)
TABLE3_COLUMNS = ("INV", "MAJ", "MAJ_2", "Z", "2-MAJ", "DEN", "MAK", "MAD")


class UsageError(Exception):
    pass


def table3_rows() -> list[tuple[str, list[int]]]:
    rows = []
    for w in enumerate_pm(TABLE3_MULTISET):
        vals = [st.inv(w), st.maj(w), st.maj_d(w, 2), st.z_index(w), st.r_maj(w, 2),
                st.den(w), st.mak(w), st.mad(w)]
        rows.append((format_word(w), vals))
    return rows


def _emit(args, text_lines: Sequence[str], payload) -> None:
    if getattr(args, "json", False):
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


# --- subcommands --------------------------------------------------------

def cmd_stats(args) -> int:
    w = parse_word(args.word)
    if args.stat:
        val = get_statistic(args.stat, args.d, args.r)(w)
        _emit(args, [str(val)], {"word": format_word(w), stat_label(args.stat, args.d, args.r): val})
        return 0
    d = args.d or 2
    r = args.r or 2
    out = {}
    for name in STATISTIC_NAMES:
        out[stat_label(name, d, r)] = get_statistic(name, d, r)(w)
    _emit(args, [f"{k}\t{v}" for k, v in out.items()], {"word": format_word(w), **out})
    return 0


def cmd_map(args) -> int:
    w = parse_word(args.word)
    name = args.bijection
    cycles = None
    if name == "theta":
        if args.i is None:
            raise UsageError("theta needs --i")
        v = bij.theta(w, args.i)
    elif name == "jump":
        if args.x is None:
            raise UsageError("jump needs --x")
        v = bij.jump(w, args.x)
    elif name == "han-den":
        v, cycles = bij.han_den(w)
    elif name in bij.BIJECTIONS:
        if name == "foata-d" and args.d is None:
            raise UsageError("foata-d needs --d")
        if name == "rawlings" and args.r is None:
            raise UsageError("rawlings needs --r")
        v = bij.BIJECTIONS[name](w, d=args.d, r=args.r)
    else:
        raise UsageError(f"unknown bijection {name!r}; choose from "
                         + ", ".join(list(bij.BIJECTIONS) + ["theta", "jump"]))
    lines = [format_word(v)]
    payload = {"word": format_word(w), "image": format_word(v)}
    if cycles is not None and args.show_cycles:
        text = "".join(f"({format_word(c.top)}|{format_word(c.bottom)})" for c in cycles)
        lines.append(text)
        payload["cycles"] = [[format_word(c.top), format_word(c.bottom)] for c in cycles]
    _emit(args, lines, payload)
    return 0


def _partition_repr(p, how: str) -> str:
    if how == "mahonian":
        return format_word(mahonian_word(p))
    if how == "canonical":
        return format_word(canonical_word(p))
    if how == "block":
        return format_blocks(block_repr(p))
    arcs = sorted(standard_arcs(p).arcs)
    return " ".join(f"{a}-{b}" for a, b in arcs)


def cmd_enum(args) -> int:
    if args.what == "words":
        if args.multiset is None:
            raise UsageError("enum words needs --multiset")
        M = parse_multiset(args.multiset)
        it = enumerate_with_tail(M, parse_word(args.tail)) if args.tail else enumerate_words(M)
        items = [format_word(w) for w in it]
    else:
        if args.n is None:
            raise UsageError("enum partitions needs N")
        items = [_partition_repr(p, args.repr) for p in enumerate_partitions(args.n, args.blocks)]
    _emit(args, items, items)
    return 0


def _domain(args) -> DomainDescriptor:
    if args.domain in ("pm", "smtau"):
        if args.multiset is None:
            raise UsageError(f"--domain {args.domain} needs --multiset")
        M = parse_multiset(args.multiset)
        if args.domain == "pm":
            return DomainDescriptor.pm(M)
        if args.tail is None:
            return DomainDescriptor.words(M)
        return DomainDescriptor.fixed_tail(M, parse_word(args.tail))
    if args.n is None:
        raise UsageError("--domain pinm needs -n")
    return DomainDescriptor.partitions(args.n, args.m)


def cmd_dist(args) -> int:
    dom = _domain(args)
    if args.stat2:
        p = joint_distribution((args.stat, args.stat2), dom, d=args.d, r=args.r)
    else:
        p = distribution(args.stat, dom, d=args.d, r=args.r)
    _emit(args, [str(p)], {"domain": str(dom), "polynomial": str(p), "coefficients": p.to_dict()})
    return 0


def cmd_qstirling(args) -> int:
    f = carlitz_stirling if args.kind == "carlitz" else johnson_stirling
    p = f(args.n, args.m)
    _emit(args, [str(p)], {"kind": args.kind, "n": args.n, "m": args.m,
                           "polynomial": str(p), "coefficients": p.to_dict()})
    return 0


def cmd_table3(args) -> int:
    rows = table3_rows()
    lines = ["word\t" + "\t".join(TABLE3_COLUMNS)]
    lines += [w + "\t" + "\t".join(map(str, vals)) for w, vals in rows]
    _emit(args, lines, [{"word": w, **dict(zip(TABLE3_COLUMNS, vals))} for w, vals in rows])
    return 0


def cmd_verify(args) -> int:
    reports = sweep(args.claim, args.max_n)
    for rep in reports:
        print(rep.to_json() if args.json else rep.render())
    return 0 if all(r.passed for r in reports) else 1


# --- parser -------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mahonian",
                                description="Word statistics, Mahonian bijections and equidistribution checks.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("stats", help="evaluate statistics on a word")
    s.add_argument("word")
    s.add_argument("--stat")
    s.add_argument("--d", type=int)
    s.add_argument("--r", type=int)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_stats)

    s = sub.add_parser("map", help="apply a bijection or operator to a word")
    s.add_argument("bijection")
    s.add_argument("word")
    s.add_argument("--d", type=int)
    s.add_argument("--r", type=int)
    s.add_argument("--i", type=int)
    s.add_argument("--x", type=int)
    s.add_argument("--show-cycles", action="store_true")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_map)

    s = sub.add_parser("enum", help="enumerate words or set partitions")
    s.add_argument("what", choices=("words", "partitions"))
    s.add_argument("n", nargs="?", type=int)
    s.add_argument("--multiset")
    s.add_argument("--tail")
    s.add_argument("--blocks", type=int)
    s.add_argument("--repr", choices=("mahonian", "canonical", "block", "arcs"), default="mahonian")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_enum)

    s = sub.add_parser("dist", help="generating polynomial of a statistic over a domain")
    s.add_argument("--stat", required=True)
    s.add_argument("--stat2", help="second statistic for a joint (t, q) distribution")
    s.add_argument("--domain", choices=("pm", "smtau", "pinm"), required=True)
    s.add_argument("--multiset")
    s.add_argument("--tail")
    s.add_argument("-n", type=int)
    s.add_argument("-m", type=int)
    s.add_argument("--d", type=int)
    s.add_argument("--r", type=int)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_dist)

    s = sub.add_parser("qstirling", help="Carlitz or Johnson q-Stirling number")
    s.add_argument("--kind", choices=("carlitz", "johnson"), required=True)
    s.add_argument("-n", type=int, required=True)
    s.add_argument("-m", type=int, required=True)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_qstirling)

    s = sub.add_parser("table3", help="eight statistics on the 15 words of P_{1,1,2,2,3,3}")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_table3)

    s = sub.add_parser("verify", help="exhaustively check a family of claims")
    s.add_argument("claim", choices=SWEEP_CLAIMS)
    s.add_argument("--max-n", type=int, default=5)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args)
    except UnsupportedStatisticError as e:
        print(f"mahonian: {e}", file=sys.stderr)
        return 2
    except (UsageError, MahonianError, ValueError) as e:
        print(f"mahonian: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
