"""Command line entry point: ``thinpos {width,search,oracle,validate,bound}``.

Exit codes: 0 success, 1 bad input, 2 internal inconsistency.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .errors import InputError, InternalError, InternalInconsistency
from .instance_io import parse_instance, validate_file
from .morse import (
    MorseWord,
    bridge_number,
    is_bridge_position,
    profile,
    thin_thick_levels,
    width_graph,
)
from .report import build_report, format_json, format_table
from .search import lower_bound_thick, oracle_search, search, thick_level_lower_bound


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def cmd_width(args, out):
    text = sys.stdin.read() if args.wordfile == "-" else Path(args.wordfile).read_text()
    word = MorseWord.parse(text)
    prof = profile(word)
    print(f"width            {width_graph(word)}", file=out)
    print(f"profile          {' '.join(map(str, prof.counts)) or '-'}", file=out)
    bridge = is_bridge_position(word)
    print(f"bridge position  {'yes' if bridge else 'no'}", file=out)
    if bridge and len(word):
        print(f"bridge number    {bridge_number(word)}", file=out)
    if word.is_link_word:
        thin, thick = thin_thick_levels(prof)
        print(f"thin levels      {' '.join(map(str, thin)) or '-'}", file=out)
        print(f"thick levels     {' '.join(map(str, thick)) or '-'}", file=out)
    return 0


def cmd_search(args, out):
    inst = parse_instance(args.instance)
    result = search(inst, prune=not args.no_prune, threads=args.threads)
    doc = build_report(result, all_candidates=args.all_candidates)
    out.write(format_json(doc) if args.format == "json" else format_table(doc))
    return 0


def cmd_oracle(args, out):
    inst = parse_instance(args.instance)
    best = oracle_search(inst, cap=args.cap)
    print(f"instance        {inst.name}", file=out)
    print(f"overall minimum {best.width}", file=out)
    print(f"winner          {best.origin}", file=out)
    print(f"winning profile {'+'.join(map(str, best.profile))}", file=out)
    if args.check:
        pruned = search(inst, prune=True, threads=args.threads).winner
        if (pruned.width, pruned.profile) != (best.width, best.profile):
            raise InternalInconsistency(
                f"pruned search found {pruned.width} {pruned.profile}, oracle {best.width} {best.profile}"
            )
        print("pruned search agrees", file=out)
    return 0


def cmd_validate(args, out):
    problems = validate_file(args.instance)
    for p in problems:
        print(p, file=out)
    return 1 if problems else 0


def cmd_bound(args, out):
    if args.thick is None and args.thick_exact is None and args.profile is None:
        raise InputError("bound needs --thick, --thick-exact or --profile")
    for values, fn, flag in ((args.thick, lower_bound_thick, "--thick"),
                             (args.thick_exact, thick_level_lower_bound, "--thick-exact")):
        if values is None:
            continue
        if len(values) != 2 or min(values) < (0 if flag == "--thick" else 1):
            raise InputError(f"{flag} takes two positive half-counts")
        print(fn(*values), file=out)
    if args.profile is not None:
        print(sum(args.profile), file=out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="thinpos", description="Widths and thin-position search for links.")
    sub = p.add_subparsers(dest="command", required=True)

    w = sub.add_parser("width", help="width data of a Morse event word")
    w.add_argument("wordfile", help="file of MIN/MAX/V+d/V-d tokens, or - for stdin")
    w.set_defaults(func=cmd_width)

    for name, func, helptext in (
        ("search", cmd_search, "search an instance for its thinnest candidate"),
        ("oracle", cmd_oracle, "exhaustive unpruned reference search"),
        ("validate", cmd_validate, "report problems in an instance file"),
    ):
        sp = sub.add_parser(name, help=helptext)
        sp.add_argument("instance", help="instance JSON file or bundled instance name")
        sp.add_argument("--threads", type=int, default=1)
        sp.set_defaults(func=func)
        if name == "search":
            sp.add_argument("--no-prune", action="store_true")
            sp.add_argument("--all-candidates", action="store_true")
            sp.add_argument("--format", choices=("table", "json"), default="table")
        if name == "oracle":
            sp.add_argument("--cap", type=int, default=10**7)
            sp.add_argument("--check", action="store_true", help="also run the pruned search and compare")

    b = sub.add_parser("bound", help="width lower bound from two thick levels, or a profile sum")
    b.add_argument("--thick", type=_int_list, metavar="N1,N2",
                   help="bound for thick levels meeting the link in more than 2*N1 and 2*N2 points")
    b.add_argument("--thick-exact", type=_int_list, metavar="N1,N2",
                   help="bound for thick levels meeting the link in exactly 2*N1 and 2*N2 points")
    b.add_argument("--profile", type=_int_list, metavar="C1,C2,...", help="width of a level profile")
    b.set_defaults(func=cmd_bound)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except InternalError as e:
        print(f"internal error: {e}", file=sys.stderr)
        return 2
    except (InputError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
