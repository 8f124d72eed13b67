"""Command-line front end: complement, classify, check.

One job per invocation, HOA in and HOA out.  Exit codes: 0 success,
1 failed cross-check or internal error, 2 unreadable or unsuitable
input (including usage errors), 3 rank-enumeration cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .acceptance import format_acc
from .automata import BA, TELA
from .blocks import BlockConditionError, RankCapError
from .hoa import HoaParseError, parse_hoa, serialize_hoa
from .langops import enumerate_lassos, lasso_signature
from .pipeline import ComplementOptions, complement
from .scc import PartitionPolicy, compute_sccs, is_elevator, make_partitioning

__all__ = ["main", "cross_check"]


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_ba(path: str) -> BA:
    return BA.from_tela(parse_hoa(_read_text(path)))


def _fmt_states(states) -> str:
    return "{" + ",".join(str(q) for q in sorted(states)) + "}"


def cmd_complement(args) -> int:
    ba = _load_ba(args.input)
    options = ComplementOptions(
        strategy=args.strategy,
        partition=args.partition,
        shared_breakpoint=args.shared_breakpoint,
        sim_pruning=not args.no_sim_pruning,
        sink=args.sink,
    )
    t0 = time.perf_counter()
    result = complement(ba, options)
    elapsed = time.perf_counter() - t0
    text = serialize_hoa(result.tela)
    if args.output and args.output != "-":
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.stats:
        stats = {
            "schema_version": 1,
            "states": result.tela.n_states,
            "transitions": len(result.tela.transitions),
            "colours": result.tela.n_colours,
            "acceptance": format_acc(result.tela.acceptance),
            "blocks": [
                {"kind": b.kind.value, "states": sorted(b.states)}
                for b in result.partitioning.blocks
            ],
            "strategy": result.strategy,
            "wall_time_s": round(elapsed, 6),
        }
        print(json.dumps(stats), file=sys.stderr)
    return 0


def cmd_classify(args) -> int:
    ba = _load_ba(args.input)
    decomp = compute_sccs(ba)
    print(f"states: {ba.n_states}")
    print(f"sccs: {len(decomp.sccs)}")
    for s in decomp.sccs:
        flags = []
        if s.trivial:
            flags.append("trivial")
        if s.accepting:
            flags.append("accepting")
        if s.inherently_weak:
            flags.append("inherently-weak")
        if s.deterministic:
            flags.append("deterministic")
        cls = s.block_class.value if s.block_class is not None else "-"
        print(
            f"scc {s.index}: states={_fmt_states(s.states)} "
            f"flags={','.join(flags) if flags else '-'} class={cls}"
        )
    print(f"elevator: {'yes' if is_elevator(ba, decomp) else 'no'}")
    partitioning = make_partitioning(
        ba, PartitionPolicy(args.partition), decomp=decomp
    )
    if not partitioning.blocks:
        print(f"partition ({args.partition}): empty")
    for i, b in enumerate(partitioning.blocks):
        print(
            f"partition ({args.partition}) block {i}: "
            f"class={b.kind.value} states={_fmt_states(b.states)}"
        )
    return 0


def _word_str(alphabet, prefix, loop) -> str:
    p = ".".join(alphabet.symbol_name(a) for a in prefix)
    l = ".".join(alphabet.symbol_name(a) for a in loop)
    return (p + " " if p else "") + f"({l})^w"


def cross_check(
    input_tela: TELA,
    complements: list[tuple[str, TELA]],
    max_prefix: int,
    max_loop: int,
) -> tuple[bool, list[str]]:
    """Compare membership of every lasso word up to the bounds: each word
    must be in exactly one of the input and each claimed complement."""
    lassos = list(
        enumerate_lassos(input_tela.alphabet, max_prefix, max_loop)
    )
    base = lasso_signature(input_tela, lassos)
    lines = []
    ok = True
    for label, comp_tela in complements:
        sig = lasso_signature(comp_tela, lassos)
        bad = None
        for (prefix, loop), inp, comp in zip(lassos, base, sig):
            if inp == comp:
                bad = (prefix, loop, inp)
                break
        if bad is None:
            lines.append(f"{label}: ok ({len(lassos)} words)")
        else:
            ok = False
            prefix, loop, inp = bad
            side = "both" if inp else "neither"
            lines.append(
                f"{label}: FAIL on {_word_str(input_tela.alphabet, prefix, loop)}"
                f" (in {side} of input and complement)"
            )
    return ok, lines


def cmd_check(args) -> int:
    ba = _load_ba(args.input)
    complements = []
    for strategy in ("sync", "postponed", "rr"):
        result = complement(ba, ComplementOptions(strategy=strategy))
        complements.append((strategy, result.tela))
    ok, lines = cross_check(
        ba.to_tela(), complements, args.max_prefix, args.max_loop
    )
    for line in lines:
        print(line)
    print("PASS" if ok else "FAIL")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="buchicompl",
        description="Complement nondeterministic Buchi automata via "
        "SCC decomposition into per-block partial algorithms.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_compl = sub.add_parser(
        "complement", help="complement a Buchi automaton (HOA in, HOA out)"
    )
    p_compl.add_argument("input", help="HOA file, or - for stdin")
    p_compl.add_argument(
        "--strategy",
        choices=["sync", "postponed", "rr"],
        default="sync",
        help="block orchestration (default: sync)",
    )
    p_compl.add_argument(
        "--partition",
        choices=["default", "per-scc", "merge-all"],
        default="default",
        help="how accepting SCCs become blocks (default: default)",
    )
    p_compl.add_argument(
        "--nac",
        choices=["rank"],
        default="rank",
        help="algorithm for general nondeterministic blocks",
    )
    p_compl.add_argument(
        "--shared-breakpoint",
        action="store_true",
        help="share one breakpoint set across weak and deterministic blocks",
    )
    p_compl.add_argument(
        "--no-sim-pruning",
        action="store_true",
        help="disable direct-simulation pruning of macrostates",
    )
    p_compl.add_argument(
        "--sink",
        choices=["complete-input", "accepting-sink"],
        default="complete-input",
        help="how to handle words with no run in the input",
    )
    p_compl.add_argument(
        "--stats", action="store_true", help="print JSON stats to stderr"
    )
    p_compl.add_argument("--output", help="write HOA here instead of stdout")
    p_compl.set_defaults(func=cmd_complement)

    p_cls = sub.add_parser(
        "classify", help="report SCC classes and the block partition"
    )
    p_cls.add_argument("input", help="HOA file, or - for stdin")
    p_cls.add_argument(
        "--partition",
        choices=["default", "per-scc", "merge-all"],
        default="default",
    )
    p_cls.set_defaults(func=cmd_classify)

    p_chk = sub.add_parser(
        "check",
        help="complement under every strategy and cross-check membership "
        "of all lasso words up to the bounds",
    )
    p_chk.add_argument("input", help="HOA file, or - for stdin")
    p_chk.add_argument("--max-prefix", type=int, default=3)
    p_chk.add_argument("--max-loop", type=int, default=3)
    p_chk.set_defaults(func=cmd_check)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except RankCapError as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    except BlockConditionError as e:
        print(f"internal error: {e}", file=sys.stderr)
        return 1
    except HoaParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
