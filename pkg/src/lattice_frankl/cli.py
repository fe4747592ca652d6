"""Command-line front end.

Exit codes: 0 success, 2 counterexample found (``check``) or failed sweep (``verify``),
64 usage error, 65 bad input data, 70 internal error.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter
from typing import Sequence

from .conditions import Caps, ConditionId, evaluate_all
from .enumeration import DEFAULT_MAX_SIZE, canonical_form, enumerate_lattices, lattice_certs
from .errors import LatticeToolError, ParseError, ResourceError
from .formats import format_lattice, read_lattice, to_dot
from .frankl import frankl_witnesses, is_vacuous
from .verify import run_verify

EX_OK = 0
EX_VIOLATION = 2
EX_USAGE = 64
EX_DATAERR = 65
EX_SOFTWARE = 70


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EX_USAGE)


def _size_arg(max_size: int, text: str) -> int:
    n = int(text)
    if not 1 <= n <= max_size:
        raise UsageError(f"size must be in 1..{max_size}, got {n}")
    return n


def _load(path: str):
    try:
        return read_lattice(path)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def cmd_enumerate(args) -> int:
    n = _size_arg(args.max_size, str(args.size))
    if args.count_only:
        print(len(lattice_certs(n, args.max_size)))
        return EX_OK
    blocks = [format_lattice(L) for L in enumerate_lattices(n, args.max_size)]
    text = f"# LATTICE v1, {len(blocks)} lattices of size {n}\n" + "\n".join(blocks)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EX_OK


def cmd_check(args) -> int:
    L = _load(args.path)
    if is_vacuous(L):
        print("witnesses: (vacuous, single element)")
        return EX_OK
    witnesses = sorted(frankl_witnesses(L))
    print("witnesses:" + "".join(f" {w}" for w in witnesses))
    if not witnesses:
        print(f"counterexample: every join-irreducible lies below more than {L.n}/2 elements")
        return EX_VIOLATION
    shown = witnesses if args.all_witnesses else witnesses[:1]
    for j in shown:
        print(f"  j={j} |up(j)|={L.up[j].bit_count()} n={L.n}")
    return EX_OK


def _caps(args) -> Caps:
    return Caps(args.t2_9_cap, args.t2_15_cap, args.t2_15_max_lattice)


def cmd_conditions(args) -> int:
    L = _load(args.path)
    if L.n < 3:
        raise ParseError(f"conditions need a lattice with more than two elements, got {L.n}")
    report = evaluate_all(L, _caps(args), cert=canonical_form(L))
    if args.json:
        print(json.dumps(report.to_dict(), indent=2, sort_keys=False))
        return EX_OK
    print(f"lattice of size {L.n}")
    for cid in ConditionId:
        v = report.verdicts[cid]
        line = f"{cid.value:<12} {v.status:<8}"
        if v.witnesses:
            shown = v.witnesses if args.all_witnesses else v.witnesses[:1]
            line += " witnesses: " + " ".join("(" + ",".join(map(str, w)) + ")" for w in shown)
            if len(v.witnesses) > len(shown):
                line += f" ... {len(v.witnesses) - len(shown)} more"
        print(line.rstrip())
    ex = report.extremal
    print(f"bottom meet-irreducible: {ex['bottom_meet_irreducible']}; top join-irreducible: {ex['top_join_irreducible']}")
    return EX_OK


def cmd_verify(args) -> int:
    if not 1 <= args.max_size <= DEFAULT_MAX_SIZE:
        raise UsageError(f"--max-size must be in 1..{DEFAULT_MAX_SIZE}, got {args.max_size}")
    results = run_verify(args.max_size, oracle=args.oracle, jobs=args.jobs, trials=args.trials, seed=args.seed)
    for r in results:
        print(r.line())
    ok = all(r.passed for r in results)
    print("verify: " + ("all checks passed" if ok else "FAILED"))
    return EX_OK if ok else EX_VIOLATION


def cmd_dot(args) -> int:
    text = to_dot(_load(args.path))
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EX_OK


def condition_stats(n: int, caps: Caps | None = None) -> dict:
    failures: Counter[str] = Counter()
    skipped: Counter[str] = Counter()
    total = 0
    for L in enumerate_lattices(n):
        total += 1
        report = evaluate_all(L, caps)
        for cid, v in report.verdicts.items():
            if v.status == "fails":
                failures[cid.value] += 1
            elif v.status == "skipped":
                skipped[cid.value] += 1
    return {
        "size": n,
        "lattices": total,
        "failures": {c.value: failures[c.value] for c in ConditionId},
        "skipped": {c.value: skipped[c.value] for c in ConditionId},
    }


def cmd_stats(args) -> int:
    n = _size_arg(DEFAULT_MAX_SIZE, str(args.size))
    if n < 3:
        raise UsageError("condition statistics need size >= 3")
    stats = condition_stats(n, _caps(args))
    if args.json:
        print(json.dumps(stats, indent=2))
        return EX_OK
    print(f"size {n}: {stats['lattices']} lattices")
    for cid in ConditionId:
        extra = f" (skipped {stats['skipped'][cid.value]})" if stats["skipped"][cid.value] else ""
        print(f"{cid.value:<12} fails on {stats['failures'][cid.value]}{extra}")
    return EX_OK


def _add_caps(p: argparse.ArgumentParser) -> None:
    defaults = Caps()
    p.add_argument("--t2-9-cap", type=int, default=defaults.t2_9_subset, help="largest meet-irreducible subset tried")
    p.add_argument("--t2-15-cap", type=int, default=defaults.t2_15_subset, help="largest sublattice subposet tried")
    p.add_argument("--t2-15-max-lattice", type=int, default=defaults.t2_15_lattice,
                   help="skip the sublattice sweep above this lattice size")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lattice-frankl", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list all lattices of one size up to isomorphism")
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--out")
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--max-size", type=int, default=DEFAULT_MAX_SIZE, help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("check", help="find join-irreducibles below at most half the lattice")
    p.add_argument("path")
    p.add_argument("--all-witnesses", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("conditions", help="evaluate every minimal-counterexample condition")
    p.add_argument("path")
    p.add_argument("--json", action="store_true")
    p.add_argument("--all-witnesses", action="store_true")
    _add_caps(p)
    p.set_defaults(func=cmd_conditions)

    p = sub.add_parser("verify", help="run the exhaustive verification sweeps")
    p.add_argument("--max-size", type=int, default=7)
    p.add_argument("--oracle", action="store_true", help="cross-check against brute-force enumeration")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("dot", help="write the Hasse diagram as Graphviz DOT")
    p.add_argument("path")
    p.add_argument("--out")
    p.set_defaults(func=cmd_dot)

    p = sub.add_parser("stats", help="condition failure counts over all lattices of one size")
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--json", action="store_true")
    _add_caps(p)
    p.set_defaults(func=cmd_stats)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits for --help and for usage errors
        return exc.code if isinstance(exc.code, int) else EX_USAGE
    try:
        return args.func(args)
    except (UsageError, ResourceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_USAGE
    except LatticeToolError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_DATAERR
    except Exception as exc:  # noqa: BLE001
        print(f"internal error: {exc!r}", file=sys.stderr)
        return EX_SOFTWARE


if __name__ == "__main__":
    sys.exit(main())
