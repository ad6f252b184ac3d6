"""Command line front end.

Exit codes follow the usual convention: 0 success (word accepted, bound
holds, experiments pass), 1 checked failure (word rejected, bound broken,
experiment failed, runtime error), 2 usage error (bad flags, unknown
names, malformed input files).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import List, Optional

from .automata import AlternatingAutomaton
from .errors import BudgetExceeded, FormatError, StatelabError
from .experiments import REGISTRY_ORDER, run_all, run_experiment
from .gallery import get_language, names
from .interchange import load_automaton, load_prob_automaton
from .prob import ProbAutomaton, separate_quotients
from .profiler import check_bound, profile
from .quotients import DEFAULT_BUDGET, LanguageOracle, RowSpec, count_quotients, query_table


class UsageError(StatelabError):
    """Bad command line input, distinct from a checked runtime failure."""


def _emit(text: str, out: Optional[str]) -> None:
    if out is None:
        print(text)
    else:
        Path(out).write_text(text + "\n", encoding="utf-8")


def _is_gallery_name(ref: str) -> bool:
    try:
        get_language(ref)
        return True
    except StatelabError:
        return False


def _load_alternating(ref: str) -> AlternatingAutomaton:
    """Resolve a gallery name or an interchange file to an automaton."""
    if _is_gallery_name(ref):
        spec = get_language(ref)
        if spec.automaton is None:
            raise UsageError(
                f"gallery language {ref!r} has no alternating automaton"
            )
        return spec.automaton
    path = Path(ref)
    if not path.exists():
        raise UsageError(f"{ref!r} is neither a gallery language nor a file")
    try:
        automaton = load_automaton(path.read_text(encoding="utf-8"))
    except FormatError as exc:
        raise UsageError(f"{ref}: {exc}") from exc
    automaton.name = path.stem
    return automaton


def _load_oracle(ref: str) -> LanguageOracle:
    if _is_gallery_name(ref):
        return get_language(ref).oracle
    from .quotients import from_automaton

    return from_automaton(_load_alternating(ref), name=ref)


def _load_prob(ref: str) -> ProbAutomaton:
    if _is_gallery_name(ref):
        spec = get_language(ref)
        if spec.prob_automaton is None:
            raise UsageError(f"gallery language {ref!r} is not probabilistic")
        return spec.prob_automaton
    path = Path(ref)
    if not path.exists():
        raise UsageError(f"{ref!r} is neither a gallery language nor a file")
    try:
        return load_prob_automaton(path.read_text(encoding="utf-8"))
    except FormatError as exc:
        raise UsageError(f"{ref}: {exc}") from exc


def _render(report, fmt: str) -> str:
    if fmt == "json":
        return report.to_json()
    if fmt == "csv":
        return report.to_csv()
    return report.to_text()


# ---------------------------------------------------------------------------
# subcommands

def cmd_eval(args) -> int:
    automaton = _load_alternating(args.ref)
    accepted = automaton.accepts(args.word)
    print("accept" if accepted else "reject")
    return 0 if accepted else 1


def cmd_profile(args) -> int:
    bound_class = args.bound_class
    constant = args.constant
    if bound_class is None and _is_gallery_name(args.ref):
        declared = get_language(args.ref).declared_class
        if declared is not None:
            bound_class, constant = declared
    automaton = _load_alternating(args.ref)
    prof = profile(automaton, args.depth)
    if bound_class is None:
        _emit(_render(prof, args.format), args.out)
        return 0
    if constant is None:
        constant = 1
    check = check_bound(prof, bound_class, constant)
    if args.format == "json":
        import json

        payload = {
            "automaton": prof.name,
            "profile": prof.counts,
            "bound": json.loads(check.to_json()),
        }
        text = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    elif args.format == "csv":
        text = prof.to_csv()
    else:
        text = prof.to_text() + "\n" + check.to_text()
    _emit(text, args.out)
    return 0 if check.passed else 1


def cmd_quotients(args) -> int:
    oracle = _load_oracle(args.ref)
    report = count_quotients(oracle, args.order, args.witness, budget=args.budget)
    _emit(_render(report, args.format), args.out)
    return 0


def cmd_query_table(args) -> int:
    oracle = _load_oracle(args.ref)
    if args.rows is not None:
        spec = RowSpec.explicit(args.rows)
    elif args.rows_max is not None:
        spec = RowSpec.exhaustive(args.rows_max)
    else:
        raise UsageError("need --rows or --rows-max")
    report = query_table(
        oracle, args.order, spec,
        budget=args.budget, include_profiles=args.profiles,
    )
    _emit(_render(report, args.format), args.out)
    return 0


def cmd_prob_eval(args) -> int:
    machine = _load_prob(args.ref)
    print(machine.acceptance_probability(args.word))
    return 0


def cmd_prob_separate(args) -> int:
    suffix = separate_quotients(args.u, args.v)
    print(suffix)
    return 0


def cmd_experiment(args) -> int:
    if args.list:
        print("\n".join(REGISTRY_ORDER))
        return 0
    if args.id is None:
        raise UsageError("need an experiment id, 'all', or --list")
    known = args.id in ("all", *REGISTRY_ORDER) or args.id.startswith("hierarchy:")
    if not known:
        raise UsageError(
            f"unknown experiment {args.id!r}; known: {', '.join(REGISTRY_ORDER)}"
        )
    fmt = args.format
    if args.id == "all":
        reports = run_all(
            parallel=args.parallel, seed=args.seed, budget=args.budget
        )
    else:
        overrides = {
            "seed": args.seed,
            "budget": args.budget,
            "n": args.n,
            "limit": args.limit,
            "count": args.count,
        }
        reports = [run_experiment(args.id, **overrides)]
    if fmt == "json":
        text = "\n".join(r.canonical_json() for r in reports)
    elif fmt == "csv":
        lines = ["experiment,verdict"]
        lines += [f"{r.experiment},{r.verdict}" for r in reports]
        text = "\n".join(lines)
    else:
        text = "\n\n".join(r.to_text() for r in reports)
    _emit(text, args.out)
    return 0 if all(r.passed for r in reports) else 1


def cmd_gallery(args) -> int:
    print("\n".join(names()))
    return 0


# ---------------------------------------------------------------------------
# parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="statelab",
        description="State-counting workbench for alternating and "
        "probabilistic automata.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("json", "csv", "text"),
                       default="text", help="output format")
        p.add_argument("--out", help="write the report to this file")
        p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                       help="membership query budget")
        p.add_argument("--seed", type=lambda s: int(s) % (1 << 64), default=0,
                       help="seed for randomized checks (unsigned 64-bit)")

    p = sub.add_parser("eval", help="run one word through an automaton")
    p.add_argument("ref", help="gallery language name or interchange file")
    p.add_argument("word")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("profile", help="count reachable states per depth")
    p.add_argument("ref")
    p.add_argument("depth", type=int)
    p.add_argument("--bound-class", help="ceiling shape: const, n, n^<k>, 2^n")
    p.add_argument("--constant", type=int,
                   help="multiplier for the ceiling (defaults to the "
                   "gallery's declared constant)")
    common(p)
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("quotients", help="count distinguishable prefixes")
    p.add_argument("ref")
    p.add_argument("--order", type=int, required=True,
                   help="max prefix length")
    p.add_argument("--witness", type=int, required=True,
                   help="max witness length")
    common(p)
    p.set_defaults(func=cmd_quotients)

    p = sub.add_parser("query-table", help="count membership-profile rows")
    p.add_argument("ref")
    p.add_argument("--order", type=int, required=True,
                   help="max column length")
    p.add_argument("--rows", nargs="*", default=None,
                   help="explicit row words")
    p.add_argument("--rows-max", type=int, default=None,
                   help="use all words up to this length as rows")
    p.add_argument("--profiles", action="store_true",
                   help="include each representative's profile bits")
    common(p)
    p.set_defaults(func=cmd_query_table)

    p = sub.add_parser("prob", help="probabilistic automaton operations")
    psub = p.add_subparsers(dest="prob_command", required=True)

    q = psub.add_parser("eval", help="exact acceptance probability of a word")
    q.add_argument("ref")
    q.add_argument("word")
    q.set_defaults(func=cmd_prob_eval)

    q = psub.add_parser("separate",
                        help="suffix splitting two binary words at the "
                        "1/2 cut point once each is extended by '1'")
    q.add_argument("u")
    q.add_argument("v")
    q.set_defaults(func=cmd_prob_separate)

    p = sub.add_parser("experiment", help="run recorded experiments")
    p.add_argument("id", nargs="?", help="experiment id or 'all'")
    p.add_argument("--list", action="store_true",
                   help="list known experiment ids")
    p.add_argument("--parallel", type=int, default=1,
                   help="worker threads for 'all'")
    p.add_argument("--n", type=int, default=None,
                   help="override the main size parameter")
    p.add_argument("--limit", type=int, default=None,
                   help="override the search limit (primes-linear)")
    p.add_argument("--count", type=int, default=None,
                   help="override the sample count (core-crosscheck)")
    common(p)
    p.set_defaults(func=cmd_experiment)

    p = sub.add_parser("gallery", help="list built-in languages")
    p.set_defaults(func=cmd_gallery)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except StatelabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
