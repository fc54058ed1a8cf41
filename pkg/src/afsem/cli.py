"""Command-line front end.

Exit codes: 0 success, 1 usage or parse error (including violated checker
premises), 2 size/cap/search limit exceeded, 3 property violation found
while running with --assert.  Numeric limits fall back to AFSEM_* envi-
ronment variables when the flag is not given.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import construct, criteria, formats, generators, oracle
from .errors import AfsemError, LimitError, ParseError, PremiseError
from .framework import Framework
from .scc import DEFAULT_UNATTACKED_CAP
from .scc_semantics import ALL_SEMANTICS, enumerate_semantics
from .semantics import DEFAULT_ENUM_LIMIT

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_LIMIT = 2
EXIT_VIOLATION = 3

TABLE_SEMANTICS = (
    "naive", "stage", "cf2", "stg2", "icf2", "istg2", "cf1.5", "stg1.5",
)


def _env_int(name: str, fallback: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return fallback
    try:
        return int(raw)
    except ValueError:
        raise AfsemError(f"environment variable {name} must be an integer")


def _add_io_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--input", required=True, help="framework file")
    p.add_argument(
        "--format", choices=("apx", "tgf"), default=None,
        help="input format (default: by file extension, else apx)",
    )
    p.add_argument(
        "--output", choices=("json", "text"), default="json",
        help="report format (default json)",
    )


def _load(args: argparse.Namespace) -> Framework:
    path = Path(args.input)
    fmt = args.format
    if fmt is None:
        fmt = "tgf" if path.suffix.lower() == ".tgf" else "apx"
    try:
        text = path.read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}")
    return formats.parse_framework(text, fmt)


def _limit(args: argparse.Namespace) -> int:
    if getattr(args, "limit", None) is not None:
        return args.limit
    return _env_int("AFSEM_ENUM_LIMIT", DEFAULT_ENUM_LIMIT)


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="afsem",
        description="Solve, check and explore abstract argumentation "
        "semantics (classical, SCC-recursive and SCC-prioritized).",
    )
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="enumerate extensions or decide acceptance")
    p.add_argument("--semantics", required=True, choices=ALL_SEMANTICS)
    _add_io_args(p)
    p.add_argument("--limit", type=int, default=None,
                   help="argument-count enumeration limit")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--enumerate", action="store_true", default=False,
                      help="list all extensions (default)")
    mode.add_argument("--credulous", metavar="ARG",
                      help="is ARG in some extension?")
    mode.add_argument("--skeptical", metavar="ARG",
                      help="is ARG in every extension?")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("check", help="evaluate a criterion on a framework")
    p.add_argument(
        "--criterion", required=True,
        choices=("i-max", "reinstatement", "weak-reinstatement",
                 "cf-reinstatement", "directionality", "skepticism-adequacy"),
    )
    p.add_argument("--semantics", required=True, choices=ALL_SEMANTICS)
    _add_io_args(p)
    p.add_argument("--limit", type=int, default=None)
    p.add_argument("--second", help="second framework (skepticism-adequacy)")
    p.add_argument("--relation", choices=criteria.SKEPTICISM_RELATIONS,
                   default="weak", help="skepticism relation (default weak)")
    p.add_argument("--unattacked-set", metavar="A,B,...",
                   help="test directionality on this set only")
    p.add_argument("--cap", type=int, default=None,
                   help="unattacked-set enumeration cap")
    p.add_argument("--assert", dest="assert_mode", action="store_true",
                   help="exit 3 when the criterion fails")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("oracle", help="cross-validate against brute force")
    p.add_argument("--trials", type=int, default=50)
    p.add_argument("--max-args", type=int, default=9)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--edge-prob", type=float, default=0.25)
    p.add_argument("--self-attack-prob", type=float, default=0.1)
    p.add_argument("--semantics", choices=TABLE_SEMANTICS, default=None,
                   help="restrict to one semantics (default: all eight)")
    p.add_argument("--output", choices=("json", "text"), default="json")
    p.add_argument("--assert", dest="assert_mode", action="store_true")
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("infinite", help="truncation study of a builtin family")
    p.add_argument("--family", required=True)
    p.add_argument("--params", metavar="K=V", nargs="*", default=[])
    p.add_argument("--levels", required=True,
                   help="comma-separated truncation sizes")
    p.add_argument("--semantics", required=True, choices=ALL_SEMANTICS)
    p.add_argument("--track", required=True,
                   help="comma-separated argument labels")
    p.add_argument("--k", type=int, default=None,
                   help="trailing identical accepted verdicts for "
                        "stabilization")
    p.add_argument("--limit", type=int, default=None)
    p.add_argument("--output", choices=("json", "text"), default="json")
    p.set_defaults(func=_cmd_infinite)

    p = sub.add_parser("construct", help="run a constructive algorithm")
    p.add_argument("--algorithm", required=True,
                   choices=("greedy-cf1.5", "lex-stg1.5", "lex-stage"))
    _add_io_args(p)
    p.add_argument("--component-limit", type=int, default=None)
    p.add_argument("--search-limit", type=int, default=None)
    p.set_defaults(func=_cmd_construct)

    return top


def _cmd_solve(args: argparse.Namespace) -> int:
    f = _load(args)
    es = enumerate_semantics(f, args.semantics, limit=_limit(args))
    query = None
    if args.credulous is not None:
        query = ("credulous", args.credulous)
    elif args.skeptical is not None:
        query = ("skeptical", args.skeptical)
    if query is None:
        print(formats.emit_report(es, args.output).rstrip("\n"))
        return EXIT_OK
    mode, label = query
    idx = f.index_of(label)
    member_of = [idx in ext.members for ext in es.extensions]
    verdict = any(member_of) if mode == "credulous" else all(member_of)
    if args.output == "json":
        import json

        print(json.dumps(
            {
                "schema": formats.JSON_SCHEMA_VERSION,
                "kind": "acceptance",
                "semantics": args.semantics,
                "query": mode,
                "argument": label,
                "accepted": verdict,
            },
            separators=(",", ":"),
        ))
    else:
        print(f"{mode}({label}) under {args.semantics}: "
              + ("YES" if verdict else "NO"))
    return EXIT_OK


def _cmd_check(args: argparse.Namespace) -> int:
    f = _load(args)
    limit = _limit(args)
    crit = args.criterion
    if crit == "skepticism-adequacy":
        if not args.second:
            raise PremiseError("skepticism-adequacy needs --second FILE")
        second_ns = argparse.Namespace(input=args.second, format=args.format)
        g = _load(second_ns)
        rep = criteria.check_skepticism_adequacy(
            f, g, args.semantics, args.relation, limit=limit
        )
    elif crit == "directionality":
        cap = args.cap if args.cap is not None else _env_int(
            "AFSEM_UNATTACKED_CAP", DEFAULT_UNATTACKED_CAP
        )
        u = None
        if args.unattacked_set is not None:
            u = f.indices_of(
                lab for lab in args.unattacked_set.split(",") if lab
            )
        rep = criteria.check_directionality(
            f, args.semantics, u=u, cap=cap, limit=limit
        )
    else:
        es = enumerate_semantics(f, args.semantics, limit=limit)
        if crit == "i-max":
            rep = criteria.check_i_maximality(es)
        else:
            variant = {"reinstatement": "plain",
                       "weak-reinstatement": "weak",
                       "cf-reinstatement": "cf"}[crit]
            rep = criteria.check_reinstatement(f, es, variant)
    print(formats.emit_report(rep, args.output).rstrip("\n"))
    if args.assert_mode and not rep.holds:
        return EXIT_VIOLATION
    return EXIT_OK


def _cmd_oracle(args: argparse.Namespace) -> int:
    import json

    if args.trials < 1:
        raise PremiseError("--trials must be >= 1")
    if not 1 <= args.max_args <= oracle.ORACLE_HARD_LIMIT:
        raise PremiseError(
            f"--max-args must be in 1..{oracle.ORACLE_HARD_LIMIT}"
        )
    semantics = (args.semantics,) if args.semantics else TABLE_SEMANTICS
    mismatches = []
    for t in range(args.trials):
        seed = args.seed + t
        n = (seed % args.max_args) + 1
        f = oracle.random_framework(
            n, args.edge_prob, args.self_attack_prob, seed
        )
        for sem in semantics:
            want = oracle.brute_force(f, sem).member_sets()
            got = enumerate_semantics(f, sem).member_sets()
            if want != got:
                mismatches.append({
                    "seed": seed,
                    "n": n,
                    "semantics": sem,
                    "expected": [sorted(f.labels_of(m)) for m in want],
                    "got": [sorted(f.labels_of(m)) for m in got],
                })
    doc = {
        "schema": formats.JSON_SCHEMA_VERSION,
        "kind": "oracle",
        "trials": args.trials,
        "semantics": list(semantics),
        "mismatch_count": len(mismatches),
        "mismatches": mismatches,
    }
    if args.output == "json":
        print(json.dumps(doc, separators=(",", ":")))
    else:
        print(f"oracle: {args.trials} trial(s), "
              f"{len(mismatches)} mismatch(es)")
        for m in mismatches:
            print(f"  seed {m['seed']} n={m['n']} {m['semantics']}: "
                  f"expected {m['expected']} got {m['got']}")
    if mismatches and args.assert_mode:
        return EXIT_VIOLATION
    return EXIT_OK


def _parse_params(pairs: list[str]) -> dict[str, object]:
    params: dict[str, object] = {}
    for pair in pairs:
        if "=" not in pair:
            raise PremiseError(f"--params entries must look like K=V: {pair!r}")
        key, val = pair.split("=", 1)
        try:
            params[key] = int(val)
        except ValueError:
            params[key] = val
    return params


def _cmd_infinite(args: argparse.Namespace) -> int:
    try:
        gen = generators.builtin_generator(args.family, _parse_params(args.params))
    except ValueError as exc:
        raise PremiseError(str(exc))
    levels = [int(x) for x in args.levels.split(",") if x]
    tracked = [x for x in args.track.split(",") if x]
    k = args.k if args.k is not None else _env_int(
        "AFSEM_STAB_K", generators.DEFAULT_STABILIZATION_K
    )
    rep = generators.truncation_study(
        gen, args.semantics, levels, tracked, k=k, limit=_limit(args)
    )
    print(formats.emit_report(rep, args.output).rstrip("\n"))
    return EXIT_OK


def _cmd_construct(args: argparse.Namespace) -> int:
    f = _load(args)
    ord = construct.lemma1_order(f, max(f.n, 1))
    if args.algorithm == "greedy-cf1.5":
        ext = construct.greedy_cf15(f, ord)
        sem = "cf1.5"
    elif args.algorithm == "lex-stg1.5":
        climit = args.component_limit if args.component_limit is not None \
            else _env_int("AFSEM_COMPONENT_LIMIT",
                          construct.DEFAULT_COMPONENT_LIMIT)
        ext = construct.lex_scc_stg15(f, ord, component_limit=climit)
        sem = "stg1.5"
    else:
        slimit = args.search_limit if args.search_limit is not None \
            else _env_int("AFSEM_SEARCH_LIMIT", construct.DEFAULT_SEARCH_LIMIT)
        ext = construct.lex_greedy_stage(f, ord, search_limit=slimit)
        sem = "stage"
    if args.output == "json":
        import json

        print(json.dumps(
            {
                "schema": formats.JSON_SCHEMA_VERSION,
                "kind": "construction",
                "algorithm": args.algorithm,
                "semantics": sem,
                "extension": sorted(ext.labels()),
            },
            separators=(",", ":"),
        ))
    else:
        print(f"{args.algorithm}: " + "{" + ",".join(sorted(ext.labels())) + "}")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except LimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (ParseError, PremiseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except AfsemError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
