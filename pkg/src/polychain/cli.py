"""Command-line entry point: ``polychain <subcommand> ...``.

Exit codes: 0 success, 1 usage or input error, 2 verification mismatch,
3 internal invariant breach.
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from polychain.chain.geometry import (
    GridChain,
    InvalidChainError,
    chain_to_graph,
    derive_links,
    explain_failure,
    instructions_to_cells,
    parse_cells,
    validate_chain,
)
from polychain.chain.words import (
    GrammarError,
    links_to_actions,
    parse_compressed,
    parse_instructions,
    parse_links,
    value_of_actions,
)
from polychain.dp import best_value, count_extremal_sequences, run_dp
from polychain.extremal import extremal_chains
from polychain.index import (
    DegreeError,
    IndexSpecError,
    base_values,
    describe_index,
    g_table,
    index_names,
    parse_index_spec,
    ti_of_graph,
)
from polychain.oracle import N_CAP, brute_extremes
from polychain.realize import RealizationError, iter_valid_realizations, links_to_instructions, realize
from polychain.render import render
from polychain.values import DEFAULT_TIE_EPSILON, format_value, ties

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MISMATCH = 2
EXIT_INVARIANT = 3


class UsageError(Exception):
    pass


class InvariantBreach(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class RunConfig:
    index_spec: str
    n: int
    objective: str = "max"
    mode: str = "one"
    limit: Optional[int] = None
    count_mode: str = "link_words"
    output_format: str = "text"
    tie_epsilon: float = DEFAULT_TIE_EPSILON
    seed: int = 0

    def __post_init__(self):
        if self.n < 3:
            raise UsageError("n must be at least 3")
        if self.objective not in ("max", "min"):
            raise UsageError(f"objective must be max or min, got {self.objective!r}")
        if self.mode not in ("one", "all"):
            raise UsageError(f"mode must be one or all, got {self.mode!r}")
        if self.limit is not None and self.limit < 1:
            raise UsageError("limit must be positive")
        if self.count_mode not in ("link_words", "congruence"):
            raise UsageError(f"count mode must be link_words or congruence, got {self.count_mode!r}")
        if not self.tie_epsilon >= 0:
            raise UsageError("tie epsilon must be non-negative")


def _out(line: str = "") -> None:
    sys.stdout.write(line + "\n")


# ---------------------------------------------------------------------------
# index


def cmd_index(args) -> int:
    if args.action == "list":
        for name in index_names():
            _out(describe_index(name))
        return EXIT_OK
    if not args.spec:
        raise UsageError("index show needs an index spec, e.g. randic:alpha=-1")
    df = parse_index_spec(args.spec)
    fmt = lambda v: format_value(v, args.float)  # noqa: E731
    _out(f"index: {df.spec}")
    for (x, y), v in df.as_dict().items():
        _out(f"f({x},{y}) = {fmt(v)}")
    for a, v in g_table(df).as_dict().items():
        _out(f"g({a}) = {fmt(v)}")
    base = base_values(df)
    _out(f"ti(SS start) = {fmt(base.tiSS)}")
    _out(f"ti(SC start) = {fmt(base.tiSC)}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# value


def _chain_from_args(args) -> tuple:
    """(chain, links or None) from whichever of --links/--cells/--instructions was given."""
    if getattr(args, "links", None):
        links = parse_links(args.links)
        return instructions_to_cells(links_to_instructions(links)), links
    if getattr(args, "cells", None):
        return parse_cells(args.cells), None
    if getattr(args, "instructions", None):
        return instructions_to_cells(parse_instructions(args.instructions)), None
    if getattr(args, "compressed", None):
        return realize(parse_compressed(args.compressed)).chain, None
    raise UsageError("give one of --links, --cells, --instructions or --compressed")


def cmd_value(args) -> int:
    df = parse_index_spec(args.index)
    fmt = lambda v: format_value(v, args.float)  # noqa: E731
    chain, links = _chain_from_args(args)
    ok, idx = validate_chain(chain)
    if links is not None and len(links) >= 3:
        word_value = value_of_actions(links_to_actions(links), df)
        if not ok:
            _out(f"value: {fmt(word_value)}")
            _out(f"valid: no ({explain_failure(chain, idx)})")
            _out("warning: action-word value; it need not equal the value of any chain graph")
            return EXIT_OK
    if not ok:
        raise InvalidChainError(f"not a chain ({explain_failure(chain, idx)})", idx)
    chain = GridChain(chain.cells, validated=True)
    v = ti_of_graph(chain_to_graph(chain), df)
    if links is not None and len(links) >= 3 and not ties(v, word_value, args.tie_epsilon):
        raise InvariantBreach(
            f"graph value {fmt(v)} differs from action-word value {fmt(word_value)}"
        )
    _out(f"value: {fmt(v)}")
    _out("valid: yes")
    if links is None and chain.n >= 2:
        _out(f"links: {derive_links(chain)}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# optimize / count-extremal


def _config(args) -> RunConfig:
    return RunConfig(
        index_spec=args.index,
        n=args.n,
        objective=args.objective,
        mode=getattr(args, "mode", "one"),
        limit=getattr(args, "limit", None),
        count_mode=getattr(args, "count_mode", "link_words"),
        tie_epsilon=args.tie_epsilon,
    )


def cmd_optimize(args) -> int:
    cfg = _config(args)
    df = parse_index_spec(cfg.index_spec)
    fmt = lambda v: format_value(v, args.float)  # noqa: E731
    res = extremal_chains(
        df, cfg.n, cfg.objective, cfg.mode, cfg.limit, cfg.tie_epsilon, not args.no_pruning
    )
    _out(f"index: {df.spec}")
    _out(f"n: {cfg.n}")
    _out(f"objective: {cfg.objective}")
    _out(f"optimum: {fmt(res.optimum)}")
    if cfg.mode == "one":
        rep = res.report
        _out(f"compressed: {res.sequences[0]}")
        _out(f"links: {rep.links}")
        _out(f"cells: {rep.chain.to_text()}")
        if cfg.n <= 2000:
            # cheap cross-check of the value against the realized graph
            v = ti_of_graph(chain_to_graph(rep.chain), df)
            if not ties(v, res.optimum, cfg.tie_epsilon):
                raise InvariantBreach(f"realized chain has value {fmt(v)}, optimum is {fmt(res.optimum)}")
        return EXIT_OK
    _out(f"extremal compressed words: {len(res.sequences)}")
    for seq in res.sequences:
        _out(f"  {seq}")
    _out(f"chains (link words): {res.link_word_count}")
    _out(f"chains (congruence classes): {res.congruence_count}")
    if res.truncated:
        _out(f"truncated: limit {cfg.limit} reached")
    for k, chain in enumerate(res.chains, start=1):
        _out(f"chain {k}: {chain.to_text()}")
    return EXIT_OK


def cmd_count_extremal(args) -> int:
    cfg = _config(args)
    df = parse_index_spec(cfg.index_spec)
    table = run_dp(df, cfg.n, cfg.objective, cfg.tie_epsilon)
    opt, _ = best_value(table)
    _out(f"optimum: {format_value(opt, args.float)}")
    _out(f"compressed words: {count_extremal_sequences(table)}")
    if args.words_only:
        return EXIT_OK
    res = extremal_chains(df, cfg.n, cfg.objective, "all", cfg.limit, cfg.tie_epsilon)
    count = res.link_word_count if cfg.count_mode == "link_words" else res.congruence_count
    _out(f"chains ({cfg.count_mode}): {count}")
    if res.truncated:
        _out(f"truncated: limit {cfg.limit} reached")
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify


def _roundtrips(chain: GridChain) -> bool:
    links = derive_links(chain)
    if len(links) < 3:
        return True
    actions = links_to_actions(links)
    return any(c.cells == chain.cells for c in iter_valid_realizations(actions))


def verify_one(df, n: int, objective: str, tie_epsilon: float, jobs: int = 1):
    """(mismatch descriptions, oracle extremes) for one (index, n, objective)."""
    problems = []
    brute = brute_extremes(n, df, tie_epsilon, jobs)
    oracle_val = brute.max if objective == "max" else brute.min
    argext = brute.argmax if objective == "max" else brute.argmin
    classes = brute.argmax_classes if objective == "max" else brute.argmin_classes
    res = extremal_chains(df, n, objective, "all", None, tie_epsilon)
    if not ties(res.optimum, oracle_val, tie_epsilon):
        problems.append(f"DP {format_value(res.optimum)} != oracle {format_value(oracle_val)}")
    if res.link_word_count != len(argext):
        problems.append(f"link-word count {res.link_word_count} != oracle {len(argext)}")
    if res.congruence_count != classes:
        problems.append(f"congruence count {res.congruence_count} != oracle {classes}")
    if {c.cells for c in res.chains} != {c.cells for c in argext}:
        problems.append("extremal chain sets differ from oracle argext")
    one = extremal_chains(df, n, objective, "one", tie_epsilon=tie_epsilon)
    if not ties(ti_of_graph(chain_to_graph(one.chains[0]), df), res.optimum, tie_epsilon):
        problems.append("mode-one chain does not attain the optimum")
    bad = [c for c in argext if not _roundtrips(c)]
    if bad:
        problems.append(f"{len(bad)} extremal chain(s) fail the links round-trip")
    return problems, brute


def cmd_verify(args) -> int:
    if args.n_max < 3:
        raise UsageError("n-max must be at least 3")
    if args.n_max > N_CAP:
        raise UsageError(f"n-max exceeds the oracle cap {N_CAP}")
    specs = args.index or ["randic:alpha=-1"]
    dfs = [parse_index_spec(s) for s in specs]
    failures = 0
    for df in dfs:
        for n in range(3, args.n_max + 1):
            for objective in ("max", "min"):
                problems, brute = verify_one(df, n, objective, args.tie_epsilon, args.jobs)
                val = brute.max if objective == "max" else brute.min
                arg = brute.argmax if objective == "max" else brute.argmin
                cls = brute.argmax_classes if objective == "max" else brute.argmin_classes
                status = "FAIL" if problems else "ok"
                _out(
                    f"{status:4} {df.spec} n={n} {objective}: {format_value(val, args.float)} "
                    f"chains={len(arg)} classes={cls}"
                )
                for p in problems:
                    _out(f"     {p}")
                failures += bool(problems)
    _out(f"{failures} mismatch(es)" if failures else "all checks passed")
    return EXIT_MISMATCH if failures else EXIT_OK


# ---------------------------------------------------------------------------
# render


def cmd_render(args) -> int:
    chain, _ = _chain_from_args(args)
    ok, idx = validate_chain(chain)
    if not ok:
        raise InvalidChainError(f"not a chain ({explain_failure(chain, idx)})", idx)
    sys.stdout.write(render(GridChain(chain.cells, validated=True), args.format))
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser


def _add_index(p, required=True):
    p.add_argument("--index", required=required, help="index spec, e.g. randic:alpha=-1")


def _add_numeric(p):
    p.add_argument("--float", action="store_true", help="print decimals instead of exact fractions")
    p.add_argument("--tie-epsilon", type=float, default=DEFAULT_TIE_EPSILON)


def _add_chain_inputs(p, compressed=False):
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--links", help="link word, e.g. 1,1,2,1,3")
    g.add_argument("--cells", help='cell list, e.g. "0 0; 1 0; 2 0"')
    g.add_argument("--instructions", help="instruction word, e.g. R,R,D or RRD")
    if compressed:
        g.add_argument("--compressed", help="compressed action word, realized first")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="polychain", description="Extremal degree-based indices of polyomino chains.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    q = sub.add_parser("index", help="list or show built-in indices")
    q.add_argument("action", choices=("list", "show"))
    q.add_argument("spec", nargs="?")
    q.add_argument("--float", action="store_true")
    q.set_defaults(func=cmd_index)

    q = sub.add_parser("value", help="index value of one chain")
    _add_chain_inputs(q, compressed=True)
    _add_index(q)
    _add_numeric(q)
    q.set_defaults(func=cmd_value)

    q = sub.add_parser("optimize", help="extremal value and chain(s)")
    q.add_argument("--n", type=int, required=True)
    _add_index(q)
    q.add_argument("--objective", choices=("max", "min"), default="max")
    q.add_argument("--mode", choices=("one", "all"), default="one")
    q.add_argument("--limit", type=int, default=None, help="cap on chains listed in mode all")
    q.add_argument("--no-pruning", action="store_true", help="disable pivot-rule pruning in mode all")
    _add_numeric(q)
    q.set_defaults(func=cmd_optimize)

    q = sub.add_parser("verify", help="compare the optimizer against brute force")
    q.add_argument("--n-max", type=int, required=True)
    q.add_argument("--index", action="append", help="index spec (repeatable)")
    q.add_argument("--jobs", type=int, default=1)
    _add_numeric(q)
    q.set_defaults(func=cmd_verify)

    q = sub.add_parser("count-extremal", help="number of extremal words and chains")
    q.add_argument("--n", type=int, required=True)
    _add_index(q)
    q.add_argument("--objective", choices=("max", "min"), default="max")
    q.add_argument("--count-mode", choices=("link_words", "congruence"), default="link_words")
    q.add_argument("--limit", type=int, default=None)
    q.add_argument("--words-only", action="store_true", help="skip chain enumeration")
    _add_numeric(q)
    q.set_defaults(func=cmd_count_extremal)

    q = sub.add_parser("render", help="draw a chain as ASCII or SVG")
    _add_chain_inputs(q, compressed=True)
    q.add_argument("--format", choices=("ascii", "svg", "text"), default="ascii")
    q.set_defaults(func=cmd_render)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (RealizationError, InvariantBreach) as exc:
        sys.stderr.write(f"polychain: invariant breach: {exc}\n")
        return EXIT_INVARIANT
    except (UsageError, GrammarError, IndexSpecError, InvalidChainError, DegreeError, ValueError) as exc:
        sys.stderr.write(f"polychain: error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
