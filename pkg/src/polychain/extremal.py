"""Extremal chains: DP optimum plus one or all geometric realizations."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional

from polychain.chain.geometry import GridChain
from polychain.chain.words import CompressedActionSequence, uncompress
from polychain.dp import best_value, iter_extremal, reconstruct_one, run_dp
from polychain.index import DegreeFunction, builtin_index, g_table
from polychain.oracle import canonical_key
from polychain.realize import RealizationReport, iter_valid_realizations, realize
from polychain.values import DEFAULT_TIE_EPSILON, Value


@dataclass
class ExtremalChains:
    n: int
    objective: str
    optimum: Value
    sequences: List[CompressedActionSequence] = field(default_factory=list)
    chains: List[GridChain] = field(default_factory=list)
    link_word_count: int = 0
    congruence_count: int = 0
    truncated: bool = False
    report: Optional[RealizationReport] = None


def extremal_chains(
    df: DegreeFunction,
    n: int,
    objective: str = "max",
    mode: str = "one",
    limit: Optional[int] = None,
    tie_epsilon: float = DEFAULT_TIE_EPSILON,
    use_l5_pruning: bool = True,
) -> ExtremalChains:
    """One guaranteed extremal chain (``one``) or every extremal chain (``all``).

    In ``all`` mode ``limit`` caps the number of chains; hitting it sets
    ``truncated`` and returns what was found.
    """
    if mode not in ("one", "all"):
        raise ValueError(f"mode must be one or all, got {mode!r}")
    table = run_dp(df, n, objective, tie_epsilon)
    opt, _ = best_value(table)
    out = ExtremalChains(n=n, objective=objective, optimum=opt)
    if mode == "one":
        seq = reconstruct_one(table)
        rep = realize(seq)
        out.sequences = [seq]
        out.chains = [rep.chain]
        out.report = rep
        out.link_word_count = out.congruence_count = 1
        return out

    seen: Dict[tuple, GridChain] = {}
    keys = set()
    for seq in iter_extremal(table):
        out.sequences.append(seq)
        for chain in iter_valid_realizations(uncompress(seq), use_l5_pruning):
            if chain.cells in seen:
                continue
            if limit is not None and len(seen) >= limit:
                out.truncated = True
                break
            seen[chain.cells] = chain
            keys.add(canonical_key(chain))
        if out.truncated:
            break
    out.chains = list(seen.values())
    out.link_word_count = len(out.chains)
    out.congruence_count = len(keys)
    return out


@dataclass
class PeriodReport:
    n_max: int
    values: Dict[int, Fraction]
    base_ok: bool
    increments: Dict[int, Fraction]
    constant_increment: Optional[Fraction]
    printed_coefficient: Fraction
    recurrence_increment: Fraction

    @property
    def matches_printed(self) -> bool:
        return self.constant_increment == self.printed_coefficient

    @property
    def matches_recurrence(self) -> bool:
        return self.constant_increment == self.recurrence_increment

    def summary(self) -> str:
        lines = [
            f"M(n) = 11/18 + n/3 for n = 3..6: {'yes' if self.base_ok else 'NO'}",
        ]
        if self.constant_increment is None:
            lines.append("M(n+4) - M(n) is not constant")
        else:
            lines.append(f"M(n+4) - M(n) = {self.constant_increment} for 3 <= n <= {self.n_max - 4}")
        lines.append(
            f"printed per-period coefficient {self.printed_coefficient}: "
            f"{'agrees' if self.matches_printed else 'disagrees'}"
        )
        lines.append(
            f"g(ST) + g(CS) = {self.recurrence_increment}: "
            f"{'agrees' if self.matches_recurrence else 'disagrees'}"
        )
        return "\n".join(lines)


def r_minus1_period_check(n_max: int = 100) -> PeriodReport:
    """Maximum of R_{-1} per n and its increment over one period of four."""
    if n_max < 10:
        raise ValueError("n_max must be at least 10")
    df = builtin_index("randic", "alpha=-1")
    table = run_dp(df, n_max, "max")
    vals = {n: best_value(table, n)[0] for n in range(3, n_max + 1)}
    base_ok = all(vals[n] == Fraction(11, 18) + Fraction(n, 3) for n in range(3, 7))
    inc = {n: vals[n + 4] - vals[n] for n in range(3, n_max - 3)}
    distinct = set(inc.values())
    g = g_table(df)
    return PeriodReport(
        n_max=n_max,
        values=vals,
        base_ok=base_ok,
        increments=inc,
        constant_increment=distinct.pop() if len(distinct) == 1 else None,
        printed_coefficient=Fraction(143, 144),
        recurrence_increment=g.gST + g.gCS,
    )
