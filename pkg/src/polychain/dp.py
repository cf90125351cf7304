"""Linear-time dynamic programme over compressed action words.

States are (squares, last second letter) with letter S or C (C also covers
T-endings).  Entries append one square (SS, CS, SC, CC) or three (ST, CT);
words start with SS, SC (3 squares) or ST (5 squares).

Exact tables are run on integers: every contribution is scaled by the common
denominator, which keeps n = 10^5 well under a second.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Dict, Iterator, List, Optional, Tuple

from polychain.chain.words import CompressedActionSequence
from polychain.index import DegreeFunction, base_values, g_table, negate
from polychain.values import DEFAULT_TIE_EPSILON, Value

STATES = ("S", "C")

# predecessor: (previous size, previous state, appended entry); previous state
# None marks a starting entry.
Pred = Tuple[int, Optional[str], str]


@dataclass
class DPTable:
    df: DegreeFunction
    n: int
    objective: str
    tie_epsilon: float
    raw: Dict[str, List]  # state -> raw value per size (index = size)
    preds: Dict[str, List[Tuple[Pred, ...]]]
    scale: Optional[int]  # common denominator for exact tables, None for float
    sign: int = 1  # -1 for minimisation (table holds values of -f)

    def value(self, k: int, state: str) -> Value:
        if not 3 <= k <= self.n:
            raise IndexError(f"size {k} outside table range 3..{self.n}")
        r = self.raw[state][k]
        if self.scale is not None:
            return Fraction(self.sign * r, self.scale)
        return self.sign * r

    def predecessors(self, k: int, state: str) -> Tuple[Pred, ...]:
        return self.preds[state][k]

    def _raw_ties(self, a, b) -> bool:
        if self.scale is not None:
            return a == b
        return abs(a - b) <= self.tie_epsilon * max(1.0, abs(a))


def _transitions(k: int):
    """Candidate (prev size, prev state, entry) per state, in fixed listing order."""
    s_opts: List[Pred] = []
    c_opts: List[Pred] = []
    if k == 3:
        return [(2, None, "SS")], [(2, None, "SC")]
    s_opts += [(k - 1, "S", "SS"), (k - 1, "C", "CS")]
    c_opts += [(k - 1, "S", "SC"), (k - 1, "C", "CC")]
    if k >= 6:
        c_opts += [(k - 3, "S", "ST"), (k - 3, "C", "CT")]
    if k == 5:
        c_opts.append((2, None, "ST"))
    return s_opts, c_opts


def run_dp(
    df: DegreeFunction,
    n: int,
    objective: str = "max",
    tie_epsilon: float = DEFAULT_TIE_EPSILON,
) -> DPTable:
    if n < 3:
        raise ValueError("the optimisation needs n >= 3 squares")
    if objective not in ("max", "min"):
        raise ValueError(f"objective must be max or min, got {objective!r}")
    work = negate(df) if objective == "min" else df
    g = g_table(work).as_dict()
    base = base_values(work)
    start = {"SS": base.tiSS, "SC": base.tiSC, "ST": base.tiSC + g["CS"] + g["TT"]}

    if work.exact:
        scale = 1
        for v in list(g.values()) + list(start.values()):
            scale = lcm(scale, v.denominator)
        gi = {a: int(v * scale) for a, v in g.items()}
        si = {a: int(v * scale) for a, v in start.items()}
    else:
        scale = None
        gi = {a: float(v) for a, v in g.items()}
        si = {a: float(v) for a, v in start.items()}

    raw = {"S": [None] * (n + 1), "C": [None] * (n + 1)}
    preds: Dict[str, List] = {"S": [()] * (n + 1), "C": [()] * (n + 1)}
    table = DPTable(df, n, objective, tie_epsilon, raw, preds, scale, -1 if objective == "min" else 1)
    if scale is not None:
        _fill_exact(raw, preds, gi, si, n)
        return table
    for k in range(3, n + 1):
        for state, opts in zip(STATES, _transitions(k)):
            best = None
            arg: List[Pred] = []
            for p in opts:
                pk, ps, entry = p
                v = si[entry] if ps is None else raw[ps][pk] + gi[entry]
                if best is None:
                    best, arg = v, [p]
                elif table._raw_ties(v, best):
                    arg.append(p)
                    if v > best:
                        best = v
                elif v > best:
                    best, arg = v, [p]
            raw[state][k] = best
            preds[state][k] = tuple(arg)
    return table


def _fill_exact(raw, preds, gi, si, n) -> None:
    """Integer fill; same transitions and listing order as ``_transitions``."""
    for k in range(3, min(n, 5) + 1):
        for state, opts in zip(STATES, _transitions(k)):
            vals = [si[e] if ps is None else raw[ps][pk] + gi[e] for pk, ps, e in opts]
            best = max(vals)
            raw[state][k] = best
            preds[state][k] = tuple(p for p, v in zip(opts, vals) if v == best)
    S, C = raw["S"], raw["C"]
    PS, PC = preds["S"], preds["C"]
    gSS, gCS, gSC, gCC, gST, gCT = (gi[a] for a in ("SS", "CS", "SC", "CC", "ST", "CT"))
    for k in range(6, n + 1):
        s1, c1, s3, c3 = S[k - 1], C[k - 1], S[k - 3], C[k - 3]
        a, b = s1 + gSS, c1 + gCS
        if a > b:
            S[k], PS[k] = a, ((k - 1, "S", "SS"),)
        elif b > a:
            S[k], PS[k] = b, ((k - 1, "C", "CS"),)
        else:
            S[k], PS[k] = a, ((k - 1, "S", "SS"), (k - 1, "C", "CS"))
        v1, v2, v3, v4 = s1 + gSC, c1 + gCC, s3 + gST, c3 + gCT
        best = max(v1, v2, v3, v4)
        C[k] = best
        p = []
        if v1 == best:
            p.append((k - 1, "S", "SC"))
        if v2 == best:
            p.append((k - 1, "C", "CC"))
        if v3 == best:
            p.append((k - 3, "S", "ST"))
        if v4 == best:
            p.append((k - 3, "C", "CT"))
        PC[k] = tuple(p)

def best_value(table: DPTable, n: Optional[int] = None) -> Tuple[Value, Tuple[str, ...]]:
    """Optimum over both terminal states and the state(s) attaining it."""
    n = table.n if n is None else n
    rs, rc = table.raw["S"][n], table.raw["C"][n]
    if table._raw_ties(rs, rc):
        states = ("S", "C")
        r = max(rs, rc)
    elif rs > rc:
        states, r = ("S",), rs
    else:
        states, r = ("C",), rc
    if table.scale is not None:
        return Fraction(table.sign * r, table.scale), states
    return table.sign * r, states


def reconstruct_one(table: DPTable, n: Optional[int] = None) -> CompressedActionSequence:
    """Follow first-listed predecessors back from the best state."""
    n = table.n if n is None else n
    _, states = best_value(table, n)
    k, state = n, states[0]
    rev = []
    while state is not None:
        pk, ps, entry = table.preds[state][k][0]
        rev.append(entry)
        k, state = pk, ps
    return CompressedActionSequence(tuple(reversed(rev)))


def iter_extremal(table: DPTable, n: Optional[int] = None) -> Iterator[CompressedActionSequence]:
    """Every optimal compressed word, by depth-first walk of the tie DAG."""
    n = table.n if n is None else n
    _, states = best_value(table, n)
    suffix: List[str] = []

    def rec(k, state):
        if state is None:
            yield CompressedActionSequence(tuple(reversed(suffix)))
            return
        for pk, ps, entry in table.preds[state][k]:
            suffix.append(entry)
            yield from rec(pk, ps)
            suffix.pop()

    for st in states:
        yield from rec(n, st)


@dataclass
class ExtremalSet:
    optimum: Value
    sequences: List[CompressedActionSequence] = field(default_factory=list)
    truncated: bool = False

    def to_text(self) -> str:
        from polychain.values import format_value

        lines = [f"# optimum {format_value(self.optimum)}"]
        lines += [str(s) for s in self.sequences]
        if self.truncated:
            lines.append("# truncated")
        return "\n".join(lines) + "\n"


def enumerate_extremal(table: DPTable, n: Optional[int] = None, limit: Optional[int] = None) -> ExtremalSet:
    n = table.n if n is None else n
    opt, _ = best_value(table, n)
    out = ExtremalSet(opt)
    for seq in iter_extremal(table, n):
        if limit is not None and len(out.sequences) >= limit:
            out.truncated = True
            break
        out.sequences.append(seq)
    return out


def count_extremal_sequences(table: DPTable, n: Optional[int] = None) -> int:
    """Number of optimal compressed words, by path counting (no enumeration)."""
    n = table.n if n is None else n
    _, states = best_value(table, n)
    memo: Dict[Tuple[int, str], int] = {}

    def count(k, state):
        if state is None:
            return 1
        key = (k, state)
        if key not in memo:
            memo[key] = sum(count(pk, ps) for pk, ps, _ in table.preds[state][k])
        return memo[key]

    for k in range(3, n + 1):  # bottom-up keeps recursion shallow
        for st in STATES:
            count(k, st)
    return sum(count(n, st) for st in states)
