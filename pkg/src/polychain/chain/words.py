"""The sequence encodings of a chain and the conversions between them.

* links: ``L_1..L_n`` in {1, 2, 3}, with ``L_1 = L_2 = 1``;
* actions: one of SS, SC, CS, CC, TT per window of three consecutive links;
* compressed actions: the tight-turn triples (SC,CS,TT) and (CC,CS,TT)
  collapsed to ST and CT;
* instructions: R/L/U/D steps placing squares 2..n.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple, Union

from polychain.index import DegreeFunction, base_values, g_table
from polychain.values import Value, total

ACTIONS = ("SS", "SC", "CS", "CC", "TT")
COMPRESSED = ("SS", "SC", "CS", "CC", "ST", "CT")
INSTRUCTIONS = ("R", "L", "U", "D")
OPPOSITE = {"R": "L", "L": "R", "U": "D", "D": "U"}


def opposite(step: str) -> str:
    return OPPOSITE[step]


_AFTER_S = {"SS", "SC", "TT"}
_AFTER_C = {"CS", "CC"}
_C_AFTER_S = {"SS", "SC", "ST"}
_C_AFTER_C = {"CS", "CC", "CT"}


class GrammarError(ValueError):
    """A word violating its sequence grammar; ``position`` is 1-based."""

    def __init__(self, message: str, position: int | None = None):
        super().__init__(message if position is None else f"position {position}: {message}")
        self.position = position


@dataclass(frozen=True)
class LinkSequence:
    entries: Tuple[int, ...]

    def __post_init__(self):
        e = tuple(int(v) for v in self.entries)
        object.__setattr__(self, "entries", e)
        if len(e) < 2:
            raise GrammarError("a link word has at least two entries")
        for pos, v in enumerate(e, start=1):
            if v not in (1, 2, 3):
                raise GrammarError(f"link {v} not in {{1,2,3}}", pos)
        if e[0] != 1 or e[1] != 1:
            raise GrammarError("links must start with 1,1", 1 if e[0] != 1 else 2)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    @property
    def locally_realizable(self) -> bool:
        return self.first_unrealizable_pair() is None

    def first_unrealizable_pair(self) -> int | None:
        """1-based index k of the first pair (L_k, L_k+1) equal to (2,3) or (3,3)."""
        e = self.entries
        for k in range(len(e) - 1):
            if e[k + 1] == 3 and e[k] in (2, 3):
                return k + 1
        return None

    def __str__(self) -> str:
        return ",".join(map(str, self.entries))


def check_actions(entries: Sequence[str]) -> None:
    if not entries:
        raise GrammarError("an action word has at least one entry")
    for pos, a in enumerate(entries, start=1):
        if a not in ACTIONS:
            raise GrammarError(f"unknown action {a!r}", pos)
    if entries[0] not in ("SS", "SC"):
        raise GrammarError(f"first action must be SS or SC, got {entries[0]}", 1)
    for i in range(1, len(entries)):
        prev, cur = entries[i - 1], entries[i]
        allowed = _AFTER_S if prev[1] == "S" else _AFTER_C
        if cur not in allowed:
            raise GrammarError(f"{cur} cannot follow {prev}", i + 1)
        if cur == "TT":
            if prev != "CS":
                raise GrammarError("TT must follow CS", i + 1)
            if i >= 2 and entries[i - 2] == "TT":
                raise GrammarError("pattern (TT, CS, TT) is not realizable", i + 1)


def check_compressed(entries: Sequence[str]) -> None:
    if not entries:
        raise GrammarError("a compressed action word has at least one entry")
    for pos, a in enumerate(entries, start=1):
        if a not in COMPRESSED:
            raise GrammarError(f"unknown compressed action {a!r}", pos)
    if entries[0] not in _C_AFTER_S:
        raise GrammarError(f"first compressed action must be SS, SC or ST, got {entries[0]}", 1)
    for i in range(1, len(entries)):
        prev, cur = entries[i - 1], entries[i]
        allowed = _C_AFTER_S if prev[1] == "S" else _C_AFTER_C
        if cur not in allowed:
            raise GrammarError(f"{cur} cannot follow {prev}", i + 1)


@dataclass(frozen=True)
class ActionSequence:
    entries: Tuple[str, ...]

    def __post_init__(self):
        e = tuple(self.entries)
        object.__setattr__(self, "entries", e)
        check_actions(e)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    @property
    def square_count(self) -> int:
        return len(self.entries) + 2

    def first_letter(self, i: int) -> str:
        return self.entries[i - 1][0]

    def second_letter(self, i: int) -> str:
        return self.entries[i - 1][1]

    def __str__(self) -> str:
        return ",".join(self.entries)


@dataclass(frozen=True)
class CompressedActionSequence:
    entries: Tuple[str, ...]

    def __post_init__(self):
        e = tuple(self.entries)
        object.__setattr__(self, "entries", e)
        check_compressed(e)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    @property
    def square_count(self) -> int:
        return 2 + sum(3 if a[1] == "T" else 1 for a in self.entries)

    def __str__(self) -> str:
        return ",".join(self.entries)


@dataclass(frozen=True)
class InstructionSequence:
    entries: Tuple[str, ...]

    def __post_init__(self):
        e = tuple(self.entries)
        object.__setattr__(self, "entries", e)
        if not e:
            raise GrammarError("an instruction word has at least one entry")
        for pos, s in enumerate(e, start=1):
            if s not in OPPOSITE:
                raise GrammarError(f"unknown instruction {s!r}", pos)
        if e[0] != "R":
            raise GrammarError("the first instruction is R by convention", 1)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __str__(self) -> str:
        return ",".join(self.entries)


# ---------------------------------------------------------------------------
# conversions

# (L_i, L_i+1, L_i+2) -> action
_WINDOW = {}
for _i in (1, 2, 3):
    _WINDOW[(_i, 1, 1)] = "SS"
    _WINDOW[(_i, 1, 2)] = "SC"
    _WINDOW[(_i, 2, 1)] = "CS"
    _WINDOW[(_i, 2, 2)] = "CC"
_WINDOW[(1, 1, 3)] = "SC"
_WINDOW[(1, 3, 1)] = "CS"
_WINDOW[(1, 3, 2)] = "CC"
_WINDOW[(2, 1, 3)] = "TT"
_WINDOW[(3, 1, 3)] = "TT"


def links_to_actions(links: LinkSequence) -> ActionSequence:
    e = links.entries
    if len(e) < 3:
        raise GrammarError("need at least three links to form an action")
    bad = links.first_unrealizable_pair()
    if bad is not None:
        raise GrammarError(f"links not locally realizable: pair ({e[bad - 1]},{e[bad]})", bad)
    out = []
    for i in range(len(e) - 2):
        w = (e[i], e[i + 1], e[i + 2])
        assert w in _WINDOW, f"window {w} unclassified"
        out.append(_WINDOW[w])
    return ActionSequence(tuple(out))


def compress(actions: ActionSequence) -> CompressedActionSequence:
    e = actions.entries
    out = []
    for i, a in enumerate(e):
        if a != "TT":
            out.append(a)
            continue
        if i < 2:
            raise GrammarError("TT in position 1 or 2 cannot be compressed", i + 1)
        if e[i - 1] != "CS" or e[i - 2] not in ("SC", "CC") or out[-2:] != [e[i - 2], "CS"]:
            raise GrammarError("TT not preceded by (SC,CS) or (CC,CS)", i + 1)
        del out[-2:]
        out.append(e[i - 2][0] + "T")
    return CompressedActionSequence(tuple(out))


def uncompress(seq: CompressedActionSequence) -> ActionSequence:
    out = []
    for a in seq.entries:
        if a == "ST":
            out += ("SC", "CS", "TT")
        elif a == "CT":
            out += ("CC", "CS", "TT")
        else:
            out.append(a)
    return ActionSequence(tuple(out))


def value_of_actions(
    seq: Union[ActionSequence, CompressedActionSequence], df: DegreeFunction
) -> Value:
    """Index value assigned to an action word by summing local contributions."""
    g = g_table(df)
    base = base_values(df)
    e = seq.entries
    first = e[0]
    if first == "SS":
        start = base.tiSS
    elif first == "SC":
        start = base.tiSC
    elif first == "ST":
        start = base.tiSC + g.gCS + g.gTT
    else:
        raise GrammarError(f"invalid first entry {first}", 1)
    counts = Counter(e[1:])
    return total([start] + [c * g[a] for a, c in sorted(counts.items())])


# ---------------------------------------------------------------------------
# text formats


def _tokens(text: str) -> list:
    s = text.strip()
    if not s:
        raise GrammarError("empty word")
    toks = s.replace(";", ",").split(",")
    out = []
    for pos, t in enumerate(toks, start=1):
        t = t.strip()
        if not t:
            raise GrammarError("empty entry", pos)
        out.append(t)
    return out


def parse_links(text: str) -> LinkSequence:
    vals = []
    for pos, t in enumerate(_tokens(text), start=1):
        if t not in ("1", "2", "3"):
            raise GrammarError(f"expected 1, 2 or 3, got {t!r}", pos)
        vals.append(int(t))
    return LinkSequence(tuple(vals))


def parse_actions(text: str) -> ActionSequence:
    return ActionSequence(tuple(t.upper() for t in _tokens(text)))


def parse_compressed(text: str) -> CompressedActionSequence:
    return CompressedActionSequence(tuple(t.upper() for t in _tokens(text)))


def parse_instructions(text: str) -> InstructionSequence:
    toks = _tokens(text)
    if len(toks) == 1 and len(toks[0]) > 1:
        toks = list(toks[0])
    return InstructionSequence(tuple(t.upper() for t in toks))


def as_compressed(seq: Union[ActionSequence, CompressedActionSequence, Iterable[str], str]):
    if isinstance(seq, CompressedActionSequence):
        return seq
    if isinstance(seq, ActionSequence):
        return compress(seq)
    if isinstance(seq, str):
        return parse_compressed(seq)
    return CompressedActionSequence(tuple(seq))
