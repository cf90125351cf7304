"""From compressed action words to actual grid chains.

The deterministic route (parity correction, actions -> links -> instructions)
always lands on a valid chain.  The exhaustive route walks every instruction
word an action word admits and keeps the ones that place validly.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple, Union

from polychain.chain.geometry import (
    OFFSETS,
    Cell,
    GridChain,
    corners,
    ending_vertices,
    instructions_to_cells,
    validate_chain,
)
from polychain.chain.words import (
    OPPOSITE,
    ActionSequence,
    CompressedActionSequence,
    GrammarError,
    InstructionSequence,
    LinkSequence,
    uncompress,
)


class RealizationError(RuntimeError):
    """The deterministic pipeline produced an invalid chain (an internal bug)."""


@dataclass(frozen=True)
class RealizationReport:
    instructions: InstructionSequence
    chain: GridChain
    valid: bool
    failure_index: Optional[int] = None
    corrected: Optional[CompressedActionSequence] = None
    links: Optional[LinkSequence] = None

    def to_text(self) -> str:
        return self.chain.to_text()


@dataclass(frozen=True)
class ChangeCounter:
    kind: str  # "compressed" (m_i) or "links" (M_i)
    counts: Tuple[int, ...]


def change_counters(seq: Union[CompressedActionSequence, LinkSequence]) -> ChangeCounter:
    """Cumulative direction-change counts, one per entry."""
    out = []
    acc = 0
    if isinstance(seq, CompressedActionSequence):
        for a in seq.entries:
            if a in ("SC", "CC"):
                acc += 1
            elif a in ("ST", "CT"):
                acc += 2
            out.append(acc)
        return ChangeCounter("compressed", tuple(out))
    if isinstance(seq, LinkSequence):
        for v in seq.entries:
            if v != 1:
                acc += 1
            out.append(acc)
        return ChangeCounter("links", tuple(out))
    raise TypeError(f"change_counters takes compressed actions or links, not {type(seq).__name__}")


def parity_correct(seq: CompressedActionSequence) -> CompressedActionSequence:
    """Move tight turns so that every T-ending entry has an even change count.

    When a T-ending entry is reached with odd count, the nearest earlier
    C-ending entry becomes T-ending and the current one C-ending.  The local
    contributions satisfy g(FT) = g(FC) + g(CS) + g(TT), so the value is kept.
    """
    a = list(seq.entries)
    m = 0
    last_c = None
    for i, e in enumerate(a):
        if e in ("SC", "CC"):
            m += 1
        elif e in ("ST", "CT"):
            m += 2
        if e[1] == "T" and m % 2 == 1:
            if last_c is None:
                raise GrammarError("odd tight turn without an earlier C-ending entry", i + 1)
            a[last_c] = a[last_c][0] + "T"
            a[i] = e[0] + "C"
            last_c = i
        elif a[i][1] == "C":
            last_c = i
    return CompressedActionSequence(tuple(a))


def actions_to_links(actions: ActionSequence) -> LinkSequence:
    links = [1, 1]
    for b in actions.entries:
        if b == "TT":
            links.append(3)
        elif b[1] == "S":
            links.append(1)
        else:
            links.append(2)
    return LinkSequence(tuple(links))


def links_to_instructions(links: LinkSequence) -> InstructionSequence:
    """Place squares from a link word: straight run of R, first turn D.

    Link 1 repeats the previous step; link 2 repeats the step that placed the
    square just before the latest turn; link 3 reverses it.
    """
    L = links.entries
    n = len(L)
    instr: List[str] = []
    k = 2
    while k < n and L[k] == 1:
        k += 1
    # k = length of the all-1 prefix
    instr += ["R"] * (k - 1)
    if k < n:
        if L[k] == 3:
            raise GrammarError("type-3 turn with no earlier turn to reverse", k + 1)
        instr.append("D")
    last_turn = k + 1  # 1-based index of the latest non-1 link
    for i in range(k + 2, n + 1):
        li = L[i - 1]
        if li == 1:
            instr.append(instr[-1])
        else:
            ref = instr[last_turn - 3]  # I_{l-2}
            instr.append(ref if li == 2 else OPPOSITE[ref])
            last_turn = i
    return InstructionSequence(tuple(instr))


def realize(seq: CompressedActionSequence) -> RealizationReport:
    """Deterministic realization; raises RealizationError if the result is invalid."""
    corrected = parity_correct(seq)
    links = actions_to_links(uncompress(corrected))
    instr = links_to_instructions(links)
    chain = instructions_to_cells(instr)
    ok, idx = validate_chain(chain)
    if not ok:
        raise RealizationError(
            f"realization of {seq} is invalid at cell {idx} (instructions {instr})"
        )
    return RealizationReport(
        instructions=instr,
        chain=GridChain(chain.cells, validated=True),
        valid=True,
        corrected=corrected,
        links=links,
    )


# ---------------------------------------------------------------------------
# exhaustive enumeration

_PERP = {"R": ("D", "U"), "L": ("D", "U"), "U": ("R", "L"), "D": ("R", "L")}


def _step_options(b: Sequence[str], instr: List[str], i: int, seen_pivot: bool):
    """Instruction choices for action b_i (1-based), given I_1..I_i in ``instr``.

    Returns (choices, is_pivot_branch).
    """
    a = b[i]
    if a in ("SS", "CS"):
        return (instr[i],), False
    if a == "CC":
        return (instr[i - 1],), False
    if a == "TT":
        return (OPPOSITE[instr[i - 2]],), False
    # a == "SC"
    if not seen_pivot:
        return ("D",), False
    if i >= 3 and b[i - 2] in ("SC", "CC", "TT"):
        return (instr[i - 2],), False
    return _PERP[instr[i]], True


def all_instruction_sequences(actions: ActionSequence) -> Iterator[InstructionSequence]:
    """Every instruction word consistent with an action word (no validity check).

    The first pivot turns down; a pivot two entries after a turn repeats that
    turn's predecessor step; every other pivot branches down/right first.
    """
    b = (None,) + actions.entries
    n2 = len(actions.entries)

    def rec(i, instr, seen):
        if i > n2:
            yield InstructionSequence(tuple(instr[1:]))
            return
        opts, _ = _step_options(b, instr, i, seen)
        now_seen = seen or b[i] == "SC"
        for s in opts:
            instr.append(s)
            yield from rec(i + 1, instr, now_seen)
            instr.pop()

    yield from rec(1, [None, "R"], False)


class _Placement:
    """Incrementally validated cell placement supporting undo."""

    def __init__(self):
        self.cells: List[Cell] = [Cell(0, 0)]
        self.index = {Cell(0, 0): 0}
        self.vcount = {}  # vertex -> number of cells 1..i-2 having it

    def _add_vertices(self, c, delta):
        for v in corners(c):
            k = self.vcount.get(v, 0) + delta
            if k:
                self.vcount[v] = k
            else:
                del self.vcount[v]

    def push(self, step: str) -> bool:
        prev = self.cells[-1]
        dx, dy = OFFSETS[step]
        c = Cell(prev.x + dx, prev.y + dy)
        i = len(self.cells)
        if c in self.index:
            return False
        x, y = c
        for nb in ((x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)):
            j = self.index.get(nb)
            if j is not None and j != i - 1:
                return False
        if i >= 2:
            self._add_vertices(self.cells[i - 2], 1)
            e1, e2 = ending_vertices(prev, c)
            if e1 in self.vcount or e2 in self.vcount:
                self._add_vertices(self.cells[i - 2], -1)
                return False
        self.cells.append(c)
        self.index[c] = i
        return True

    def pop(self):
        c = self.cells.pop()
        del self.index[c]
        i = len(self.cells)
        if i >= 2:
            self._add_vertices(self.cells[i - 2], -1)


# Long-window pivot rules: (offset of straight pair start, action pattern before
# the pivot, required actions after it, source offset of the forced step,
# number of actions after the pivot covered by the validity window)
_PIVOT_RULES = (
    (6, ("SC", "CS", "TT", "CS", "SS"), (), 4, 0),
    (7, ("SC", "CS", "TT", "CS", "SS", "SS"), ("CS", "TT"), 5, 2),
    (4, ("SC", "CS", "SS"), ("CS", "TT", "CS"), 3, 3),
    (8, ("SC", "CS", "TT", "CS", "SS", "SS", "SS"), ("CS", "TT", "CS"), 6, 3),
)


def _forced_pivot(b, instr, i):
    """Forced step for pivot b_i from the long-window rules, or None."""
    n2 = len(b) - 1
    for back, before, after, src, ahead in _PIVOT_RULES:
        if i - back < 1 or i + len(after) > n2:
            continue
        if instr[i - back] != instr[i - back + 1]:
            continue
        if tuple(b[i - len(before):i]) != before:
            continue
        if tuple(b[i + 1:i + 1 + len(after)]) != after:
            continue
        return instr[i - src], ahead
    return None


def _window_valid(b, instr, place: _Placement, i, step, ahead) -> bool:
    """Does the forced step, continued deterministically ``ahead`` actions, place validly?"""
    pushed = 0
    ok = True
    trial = list(instr)
    try:
        if not place.push(step):
            return False
        pushed += 1
        trial.append(step)
        for j in range(i + 1, i + 1 + ahead):
            opts, branch = _step_options(b, trial, j, True)
            if branch or len(opts) != 1:
                ok = False
                break
            if not place.push(opts[0]):
                ok = False
                break
            pushed += 1
            trial.append(opts[0])
        return ok
    finally:
        for _ in range(pushed):
            place.pop()


def iter_valid_realizations(actions: ActionSequence, use_l5_pruning: bool = False) -> Iterator[GridChain]:
    """Depth-first walk over the instruction tree, pruning invalid prefixes."""
    b = (None,) + actions.entries
    n2 = len(actions.entries)
    place = _Placement()
    if not place.push("R"):
        return
    instr = [None, "R"]

    def rec(i, seen, pivots_seen):
        if i > n2:
            yield GridChain(tuple(place.cells), validated=True)
            return
        opts, branch = _step_options(b, instr, i, seen)
        if branch and use_l5_pruning and pivots_seen >= 1:
            forced = _forced_pivot(b, instr, i)
            if forced is not None:
                step, ahead = forced
                if _window_valid(b, instr, place, i, step, ahead):
                    opts = (step,)
        is_pivot = b[i] == "SC"
        for s in opts:
            if place.push(s):
                instr.append(s)
                yield from rec(i + 1, seen or is_pivot, pivots_seen + is_pivot)
                instr.pop()
                place.pop()

    yield from rec(1, False, 0)


def enumerate_valid_realizations(actions: ActionSequence, use_l5_pruning: bool = False) -> List[GridChain]:
    return list(iter_valid_realizations(actions, use_l5_pruning))
