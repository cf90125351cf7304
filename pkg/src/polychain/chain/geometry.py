"""Grid geometry of polyomino chains.

Cells are unit squares addressed by their lower-left corner.  A chain is the
ordered list of its cells; consecutive cells share an edge.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, replace
from itertools import accumulate
from typing import Dict, FrozenSet, List, NamedTuple, Optional, Sequence, Tuple

from polychain.chain.words import InstructionSequence, LinkSequence

Point = Tuple[int, int]

OFFSETS: Dict[str, Point] = {"R": (1, 0), "L": (-1, 0), "U": (0, 1), "D": (0, -1)}
STEP_NAMES: Dict[Point, str] = {v: k for k, v in OFFSETS.items()}
HORIZONTAL = frozenset("RL")


class Cell(NamedTuple):
    x: int
    y: int


class InvalidChainError(ValueError):
    def __init__(self, message: str, index: Optional[int] = None):
        super().__init__(message)
        self.index = index


def corners(c: Point) -> Tuple[Point, Point, Point, Point]:
    x, y = c
    return ((x, y), (x + 1, y), (x, y + 1), (x + 1, y + 1))


def ending_vertices(prev: Point, cur: Point) -> Tuple[Point, Point]:
    """The two corners of ``cur`` not on the edge it shares with ``prev``."""
    x, y = cur
    dx, dy = x - prev[0], y - prev[1]
    if dx == 1:
        return ((x + 1, y), (x + 1, y + 1))
    if dx == -1:
        return ((x, y), (x, y + 1))
    if dy == 1:
        return ((x, y + 1), (x + 1, y + 1))
    return ((x, y), (x + 1, y))


@dataclass(frozen=True)
class GridChain:
    cells: Tuple[Cell, ...]
    validated: bool = False

    def __post_init__(self):
        cells = self.cells
        if type(cells) is not tuple or not all(type(c) is Cell for c in cells):
            cells = tuple(Cell(int(c[0]), int(c[1])) for c in cells)
            object.__setattr__(self, "cells", cells)
        if not cells:
            raise InvalidChainError("a chain needs at least one cell")
        if self.validated:
            return
        for k in range(1, len(cells)):
            a, b = cells[k - 1], cells[k]
            if abs(a.x - b.x) + abs(a.y - b.y) != 1:
                raise InvalidChainError(
                    f"cells {k} and {k + 1} are not edge-adjacent: {tuple(a)} -> {tuple(b)}", k + 1
                )

    def __len__(self) -> int:
        return len(self.cells)

    @property
    def n(self) -> int:
        return len(self.cells)

    def steps(self) -> str:
        """Instruction letters R/L/U/D placing cells 2..n."""
        c = self.cells
        return "".join(STEP_NAMES[(c[k].x - c[k - 1].x, c[k].y - c[k - 1].y)] for k in range(1, len(c)))

    def checked(self) -> "GridChain":
        """Return a validated copy or raise InvalidChainError."""
        if self.validated:
            return self
        ok, idx = validate_chain(self)
        if not ok:
            raise InvalidChainError(f"not a chain (fails at cell {idx})", idx)
        return replace(self, validated=True)

    def to_text(self) -> str:
        return "; ".join(f"{c.x} {c.y}" for c in self.cells)


def instructions_to_cells(instr: InstructionSequence | Sequence[str] | str) -> GridChain:
    letters = instr.entries if isinstance(instr, InstructionSequence) else tuple(instr)
    xs = accumulate((OFFSETS[s][0] for s in letters), initial=0)
    ys = accumulate((OFFSETS[s][1] for s in letters), initial=0)
    # unit steps make consecutive cells adjacent, so skip the constructor check
    chain = object.__new__(GridChain)
    object.__setattr__(chain, "cells", tuple(map(Cell, xs, ys)))
    object.__setattr__(chain, "validated", False)
    return chain


def validate_chain(chain: GridChain) -> Tuple[bool, Optional[int]]:
    """Check the chain growth discipline cell by cell (1-based failure index).

    Cell i must be new, touch no earlier cell by an edge except cell i-1, and
    its two ending vertices must not be vertices of cells 1..i-2.
    """
    cells = chain.cells
    # points packed into single ints for speed; W exceeds any coordinate span
    W = 4 * len(cells) + 8
    seen: Dict[int, int] = {}
    get = seen.get
    old_vertices: set = set()
    for i, (x, y) in enumerate(cells):
        key = x * W + y
        if key in seen:
            return False, i + 1
        if i >= 1:
            for nb in (key + W, key - W, key + 1, key - 1):
                j = get(nb)
                if j is not None and j != i - 1:
                    return False, i + 1
            if i >= 2:
                px, py = cells[i - 2]
                pk = px * W + py
                old_vertices.update((pk, pk + W, pk + 1, pk + W + 1))
                qx, qy = cells[i - 1]
                # ending vertices: the far edge of the new cell
                if x > qx:
                    e1, e2 = key + W, key + W + 1
                elif x < qx:
                    e1, e2 = key, key + 1
                elif y > qy:
                    e1, e2 = key + 1, key + W + 1
                else:
                    e1, e2 = key, key + W
                if e1 in old_vertices or e2 in old_vertices:
                    return False, i + 1
        seen[key] = i
    return True, None

def explain_failure(chain: GridChain, idx: int) -> str:
    """Human-readable reason why cell ``idx`` (1-based) breaks the chain."""
    cells = chain.cells
    i = idx - 1
    c = cells[i]
    for j in range(i):
        if cells[j] == c:
            return f"cell {idx} repeats cell {j + 1}"
    for j in range(i - 1):
        d = cells[j]
        if abs(d.x - c.x) + abs(d.y - c.y) == 1:
            return f"cell {idx} adjacent to cell {j + 1}"
    e1, e2 = ending_vertices(cells[i - 1], c)
    for j in range(i - 1):
        if e1 in corners(cells[j]) or e2 in corners(cells[j]):
            return f"cell {idx} shares a corner with cell {j + 1}"
    return f"cell {idx} breaks the chain"


@dataclass(frozen=True)
class ChainGraph:
    degree: Dict[Point, int]
    edges: FrozenSet[Tuple[Point, Point]]

    @property
    def vertices(self) -> List[Point]:
        return sorted(self.degree)

    def degree_histogram(self) -> Dict[int, int]:
        return dict(sorted(Counter(self.degree.values()).items()))

    def edge_profile(self) -> Dict[Tuple[int, int], int]:
        deg = self.degree
        prof: Counter = Counter()
        for u, v in self.edges:
            a, b = deg[u], deg[v]
            prof[(a, b) if a <= b else (b, a)] += 1
        return dict(sorted(prof.items()))


def chain_to_graph(chain: GridChain) -> ChainGraph:
    if not chain.validated:
        raise InvalidChainError("chain_to_graph needs a validated chain; call .checked() first")
    edges = set()
    for x, y in chain.cells:
        a, b, c, d = (x, y), (x + 1, y), (x, y + 1), (x + 1, y + 1)
        edges.add((a, b))
        edges.add((c, d))
        edges.add((a, c))
        edges.add((b, d))
    degree: Counter = Counter()
    for u, v in edges:
        degree[u] += 1
        degree[v] += 1
    return ChainGraph(degree=dict(degree), edges=frozenset(edges))


def derive_links(chain: GridChain) -> LinkSequence:
    """Link word of a validated chain.

    Link 1 keeps the previous direction.  On a turn, the new square is compared
    with the last earlier square (index > 1) lying on the new axis: same
    orientation gives link 2, opposite gives link 3; no such square gives 2.
    """
    if not chain.validated:
        raise InvalidChainError("derive_links needs a validated chain")
    n = chain.n
    if n < 2:
        raise InvalidChainError("derive_links needs at least two cells")
    steps = chain.steps()  # steps[k] is the direction of square k + 2
    links = [1, 1]
    last_on_axis = {True: None, False: None}  # horizontal? -> orientation of latest square
    last_on_axis[steps[0] in HORIZONTAL] = steps[0]
    for k in range(1, len(steps)):
        cur, prev = steps[k], steps[k - 1]
        cur_h = cur in HORIZONTAL
        if cur_h == (prev in HORIZONTAL):
            links.append(1)
        else:
            ref = last_on_axis[cur_h]
            links.append(2 if ref is None or ref == cur else 3)
        last_on_axis[cur_h] = cur
    return LinkSequence(tuple(links))


def parse_cells(text: str) -> GridChain:
    """Parse ``"0 0; 1 0; 2 0"`` (separators ``;`` between cells, whitespace or comma inside)."""
    cells = []
    parts = [p for p in text.replace("\n", ";").split(";")]
    for pos, part in enumerate(parts, start=1):
        part = part.strip()
        if not part:
            if pos == len(parts):
                continue
            raise ValueError(f"cell {pos}: empty entry")
        toks = part.replace(",", " ").split()
        if len(toks) != 2:
            raise ValueError(f"cell {pos}: expected two integers, got {part!r}")
        try:
            cells.append(Cell(int(toks[0]), int(toks[1])))
        except ValueError:
            raise ValueError(f"cell {pos}: expected two integers, got {part!r}") from None
    return GridChain(tuple(cells))
