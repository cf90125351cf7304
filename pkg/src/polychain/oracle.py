"""Brute-force ground truth: every chain with n squares, by direct grid search.

Nothing here goes through action words.  Chains are grown cell by cell from
(0,0),(1,0) with the first vertical step pointing down, each index value is
read off the chain graph, and congruent shapes are merged by a canonical key.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from typing import Dict, Iterator, List, Sequence, Tuple

from polychain.chain.geometry import (
    OFFSETS,
    Cell,
    GridChain,
    chain_to_graph,
    instructions_to_cells,
    validate_chain,
)
from polychain.index import DegreeFunction, ti_of_profile
from polychain.values import DEFAULT_TIE_EPSILON, Value, ties

N_CAP = 12

_SYMMETRIES = (
    lambda x, y: (x, y),
    lambda x, y: (-x, y),
    lambda x, y: (x, -y),
    lambda x, y: (-x, -y),
    lambda x, y: (y, x),
    lambda x, y: (-y, x),
    lambda x, y: (y, -x),
    lambda x, y: (-y, -x),
)


def canonical_key(chain: GridChain) -> bytes:
    """Lexicographically least translated cell set over the 8 lattice symmetries."""
    best = None
    for sym in _SYMMETRIES:
        pts = [sym(c.x, c.y) for c in chain.cells]
        mx = min(p[0] for p in pts)
        my = min(p[1] for p in pts)
        norm = tuple(sorted((x - mx, y - my) for x, y in pts))
        if best is None or norm < best:
            best = norm
    return ";".join(f"{x},{y}" for x, y in best).encode()


def _grow(n: int, prefix: Sequence[str]) -> Iterator[Tuple[str, ...]]:
    """Instruction words of valid chains with n cells extending ``prefix``."""
    chain = instructions_to_cells(prefix) if prefix else GridChain(((0, 0),))
    ok, _ = validate_chain(chain)
    if not ok:
        return
    cells = list(chain.cells)
    steps = list(prefix)
    turned = any(s in "UD" for s in steps)

    def rec(turned):
        if len(cells) == n:
            yield tuple(steps)
            return
        last = cells[-1]
        for s, (dx, dy) in OFFSETS.items():
            if not turned and s == "U":
                continue
            cells.append(Cell(last.x + dx, last.y + dy))
            # only the newest cell can fail once the prefix is known valid
            if _last_cell_ok(cells):
                steps.append(s)
                yield from rec(turned or s == "D")
                steps.pop()
            cells.pop()

    yield from rec(turned)


def _last_cell_ok(cells: List[Cell]) -> bool:
    i = len(cells) - 1
    c = cells[i]
    prev = cells[i - 1]
    for j in range(i - 1):
        d = cells[j]
        if d == c:
            return False
        if abs(d.x - c.x) + abs(d.y - c.y) == 1:
            return False
    if i >= 2:
        far = _far_corners(prev, c)
        for j in range(i - 1):
            d = cells[j]
            for vx, vy in far:
                if d.x <= vx <= d.x + 1 and d.y <= vy <= d.y + 1:
                    return False
    return True


def _far_corners(prev: Cell, c: Cell):
    dx, dy = c.x - prev.x, c.y - prev.y
    x, y = c.x, c.y
    if dx:
        vx = x + 1 if dx == 1 else x
        return ((vx, y), (vx, y + 1))
    vy = y + 1 if dy == 1 else y
    return ((x, vy), (x + 1, vy))


def enumerate_chains(n: int, mode: str = "link_words", n_cap: int = N_CAP) -> Iterator[GridChain]:
    """All chains with n squares (fixed start, first vertical step down).

    ``link_words`` yields every construction; ``congruence`` keeps one chain
    per congruence class (first met in search order).
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if n > n_cap:
        raise ValueError(f"n = {n} exceeds the oracle cap {n_cap}")
    if mode not in ("link_words", "congruence"):
        raise ValueError(f"unknown counting mode {mode!r}")
    if n == 1:
        yield GridChain(((0, 0),), validated=True)
        return
    seen = set()
    for steps in _grow(n, ("R",)):
        chain = GridChain(instructions_to_cells(steps).cells, validated=True)
        if mode == "congruence":
            key = canonical_key(chain)
            if key in seen:
                continue
            seen.add(key)
        yield chain


@dataclass
class ChainRecord:
    chain: GridChain
    profile: Dict[Tuple[int, int], int]
    key: bytes


def _record(chain: GridChain) -> ChainRecord:
    return ChainRecord(chain, chain_to_graph(chain).edge_profile(), canonical_key(chain))


def _records_for_prefix(args):
    n, prefix = args
    return [
        _record(GridChain(instructions_to_cells(s).cells, validated=True)) for s in _grow(n, prefix)
    ]


_RECORD_CACHE: Dict[int, List[ChainRecord]] = {}


def chain_records(n: int, jobs: int = 1, n_cap: int = N_CAP) -> List[ChainRecord]:
    """Every chain with n squares along with its edge degree profile (cached)."""
    if n > n_cap:
        raise ValueError(f"n = {n} exceeds the oracle cap {n_cap}")
    if n in _RECORD_CACHE:
        return _RECORD_CACHE[n]
    if jobs > 1 and n >= 8:
        prefixes = list(_grow(5, ("R",)))
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            parts = ex.map(_records_for_prefix, [(n, p) for p in prefixes])
            recs = [r for part in parts for r in part]
        # canonical order regardless of worker scheduling
        recs.sort(key=lambda r: r.chain.steps())
    else:
        recs = [_record(c) for c in enumerate_chains(n, "link_words", n_cap)]
    _RECORD_CACHE[n] = recs
    return recs


@dataclass
class BruteExtremes:
    n: int
    min: Value
    max: Value
    argmin: List[GridChain] = field(default_factory=list)
    argmax: List[GridChain] = field(default_factory=list)
    argmin_classes: int = 0
    argmax_classes: int = 0


def brute_extremes(
    n: int, df: DegreeFunction, tie_epsilon: float = DEFAULT_TIE_EPSILON, jobs: int = 1
) -> BruteExtremes:
    """Exact extremes of the index over all n-square chains, with every attaining chain."""
    recs = chain_records(n, jobs)
    vals = [ti_of_profile(r.profile, df) for r in recs]
    lo, hi = min(vals), max(vals)
    argmin = [r for r, v in zip(recs, vals) if ties(v, lo, tie_epsilon)]
    argmax = [r for r, v in zip(recs, vals) if ties(v, hi, tie_epsilon)]
    return BruteExtremes(
        n=n,
        min=lo,
        max=hi,
        argmin=[r.chain for r in argmin],
        argmax=[r.chain for r in argmax],
        argmin_classes=len({r.key for r in argmin}),
        argmax_classes=len({r.key for r in argmax}),
    )


def restricted_chains(n: int, n_cap: int = N_CAP) -> Iterator[GridChain]:
    """The 2^(n-2) chains grown only to the right of or below the last square."""
    if n < 2:
        raise ValueError("restricted chains need n >= 2")
    if n > n_cap:
        raise ValueError(f"n = {n} exceeds the oracle cap {n_cap}")
    for tail in product("RD", repeat=n - 2):
        yield instructions_to_cells(("R",) + tail).checked()


def chain_counts(n: int) -> Tuple[int, int]:
    """(link-word count, congruence-class count) of all n-square chains."""
    recs = chain_records(n)
    return len(recs), len({r.key for r in recs})
