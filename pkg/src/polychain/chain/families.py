"""Generators: named chain families and random compressed action words."""
from __future__ import annotations

import random
from typing import Sequence

from polychain.chain.words import CompressedActionSequence, LinkSequence

_COST = {"SS": 1, "SC": 1, "CS": 1, "CC": 1, "ST": 3, "CT": 3}


def random_compressed(n_squares: int, seed: int) -> CompressedActionSequence:
    """Grammar-respecting compressed word with exactly ``n_squares`` squares.

    Each step picks uniformly among the entries the grammar allows and the
    remaining square budget fits; the result is not uniform over words.
    """
    if n_squares < 3:
        raise ValueError("n_squares must be at least 3")
    rng = random.Random(seed)
    left = n_squares - 2
    out = []
    last = "S"
    while left > 0:
        opts = ("SS", "SC", "ST") if last == "S" else ("CS", "CC", "CT")
        opts = [a for a in opts if _COST[a] <= left]
        a = rng.choice(opts)
        out.append(a)
        left -= _COST[a]
        last = "S" if a[1] == "S" else "C"
    return CompressedActionSequence(tuple(out))


def segment_links(lengths: Sequence[int], turns: Sequence[int]) -> LinkSequence:
    """Links of a chain of straight segments sharing their corner squares.

    ``lengths`` counts squares per segment (corners counted in both segments);
    ``turns[k]`` is the link type (2 or 3) entering segment ``k + 2``.
    """
    lengths = list(lengths)
    turns = list(turns)
    if not lengths:
        raise ValueError("need at least one segment")
    if len(turns) != len(lengths) - 1:
        raise ValueError(f"{len(lengths)} segments need {len(lengths) - 1} turn types, got {len(turns)}")
    if any(k < 2 for k in lengths):
        raise ValueError("segment lengths must be at least 2")
    if any(t not in (2, 3) for t in turns):
        raise ValueError("turn link types must be 2 or 3")
    if turns and turns[0] == 3:
        raise ValueError("type-3 turn before any opposite-direction segment exists")
    links = [1] * lengths[0]
    for length, t in zip(lengths[1:], turns):
        links.append(t)
        links += [1] * (length - 2)
    if len(links) < 2:
        raise ValueError("segments sum to fewer than two squares")
    return LinkSequence(tuple(links))


def family_links(kind: str, n: int | None = None, lengths=None, turns=None) -> LinkSequence:
    """Link words of named families: ``linear``, ``zigzag``, ``z3``, ``segments``."""
    if kind == "segments":
        if lengths is None:
            raise ValueError("segments family needs lengths")
        return segment_links(lengths, turns if turns is not None else [2] * (len(lengths) - 1))
    if n is None or n < 2:
        raise ValueError(f"{kind} family needs n >= 2")
    if kind == "linear":
        return LinkSequence((1,) * n)
    if kind == "zigzag":
        return LinkSequence((1, 1) + (2,) * (n - 2))
    if kind == "z3":
        if n < 3:
            raise ValueError("z3 family needs n >= 3")
        # length-3 segments, a final length-4 segment when n is even
        k = (n - 1) // 2 if n % 2 else (n - 2) // 2
        lengths = [3] * k
        if n % 2 == 0:
            lengths[-1] = 4
        turns = [2 if j % 2 == 0 else 3 for j in range(k - 1)]
        return segment_links(lengths, turns)
    raise ValueError(f"unknown family {kind!r}")
